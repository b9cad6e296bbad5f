//! Scalar contexts used by the evaluation engines.
//!
//! Algebras store exact rationals. Hot loops run on a lowered copy of the
//! structure constants in one of three contexts: checked 128-bit integers
//! (exact, with an overflow flag so callers can fall back), rationals, or a
//! prime field used for screening and randomized witness search.

use std::fmt::Debug;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::rational::Rational;

pub trait Arith: Sync {
    type Elem: Clone + PartialEq + Send + Sync + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem);
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Maps a rational into the context, `None` when it is not representable.
    fn lift(&self, r: &Rational) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;

    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }

    fn zeros(&self, n: usize) -> Vec<Self::Elem> {
        vec![self.zero(); n]
    }

    fn vec_is_zero(&self, v: &[Self::Elem]) -> bool {
        v.iter().all(|x| self.is_zero(x))
    }

    fn lift_vec(&self, v: &[Rational]) -> Option<Vec<Self::Elem>> {
        v.iter().map(|r| self.lift(r)).collect()
    }
}

/// Exact rationals.
#[derive(Debug, Default, Clone, Copy)]
pub struct Rationals;

impl Arith for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::from_integer(1.into())
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut Rational, a: &Rational) {
        *acc += a;
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn lift(&self, r: &Rational) -> Option<Rational> {
        Some(r.clone())
    }
    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(v.into())
    }
}

/// Checked `i128` arithmetic. On overflow the flag is raised and the
/// offending result is replaced by zero; callers must check
/// [`Integers::overflowed`] and redo the work exactly.
#[derive(Debug, Default)]
pub struct Integers {
    overflow: AtomicBool,
}

impl Integers {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn overflowed(&self) -> bool {
        self.overflow.load(Ordering::Relaxed)
    }

    fn flag(&self) -> i128 {
        self.overflow.store(true, Ordering::Relaxed);
        0
    }
}

impl Arith for Integers {
    type Elem = i128;

    fn zero(&self) -> i128 {
        0
    }
    fn one(&self) -> i128 {
        1
    }
    fn is_zero(&self, a: &i128) -> bool {
        *a == 0
    }
    fn add_assign(&self, acc: &mut i128, a: &i128) {
        *acc = acc.checked_add(*a).unwrap_or_else(|| self.flag());
    }
    fn mul(&self, a: &i128, b: &i128) -> i128 {
        a.checked_mul(*b).unwrap_or_else(|| self.flag())
    }
    fn neg(&self, a: &i128) -> i128 {
        a.checked_neg().unwrap_or_else(|| self.flag())
    }
    fn lift(&self, r: &Rational) -> Option<i128> {
        if r.is_integer() {
            r.numer().to_i128()
        } else {
            None
        }
    }
    fn from_i64(&self, v: i64) -> i128 {
        v as i128
    }
}

/// The prime field `F_p`, `p < 2^63`.
#[derive(Debug, Clone, Copy)]
pub struct ModPrime {
    p: u64,
}

impl ModPrime {
    pub fn new(p: u64) -> Self {
        assert!((2..(1 << 63)).contains(&p), "modulus out of range");
        ModPrime { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_bigint(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        let r = ((v % &m) + &m) % &m;
        r.to_u64().expect("residue fits in u64")
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }

    pub fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b, self.p);
            }
            b = mulmod(b, b, self.p);
            e >>= 1;
        }
        r
    }
}

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl Arith for ModPrime {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add_assign(&self, acc: &mut u64, a: &u64) {
        let s = *acc as u128 + *a as u128;
        *acc = (s % self.p as u128) as u64;
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn lift(&self, r: &Rational) -> Option<u64> {
        let n = self.reduce_bigint(r.numer());
        let d = self.reduce_bigint(r.denom());
        self.inv(d).map(|di| mulmod(n, di, self.p))
    }
    fn from_i64(&self, v: i64) -> u64 {
        self.reduce_bigint(&BigInt::from(v))
    }
}

/// Deterministic primality test for `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let f = ModPrime { p: n };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn integer_overflow_is_flagged() {
        let z = Integers::new();
        let big = i128::MAX / 2 + 1;
        let _ = z.mul(&big, &4);
        assert!(z.overflowed());
    }

    #[test]
    fn mod_prime_lifts_fractions() {
        let f = ModPrime::new(7);
        let half = f.lift(&ratio(1, 2)).unwrap();
        assert_eq!(f.mul(&half, &2), 1);
        assert_eq!(f.lift(&ratio(1, 7)), None);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
    }
}
