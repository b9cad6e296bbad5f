use crate::algebra::StarSuperAlgebra;
use crate::polynomials::VarKind;
use crate::rational::{integer_vec_to_rational, primitive_integer_vec, Rational};

/// Bases used to substitute variables: one basis per graded kind, scaled to
/// primitive integer vectors, and their concatenation for `x` slots.
#[derive(Debug, Clone)]
pub struct EvalBases {
    pub kinds: [Vec<Vec<Rational>>; 4],
    pub any: Vec<Vec<Rational>>,
}

impl EvalBases {
    pub fn new(alg: &StarSuperAlgebra) -> Self {
        let hc = alg.hom_components();
        let scaled = |kind: VarKind| -> Vec<Vec<Rational>> {
            hc.component(kind)
                .expect("graded kind")
                .basis()
                .iter()
                .map(|v| integer_vec_to_rational(&primitive_integer_vec(v)))
                .collect()
        };
        let kinds = VarKind::GRADED.map(scaled);
        let any = kinds.iter().flatten().cloned().collect();
        EvalBases { kinds, any }
    }

    pub fn basis(&self, kind: VarKind) -> &[Vec<Rational>] {
        match kind.index() {
            Some(i) => &self.kinds[i],
            None => &self.any,
        }
    }
}
