use crate::algebra::StarSuperAlgebra;
use crate::error::{Error, Result};
use crate::subspace::Subspace;

const MAX_BLOCKS: usize = 9;

struct Chains<'a> {
    alg: &'a StarSuperAlgebra,
    radical: Subspace,
    blocks: Vec<Subspace>,
}

impl Chains<'_> {
    fn new(alg: &StarSuperAlgebra) -> Result<Chains<'_>> {
        let w = alg.wedderburn().ok_or(Error::MissingWedderburn)?;
        if w.blocks.len() > MAX_BLOCKS {
            return Err(Error::CapExceeded {
                what: "Wedderburn blocks".into(),
                needed: w.blocks.len() as u128,
                cap: MAX_BLOCKS as u128,
            });
        }
        let d = alg.dim();
        let blocks = (0..w.blocks.len()).map(|b| w.block_span(d, b)).filter(|s| !s.is_zero()).collect();
        Ok(Chains { alg, radical: w.radical_span(d), blocks })
    }

    /// Visits every ordering of distinct blocks whose left-associated
    /// product `B₁ J B₂ J ⋯` is nonzero, reporting the used blocks.
    fn visit(&self, chain: &Subspace, used: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) -> Result<()> {
        f(used);
        for b in 0..self.blocks.len() {
            if used.contains(&b) {
                continue;
            }
            let next = self
                .alg
                .subspace_product(&self.alg.subspace_product(chain, &self.radical)?, &self.blocks[b])?;
            if next.is_zero() {
                continue;
            }
            used.push(b);
            self.visit(&next, used, f)?;
            used.pop();
        }
        Ok(())
    }

    fn each_admissible(&self, mut f: impl FnMut(&[usize])) -> Result<()> {
        for b in 0..self.blocks.len() {
            let mut used = vec![b];
            self.visit(&self.blocks[b].clone(), &mut used, &mut f)?;
        }
        Ok(())
    }
}

/// Largest total dimension of an admissible family of semisimple blocks.
pub fn admissible_exponent(alg: &StarSuperAlgebra) -> Result<usize> {
    let chains = Chains::new(alg)?;
    let mut best = 0;
    chains.each_admissible(|used| {
        best = best.max(used.iter().map(|&b| chains.blocks[b].dim()).sum());
    })?;
    Ok(best)
}

/// True when all semisimple blocks together form an admissible family.
pub fn is_reduced(alg: &StarSuperAlgebra) -> Result<bool> {
    let chains = Chains::new(alg)?;
    let all = chains.blocks.len();
    let mut found = false;
    chains.each_admissible(|used| found |= used.len() == all)?;
    Ok(all > 0 && found)
}
