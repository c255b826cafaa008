//! The Moyal product of a constant Poisson structure.

use num_traits::Zero;

use crate::algebra::{rat, EpsSeries, Monomial, Polynomial};
use crate::lie::PoissonStructure;

use super::bidiff::BiDiffOp;
use super::{StarError, StarProduct};

/// `exp((ε/2) α^{ij} d_i ⊗ d_j)` truncated at ε^order.
pub fn moyal_operator(
    alpha: &PoissonStructure,
    order: usize,
    cap: Option<u32>,
) -> Result<BiDiffOp, StarError> {
    let m = alpha.constant_matrix()?;
    let d = alpha.dim();
    let mut gen = BiDiffOp::zero(d, order, cap);
    let half = rat(1, 2);
    for (i, row) in m.iter().enumerate() {
        for (j, a) in row.iter().enumerate() {
            if !a.is_zero() {
                gen.add_term(
                    1,
                    Monomial::var(d, i),
                    Monomial::var(d, j),
                    &Polynomial::constant(d, a * &half),
                );
            }
        }
    }
    gen.exp()
}

pub struct MoyalStar {
    op: BiDiffOp,
}

impl MoyalStar {
    pub fn new(alpha: &PoissonStructure, order: usize) -> Result<Self, StarError> {
        Ok(MoyalStar {
            op: moyal_operator(alpha, order, None)?,
        })
    }

    pub fn operator(&self) -> &BiDiffOp {
        &self.op
    }
}

impl StarProduct for MoyalStar {
    fn nvars(&self) -> usize {
        self.op.nvars()
    }

    fn order(&self) -> usize {
        self.op.order()
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.op.apply(f, g)
    }
}

pub fn moyal_star(
    alpha: &PoissonStructure,
    f: &Polynomial,
    g: &Polynomial,
    order: usize,
) -> Result<EpsSeries, StarError> {
    MoyalStar::new(alpha, order)?.star(f, g)
}
