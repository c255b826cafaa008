//! Star products on polynomial algebras: Moyal, the enveloping-algebra product
//! and the Hausdorff-series product, plus closed forms and verifiers.

mod bidiff;
mod cbh;
mod moyal;
mod pbw;
mod verify;
mod xny;

pub use bidiff::{graph_operator, BiDiffOp};
pub use cbh::{cbh_operator, cbh_star, CbhStar};
pub use moyal::{moyal_operator, moyal_star, MoyalStar};
pub use pbw::{uea_star, PbwAlgebra, PbwElement, UeaStar};
pub use verify::{
    check_associativity, check_equivalence, degree_property_p1, monomials_up_to,
    seeded_polynomials, CentralSpecialization, EquivalenceMode, EquivalenceReport, Mismatch,
    Pointwise,
};
pub use xny::{XnMethod, XnStarY};

use thiserror::Error;

use crate::algebra::{AlgebraError, EpsSeries, Polynomial};
use crate::lie::LieStructError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StarError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Lie(#[from] LieStructError),
    #[error("inputs need {needed} derivatives but the operator was built for {cap}")]
    DegreeCap { needed: u32, cap: u32 },
    #[error("expected polynomials in {expected} variables, got {got}")]
    VariableMismatch { expected: usize, got: usize },
    #[error("{0}")]
    Precondition(String),
}

/// A bilinear product `f ⋆ g = sum_k ε^k Π_k(f, g)` truncated at `order()`.
pub trait StarProduct: Sync {
    fn nvars(&self) -> usize;

    fn order(&self) -> usize;

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError>;

    fn check_inputs(&self, f: &Polynomial, g: &Polynomial) -> Result<(), StarError> {
        for p in [f, g] {
            if p.nvars() != self.nvars() {
                return Err(StarError::VariableMismatch {
                    expected: self.nvars(),
                    got: p.nvars(),
                });
            }
        }
        Ok(())
    }

    /// Extends `star` ε-bilinearly to series arguments.
    fn star_series(&self, a: &EpsSeries, b: &EpsSeries) -> Result<EpsSeries, StarError> {
        let n = self.order();
        let mut out = EpsSeries::zero(self.nvars(), n);
        for (i, p) in a.coeffs().iter().enumerate().take(n + 1) {
            if p.is_zero() {
                continue;
            }
            for (j, q) in b.coeffs().iter().enumerate().take(n + 1 - i) {
                if q.is_zero() {
                    continue;
                }
                let r = self.star(p, q)?;
                for (k, c) in r.coeffs().iter().enumerate().take(n + 1 - i - j) {
                    out.add_at(i + j + k, c);
                }
            }
        }
        Ok(out)
    }
}

impl<S: StarProduct + ?Sized + Send> StarProduct for Box<S> {
    fn nvars(&self) -> usize {
        (**self).nvars()
    }

    fn order(&self) -> usize {
        (**self).order()
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        (**self).star(f, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::lie::{heisenberg, linear_poisson, strictly_upper};

    #[test]
    fn identity_operator_is_pointwise() {
        let f = Polynomial::parse("x1 + x2^2", 2).unwrap();
        let g = Polynomial::parse("x1*x2 - 3", 2).unwrap();
        let r = BiDiffOp::identity(2, 2, None).apply(&f, &g).unwrap();
        assert_eq!(r, EpsSeries::from_poly(&f * &g, 2));
    }

    #[test]
    fn constant_wedge_on_coordinates() {
        use crate::algebra::Monomial;
        let mut op = BiDiffOp::zero(2, 1, None);
        op.add_term(
            1,
            Monomial::var(2, 0),
            Monomial::var(2, 1),
            &Polynomial::one(2),
        );
        op.add_term(
            1,
            Monomial::var(2, 1),
            Monomial::var(2, 0),
            &Polynomial::constant(2, int(-1)),
        );
        let r = op
            .apply(&Polynomial::var(2, 0), &Polynomial::var(2, 1))
            .unwrap();
        assert_eq!(r.coeff(1), &Polynomial::one(2));
    }

    #[test]
    fn poisson_operator_of_heisenberg() {
        let g = crate::graph::AdmissibleGraph::parse("1:(X,Y)").unwrap();
        let op = graph_operator(&g, &linear_poisson(&heisenberg()), &int(1), 1, None);
        let r = op
            .apply(&Polynomial::var(3, 0), &Polynomial::var(3, 1))
            .unwrap();
        assert_eq!(r.coeff(1), &Polynomial::var(3, 2));
    }

    #[test]
    fn apply_checks_shapes() {
        let op = BiDiffOp::identity(2, 1, Some(2));
        let f = Polynomial::var(3, 0);
        assert!(matches!(
            op.apply(&f, &f),
            Err(StarError::VariableMismatch {
                expected: 2,
                got: 3
            })
        ));
        let g = Polynomial::var(2, 0).pow(2);
        assert!(matches!(
            op.apply(&g, &g),
            Err(StarError::DegreeCap { needed: 4, cap: 2 })
        ));
    }

    #[test]
    fn series_extension_matches_polynomial_case() {
        let s = UeaStar::new(&strictly_upper(3), 3).unwrap();
        let f = Polynomial::parse("x1*x2", 3).unwrap();
        let g = Polynomial::parse("x2 + x3", 3).unwrap();
        let direct = s.star(&f, &g).unwrap();
        let via = s
            .star_series(&EpsSeries::from_poly(f, 3), &EpsSeries::from_poly(g, 3))
            .unwrap();
        assert_eq!(direct, via);
    }
}
