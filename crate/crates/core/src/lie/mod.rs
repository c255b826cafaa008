//! Finite-dimensional Lie algebras by structure constants, and the Poisson
//! bivectors built from them.

mod builtin;
mod json;
mod poisson;
mod structure;

pub use builtin::{
    builtin_algebra, heisenberg, moyal_trick, solvable2, strictly_upper, strictly_upper_basis,
    symplectic_matrix,
};
pub use poisson::{linear_poisson, moyal_matrix, PoissonClass, PoissonStructure};
pub use structure::{StructureConstants, ValidationReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieStructError {
    #[error("malformed algebra file: {0}")]
    Json(String),
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket [X{i}, X{j}] is given inconsistently")]
    InconsistentBracket { i: usize, j: usize },
    #[error("structure constants are not antisymmetric")]
    NotAntisymmetric,
    #[error("structure constants violate the Jacobi identity")]
    JacobiFails,
    #[error("unknown algebra `{0}`")]
    UnknownBuiltin(String),
    #[error("Poisson structure is not constant")]
    NotConstant,
    #[error("algebra does not have all brackets on its last coordinate")]
    NotMoyalTrick,
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Polynomial, Rational};
    use num_traits::Zero;

    fn trace_of_ad_product(c: &StructureConstants, outer: &[usize]) -> Rational {
        let d = c.dim();
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| if a == b { int(1) } else { int(0) })
                    .collect()
            })
            .collect();
        for &i in outer {
            let ad = c.ad_matrix(i);
            let mut next = vec![vec![Rational::zero(); d]; d];
            for a in 0..d {
                for b in 0..d {
                    for k in 0..d {
                        next[a][b] += &m[a][k] * &ad[k][b];
                    }
                }
            }
            m = next;
        }
        (0..d).fold(Rational::zero(), |s, a| s + &m[a][a])
    }

    #[test]
    fn validation_of_builtins() {
        let all = |r: ValidationReport| (r.antisymmetric, r.jacobi, r.triangular_nilpotent);
        assert_eq!(all(heisenberg().validate()), (true, true, true));
        assert_eq!(all(solvable2().validate()), (true, true, false));
        for n in 2..=5 {
            assert_eq!(
                all(strictly_upper(n).validate()),
                (true, true, true),
                "n = {n}"
            );
        }
        assert_eq!(strictly_upper(4).dim(), 6);
        let mut h = strictly_upper(3);
        h.set_name("heisenberg");
        assert_eq!(h, heisenberg());
        assert_eq!(
            all(builtin_algebra("moyal_trick(2)").unwrap().validate()),
            (true, true, true)
        );
    }

    #[test]
    fn jacobi_failure_detected() {
        let mut c = StructureConstants::zero(3, "bad");
        c.set_bracket(0, 1, &[(2, int(1))]);
        c.set_bracket(0, 2, &[(0, int(1))]);
        let r = c.validate();
        assert!(r.antisymmetric && !r.jacobi);
        assert_eq!(c.require_lie(), Err(LieStructError::JacobiFails));
    }

    #[test]
    fn killing_of_solvable2() {
        let k = solvable2().killing_form();
        assert_eq!(k, vec![vec![int(1), int(0)], vec![int(0), int(0)]]);
    }

    #[test]
    fn cyclic_products_match_ad_traces() {
        for c in [solvable2(), heisenberg(), strictly_upper(3)] {
            let d = c.dim();
            for a in 0..d {
                for b in 0..d {
                    for e in 0..d {
                        let o = [a, b, e];
                        assert_eq!(c.cyclic_product(&o), trace_of_ad_product(&c, &o));
                        assert_eq!(c.cyclic_product(&o[..2]), trace_of_ad_product(&c, &o[..2]));
                    }
                }
            }
        }
        assert_eq!(solvable2().cyclic_product(&[0, 0, 0]), int(1));
    }

    #[test]
    fn cyclic_products_vanish_on_triangular_algebras() {
        let algebras = [
            heisenberg(),
            strictly_upper(3),
            builtin_algebra("moyal_trick(1)").unwrap(),
            builtin_algebra("moyal_trick(2)").unwrap(),
        ];
        for c in algebras {
            assert!(c.is_triangular_nilpotent());
            let d = c.dim();
            for len in 2..=5usize {
                let total = d.pow(len as u32);
                for code in 0..total {
                    let mut x = code;
                    let outer: Vec<usize> = (0..len)
                        .map(|_| {
                            let v = x % d;
                            x /= d;
                            v
                        })
                        .collect();
                    assert!(c.cyclic_product(&outer).is_zero(), "{} {outer:?}", c.name());
                }
            }
        }
    }

    #[test]
    fn heisenberg_poisson_bracket() {
        let p = linear_poisson(&heisenberg());
        assert_eq!(p.class(), PoissonClass::Linear);
        assert_eq!(p.entry(0, 1), &Polynomial::var(3, 2));
        assert!(p.is_poisson());
        let x1 = Polynomial::var(3, 0);
        let x2 = Polynomial::var(3, 1);
        assert_eq!(p.bracket(&x1, &x2), Polynomial::var(3, 2));
    }

    #[test]
    fn moyal_trick_specializes_to_constant() {
        let m = symplectic_matrix(2);
        let c = moyal_trick(&m).unwrap();
        assert_eq!(moyal_matrix(&c).unwrap(), m);
        let p = linear_poisson(&c);
        let h = c.dim() - 1;
        for i in 0..h {
            for j in 0..h {
                let v = p.entry(i, j).specialize(h, &int(1)).unwrap();
                assert_eq!(v, Polynomial::constant(h, m[i][j].clone()));
            }
        }
        assert!(moyal_matrix(&heisenberg()).is_ok());
        assert!(moyal_matrix(&solvable2()).is_err());
    }

    #[test]
    fn json_round_trip_and_completion() {
        let text = r#"{"dim": 3, "brackets": [{"i": 2, "j": 1, "coeffs": {"3": "-1"}}]}"#;
        let mut c = StructureConstants::from_json(text).unwrap();
        c.set_name("heisenberg");
        assert_eq!(c, heisenberg());
        let again = StructureConstants::from_json(&strictly_upper(4).to_json()).unwrap();
        assert_eq!(again, strictly_upper(4));
    }

    #[test]
    fn json_errors() {
        let conflict = r#"{"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": {"3": "1"}},
            {"i": 2, "j": 1, "coeffs": {"3": "1"}}]}"#;
        assert!(matches!(
            StructureConstants::from_json(conflict),
            Err(LieStructError::InconsistentBracket { .. })
        ));
        let range = r#"{"dim": 2, "brackets": [{"i": 1, "j": 3, "coeffs": {}}]}"#;
        assert!(matches!(
            StructureConstants::from_json(range),
            Err(LieStructError::IndexOutOfRange { .. })
        ));
        assert!(StructureConstants::from_json("{").is_err());
        assert!(builtin_algebra("strictly_upper(x)").is_err());
        assert!(builtin_algebra("so3").is_err());
    }
}
