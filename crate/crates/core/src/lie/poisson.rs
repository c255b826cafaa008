//! Poisson bivectors `alpha^{ij}` with polynomial entries.

use num_traits::Zero;

use crate::algebra::{Polynomial, Rational};

use super::structure::StructureConstants;
use super::LieStructError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PoissonClass {
    Constant,
    Linear,
    General,
}

/// An antisymmetric matrix of polynomials; the Jacobi identity is checked
/// separately since the graph calculus also runs on plain bivectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    dim: usize,
    alpha: Vec<Vec<Polynomial>>,
}

impl PoissonStructure {
    pub fn new(alpha: Vec<Vec<Polynomial>>) -> Result<Self, LieStructError> {
        let d = alpha.len();
        for (i, row) in alpha.iter().enumerate() {
            if row.len() != d {
                return Err(LieStructError::InvalidMatrix("matrix is not square".into()));
            }
            for j in 0..d {
                if row[j].nvars() != d {
                    return Err(LieStructError::InvalidMatrix(format!(
                        "entry ({}, {}) is not a polynomial in x1..x{d}",
                        i + 1,
                        j + 1
                    )));
                }
                if !(&row[j] + &alpha[j][i]).is_zero() {
                    return Err(LieStructError::InvalidMatrix(
                        "bivector is not antisymmetric".into(),
                    ));
                }
            }
        }
        Ok(PoissonStructure { dim: d, alpha })
    }

    pub fn constant(m: &[Vec<Rational>]) -> Result<Self, LieStructError> {
        let d = m.len();
        Self::new(
            m.iter()
                .map(|row| {
                    row.iter()
                        .map(|v| Polynomial::constant(d, v.clone()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.alpha[i][j]
    }

    pub fn class(&self) -> PoissonClass {
        let max = self
            .alpha
            .iter()
            .flatten()
            .filter_map(|p| p.total_degree())
            .max();
        let homogeneous_linear = self.alpha.iter().flatten().all(Polynomial::is_linear_form);
        match max {
            None | Some(0) => PoissonClass::Constant,
            Some(1) if homogeneous_linear => PoissonClass::Linear,
            _ => PoissonClass::General,
        }
    }

    /// Constant matrix, when the class is constant.
    pub fn constant_matrix(&self) -> Result<Vec<Vec<Rational>>, LieStructError> {
        if self.class() != PoissonClass::Constant {
            return Err(LieStructError::NotConstant);
        }
        Ok(self
            .alpha
            .iter()
            .map(|row| row.iter().map(Polynomial::constant_term).collect())
            .collect())
    }

    /// `sum_l alpha^{il} d_l alpha^{jk} + cyclic = 0` for all `i, j, k`.
    pub fn is_poisson(&self) -> bool {
        let d = self.dim;
        let da: Vec<Vec<Vec<Polynomial>>> = (0..d)
            .map(|l| {
                self.alpha
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|p| p.derive(l, 1).expect("in range"))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut s = Polynomial::zero(d);
                    for l in 0..d {
                        s = &s + &(&self.alpha[i][l] * &da[l][j][k]);
                        s = &s + &(&self.alpha[j][l] * &da[l][k][i]);
                        s = &s + &(&self.alpha[k][l] * &da[l][i][j]);
                    }
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn scale(&self, c: &Rational) -> PoissonStructure {
        PoissonStructure {
            dim: self.dim,
            alpha: self
                .alpha
                .iter()
                .map(|row| row.iter().map(|p| p.scale(c)).collect())
                .collect(),
        }
    }

    /// Bracket `{f, g} = alpha^{ij} d_i f d_j g`.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let d = self.dim;
        let mut out = Polynomial::zero(d);
        for i in 0..d {
            let fi = f.derive(i, 1).expect("in range");
            if fi.is_zero() {
                continue;
            }
            for j in 0..d {
                if self.alpha[i][j].is_zero() {
                    continue;
                }
                let gj = g.derive(j, 1).expect("in range");
                out = &out + &(&(&self.alpha[i][j] * &fi) * &gj);
            }
        }
        out
    }
}

/// `alpha^{ij} = sum_k c_k^{ij} x_k`.
pub fn linear_poisson(c: &StructureConstants) -> PoissonStructure {
    PoissonStructure {
        dim: c.dim(),
        alpha: c.linear_bivector(),
    }
}

/// Reads back the constant matrix of an algebra whose brackets all land on
/// its last coordinate, as produced by [`super::moyal_trick`].
pub fn moyal_matrix(c: &StructureConstants) -> Result<Vec<Vec<Rational>>, LieStructError> {
    let d = c.dim();
    if d < 2 {
        return Err(LieStructError::NotMoyalTrick);
    }
    let h = d - 1;
    let mut m = vec![vec![Rational::zero(); h]; h];
    for k in 0..d {
        for i in 0..d {
            for j in 0..d {
                let v = c.get(k, i, j);
                if v.is_zero() {
                    continue;
                }
                if k != h || i == h || j == h {
                    return Err(LieStructError::NotMoyalTrick);
                }
                m[i][j] = v.clone();
            }
        }
    }
    Ok(m)
}
