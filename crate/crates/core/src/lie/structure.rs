//! Structure constants `[X^i, X^j] = sum_k c_k^{ij} X^k` and their checks.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Polynomial, Rational};

use super::LieStructError;

/// Dense table of structure constants; indices are 0-based in code and
/// 1-based in every text or JSON form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    name: String,
    c: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub antisymmetric: bool,
    pub jacobi: bool,
    pub triangular_nilpotent: bool,
}

impl ValidationReport {
    pub fn is_lie(&self) -> bool {
        self.antisymmetric && self.jacobi
    }
}

impl StructureConstants {
    pub fn zero(dim: usize, name: impl Into<String>) -> Self {
        StructureConstants {
            dim,
            name: name.into(),
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    fn idx(&self, k: usize, i: usize, j: usize) -> usize {
        (k * self.dim + i) * self.dim + j
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// `c_k^{ij}`.
    pub fn get(&self, k: usize, i: usize, j: usize) -> &Rational {
        &self.c[self.idx(k, i, j)]
    }

    pub fn set(&mut self, k: usize, i: usize, j: usize, v: Rational) {
        let p = self.idx(k, i, j);
        self.c[p] = v;
    }

    /// Sets `[X^i, X^j] = sum_k coeffs[k] X^k` together with the antisymmetric partner.
    pub fn set_bracket(&mut self, i: usize, j: usize, coeffs: &[(usize, Rational)]) {
        for (k, v) in coeffs {
            self.set(*k, i, j, v.clone());
            self.set(*k, j, i, -v.clone());
        }
    }

    /// Nonzero `(k, c_k^{ij})` for a fixed pair.
    pub fn bracket_of(&self, i: usize, j: usize) -> Vec<(usize, Rational)> {
        (0..self.dim)
            .filter_map(|k| {
                let v = self.get(k, i, j);
                (!v.is_zero()).then(|| (k, v.clone()))
            })
            .collect()
    }

    /// Bracket of two elements given by coordinate vectors.
    pub fn bracket_vec(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim;
        let mut out = vec![Rational::zero(); d];
        for i in 0..d {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..d {
                if v[j].is_zero() {
                    continue;
                }
                let uv = &u[i] * &v[j];
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.get(k, i, j);
                    if !c.is_zero() {
                        *o += c * &uv;
                    }
                }
            }
        }
        out
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport {
            antisymmetric: self.is_antisymmetric(),
            jacobi: self.satisfies_jacobi(),
            triangular_nilpotent: self.is_triangular_nilpotent(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|k| {
            (0..d).all(|i| (0..d).all(|j| (self.get(k, i, j) + self.get(k, j, i)).is_zero()))
        })
    }

    /// `sum_m c_m^{ij} c_l^{mk} + c_m^{jk} c_l^{mi} + c_m^{ki} c_l^{mj} = 0`.
    pub fn satisfies_jacobi(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut s = Rational::zero();
                        for m in 0..d {
                            s += self.get(m, i, j) * self.get(l, m, k);
                            s += self.get(m, j, k) * self.get(l, m, i);
                            s += self.get(m, k, i) * self.get(l, m, j);
                        }
                        if !s.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every bracket lands strictly below both inputs (`c_r^{ij} = 0` for
    /// `r >= min(i, j)`), or strictly above both (`c_r^{ij} = 0` for
    /// `r <= max(i, j)`). Either ordering forces nilpotency; the second is the
    /// first read in the reversed basis.
    pub fn is_triangular_nilpotent(&self) -> bool {
        let d = self.dim;
        let below = (0..d)
            .all(|r| (0..d).all(|i| (0..d).all(|j| r < i.min(j) || self.get(r, i, j).is_zero())));
        let above = (0..d)
            .all(|r| (0..d).all(|i| (0..d).all(|j| r > i.max(j) || self.get(r, i, j).is_zero())));
        below || above
    }

    /// Matrix of `ad_{X^i}` with `(ad_i)[k][m] = c_k^{im}`.
    pub fn ad_matrix(&self, i: usize) -> Vec<Vec<Rational>> {
        (0..self.dim)
            .map(|k| (0..self.dim).map(|m| self.get(k, i, m).clone()).collect())
            .collect()
    }

    /// `K(i, j) = sum_{j1, j2} c_{j2}^{i j1} c_{j1}^{j j2}`.
    pub fn killing_form(&self) -> Vec<Vec<Rational>> {
        let d = self.dim;
        (0..d)
            .map(|i| (0..d).map(|j| self.cyclic_product(&[i, j])).collect())
            .collect()
    }

    /// `c_{j_n}^{i_1 j_1} c_{j_1}^{i_2 j_2} ... c_{j_{n-1}}^{i_n j_n}` summed over the `j`'s.
    ///
    /// Contracted link by link: `acc[a][b]` carries the partial sum with
    /// `j_n = a` and current inner index `b`.
    pub fn cyclic_product(&self, outer: &[usize]) -> Rational {
        let d = self.dim;
        assert!(!outer.is_empty(), "need at least one outer index");
        // first link: c_{j_n}^{i_1 j_1}, keyed by (j_n, j_1)
        let mut acc: Vec<Vec<Rational>> = (0..d)
            .map(|a| (0..d).map(|b| self.get(a, outer[0], b).clone()).collect())
            .collect();
        for &i in &outer[1..] {
            let mut next = vec![vec![Rational::zero(); d]; d];
            for (a, row) in acc.iter().enumerate() {
                for (prev, v) in row.iter().enumerate() {
                    if v.is_zero() {
                        continue;
                    }
                    for (b, slot) in next[a].iter_mut().enumerate() {
                        let c = self.get(prev, i, b);
                        if !c.is_zero() {
                            *slot += v * c;
                        }
                    }
                }
            }
            acc = next;
        }
        (0..d).fold(Rational::zero(), |s, a| s + &acc[a][a])
    }

    /// `alpha^{ij} = sum_k c_k^{ij} x_k` as a `dim x dim` matrix of linear polynomials.
    pub fn linear_bivector(&self) -> Vec<Vec<Polynomial>> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let v: Vec<Rational> = (0..d).map(|k| self.get(k, i, j).clone()).collect();
                        Polynomial::linear(&v)
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks the table is a Lie algebra; used by operations that need it.
    pub fn require_lie(&self) -> Result<(), LieStructError> {
        let r = self.validate();
        if !r.antisymmetric {
            return Err(LieStructError::NotAntisymmetric);
        }
        if !r.jacobi {
            return Err(LieStructError::JacobiFails);
        }
        Ok(())
    }
}
