//! Truncated power series in the formal parameter ε with polynomial coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::error::AlgebraError;
use super::polynomial::Polynomial;
use super::rational::Rational;

/// `sum_{k=0}^{N} ε^k c_k` with an explicit truncation order `N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EpsSeries {
    nvars: usize,
    coeffs: Vec<Polynomial>,
}

impl EpsSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        EpsSeries {
            nvars,
            coeffs: vec![Polynomial::zero(nvars); order + 1],
        }
    }

    /// `p` placed at ε^0.
    pub fn from_poly(p: Polynomial, order: usize) -> Self {
        let mut s = Self::zero(p.nvars(), order);
        s.coeffs[0] = p;
        s
    }

    /// Coefficients for ε^0, ε^1, ...; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Polynomial>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the ε^0 slot");
        let nvars = coeffs[0].nvars();
        assert!(
            coeffs.iter().all(|c| c.nvars() == nvars),
            "variable sets differ"
        );
        EpsSeries { nvars, coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Polynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Adds `p * ε^k`; silently dropped when `k` exceeds the order.
    pub fn add_at(&mut self, k: usize, p: &Polynomial) {
        if k < self.coeffs.len() {
            self.coeffs[k] = &self.coeffs[k] + p;
        }
    }

    pub fn add_scaled_at(&mut self, k: usize, p: &Polynomial, c: &Rational) {
        if k < self.coeffs.len() {
            self.coeffs[k].add_scaled(p, c);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Lowest ε power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Highest total degree among the coefficients.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
    }

    fn check(&self, o: &EpsSeries) -> Result<(), AlgebraError> {
        if self.nvars != o.nvars {
            return Err(AlgebraError::VariableMismatch {
                left: self.nvars,
                right: o.nvars,
            });
        }
        if self.order() != o.order() {
            return Err(AlgebraError::TruncationMismatch {
                left: self.order(),
                right: o.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &EpsSeries) -> Result<EpsSeries, AlgebraError> {
        self.check(o)?;
        Ok(EpsSeries {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, o: &EpsSeries) -> Result<EpsSeries, AlgebraError> {
        self.check(o)?;
        Ok(EpsSeries {
            nvars: self.nvars,
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, o: &EpsSeries) -> Result<EpsSeries, AlgebraError> {
        self.check(o)?;
        let n = self.order();
        let mut out = EpsSeries::zero(self.nvars, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> EpsSeries {
        EpsSeries {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Drops every power above `order`; `order` must not exceed the current one.
    pub fn truncate(&self, order: usize) -> Result<EpsSeries, AlgebraError> {
        if order > self.order() {
            return Err(AlgebraError::TruncationMismatch {
                left: self.order(),
                right: order,
            });
        }
        Ok(EpsSeries {
            nvars: self.nvars,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    /// Sum of all coefficients, i.e. the value at ε = 1.
    pub fn at_one(&self) -> Polynomial {
        self.coeffs
            .iter()
            .fold(Polynomial::zero(self.nvars), |acc, c| &acc + c)
    }

    pub fn map_coeffs<F>(&self, f: F) -> Result<EpsSeries, AlgebraError>
    where
        F: Fn(&Polynomial) -> Result<Polynomial, AlgebraError>,
    {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(EpsSeries::from_coeffs(coeffs))
    }

    /// Nonzero coefficients as `(power, polynomial text)` pairs.
    pub fn to_pairs(&self) -> Vec<(usize, String)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c.to_string()))
            .collect()
    }
}

impl fmt::Display for EpsSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self.to_pairs();
        if pairs.is_empty() {
            return write!(f, "0 + O(eps^{})", self.order() + 1);
        }
        for (i, (k, c)) in pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "eps*({c})")?,
                _ => write!(f, "eps^{k}*({c})")?,
            }
        }
        write!(f, " + O(eps^{})", self.order() + 1)
    }
}

impl Add<&EpsSeries> for &EpsSeries {
    type Output = EpsSeries;
    fn add(self, rhs: &EpsSeries) -> EpsSeries {
        self.checked_add(rhs).expect("incompatible series")
    }
}

impl Sub<&EpsSeries> for &EpsSeries {
    type Output = EpsSeries;
    fn sub(self, rhs: &EpsSeries) -> EpsSeries {
        self.checked_sub(rhs).expect("incompatible series")
    }
}

impl Neg for &EpsSeries {
    type Output = EpsSeries;
    fn neg(self) -> EpsSeries {
        EpsSeries {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}
