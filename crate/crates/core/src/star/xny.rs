//! Closed forms for `(X)^n ⋆ Y` with `X, Y` linear.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{
    bernoulli_numbers, binomial, int, BernoulliVariant, EpsSeries, Polynomial, Rational,
};
use crate::lie::StructureConstants;

use super::StarError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XnMethod {
    /// Coefficients from the Hausdorff series: `1, n/2, C(n,k) B_k`.
    CbhClosed,
    /// Coefficients from symmetrization: `C(n,k) B̂_k`.
    UeaClosed,
}

/// `sum_k ε^k a_k X^(n-k) ad_X^k(Y)` for `k = 0..=min(n, order)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XnStarY {
    pub n: usize,
    pub order: usize,
    pub method: XnMethod,
    pub coeffs: Vec<Rational>,
}

impl XnStarY {
    pub fn new(n: usize, order: usize, method: XnMethod) -> Result<Self, StarError> {
        if n == 0 {
            return Err(StarError::Precondition("n must be at least 1".into()));
        }
        let top = n.min(order);
        let coeffs = match method {
            XnMethod::CbhClosed => {
                let b = bernoulli_numbers(top, BernoulliVariant::Standard);
                (0..=top)
                    .map(|k| match k {
                        0 => int(1),
                        1 => Rational::new((n as i64).into(), 2.into()),
                        _ => Rational::from_integer(binomial(n as u32, k as u32)) * &b[k],
                    })
                    .collect()
            }
            XnMethod::UeaClosed => {
                let b = bernoulli_numbers(top, BernoulliVariant::Modified);
                (0..=top)
                    .map(|k| Rational::from_integer(binomial(n as u32, k as u32)) * &b[k])
                    .collect()
            }
        };
        Ok(XnStarY {
            n,
            order,
            method,
            coeffs,
        })
    }

    /// Evaluates on a concrete algebra, `x` and `y` being coefficient vectors of
    /// the linear forms `X` and `Y`.
    pub fn evaluate(
        &self,
        c: &StructureConstants,
        x: &[Rational],
        y: &[Rational],
    ) -> Result<EpsSeries, StarError> {
        let d = c.dim();
        if x.len() != d || y.len() != d {
            return Err(StarError::VariableMismatch {
                expected: d,
                got: if x.len() != d { x.len() } else { y.len() },
            });
        }
        let xl = Polynomial::linear(x);
        let mut out = EpsSeries::zero(d, self.order);
        let mut ad = y.to_vec();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                ad = c.bracket_vec(x, &ad);
            }
            if a.is_zero() || ad.iter().all(Zero::is_zero) {
                continue;
            }
            let term = &xl.pow((self.n - k) as u32) * &Polynomial::linear(&ad);
            out.add_at(k, &term.scale(a));
        }
        Ok(out)
    }
}

impl fmt::Display for XnStarY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => {}
                1 => f.write_str("eps*")?,
                _ => write!(f, "eps^{k}*")?,
            }
            if *a != int(1) {
                write!(f, "({a})*")?;
            }
            match self.n - k {
                0 => {}
                1 => f.write_str("X*")?,
                p => write!(f, "X^{p}*")?,
            }
            match k {
                0 => f.write_str("Y")?,
                1 => f.write_str("[X,Y]")?,
                _ => write!(f, "ad_X^{k}(Y)")?,
            }
        }
        if self.order < self.n {
            write!(f, " + O(eps^{})", self.order + 1)?;
        }
        Ok(())
    }
}
