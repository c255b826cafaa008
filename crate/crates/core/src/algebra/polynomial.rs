//! Sparse multivariate polynomials over exact rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::error::AlgebraError;
use super::rational::Rational;

/// Exponent vector, ordered graded-lexicographically (total degree first).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The monomial `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise `self >= other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Multi-index as a sorted list of variable indices, e.g. `x1^2*x3` gives `[0, 0, 2]`.
    pub fn to_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat_n(i, e as usize));
        }
        out
    }

    pub fn from_indices(nvars: usize, idx: &[usize]) -> Monomial {
        let mut e = vec![0; nvars];
        for &i in idx {
            e[i] += 1;
        }
        Monomial(e)
    }

    /// `prod_i e_i!`, the factor picked up when a derivative multi-index hits the same monomial.
    pub fn factorial_product(&self) -> BigInt {
        self.0
            .iter()
            .map(|&e| super::rational::factorial(e))
            .fold(BigInt::one(), |a, b| a * b)
    }

    pub(crate) fn fmt_vars(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            self.fmt_vars(f)
        }
    }
}

/// Polynomial in `x1..xd`. Zero coefficients are never stored.
///
/// The operator impls (`+`, `-`, `*`) panic when the variable counts differ;
/// use the `checked_*` methods where that can happen.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    /// The coordinate `x_{i+1}`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(nvars, Monomial::var(nvars, i), Rational::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    /// Linear form `sum_i v_i x_{i+1}`.
    pub fn linear(v: &[Rational]) -> Self {
        let n = v.len();
        Self::from_terms(
            n,
            v.iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// True when every term has degree exactly one.
    pub fn is_linear_form(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 1)
    }

    /// Coefficient vector of the degree-one part.
    pub fn linear_coefficients(&self) -> Vec<Rational> {
        (0..self.nvars)
            .map(|i| self.coefficient(&Monomial::var(self.nvars, i)))
            .collect()
    }

    fn check(&self, other: &Polynomial) -> Result<(), AlgebraError> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(AlgebraError::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(other)?;
        let mut out = Polynomial::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational) {
        assert_eq!(self.nvars, other.nvars, "variable sets differ");
        if c.is_zero() {
            return;
        }
        for (m, k) in &other.terms {
            self.add_term(m.clone(), k * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `d^order / dx_{var+1}^order`.
    pub fn derive(&self, var: usize, order: u32) -> Result<Polynomial, AlgebraError> {
        if var >= self.nvars {
            return Err(AlgebraError::VariableOutOfRange {
                var,
                nvars: self.nvars,
            });
        }
        let mut e = vec![0; self.nvars];
        e[var] = order;
        Ok(self.derive_multi(&Monomial(e)))
    }

    /// Applies the derivative multi-index `d` (one exponent per variable).
    pub fn derive_multi(&self, d: &Monomial) -> Polynomial {
        assert_eq!(
            d.nvars(),
            self.nvars,
            "multi-index has wrong variable count"
        );
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if !m.divisible_by(d) {
                continue;
            }
            let mut coeff = c.clone();
            let mut e = m.0.clone();
            for (k, &dk) in d.0.iter().enumerate() {
                for j in 0..dk {
                    coeff *= Rational::from_integer(BigInt::from(e[k] - j));
                }
                e[k] -= dk;
            }
            out.add_term(Monomial(e), coeff);
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::MissingCoordinate {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Replaces `x_{var+1}` by `q` (same variable set).
    pub fn subst(&self, var: usize, q: &Polynomial) -> Result<Polynomial, AlgebraError> {
        self.check(q)?;
        if var >= self.nvars {
            return Err(AlgebraError::VariableOutOfRange {
                var,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars);
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(self.nvars)];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            while powers.len() <= e {
                let next = &powers[powers.len() - 1] * q;
                powers.push(next);
            }
            let mut rest = m.0.clone();
            rest[var] = 0;
            let base = Polynomial::monomial(self.nvars, Monomial(rest), c.clone());
            out = &out + &(&base * &powers[e]);
        }
        Ok(out)
    }

    /// Sets `x_{var+1} = value` and removes that variable, leaving `nvars - 1` variables.
    pub fn specialize(&self, var: usize, value: &Rational) -> Result<Polynomial, AlgebraError> {
        if var >= self.nvars {
            return Err(AlgebraError::VariableOutOfRange {
                var,
                nvars: self.nvars,
            });
        }
        let mut out = Polynomial::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e.remove(var);
            let mut coeff = c.clone();
            for _ in 0..k {
                coeff *= value;
            }
            out.add_term(Monomial(e), coeff);
        }
        Ok(out)
    }

    /// Re-reads the polynomial in a larger variable set, new variables appended.
    pub fn embed(&self, nvars: usize) -> Result<Polynomial, AlgebraError> {
        if nvars < self.nvars {
            return Err(AlgebraError::VariableMismatch {
                left: self.nvars,
                right: nvars,
            });
        }
        Ok(Polynomial {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.resize(nvars, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                m.fmt_vars(f)?;
            } else {
                write!(f, "{a}*")?;
                m.fmt_vars(f)?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("variable sets differ")
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$checked(&rhs).expect("variable sets differ")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let (x1, x2) = (x(2, 0), x(2, 1));
        let p = &(&x1 + &x2) * &(&x1 - &x2);
        let q = &x1.pow(2) - &x2.pow(2);
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn derivative_of_power() {
        let p = x(1, 0).pow(5);
        let d = p.derive(0, 3).unwrap();
        assert_eq!(d, x(1, 0).pow(2).scale(&int(60)));
        assert!(p.derive(1, 1).is_err());
    }

    #[test]
    fn eval_and_missing_coordinate() {
        let p = &(&x(2, 0) * &x(2, 1)) + &Polynomial::constant(2, rat(1, 2));
        assert_eq!(p.eval(&[int(2), int(3)]).unwrap(), rat(13, 2));
        assert_eq!(
            p.eval(&[int(2)]),
            Err(AlgebraError::MissingCoordinate {
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn mismatched_variable_sets() {
        assert!(x(2, 0).checked_add(&x(3, 0)).is_err());
        assert!(x(2, 0).checked_mul(&x(3, 0)).is_err());
    }

    #[test]
    fn graded_lex_order_and_display() {
        let p = Polynomial::from_terms(
            2,
            [
                (Monomial::new(vec![0, 0]), int(3)),
                (Monomial::new(vec![0, 2]), rat(-1, 2)),
                (Monomial::new(vec![1, 1]), int(1)),
                (Monomial::new(vec![1, 0]), int(-2)),
            ],
        );
        assert_eq!(p.to_string(), "x1*x2 - 1/2*x2^2 - 2*x1 + 3");
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(Polynomial::zero(2).total_degree(), None);
    }

    #[test]
    fn subst_and_specialize() {
        let p = &x(2, 0).pow(2) * &x(2, 1);
        let q = p.subst(1, &(&x(2, 0) + &Polynomial::one(2))).unwrap();
        assert_eq!(q, &x(2, 0).pow(3) + &x(2, 0).pow(2));
        let r = p.specialize(1, &int(3)).unwrap();
        assert_eq!(r, x(1, 0).pow(2).scale(&int(3)));
    }

    #[test]
    fn multi_derivative() {
        let p = &x(2, 0).pow(3) * &x(2, 1).pow(2);
        let d = p.derive_multi(&Monomial::new(vec![2, 1]));
        assert_eq!(d, (&x(2, 0) * &x(2, 1)).scale(&int(12)));
    }
}
