//! Bernoulli numbers and polynomials, standard and modified.
//!
//! Standard numbers have `B_1 = -1/2`; the modified ones are `B̂_k = (-1)^k B_k`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::polynomial::{Monomial, Polynomial};
use super::rational::{binomial, factorial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BernoulliVariant {
    Standard,
    Modified,
}

/// `B_0..=B_max` from `sum_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli_numbers(max: usize, variant: BernoulliVariant) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(max + 1);
    b.push(Rational::one());
    for n in 1..=max {
        let mut s = Rational::zero();
        for (k, bk) in b.iter().enumerate() {
            s += bk * Rational::from_integer(binomial(n as u32 + 1, k as u32));
        }
        b.push(-s / Rational::from_integer(BigInt::from(n + 1)));
    }
    if variant == BernoulliVariant::Modified {
        for (k, v) in b.iter_mut().enumerate() {
            if k % 2 == 1 {
                *v = -v.clone();
            }
        }
    }
    b
}

pub fn bernoulli_number(k: usize, variant: BernoulliVariant) -> Rational {
    bernoulli_numbers(k, variant).pop().expect("nonempty")
}

/// `sum_k C(m, k) B_{m-k} x^k` as a polynomial in one variable.
pub fn bernoulli_polynomial(m: usize, variant: BernoulliVariant) -> Polynomial {
    let b = bernoulli_numbers(m, variant);
    Polynomial::from_terms(
        1,
        (0..=m).map(|k| {
            (
                Monomial::new(vec![k as u32]),
                Rational::from_integer(binomial(m as u32, k as u32)) * &b[m - k],
            )
        }),
    )
}

/// `sum_{k=0}^{n} n! B̂_k / (k! (n-k)! (n-k+1))`, and the same sum with signs `(-1)^k`.
pub fn modified_identity_sums(n: usize) -> (Rational, Rational) {
    let b = bernoulli_numbers(n, BernoulliVariant::Modified);
    let nf = factorial(n as u32);
    let mut plain = Rational::zero();
    let mut alt = Rational::zero();
    for (k, bk) in b.iter().enumerate() {
        let den = factorial(k as u32) * factorial((n - k) as u32) * BigInt::from(n - k + 1);
        let t = bk * Rational::new(nf.clone(), den);
        if k % 2 == 1 {
            alt -= &t;
        } else {
            alt += &t;
        }
        plain += t;
    }
    (plain, alt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    /// Taylor coefficients of t/(e^t - 1), by inverting the series (e^t - 1)/t.
    fn oracle_standard(max: usize) -> Vec<Rational> {
        let a: Vec<Rational> = (0..=max)
            .map(|k| Rational::new(BigInt::one(), factorial(k as u32 + 1)))
            .collect();
        let mut inv = vec![Rational::zero(); max + 1];
        inv[0] = Rational::one();
        for n in 1..=max {
            let mut s = Rational::zero();
            for k in 1..=n {
                s += &a[k] * &inv[n - k];
            }
            inv[n] = -s;
        }
        inv.iter()
            .enumerate()
            .map(|(k, c)| c * Rational::from_integer(factorial(k as u32)))
            .collect()
    }

    #[test]
    fn matches_generating_function() {
        assert_eq!(
            bernoulli_numbers(30, BernoulliVariant::Standard),
            oracle_standard(30)
        );
    }

    #[test]
    fn small_values() {
        let s = bernoulli_numbers(4, BernoulliVariant::Standard);
        assert_eq!(s, vec![int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30)]);
        let m = bernoulli_numbers(2, BernoulliVariant::Modified);
        assert_eq!(m, vec![int(1), rat(1, 2), rat(1, 6)]);
    }

    #[test]
    fn polynomial_b2() {
        let p = bernoulli_polynomial(2, BernoulliVariant::Standard);
        assert_eq!(p, Polynomial::parse("x1^2 - x1 + 1/6", 1).unwrap());
    }

    #[test]
    fn identity_sums_up_to_30() {
        for n in 1..=30 {
            assert_eq!(modified_identity_sums(n), (int(1), int(0)), "n = {n}");
        }
    }

    #[test]
    fn reflected_modified_polynomial() {
        // B̂_n(-x) = (-1)^n B_n(x)
        let neg = Polynomial::parse("-x1", 1).unwrap();
        for n in 0..=12 {
            let lhs = bernoulli_polynomial(n, BernoulliVariant::Modified)
                .subst(0, &neg)
                .unwrap();
            let mut rhs = bernoulli_polynomial(n, BernoulliVariant::Standard);
            if n % 2 == 1 {
                rhs = -rhs;
            }
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
