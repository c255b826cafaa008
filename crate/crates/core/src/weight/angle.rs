//! Univariate polynomials in a rescaled angle taking values in `[0, 1]`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::algebra::{
    bernoulli_polynomial, inv_factorial, BernoulliVariant, Monomial, Polynomial, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnglePolynomial(Polynomial);

impl AnglePolynomial {
    pub fn one() -> Self {
        AnglePolynomial(Polynomial::one(1))
    }

    pub fn from_coeffs(c: &[Rational]) -> Self {
        AnglePolynomial(Polynomial::from_terms(
            1,
            c.iter()
                .enumerate()
                .map(|(k, v)| (Monomial::new(vec![k as u32]), v.clone())),
        ))
    }

    /// Wraps a polynomial in one variable.
    pub fn from_poly(p: Polynomial) -> Self {
        assert_eq!(p.nvars(), 1, "angle polynomials have one variable");
        AnglePolynomial(p)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.0
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.total_degree()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.0.coefficient(&Monomial::new(vec![k]))
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.0.eval(std::slice::from_ref(t)).expect("one variable")
    }

    pub fn mul(&self, o: &AnglePolynomial) -> AnglePolynomial {
        AnglePolynomial(&self.0 * &o.0)
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> AnglePolynomial {
        AnglePolynomial(Polynomial::from_terms(
            1,
            self.0.terms().map(|(m, c)| {
                let e = m.exps()[0] + 1;
                (
                    Monomial::new(vec![e]),
                    c / Rational::from_integer(BigInt::from(e)),
                )
            }),
        ))
    }

    /// `∫_0^1`.
    pub fn integral(&self) -> Rational {
        self.antiderivative()
            .eval(&Rational::from_integer(1.into()))
    }
}

impl fmt::Display for AnglePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_string().replace("x1", "t"))
    }
}

/// `T[g](u) = ∫_0^1 G - G(u)` with `G' = g`: integrating one wedge's ground
/// angle up to the wedge angle `u` and then the wedge angle over `[0, 1]`.
pub fn wedge_transform(g: &AnglePolynomial) -> AnglePolynomial {
    let big = g.antiderivative();
    let total = big.integral();
    AnglePolynomial(&Polynomial::constant(1, total) - big.poly())
}

/// `∫_0^1 ∫_0^ψ g(θ) dθ dψ`, written out as a double integral.
pub fn ground_integral(g: &AnglePolynomial) -> Rational {
    // the inner integral is the antiderivative at ψ; its own integral is the outer one
    let mut s = Rational::zero();
    for (m, c) in g.poly().terms() {
        let e = m.exps()[0] as i64;
        s += c / Rational::from_integer(BigInt::from((e + 1) * (e + 2)));
    }
    s
}

/// `T^n(1)`.
pub fn pn_polynomial(n: usize) -> AnglePolynomial {
    let mut p = AnglePolynomial::one();
    for _ in 0..n {
        p = wedge_transform(&p);
    }
    p
}

/// `B̂_n(-t) / n!` from the Bernoulli polynomials.
pub fn pn_closed(n: usize) -> AnglePolynomial {
    let b = bernoulli_polynomial(n, BernoulliVariant::Modified);
    let neg = -Polynomial::var(1, 0);
    AnglePolynomial(
        b.subst(0, &neg)
            .expect("one variable")
            .scale(&inv_factorial(n as u32)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bernoulli_numbers, int, rat};

    #[test]
    fn first_transforms() {
        let t1 = wedge_transform(&AnglePolynomial::one());
        assert_eq!(t1, AnglePolynomial::from_coeffs(&[rat(1, 2), int(-1)]));
        let t2 = wedge_transform(&t1);
        assert_eq!(
            t2,
            AnglePolynomial::from_coeffs(&[rat(1, 12), rat(-1, 2), rat(1, 2)])
        );
        assert_eq!(t2.to_string(), "1/2*t^2 - 1/2*t + 1/12");
    }

    #[test]
    fn ground_integrals() {
        assert_eq!(ground_integral(&AnglePolynomial::one()), rat(1, 2));
        let g = AnglePolynomial::from_coeffs(&[rat(1, 2), int(-1)]);
        assert_eq!(ground_integral(&g), rat(1, 12));
        assert_eq!(ground_integral(&g.mul(&g)), rat(1, 24));
    }

    #[test]
    fn ground_integral_is_transform_at_zero() {
        for k in 0..10i64 {
            let g =
                AnglePolynomial::from_coeffs(&[int(k - 3), rat(k, 7), int(2 - k), rat(1, k + 1)]);
            assert_eq!(ground_integral(&g), wedge_transform(&g).eval(&int(0)));
            assert_eq!(wedge_transform(&g).degree(), Some(g.degree().unwrap() + 1));
        }
    }

    #[test]
    fn antiderivative_constant_cancels() {
        let g = AnglePolynomial::from_coeffs(&[int(2), int(-3), int(5)]);
        let big = g.antiderivative();
        let shifted = AnglePolynomial(&Polynomial::constant(1, int(7)) + big.poly());
        let t = |b: &AnglePolynomial| {
            AnglePolynomial(&Polynomial::constant(1, b.integral()) - b.poly())
        };
        assert_eq!(t(&big), t(&shifted));
    }

    #[test]
    fn iterates_match_bernoulli_polynomials() {
        let b = bernoulli_numbers(12, BernoulliVariant::Modified);
        for n in 1..=12 {
            let p = pn_polynomial(n);
            assert_eq!(p, pn_closed(n), "n = {n}");
            assert_eq!(p.eval(&int(0)), &b[n] * inv_factorial(n as u32));
        }
    }
}
