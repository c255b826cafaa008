//! Exact arithmetic: rationals, commutative polynomials, ε-series, free associative
//! series and Bernoulli numbers.

mod bernoulli;
mod eps;
mod error;
mod ncseries;
mod parse;
mod polynomial;
mod rational;

pub use bernoulli::{
    bernoulli_number, bernoulli_numbers, bernoulli_polynomial, modified_identity_sums,
    BernoulliVariant,
};
pub use eps::EpsSeries;
pub use error::{AlgebraError, ParseError};
pub use ncseries::{letter_name, word_to_string, NCSeries, Truncation, Word};
pub use polynomial::{Monomial, Polynomial};
pub use rational::{
    binomial, factorial, int, inv_factorial, parse_rational, rat, serde_rational, Rational,
};
