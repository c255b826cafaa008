//! Truncated series in non-commuting letters (the free associative algebra).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::rational::Rational;

/// A word over the alphabet `0..letters`; letter 0 prints as `X`, 1 as `Y`, 2 as `Z`.
pub type Word = Vec<u8>;

const NAMES: &[u8] = b"XYZUVWABCDEFGHIJKLMNOPQRST";

pub fn letter_name(l: u8) -> char {
    NAMES[l as usize] as char
}

pub fn word_to_string(w: &[u8]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&l| letter_name(l)).collect()
}

/// Which words survive: total length at most `max_len`, and optionally at most
/// `caps[l]` occurrences of letter `l`. Both conditions cut out two-sided ideals,
/// so products and exp/log are well defined in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub max_len: usize,
    pub caps: Option<Vec<usize>>,
}

impl Truncation {
    pub fn degree(max_len: usize) -> Self {
        Truncation {
            max_len,
            caps: None,
        }
    }

    pub fn admits(&self, w: &[u8]) -> bool {
        if w.len() > self.max_len {
            return false;
        }
        match &self.caps {
            None => true,
            Some(caps) => caps
                .iter()
                .enumerate()
                .all(|(l, &cap)| w.iter().filter(|&&x| x as usize == l).count() <= cap),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NCSeries {
    letters: usize,
    trunc: Truncation,
    terms: BTreeMap<Word, Rational>,
}

impl NCSeries {
    pub fn zero(letters: usize, trunc: Truncation) -> Self {
        assert!(letters <= NAMES.len(), "alphabet too large");
        NCSeries {
            letters,
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(letters: usize, trunc: Truncation) -> Self {
        let mut s = Self::zero(letters, trunc);
        s.add_term(Vec::new(), Rational::one());
        s
    }

    pub fn generator(letters: usize, trunc: Truncation, l: u8) -> Self {
        assert!((l as usize) < letters, "letter out of range");
        let mut s = Self::zero(letters, trunc);
        s.add_term(vec![l], Rational::one());
        s
    }

    pub fn word(letters: usize, trunc: Truncation, w: Word, c: Rational) -> Self {
        let mut s = Self::zero(letters, trunc);
        s.add_term(w, c);
        s
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() || !self.trunc.admits(&w) {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[u8]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    /// Terms of length exactly `deg`.
    pub fn homogeneous_part(&self, deg: usize) -> NCSeries {
        NCSeries {
            letters: self.letters,
            trunc: self.trunc.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == deg)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    fn check(&self, o: &NCSeries) -> Result<(), AlgebraError> {
        if self.letters != o.letters || self.trunc != o.trunc {
            return Err(AlgebraError::ShapeMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &NCSeries) -> Result<NCSeries, AlgebraError> {
        self.check(o)?;
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, o: &NCSeries) -> Result<NCSeries, AlgebraError> {
        self.check(o)?;
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.add_term(w.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Concatenation product, truncated.
    pub fn checked_mul(&self, o: &NCSeries) -> Result<NCSeries, AlgebraError> {
        self.check(o)?;
        let mut out = NCSeries::zero(self.letters, self.trunc.clone());
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                if u.len() + v.len() > self.trunc.max_len {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &NCSeries) -> NCSeries {
        self.checked_add(o).expect("incompatible series")
    }

    pub fn sub(&self, o: &NCSeries) -> NCSeries {
        self.checked_sub(o).expect("incompatible series")
    }

    pub fn mul(&self, o: &NCSeries) -> NCSeries {
        self.checked_mul(o).expect("incompatible series")
    }

    pub fn scale(&self, c: &Rational) -> NCSeries {
        let mut out = NCSeries::zero(self.letters, self.trunc.clone());
        for (w, k) in &self.terms {
            out.add_term(w.clone(), k * c);
        }
        out
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, o: &NCSeries) -> NCSeries {
        self.mul(o).sub(&o.mul(self))
    }

    /// `exp(s)`; requires a zero constant term.
    pub fn exp(&self) -> Result<NCSeries, AlgebraError> {
        if !self.constant_term().is_zero() {
            return Err(AlgebraError::Precondition(
                "exp needs a series without constant term".into(),
            ));
        }
        let one = NCSeries::one(self.letters, self.trunc.clone());
        let mut out = one.clone();
        let mut power = one;
        for k in 1..=self.trunc.max_len {
            power = power
                .mul(self)
                .scale(&Rational::new(1.into(), (k as i64).into()));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    /// `log(s)`; requires constant term 1.
    pub fn log(&self) -> Result<NCSeries, AlgebraError> {
        if !self.constant_term().is_one() {
            return Err(AlgebraError::Precondition(
                "log needs a series with constant term 1".into(),
            ));
        }
        let u = self.sub(&NCSeries::one(self.letters, self.trunc.clone()));
        let mut out = NCSeries::zero(self.letters, self.trunc.clone());
        let mut power = NCSeries::one(self.letters, self.trunc.clone());
        for k in 1..=self.trunc.max_len {
            power = power.mul(&u);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Rational::new(sign.into(), (k as i64).into())));
        }
        Ok(out)
    }

    /// Highest word length present.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }
}

impl fmt::Display for NCSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut items: Vec<_> = self.terms.iter().collect();
        items.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then(a.0.cmp(b.0)));
        for (i, (w, c)) in items.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{}", word_to_string(w))?;
            } else {
                write!(f, "({c})*{}", word_to_string(w))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn t(n: usize) -> Truncation {
        Truncation::degree(n)
    }

    #[test]
    fn exp_of_generator() {
        let x = NCSeries::generator(2, t(3), 0);
        let e = x.exp().unwrap();
        assert_eq!(e.coefficient(&[0, 0, 0]), rat(1, 6));
        assert_eq!(e.coefficient(&[]), rat(1, 1));
    }

    #[test]
    fn log_exp_product_low_degree() {
        let x = NCSeries::generator(2, t(2), 0);
        let y = NCSeries::generator(2, t(2), 1);
        let h = x.exp().unwrap().mul(&y.exp().unwrap()).log().unwrap();
        assert_eq!(h.coefficient(&[0]), rat(1, 1));
        assert_eq!(h.coefficient(&[0, 1]), rat(1, 2));
        assert_eq!(h.coefficient(&[1, 0]), rat(-1, 2));
        assert_eq!(h.coefficient(&[0, 0]), rat(0, 1));
    }

    #[test]
    fn preconditions() {
        let one = NCSeries::one(2, t(2));
        assert!(one.exp().is_err());
        assert!(NCSeries::generator(2, t(2), 0).log().is_err());
    }

    #[test]
    fn letter_caps_truncate() {
        let tr = Truncation {
            max_len: 5,
            caps: Some(vec![5, 1]),
        };
        let y = NCSeries::generator(2, tr.clone(), 1);
        assert!(y.mul(&y).is_zero());
        let x = NCSeries::generator(2, tr, 0);
        assert_eq!(x.mul(&y).coefficient(&[0, 1]), rat(1, 1));
    }
}
