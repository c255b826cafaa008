//! Lie series expressed in the Lyndon basis.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{word_to_string, NCSeries, Rational, Truncation, Word};

use super::bracket::BracketTree;
use super::lyndon::{cmp_len_lex, is_lyndon};
use super::LieError;

/// Key ordering words by length, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LyndonWord(pub Word);

impl Ord for LyndonWord {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        cmp_len_lex(&self.0, &o.0)
    }
}

impl PartialOrd for LyndonWord {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

/// `sum_w c_w P_w` over Lyndon words `w`, where `P_w` is the standard bracketing.
/// The basis is taken over letters ordered `X < Y < Z ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSeries {
    letters: usize,
    degree: usize,
    terms: BTreeMap<LyndonWord, Rational>,
}

impl LieSeries {
    pub fn zero(letters: usize, degree: usize) -> Self {
        LieSeries {
            letters,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn letters(&self) -> usize {
        self.letters
    }

    /// Truncation degree.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, w: &[u8]) -> Rational {
        self.terms
            .get(&LyndonWord(w.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Sets the coefficient of a basis element; `w` must be Lyndon.
    pub fn set_coefficient(&mut self, w: &[u8], c: Rational) -> Result<(), LieError> {
        if !is_lyndon(w) {
            return Err(LieError::NotLyndon(word_to_string(w)));
        }
        if c.is_zero() {
            self.terms.remove(&LyndonWord(w.to_vec()));
        } else {
            self.terms.insert(LyndonWord(w.to_vec()), c);
        }
        Ok(())
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter().map(|(k, v)| (&k.0, v))
    }

    /// Terms of exactly `deg` letters.
    pub fn homogeneous(&self, deg: usize) -> Vec<(Word, Rational)> {
        self.terms()
            .filter(|(w, _)| w.len() == deg)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect()
    }

    /// The element as a noncommutative polynomial.
    pub fn expand(&self) -> NCSeries {
        let trunc = Truncation::degree(self.degree);
        let mut out = NCSeries::zero(self.letters, trunc.clone());
        let mut cache = HashMap::new();
        for (w, c) in &self.terms {
            for (u, k) in standard_expansion(&w.0, &mut cache) {
                out.add_term(u.clone(), k * c);
            }
        }
        out
    }

    /// Evaluates every basis bracket on `images` (one series per letter).
    pub fn substitute(&self, images: &[NCSeries]) -> NCSeries {
        assert_eq!(images.len(), self.letters, "one image per letter");
        let mut out = NCSeries::zero(images[0].letters(), images[0].truncation().clone());
        for (w, c) in &self.terms {
            let v = BracketTree::standard(&w.0).substitute(images);
            out = out.add(&v.scale(c));
        }
        out
    }

    /// Rewrites a Lie polynomial in the Lyndon basis by peeling off the
    /// lexicographically smallest word, which must be Lyndon, one at a time.
    pub fn from_lie_polynomial(p: &NCSeries) -> Result<LieSeries, LieError> {
        let mut rest: BTreeMap<Word, Rational> =
            p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = LieSeries::zero(p.letters(), p.truncation().max_len);
        let mut cache = HashMap::new();
        while let Some((w, c)) = rest.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            if !is_lyndon(&w) {
                return Err(LieError::NotALieElement(word_to_string(&w)));
            }
            for (u, k) in standard_expansion(&w, &mut cache) {
                let e = rest.entry(u.clone()).or_insert_with(Rational::zero);
                *e -= k * &c;
                if e.is_zero() {
                    rest.remove(u);
                }
            }
            out.terms.insert(LyndonWord(w), c);
        }
        Ok(out)
    }
}

/// Expansion of the standard bracketing of `w`, memoized.
fn standard_expansion<'a>(
    w: &[u8],
    cache: &'a mut HashMap<Word, Vec<(Word, Rational)>>,
) -> &'a [(Word, Rational)] {
    if !cache.contains_key(w) {
        let t = BracketTree::standard(w);
        let e = t.expand(
            (*w.iter().max().expect("nonempty") as usize) + 1,
            &Truncation::degree(w.len()),
        );
        let v = e.terms().map(|(u, c)| (u.clone(), c.clone())).collect();
        cache.insert(w.to_vec(), v);
    }
    &cache[w]
}

impl fmt::Display for LieSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let t = BracketTree::standard(&w.0);
            if a.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "{a}*{t}")?;
            }
        }
        Ok(())
    }
}
