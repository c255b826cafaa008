//! The Hausdorff series `log(exp X exp Y)` in the Lyndon basis.

use num_bigint::BigInt;

use crate::algebra::{NCSeries, Rational, Truncation};

use super::bracket::BracketTree;
use super::series::LieSeries;

/// `log(exp X exp Y)` in the free associative algebra.
pub fn hausdorff_associative(trunc: &Truncation) -> NCSeries {
    let x = NCSeries::generator(2, trunc.clone(), 0);
    let y = NCSeries::generator(2, trunc.clone(), 1);
    x.exp()
        .and_then(|ex| ex.checked_mul(&y.exp()?))
        .and_then(|p| p.log())
        .expect("generators have no constant term")
}

/// Dynkin's projection: each word `w` goes to `[[..[w1, w2]..], wn] / |w|`.
/// A Lie polynomial is fixed by it.
pub fn dynkin_projection(p: &NCSeries) -> NCSeries {
    let trunc = p.truncation().clone();
    let mut out = NCSeries::zero(p.letters(), trunc.clone());
    for (w, c) in p.terms() {
        if w.is_empty() {
            continue;
        }
        let t = BracketTree::left_normed(w).expand(p.letters(), &trunc);
        let k = c / Rational::from_integer(BigInt::from(w.len()));
        out = out.add(&t.scale(&k));
    }
    out
}

/// Hausdorff series through words of length `degree`.
pub fn hausdorff_series(degree: usize) -> LieSeries {
    let h = hausdorff_associative(&Truncation::degree(degree));
    LieSeries::from_lie_polynomial(&dynkin_projection(&h)).expect("projection is a Lie element")
}

/// Coefficients of `ad_X^k(Y)` in the Hausdorff series for `k = 0..=n`.
///
/// Works modulo words with two or more `Y`, so large `n` stays cheap.
pub fn hausdorff_linear_in_y(n: usize) -> Vec<Rational> {
    let trunc = Truncation {
        max_len: n + 1,
        caps: Some(vec![n + 1, 1]),
    };
    let h = hausdorff_associative(&trunc);
    let lie = LieSeries::from_lie_polynomial(&dynkin_projection(&h))
        .expect("projection is a Lie element");
    (0..=n)
        .map(|k| {
            let mut w = vec![0u8; k];
            w.push(1);
            lie.coefficient(&w)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bernoulli_numbers, inv_factorial, rat, BernoulliVariant};

    #[test]
    fn low_degrees() {
        let h = hausdorff_series(3);
        assert_eq!(h.coefficient(&[0]), rat(1, 1));
        assert_eq!(h.coefficient(&[1]), rat(1, 1));
        assert_eq!(h.coefficient(&[0, 1]), rat(1, 2));
        assert_eq!(h.coefficient(&[0, 0, 1]), rat(1, 12));
        assert_eq!(h.coefficient(&[0, 1, 1]), rat(1, 12));
        assert_eq!(h.terms().count(), 5);
        assert_eq!(
            h.to_string(),
            "X + Y + 1/2*[X,Y] + 1/12*[X,[X,Y]] + 1/12*[[X,Y],Y]"
        );
    }

    #[test]
    fn projection_reproduces_logarithm() {
        let trunc = Truncation::degree(6);
        let h = hausdorff_associative(&trunc);
        let lie = LieSeries::from_lie_polynomial(&dynkin_projection(&h)).unwrap();
        assert_eq!(lie.expand(), h);
        assert_eq!(LieSeries::from_lie_polynomial(&h).unwrap(), lie);
    }

    #[test]
    fn degree_four_single_term() {
        let h = hausdorff_series(4);
        let d4 = h.homogeneous(4);
        assert_eq!(d4.len(), 1);
        assert_eq!(d4[0].0, vec![0, 0, 1, 1]);
        assert_eq!(d4[0].1, rat(1, 24));
    }

    #[test]
    fn linear_in_y_is_modified_bernoulli() {
        let b = bernoulli_numbers(12, BernoulliVariant::Modified);
        let c = hausdorff_linear_in_y(12);
        for k in 0..=12 {
            assert_eq!(c[k], &b[k] * inv_factorial(k as u32), "k = {k}");
        }
    }

    #[test]
    fn non_lie_input_is_rejected() {
        let trunc = Truncation::degree(2);
        let p = NCSeries::word(2, trunc, vec![1, 0], rat(1, 1));
        assert!(LieSeries::from_lie_polynomial(&p).is_err());
    }
}
