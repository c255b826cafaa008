//! Exact weights of W-computable graphs and their products by iterated
//! integration of angle polynomials.
//!
//! Conventions: flipping the two edges of one vertex negates the weight, and
//! mirroring (exchanging the ground vertices) multiplies it by `(-1)^n`.

mod angle;

pub use angle::{ground_integral, pn_closed, pn_polynomial, wedge_transform, AnglePolynomial};

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{inv_factorial, serde_rational, Rational};
use crate::graph::{
    build_w_computable, canonical_form, classify, decompose_nonloop, has_loop, is_w_computable,
    AdmissibleGraph, GraphClass, Target,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("`{0}` contains a loop; loop weights are not computed")]
    Loop(String),
    #[error("`{0}` is not W-computable, even after flips and mirroring")]
    NotComputable(String),
}

/// `w_i` omits the `1/n!` normalization and is multiplicative; `w_k = w_i / n!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Weight {
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub w_i: Rational,
    #[serde(with = "serde_rational")]
    pub w_k: Rational,
}

impl Weight {
    pub fn from_w_i(n: usize, w_i: Rational) -> Self {
        let w_k = &w_i * inv_factorial(n as u32);
        Weight { n, w_i, w_k }
    }
}

/// Integrates a loop-free graph whose vertices all send `(X, Y)` or `(X, aerial)`.
/// Vertices are removed once nothing points at them; each removal folds the
/// vertex's accumulated integrand into its aerial target through the wedge
/// transform, and each base wedge contributes a ground integral.
fn integrate_forest(g: &AdmissibleGraph) -> Rational {
    let mut acc = vec![AnglePolynomial::one(); g.n()];
    let mut out = Rational::one();
    for step in decompose_nonloop(g).expect("caller checked for loops") {
        let k = step.vertex;
        match step.targets {
            [Target::X, Target::Y] => out *= ground_integral(&acc[k]),
            [Target::X, Target::Aerial(i)] => {
                let t = wedge_transform(&acc[k]);
                acc[i] = acc[i].mul(&t);
            }
            _ => unreachable!("caller checked the shape"),
        }
    }
    out
}

fn forest_shape(g: &AdmissibleGraph) -> bool {
    !has_loop(g)
        && g.edges()
            .iter()
            .all(|e| matches!(e, [Target::X, Target::Y] | [Target::X, Target::Aerial(_)]))
}

/// Weight of a graph in the W-computable family exactly as given (no normalization).
pub fn weight_w_computable(g: &AdmissibleGraph) -> Result<Weight, WeightError> {
    if !is_w_computable(g) {
        return Err(WeightError::NotComputable(g.to_string()));
    }
    Ok(Weight::from_w_i(g.n(), integrate_forest(g)))
}

/// Integrates a product of W-computable graphs in one pass, without factoring it.
pub fn weight_forest(g: &AdmissibleGraph) -> Result<Weight, WeightError> {
    if !forest_shape(g) {
        return Err(WeightError::NotComputable(g.to_string()));
    }
    Ok(Weight::from_w_i(g.n(), integrate_forest(g)))
}

fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// `w_i` of a prime graph, after reducing it to the W-computable family by
/// relabeling, flips and possibly a mirror.
fn prime_w_i(g: &AdmissibleGraph) -> Result<Rational, WeightError> {
    let cf = canonical_form(g);
    if cf.odd_automorphism {
        return Ok(Rational::zero());
    }
    if is_w_computable(&cf.graph) {
        return Ok(sign(cf.odd_flips) * integrate_forest(&cf.graph));
    }
    let mf = canonical_form(&g.mirror());
    if is_w_computable(&mf.graph) {
        let s = sign(mf.odd_flips ^ (g.n() % 2 == 1));
        return Ok(s * integrate_forest(&mf.graph));
    }
    Err(WeightError::NotComputable(g.to_string()))
}

/// Weight of any graph whose prime factors reduce to the W-computable family.
pub fn weight(g: &AdmissibleGraph) -> Result<Weight, WeightError> {
    if has_loop(g) {
        return Err(WeightError::Loop(g.to_string()));
    }
    let mut w = Rational::one();
    for f in g.factorize() {
        w *= prime_w_i(&f)?;
    }
    Ok(Weight::from_w_i(g.n(), w))
}

/// Alias for [`weight`], named for its use on products.
pub fn product_weight(g: &AdmissibleGraph) -> Result<Weight, WeightError> {
    weight(g)
}

/// Every W-computable graph on `n >= 1` vertices, one per attachment sequence.
pub fn w_computable_family(n: usize) -> Vec<AdmissibleGraph> {
    fn rec(n: usize, cur: &mut Vec<usize>, out: &mut Vec<AdmissibleGraph>) {
        if cur.len() + 1 == n {
            out.push(build_w_computable(cur).expect("attachments in range"));
            return;
        }
        for t in 1..=cur.len() + 1 {
            cur.push(t);
            rec(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, &mut Vec::new(), &mut out);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Swap the two edges of vertex `k` (0-based).
    Flip(usize),
    /// Exchange `X` and `Y`.
    Mirror,
}

/// The transformed graph and the factor its weight picks up.
pub fn sign_rules(g: &AdmissibleGraph, t: Transform) -> (i32, AdmissibleGraph) {
    match t {
        Transform::Flip(k) => (-1, g.flip(k)),
        Transform::Mirror => (if g.n().is_multiple_of(2) { 1 } else { -1 }, g.mirror()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub graph: String,
    #[serde(flatten)]
    pub weight: Weight,
    pub class: GraphClass,
}

pub fn weight_report(g: &AdmissibleGraph) -> Result<WeightReport, WeightError> {
    Ok(WeightReport {
        graph: g.to_string(),
        weight: weight(g)?,
        class: classify(g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bernoulli_numbers, int, rat, BernoulliVariant};
    use crate::graph::{enumerate_graphs, gamma_loop, hat_gamma};

    fn g(s: &str) -> AdmissibleGraph {
        AdmissibleGraph::parse(s).unwrap()
    }

    #[test]
    fn chain_weights() {
        let b = bernoulli_numbers(10, BernoulliVariant::Modified);
        assert_eq!(weight_w_computable(&hat_gamma(1)).unwrap().w_i, rat(1, 2));
        assert_eq!(weight_w_computable(&hat_gamma(2)).unwrap().w_i, rat(1, 12));
        for k in 1..=10 {
            let w = weight_w_computable(&hat_gamma(k)).unwrap();
            assert_eq!(w.w_i, &b[k] * inv_factorial(k as u32), "k = {k}");
            assert_eq!(w.w_k, &w.w_i * inv_factorial(k as u32));
            if k >= 3 && k % 2 == 1 {
                assert!(w.w_i.is_zero());
            }
        }
    }

    #[test]
    fn star_graph() {
        let s = build_w_computable(&[1, 1]).unwrap();
        assert_eq!(weight_w_computable(&s).unwrap().w_i, rat(1, 24));
    }

    #[test]
    fn products_and_empty_graph() {
        let w1 = hat_gamma(1);
        let sq = w1.product(&w1);
        let w = product_weight(&sq).unwrap();
        assert_eq!(w.w_i, rat(1, 4));
        assert_eq!(w.w_k, rat(1, 8));
        assert_eq!(weight(&AdmissibleGraph::empty()).unwrap().w_i, int(1));
    }

    #[test]
    fn flips_and_mirror() {
        let w1 = hat_gamma(1);
        let (s, f) = sign_rules(&w1, Transform::Flip(0));
        assert_eq!(s, -1);
        assert_eq!(weight(&f).unwrap().w_i, rat(-1, 2));
        let (_, ff) = sign_rules(&f, Transform::Flip(0));
        assert_eq!(weight(&ff).unwrap().w_i, rat(1, 2));
        let (s, m) = sign_rules(&w1, Transform::Mirror);
        assert_eq!(s, -1);
        assert_eq!(m, f);
        assert_eq!(weight(&m).unwrap().w_i, rat(-1, 2));
        // mirrored chain of length two: 1:(Y,X);2:(Y,1)
        assert_eq!(weight(&g("1:(Y,X);2:(Y,1)")).unwrap().w_i, rat(1, 12));
    }

    #[test]
    fn sign_rules_are_consistent_on_small_graphs() {
        for n in 1..=3 {
            for gr in enumerate_graphs(n) {
                let Ok(w) = weight(&gr) else { continue };
                for k in 0..n {
                    let (s, f) = sign_rules(&gr, Transform::Flip(k));
                    assert_eq!(weight(&f).unwrap().w_i, &w.w_i * int(s as i64));
                }
                let (s, m) = sign_rules(&gr, Transform::Mirror);
                assert_eq!(weight(&m).unwrap().w_i, &w.w_i * int(s as i64), "{gr}");
            }
        }
    }

    #[test]
    fn refusals() {
        assert!(matches!(weight(&gamma_loop()), Err(WeightError::Loop(_))));
        // two wedges landing on the same vertex from both sides
        assert!(matches!(
            weight(&g("1:(X,Y);2:(X,1);3:(1,Y)")),
            Err(WeightError::NotComputable(_))
        ));
        assert!(weight_w_computable(&g("1:(Y,X)")).is_err());
    }

    #[test]
    fn multiplicativity_up_to_six_vertices() {
        let fam: Vec<Vec<AdmissibleGraph>> = (0..=5).map(w_computable_family).collect();
        assert_eq!(fam[4].len(), 6);
        for na in 1..=5 {
            for nb in 1..=(6 - na) {
                for a in &fam[na] {
                    for b in &fam[nb] {
                        let wa = weight_w_computable(a).unwrap().w_i;
                        let wb = weight_w_computable(b).unwrap().w_i;
                        let joint = weight_forest(&a.product(b)).unwrap().w_i;
                        assert_eq!(joint, &wa * &wb, "{a} * {b}");
                    }
                }
            }
        }
    }
}
