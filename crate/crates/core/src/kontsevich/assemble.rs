//! Assembling `sum_Γ w_Γ B_{Γ,ᾱ}` for linear Poisson structures.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{inv_factorial, serde_rational, EpsSeries, Polynomial, Rational};
use crate::free_lie::{hausdorff_series, lie_to_lgraph, BracketTree};
use crate::graph::{
    canonical_form, classify, has_loop, hat_gamma, symmetry_count, AdmissibleGraph, GraphClass,
};
use crate::lie::{linear_poisson, PoissonStructure, StructureConstants};
use crate::star::{BiDiffOp, StarError, StarProduct};
use crate::weight::{weight, weight_w_computable, WeightError};

use super::operator::{half_operator, types_by_enumeration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightSource {
    /// Prime weights read off the Hausdorff series, composites by the exp rule.
    Cbh,
    /// Weights integrated by the weight engine where it applies.
    Independent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowSource {
    Cbh,
    Integrated,
    ZeroedLoop,
    Uncovered,
}

/// One topological type. `weight` is the aggregated weight, i.e. the
/// coefficient of `B_{Γ,ᾱ}` for the representative `graph`, which equals
/// `symmetry_count * w_K` when `w_K` is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditRow {
    pub graph: String,
    pub class: GraphClass,
    #[serde(with = "serde_rational")]
    pub weight: Rational,
    pub source: RowSource,
    pub symmetry_count: String,
}

/// Prime Lie-admissible types with `1..=max_n` vertices, from bracket monomials.
pub fn prime_types(max_n: usize) -> Vec<AdmissibleGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let reps: BTreeMap<AdmissibleGraph, ()> = BracketTree::all_with_brackets(n, 2)
            .iter()
            .filter_map(|t| lie_to_lgraph(t).ok())
            .map(|g| (canonical_form(&g).graph, ()))
            .collect();
        out.extend(reps.into_keys());
    }
    out
}

fn pow2(n: usize) -> Rational {
    Rational::from_integer(BigInt::one() << n)
}

/// `2^n sum_w h_w (±1)` over two-letter Lyndon words whose standard bracketing
/// has the type of the key, with the sign of the flips reaching the representative.
fn cbh_prime_weights(max_n: usize) -> BTreeMap<AdmissibleGraph, Rational> {
    let h = hausdorff_series(max_n + 1);
    let mut out: BTreeMap<AdmissibleGraph, Rational> = BTreeMap::new();
    for (w, c) in h.terms() {
        if w.len() < 2 {
            continue;
        }
        let g = lie_to_lgraph(&BracketTree::standard(w)).expect("Lyndon words of length >= 2");
        let cf = canonical_form(&g);
        let s = if cf.odd_flips {
            -Rational::one()
        } else {
            Rational::one()
        };
        *out.entry(cf.graph).or_insert_with(Rational::zero) += pow2(g.n()) * c * s;
    }
    out
}

fn aggregated_from_weight(g: &AdmissibleGraph, w_k: &Rational) -> Rational {
    Rational::from_integer(BigInt::from(symmetry_count(g))) * w_k
}

/// Multisets of indices into `primes` with total vertex count in `2..=max_n`
/// and at least two factors.
fn composite_multisets(sizes: &[usize], max_n: usize) -> Vec<Vec<usize>> {
    fn rec(
        sizes: &[usize],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for i in start..sizes.len() {
            if sizes[i] <= left {
                cur.push(i);
                rec(sizes, i, left - sizes[i], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(sizes, 0, max_n, &mut Vec::new(), &mut out);
    out
}

/// The graph sum for a linear Poisson structure, truncated at ε^order.
/// Loop graphs carry weight zero; graphs that are neither loops nor
/// Sym-admissible have a vertex with two incoming edges and compile to zero.
pub struct KontsevichStar {
    c: StructureConstants,
    alpha: PoissonStructure,
    order: usize,
    source: WeightSource,
    terms: Vec<(AdmissibleGraph, Rational)>,
    audit: Vec<AuditRow>,
    uncovered: Vec<String>,
    cache: Mutex<BTreeMap<u32, Arc<BiDiffOp>>>,
}

/// Loop types are listed in the audit up to this many vertices; beyond it
/// enumerating `G_n` is out of reach and they are simply left out.
const AUDIT_LOOP_MAX: usize = 3;

pub fn assemble_linear_star(
    c: &StructureConstants,
    order: usize,
    source: WeightSource,
) -> Result<KontsevichStar, StarError> {
    c.require_lie()?;
    let primes = prime_types(order);
    let cbh = match source {
        WeightSource::Cbh => Some(cbh_prime_weights(order)),
        WeightSource::Independent => None,
    };
    let mut terms = Vec::new();
    let mut audit = Vec::new();
    let mut uncovered = Vec::new();
    // aggregated weight per prime, None when unknown
    let mut prime_w: Vec<Option<Rational>> = Vec::new();
    let mut push =
        |g: &AdmissibleGraph, w: Option<Rational>, src: RowSource, terms: &mut Vec<_>| {
            audit.push(AuditRow {
                graph: g.to_string(),
                class: classify(g),
                weight: w.clone().unwrap_or_else(Rational::zero),
                source: src,
                symmetry_count: symmetry_count(g).to_string(),
            });
            if let Some(w) = w {
                if !w.is_zero() {
                    terms.push((g.clone(), w));
                }
            }
        };
    for p in &primes {
        let (w, src) = match &cbh {
            Some(map) => (
                Some(map.get(p).cloned().unwrap_or_else(Rational::zero)),
                RowSource::Cbh,
            ),
            None => match weight(p) {
                Ok(w) => (
                    Some(aggregated_from_weight(p, &w.w_k)),
                    RowSource::Integrated,
                ),
                Err(_) => (None, RowSource::Uncovered),
            },
        };
        if w.is_none() {
            uncovered.push(p.to_string());
        }
        push(p, w.clone(), src, &mut terms);
        prime_w.push(w);
    }
    let sizes: Vec<usize> = primes.iter().map(AdmissibleGraph::n).collect();
    for ms in composite_multisets(&sizes, order) {
        let g = ms
            .iter()
            .fold(AdmissibleGraph::empty(), |acc, &i| acc.product(&primes[i]));
        let (w, src) = match source {
            WeightSource::Cbh => {
                // prod a_P^k / k!
                let mut w = Rational::one();
                let mut i = 0;
                while i < ms.len() {
                    let j = ms[i..].iter().take_while(|&&x| x == ms[i]).count();
                    let a = prime_w[ms[i]].clone().expect("cbh weights are total");
                    for _ in 0..j {
                        w *= &a;
                    }
                    w *= inv_factorial(j as u32);
                    i += j;
                }
                (Some(w), RowSource::Cbh)
            }
            WeightSource::Independent => match weight(&g) {
                Ok(wt) => (
                    Some(aggregated_from_weight(&g, &wt.w_k)),
                    RowSource::Integrated,
                ),
                Err(_) => (None, RowSource::Uncovered),
            },
        };
        if w.is_none() {
            uncovered.push(g.to_string());
        }
        push(&g, w, src, &mut terms);
    }
    for g in types_by_enumeration(order.min(AUDIT_LOOP_MAX), has_loop) {
        push(
            &g,
            Some(Rational::zero()),
            RowSource::ZeroedLoop,
            &mut terms,
        );
    }
    Ok(KontsevichStar {
        c: c.clone(),
        alpha: linear_poisson(c),
        order,
        source,
        terms,
        audit,
        uncovered,
        cache: Mutex::new(BTreeMap::new()),
    })
}

impl KontsevichStar {
    pub fn source(&self) -> WeightSource {
        self.source
    }

    pub fn algebra(&self) -> &StructureConstants {
        &self.c
    }

    pub fn audit(&self) -> &[AuditRow] {
        &self.audit
    }

    /// Types whose weight could not be obtained; they are left out of the sum.
    pub fn uncovered(&self) -> &[String] {
        &self.uncovered
    }

    /// Graph types with nonzero aggregated weight.
    pub fn terms(&self) -> &[(AdmissibleGraph, Rational)] {
        &self.terms
    }

    pub fn operator(&self, cap: u32) -> Arc<BiDiffOp> {
        if let Some(op) = self.cache.lock().expect("cache").get(&cap) {
            return op.clone();
        }
        let d = self.c.dim();
        let mut op = BiDiffOp::identity(d, self.order, Some(cap));
        for (g, w) in &self.terms {
            op.add_scaled(&half_operator(g, &self.alpha, self.order, Some(cap)), w);
        }
        let op = Arc::new(op);
        self.cache
            .lock()
            .expect("cache")
            .entry(cap)
            .or_insert_with(|| op.clone());
        op
    }
}

impl StarProduct for KontsevichStar {
    fn nvars(&self) -> usize {
        self.c.dim()
    }

    fn order(&self) -> usize {
        self.order
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.check_inputs(f, g)?;
        let cap = f.total_degree().unwrap_or(0) + g.total_degree().unwrap_or(0);
        self.operator(cap).apply(f, g)
    }
}

/// `symmetry_count(Γ̂_m) w_K(Γ̂_m)`, the aggregated weight of the chain type.
pub fn chain_aggregated_weight(m: usize) -> Result<Rational, WeightError> {
    let g = hat_gamma(m);
    Ok(aggregated_from_weight(&g, &weight_w_computable(&g)?.w_k))
}

/// `(X)^n ⋆ Y` from the chain graphs alone, `X, Y` given by coefficient vectors.
pub fn assemble_xn_star_y(
    c: &StructureConstants,
    n: usize,
    order: usize,
    x: &[Rational],
    y: &[Rational],
) -> Result<EpsSeries, StarError> {
    c.require_lie()?;
    if n == 0 {
        return Err(StarError::Precondition("n must be at least 1".into()));
    }
    let d = c.dim();
    if x.len() != d || y.len() != d {
        return Err(StarError::VariableMismatch {
            expected: d,
            got: if x.len() != d { x.len() } else { y.len() },
        });
    }
    let alpha = linear_poisson(c);
    let f = Polynomial::linear(x).pow(n as u32);
    let g = Polynomial::linear(y);
    let mut out = EpsSeries::from_poly(&f * &g, order);
    for m in 1..=n.min(order) {
        let a = chain_aggregated_weight(m).map_err(|e| StarError::Precondition(e.to_string()))?;
        if a.is_zero() {
            continue;
        }
        let op = half_operator(&hat_gamma(m), &alpha, order, None);
        let r = op.apply(&f, &g)?;
        out = &out + &r.scale(&a);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{bernoulli_numbers, int, rat, BernoulliVariant};
    use crate::lie::{heisenberg, solvable2, strictly_upper};
    use crate::star::{check_equivalence, EquivalenceMode, UeaStar, XnMethod, XnStarY};

    #[test]
    fn prime_type_counts() {
        let p = prime_types(3);
        let by_n: Vec<usize> = (1..=3)
            .map(|n| p.iter().filter(|g| g.n() == n).count())
            .collect();
        assert_eq!(by_n[0], 1);
        assert_eq!(by_n[1], 2);
        assert!(p.iter().all(|g| classify(g).lie_admissible));
    }

    #[test]
    fn chain_bookkeeping() {
        let b = bernoulli_numbers(8, BernoulliVariant::Modified);
        for m in 1..=8 {
            let a = chain_aggregated_weight(m).unwrap();
            assert_eq!(
                a * rat(1, 2).pow(m as i32),
                &b[m] * inv_factorial(m as u32),
                "m = {m}"
            );
        }
    }

    #[test]
    fn first_orders() {
        let c = solvable2();
        let k = assemble_linear_star(&c, 2, WeightSource::Cbh).unwrap();
        let alpha = linear_poisson(&c);
        let f = Polynomial::parse("x1^2*x2", 2).unwrap();
        let g = Polynomial::parse("x2 + x1*x2", 2).unwrap();
        let r = k.star(&f, &g).unwrap();
        assert_eq!(r.coeff(1), &alpha.bracket(&f, &g).scale(&rat(1, 2)));
    }

    #[test]
    fn xn_star_y_from_chains() {
        let c = strictly_upper(4);
        let x: Vec<Rational> = (1..=6).map(int).collect();
        let y: Vec<Rational> = (0..6).map(|i| int(3 - i)).collect();
        for n in 1..=5 {
            let closed = XnStarY::new(n, 5, XnMethod::CbhClosed).unwrap();
            assert_eq!(
                assemble_xn_star_y(&c, n, 5, &x, &y).unwrap(),
                closed.evaluate(&c, &x, &y).unwrap()
            );
        }
    }

    #[test]
    fn cbh_source_matches_enveloping_product() {
        let c = heisenberg();
        let k = assemble_linear_star(&c, 3, WeightSource::Cbh).unwrap();
        let u = UeaStar::new(&c, 3).unwrap();
        let r =
            check_equivalence(&k, &u, EquivalenceMode::MonomialPairs { degree_bound: 4 }).unwrap();
        assert!(r.equal(), "{:?}", r.mismatches);
    }

    #[test]
    fn independent_weights_cover_second_order() {
        let c = solvable2();
        let k = assemble_linear_star(&c, 2, WeightSource::Independent).unwrap();
        assert!(k.uncovered().is_empty());
        let u = UeaStar::new(&c, 2).unwrap();
        let r =
            check_equivalence(&k, &u, EquivalenceMode::MonomialPairs { degree_bound: 4 }).unwrap();
        assert!(r.equal(), "{:?}", r.mismatches);
        let k3 = assemble_linear_star(&c, 3, WeightSource::Independent).unwrap();
        assert!(!k3.uncovered().is_empty());
    }

    #[test]
    fn composite_weights_follow_the_exp_rule() {
        // independent weights: the aggregated weight of a product of W-computable
        // types is the product of the factors' aggregated weights over k!
        let k = assemble_linear_star(&solvable2(), 4, WeightSource::Independent).unwrap();
        let w = k.audit();
        let find = |g: &AdmissibleGraph| {
            w.iter()
                .find(|r| r.graph == g.to_string())
                .map(|r| r.weight.clone())
                .unwrap()
        };
        let g1 = hat_gamma(1);
        let g2 = hat_gamma(2);
        let a1 = find(&g1);
        let a2 = find(&g2);
        assert_eq!(find(&g1.product(&g1)), &a1 * &a1 * rat(1, 2));
        assert_eq!(
            find(&g1.product(&g1).product(&g1)),
            &a1 * &a1 * &a1 * rat(1, 6)
        );
        assert_eq!(find(&g1.product(&g2)), &a1 * &a2);
        assert_eq!(find(&g2.product(&g2)), &a2 * &a2 * rat(1, 2));
    }

    #[test]
    fn audit_lists_loops_as_zero() {
        let k = assemble_linear_star(&heisenberg(), 2, WeightSource::Cbh).unwrap();
        let loops: Vec<_> = k
            .audit()
            .iter()
            .filter(|r| r.source == RowSource::ZeroedLoop)
            .collect();
        // 1:(X,2);2:(X,1), the same with Y, and the mixed one
        assert_eq!(loops.len(), 3);
        assert!(loops.iter().all(|r| r.weight.is_zero()));
    }
}
