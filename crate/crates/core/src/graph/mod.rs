//! Admissible graphs: enumeration, classification, products, canonical forms,
//! peeling and export.

mod admissible;
mod canonical;
mod classify;
mod dot;
mod enumerate;
mod peel;

pub use admissible::{AdmissibleGraph, Target};
#[cfg(test)]
pub(crate) use canonical::permutations;
pub use canonical::{canonical_form, symmetry_count, CanonicalForm};
pub use classify::{
    classify, has_loop, is_binary_forest, is_prime, is_sym_admissible, is_w_computable, GraphClass,
};
pub use dot::to_dot;
pub use enumerate::{enumerate_graphs, graph_count, GraphIter};
pub use peel::{
    build_w_computable, decompose_nonloop, gamma_loop, hat_gamma, heights, reconstruct, PeelStep,
};

use thiserror::Error;

use crate::algebra::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph: {0}")]
    Invalid(String),
    #[error("graph text: {0}")]
    Parse(#[from] ParseError),
    #[error("graph contains a loop")]
    HasLoop,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn g(s: &str) -> AdmissibleGraph {
        AdmissibleGraph::parse(s).unwrap()
    }

    #[test]
    fn counts_and_order() {
        for (n, want) in [(0, 1u128), (1, 2), (2, 36), (3, 1728)] {
            assert_eq!(enumerate_graphs(n).count() as u128, want);
            assert_eq!(graph_count(n), want);
        }
        let g1: Vec<String> = enumerate_graphs(1).map(|x| x.to_string()).collect();
        assert_eq!(g1, ["1:(X,Y)", "1:(Y,X)"]);
        let all: Vec<AdmissibleGraph> = enumerate_graphs(2).collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_round_trip() {
        for n in 0..=3 {
            for x in enumerate_graphs(n) {
                assert_eq!(AdmissibleGraph::parse(&x.to_string()).unwrap(), x);
                assert!(AdmissibleGraph::new(x.edges().to_vec()).is_ok());
            }
        }
        assert_eq!(g(" 2:(X,1) ; 1:(X,Y) "), g("1:(X,Y);2:(X,1)"));
    }

    #[test]
    fn parse_errors() {
        for bad in [
            "1:(X,X)",
            "1:(X,1)",
            "1:(X,2)",
            "1:(X,Y);1:(Y,X)",
            "1:(X,Y",
            "1(X,Y)",
            "3:(X,Y)",
        ] {
            assert!(AdmissibleGraph::parse(bad).is_err(), "{bad}");
        }
        match AdmissibleGraph::parse("1:(X,Y);2:(X,Q)") {
            Err(GraphError::Parse(e)) => assert_eq!(e.offset, 13),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&hat_gamma(2));
        assert!(!c.has_loop && c.prime && c.sym_admissible && c.lie_admissible && c.w_computable);
        let c = classify(&gamma_loop());
        assert!(c.has_loop && c.prime && !c.sym_admissible && !c.lie_admissible && !c.w_computable);
        let star = build_w_computable(&[1, 1]).unwrap();
        let c = classify(&star);
        assert!(c.w_computable && !c.sym_admissible);
        let c = classify(&AdmissibleGraph::empty());
        assert!(!c.prime && c.sym_admissible && !c.w_computable);
    }

    #[test]
    fn classification_invariants() {
        for n in 0..=3 {
            for x in enumerate_graphs(n) {
                let c = classify(&x);
                assert_eq!(c.lie_admissible, c.sym_admissible && c.prime);
                if c.w_computable {
                    assert!(!c.has_loop && c.prime);
                }
                if c.has_loop {
                    assert!(!c.sym_admissible);
                }
                assert_eq!(c.sym_admissible, is_binary_forest(&x), "{x}");
            }
        }
    }

    #[test]
    fn products_and_factors() {
        let one = hat_gamma(1);
        let sq = one.product(&one);
        assert_eq!(sq.to_string(), "1:(X,Y);2:(X,Y)");
        assert_eq!(sq.factorize(), vec![one.clone(), one.clone()]);
        assert_eq!(hat_gamma(3).factorize(), vec![hat_gamma(3)]);
        let p = hat_gamma(2).product(&gamma_loop()).product(&one);
        assert_eq!(p.factorize(), vec![hat_gamma(2), gamma_loop(), one]);
        assert!(AdmissibleGraph::empty().factorize().is_empty());
    }

    #[test]
    fn peel_order_and_round_trip() {
        let steps = decompose_nonloop(&hat_gamma(3)).unwrap();
        let order: Vec<usize> = steps.iter().map(|s| s.vertex + 1).collect();
        assert_eq!(order, [3, 2, 1]);
        for n in 0..=3 {
            for x in enumerate_graphs(n) {
                match decompose_nonloop(&x) {
                    Ok(s) => assert_eq!(reconstruct(&s).unwrap(), x),
                    Err(e) => {
                        assert_eq!(e, GraphError::HasLoop);
                        assert!(has_loop(&x));
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_counts() {
        for m in 1..=5u32 {
            let want: u128 = (1..=m as u128).product::<u128>() << m;
            assert_eq!(symmetry_count(&hat_gamma(m as usize)), want);
        }
        let one = hat_gamma(1);
        assert_eq!(symmetry_count(&one.product(&one)), 4);
    }

    #[test]
    fn orbit_sizes_add_up() {
        for n in 0..=3 {
            let mut types: BTreeMap<AdmissibleGraph, (u128, u128)> = BTreeMap::new();
            for x in enumerate_graphs(n) {
                let e = types.entry(canonical_form(&x).graph).or_insert((0, 0));
                e.0 += 1;
                e.1 = symmetry_count(&x);
            }
            for (t, (seen, count)) in &types {
                assert_eq!(seen, count, "type {t}");
            }
            let total: u128 = types.values().map(|v| v.1).sum();
            assert_eq!(total, graph_count(n));
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        for x in enumerate_graphs(3).step_by(7) {
            let c = canonical_form(&x);
            for perm in permutations(3) {
                for flips in 0..8u64 {
                    let y = x.relabel(&perm, flips);
                    let d = canonical_form(&y);
                    assert_eq!(d.graph, c.graph);
                    if !c.odd_automorphism {
                        let parity = c.odd_flips ^ (flips.count_ones() % 2 == 1);
                        assert_eq!(d.odd_flips, parity, "{x} -> {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn dot_export() {
        let d = to_dot(&hat_gamma(2), "g");
        assert!(d.contains("a2 -> X [style=solid]"));
        assert!(d.contains("a2 -> a1 [style=dashed]"));
        assert!(d.contains("rank=sink"));
        assert!(d.contains("X [shape=box]"));
    }
}
