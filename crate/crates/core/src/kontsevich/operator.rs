//! Graph operators coloured by `ᾱ = α/2`, and the loop and coverage checks.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::rat;
use crate::graph::{
    canonical_form, classify, enumerate_graphs, has_loop, is_sym_admissible, AdmissibleGraph,
};
use crate::lie::{linear_poisson, PoissonStructure, StructureConstants};
use crate::star::{graph_operator, BiDiffOp};

/// A graph together with its operator. Vertices are always coloured by half the
/// Poisson bivector passed in, which `alpha_bar` records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredOperator {
    pub source: AdmissibleGraph,
    pub operator: BiDiffOp,
    pub alpha_bar: bool,
}

/// `B_{Γ,ᾱ}` at ε^n, `n` the number of aerial vertices.
pub fn graph_to_operator(g: &AdmissibleGraph, alpha: &PoissonStructure) -> ColoredOperator {
    ColoredOperator {
        source: g.clone(),
        operator: half_operator(g, alpha, g.n(), None),
        alpha_bar: true,
    }
}

pub(crate) fn half_operator(
    g: &AdmissibleGraph,
    alpha: &PoissonStructure,
    order: usize,
    cap: Option<u32>,
) -> BiDiffOp {
    graph_operator(g, alpha, &rat(1, 2), order, cap)
}

/// One representative per topological type among graphs with `1..=max_n`
/// aerial vertices satisfying `keep`.
pub(crate) fn types_by_enumeration(
    max_n: usize,
    keep: impl Fn(&AdmissibleGraph) -> bool + Sync,
) -> Vec<AdmissibleGraph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let reps: BTreeMap<AdmissibleGraph, ()> = enumerate_graphs(n)
            .filter(|g| keep(g))
            .map(|g| (canonical_form(&g).graph, ()))
            .collect();
        out.extend(reps.into_keys());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopEntry {
    pub graph: String,
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LoopReport {
    pub algebra: String,
    pub max_n: usize,
    pub triangular_nilpotent: bool,
    pub entries: Vec<LoopEntry>,
}

impl LoopReport {
    pub fn all_zero(&self) -> bool {
        self.entries.iter().all(|e| e.zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = &LoopEntry> {
        self.entries.iter().filter(|e| !e.zero)
    }
}

/// Compiles every loop type with at most `max_n` aerial vertices against the
/// linear structure of `c`.
pub fn loop_vanishing_report(c: &StructureConstants, max_n: usize) -> LoopReport {
    let alpha = linear_poisson(c);
    let types = types_by_enumeration(max_n, has_loop);
    let entries = types
        .par_iter()
        .map(|g| LoopEntry {
            graph: g.to_string(),
            zero: half_operator(g, &alpha, g.n(), None).is_zero(),
        })
        .collect();
    LoopReport {
        algebra: c.name().to_string(),
        max_n,
        triangular_nilpotent: c.is_triangular_nilpotent(),
        entries,
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoverageRow {
    pub n: usize,
    pub graphs: usize,
    pub sym_admissible: usize,
    pub loops: usize,
    pub zero_operator: usize,
    /// Graphs in none of the three classes; expected to stay empty.
    pub other: Vec<String>,
}

/// Sorts every graph of `G_n`, `n <= max_n`, into Sym-admissible, loop, or
/// compiling to zero on the linear structure of `c`.
pub fn coverage_report(c: &StructureConstants, max_n: usize) -> Vec<CoverageRow> {
    let alpha = linear_poisson(c);
    (0..=max_n)
        .map(|n| {
            let graphs: Vec<AdmissibleGraph> = enumerate_graphs(n).collect();
            let mut row = CoverageRow {
                n,
                graphs: graphs.len(),
                ..Default::default()
            };
            let kinds: Vec<u8> = graphs
                .par_iter()
                .map(|g| {
                    if is_sym_admissible(g) {
                        0
                    } else if classify(g).has_loop {
                        1
                    } else if half_operator(g, &alpha, n, None).is_zero() {
                        2
                    } else {
                        3
                    }
                })
                .collect();
            for (g, k) in graphs.iter().zip(kinds) {
                match k {
                    0 => row.sym_admissible += 1,
                    1 => row.loops += 1,
                    2 => row.zero_operator += 1,
                    _ => row.other.push(g.to_string()),
                }
            }
            row
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, Polynomial};
    use crate::graph::{gamma_loop, hat_gamma};
    use crate::lie::{heisenberg, solvable2, strictly_upper};

    #[test]
    fn single_wedge_is_half_alpha() {
        let c = solvable2();
        let alpha = linear_poisson(&c);
        let op = graph_to_operator(&hat_gamma(1), &alpha);
        assert!(op.alpha_bar);
        let mut want = BiDiffOp::zero(2, 1, None);
        for i in 0..2 {
            for j in 0..2 {
                want.add_term(
                    1,
                    Monomial::var(2, i),
                    Monomial::var(2, j),
                    &alpha.entry(i, j).scale(&rat(1, 2)),
                );
            }
        }
        assert_eq!(op.operator, want);
    }

    #[test]
    fn coloring_example_with_three_vertices() {
        // 1:(X,Y); 2:(Y,3); 3:(X,Y): ᾱ^{i1 i2} ᾱ^{i3 i4} d_{i4} ᾱ^{i5 i6},
        // acting as d_{i1} d_{i5} ⊗ d_{i2} d_{i3} d_{i6}
        let g = AdmissibleGraph::parse("1:(X,Y);2:(Y,3);3:(X,Y)").unwrap();
        let c = strictly_upper(3);
        let alpha = linear_poisson(&c);
        let bar = alpha.scale(&rat(1, 2));
        let d = 3;
        let mut want = BiDiffOp::zero(d, 3, None);
        let v = |i| Monomial::var(d, i);
        for i1 in 0..d {
            for i2 in 0..d {
                for i3 in 0..d {
                    for i4 in 0..d {
                        for i5 in 0..d {
                            for i6 in 0..d {
                                let coef = &(bar.entry(i1, i2) * bar.entry(i3, i4))
                                    * &bar.entry(i5, i6).derive(i4, 1).unwrap();
                                want.add_term(
                                    3,
                                    v(i1).mul(&v(i5)),
                                    v(i2).mul(&v(i3)).mul(&v(i6)),
                                    &coef,
                                );
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(graph_to_operator(&g, &alpha).operator, want);
    }

    #[test]
    fn simplest_loop_is_the_killing_form() {
        let c = solvable2();
        let op = graph_to_operator(&gamma_loop(), &linear_poisson(&c)).operator;
        let k = c.killing_form();
        let mut want = BiDiffOp::zero(2, 2, None);
        for i in 0..2 {
            for j in 0..2 {
                // c_{j2}^{i1 j1} c_{j1}^{i2 j2} = tr(ad_i1 ad_i2) up to the 1/4 from ᾱ
                want.add_term(
                    2,
                    Monomial::var(2, i),
                    Monomial::var(2, j),
                    &Polynomial::constant(2, &k[i][j] * rat(1, 4)),
                );
            }
        }
        assert_eq!(op, want);
        assert!(!op.is_zero());
        assert!(
            graph_to_operator(&gamma_loop(), &linear_poisson(&heisenberg()))
                .operator
                .is_zero()
        );
    }

    #[test]
    fn loops_vanish_on_nilpotent_algebras() {
        let r = loop_vanishing_report(&strictly_upper(4), 3);
        assert!(r.triangular_nilpotent && r.all_zero());
        assert!(r.entries.len() > 10);
        let s = loop_vanishing_report(&solvable2(), 2);
        assert!(s.nonzero().count() > 0);
    }

    #[test]
    fn trichotomy() {
        for row in coverage_report(&strictly_upper(4), 3) {
            assert!(row.other.is_empty(), "{:?}", row.other);
            assert_eq!(
                row.sym_admissible + row.loops + row.zero_operator,
                row.graphs
            );
        }
    }
}
