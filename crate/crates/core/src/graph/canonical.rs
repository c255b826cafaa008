//! Canonical forms up to relabeling aerial vertices and reordering edge pairs.

use super::admissible::{AdmissibleGraph, Target};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Lexicographically least relabeling with each edge pair in increasing order.
    pub graph: AdmissibleGraph,
    /// Whether reaching `graph` from the input needs an odd number of edge swaps.
    pub odd_flips: bool,
    /// Number of (relabeling, swap pattern) pairs fixing the input.
    pub automorphisms: usize,
    /// Some automorphism uses an odd number of swaps; such graphs carry zero
    /// weight and zero operator.
    pub odd_automorphism: bool,
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn sorted_relabel(g: &AdmissibleGraph, perm: &[usize]) -> (Vec<[Target; 2]>, u32) {
    let n = g.n();
    let mut edges = vec![[Target::X, Target::X]; n];
    let mut swaps = 0;
    for (k, [a, b]) in g.edges().iter().enumerate() {
        let m = |t: &Target| match t {
            Target::Aerial(v) => Target::Aerial(perm[*v]),
            x => *x,
        };
        let (a, b) = (m(a), m(b));
        edges[perm[k]] = if a <= b {
            [a, b]
        } else {
            swaps += 1;
            [b, a]
        };
    }
    (edges, swaps)
}

/// Since swaps act on each vertex independently, only relabelings need to be
/// searched; every edge pair is then put in increasing order.
pub fn canonical_form(g: &AdmissibleGraph) -> CanonicalForm {
    let (own, own_swaps) = sorted_relabel(g, &(0..g.n()).collect::<Vec<_>>());
    let mut best: Option<(Vec<[Target; 2]>, u32)> = None;
    let mut autos = 0;
    let mut odd_auto = false;
    for perm in permutations(g.n()) {
        let (edges, swaps) = sorted_relabel(g, &perm);
        if edges == own {
            // this relabeling composed with the right swaps fixes g
            autos += 1;
            if (swaps + own_swaps) % 2 == 1 {
                odd_auto = true;
            }
        }
        match &best {
            Some((b, _)) if *b <= edges => {}
            _ => best = Some((edges, swaps)),
        }
    }
    let (edges, swaps) = best.expect("at least the identity");
    CanonicalForm {
        graph: AdmissibleGraph::from_edges_unchecked(edges),
        odd_flips: swaps % 2 == 1,
        automorphisms: autos,
        odd_automorphism: odd_auto,
    }
}

/// Number of distinct labeled, ordered graphs of the same topological type:
/// `n! 2^n / |Aut|`.
pub fn symmetry_count(g: &AdmissibleGraph) -> u128 {
    let n = g.n() as u128;
    let group: u128 = (1..=n).product::<u128>() << n;
    group / canonical_form(g).automorphisms as u128
}
