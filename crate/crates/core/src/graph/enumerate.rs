//! Exhaustive enumeration of `G_n`.

use super::admissible::{AdmissibleGraph, Target};

/// Ordered pairs of distinct targets available to vertex `k` in a graph with `n` vertices,
/// in lexicographic order.
fn choices(n: usize, k: usize) -> Vec<[Target; 2]> {
    let mut ts = vec![Target::X, Target::Y];
    ts.extend((0..n).filter(|&v| v != k).map(Target::Aerial));
    let mut out = Vec::with_capacity(ts.len() * (ts.len() - 1));
    for &a in &ts {
        for &b in &ts {
            if a != b {
                out.push([a, b]);
            }
        }
    }
    out
}

/// `|G_n| = (n(n+1))^n`, with `|G_0| = 1`.
pub fn graph_count(n: usize) -> u128 {
    ((n * (n + 1)) as u128).pow(n as u32)
}

/// Every graph in `G_n`, lexicographic in the edge-target tuple (vertex 1 most significant).
pub fn enumerate_graphs(n: usize) -> GraphIter {
    let per: Vec<Vec<[Target; 2]>> = (0..n).map(|k| choices(n, k)).collect();
    GraphIter {
        per,
        digits: vec![0; n],
        done: false,
    }
}

pub struct GraphIter {
    per: Vec<Vec<[Target; 2]>>,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for GraphIter {
    type Item = AdmissibleGraph;

    fn next(&mut self) -> Option<AdmissibleGraph> {
        if self.done {
            return None;
        }
        let g = AdmissibleGraph::from_edges_unchecked(
            self.digits
                .iter()
                .zip(&self.per)
                .map(|(&d, c)| c[d])
                .collect(),
        );
        // odometer, last vertex least significant
        let mut k = self.digits.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.digits[k] += 1;
            if self.digits[k] < self.per[k].len() {
                break;
            }
            self.digits[k] = 0;
        }
        Some(g)
    }
}
