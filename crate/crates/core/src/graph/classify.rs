//! Structural classes of admissible graphs.

use serde::Serialize;

use super::admissible::{AdmissibleGraph, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    /// A directed cycle through aerial vertices.
    #[serde(rename = "loop")]
    pub has_loop: bool,
    /// The aerial part is connected (and nonempty).
    pub prime: bool,
    /// No loop and every aerial vertex has at most one incoming edge.
    pub sym_admissible: bool,
    /// Sym-admissible and prime.
    pub lie_admissible: bool,
    /// One base wedge `(X, Y)` with every other vertex sending `(X, aerial)`.
    pub w_computable: bool,
}

pub fn has_loop(g: &AdmissibleGraph) -> bool {
    // colour: 0 unvisited, 1 on stack, 2 done
    fn visit(g: &AdmissibleGraph, v: usize, colour: &mut [u8]) -> bool {
        colour[v] = 1;
        for t in g.targets(v) {
            if let Target::Aerial(w) = t {
                if colour[w] == 1 || (colour[w] == 0 && visit(g, w, colour)) {
                    return true;
                }
            }
        }
        colour[v] = 2;
        false
    }
    let mut colour = vec![0u8; g.n()];
    (0..g.n()).any(|v| colour[v] == 0 && visit(g, v, &mut colour))
}

pub fn is_prime(g: &AdmissibleGraph) -> bool {
    g.n() > 0 && g.factorize().len() == 1
}

pub fn is_sym_admissible(g: &AdmissibleGraph) -> bool {
    !has_loop(g) && (0..g.n()).all(|v| g.in_degree(v) <= 1)
}

pub fn is_w_computable(g: &AdmissibleGraph) -> bool {
    if g.n() == 0 || has_loop(g) {
        return false;
    }
    let mut base = 0;
    for e in g.edges() {
        match e {
            [Target::X, Target::Y] => base += 1,
            [Target::X, Target::Aerial(_)] => {}
            _ => return false,
        }
    }
    base == 1
}

pub fn classify(g: &AdmissibleGraph) -> GraphClass {
    let has_loop = has_loop(g);
    let prime = is_prime(g);
    let sym = !has_loop && (0..g.n()).all(|v| g.in_degree(v) <= 1);
    GraphClass {
        has_loop,
        prime,
        sym_admissible: sym,
        lie_admissible: sym && prime,
        w_computable: is_w_computable(g),
    }
}

/// Independent check that `g` is a disjoint union of binary trees once every
/// ground edge gets its own leaf: trees are grown from the vertices nobody
/// points at and must reach every vertex exactly once.
pub fn is_binary_forest(g: &AdmissibleGraph) -> bool {
    let n = g.n();
    let mut pointed = vec![false; n];
    for e in g.edges() {
        for t in e {
            if let Target::Aerial(v) = t {
                pointed[*v] = true;
            }
        }
    }
    let mut visits = vec![0usize; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| !pointed[v]).collect();
    while let Some(v) = stack.pop() {
        visits[v] += 1;
        if visits[v] > 1 {
            return false;
        }
        for t in g.targets(v) {
            if let Target::Aerial(w) = t {
                stack.push(w);
            }
        }
    }
    visits.iter().all(|&c| c == 1)
}
