//! Bracket monomials as graphs: one aerial vertex per bracket.

use crate::graph::{AdmissibleGraph, Target};

use super::bracket::BracketTree;
use super::LieError;

/// Vertices are numbered in post-order (left subtree, right subtree, node); the
/// first edge of a vertex goes to its left argument. `X` and `Y` leaves are the
/// ground vertices.
pub fn lie_to_lgraph(t: &BracketTree) -> Result<AdmissibleGraph, LieError> {
    let fail = |why: &str| LieError::NoGraph(t.to_string(), why.to_string());
    if let BracketTree::Leaf(_) = t {
        return Err(fail("a single letter has no bracket"));
    }
    fn walk(t: &BracketTree, edges: &mut Vec<[Target; 2]>) -> Result<Target, String> {
        match t {
            BracketTree::Leaf(0) => Ok(Target::X),
            BracketTree::Leaf(1) => Ok(Target::Y),
            BracketTree::Leaf(_) => Err("only the letters X and Y are ground vertices".into()),
            BracketTree::Node(a, b) => {
                let l = walk(a, edges)?;
                let r = walk(b, edges)?;
                edges.push([l, r]);
                Ok(Target::Aerial(edges.len() - 1))
            }
        }
    }
    let mut edges = Vec::new();
    walk(t, &mut edges).map_err(|e| fail(&e))?;
    AdmissibleGraph::new(edges).map_err(|e| fail(&e.to_string()))
}

impl BracketTree {
    /// Every bracket monomial with exactly `n` brackets over `letters` letters.
    pub fn all_with_brackets(n: usize, letters: u8) -> Vec<BracketTree> {
        if n == 0 {
            return (0..letters).map(BracketTree::Leaf).collect();
        }
        let mut out = Vec::new();
        for left in 0..n {
            let ls = Self::all_with_brackets(left, letters);
            let rs = Self::all_with_brackets(n - 1 - left, letters);
            for a in &ls {
                for b in &rs {
                    out.push(BracketTree::bracket(a.clone(), b.clone()));
                }
            }
        }
        out
    }
}
