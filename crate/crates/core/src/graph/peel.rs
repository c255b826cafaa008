//! Peeling loop-free graphs vertex by vertex, and building W-computable graphs.

use super::admissible::{AdmissibleGraph, Target};
use super::classify::has_loop;
use super::GraphError;

/// One removed vertex with its (original) label and edge targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: usize,
    pub targets: [Target; 2],
}

/// Height: ground vertices sit at 0, an aerial vertex one above its highest target.
pub fn heights(g: &AdmissibleGraph) -> Result<Vec<usize>, GraphError> {
    if has_loop(g) {
        return Err(GraphError::HasLoop);
    }
    fn h(g: &AdmissibleGraph, v: usize, memo: &mut [Option<usize>]) -> usize {
        if let Some(x) = memo[v] {
            return x;
        }
        let x = 1 + g
            .targets(v)
            .iter()
            .map(|t| match t {
                Target::Aerial(w) => h(g, *w, memo),
                _ => 0,
            })
            .max()
            .expect("two targets");
        memo[v] = Some(x);
        x
    }
    let mut memo = vec![None; g.n()];
    Ok((0..g.n()).map(|v| h(g, v, &mut memo)).collect())
}

/// Repeatedly removes a free vertex (no incoming edges left) of maximal height,
/// smallest label first among ties.
pub fn decompose_nonloop(g: &AdmissibleGraph) -> Result<Vec<PeelStep>, GraphError> {
    let hs = heights(g)?;
    let n = g.n();
    let mut alive = vec![true; n];
    let mut steps = Vec::with_capacity(n);
    for _ in 0..n {
        let free = |v: usize| {
            alive[v] && (0..n).all(|k| !alive[k] || !g.targets(k).contains(&Target::Aerial(v)))
        };
        let v = (0..n)
            .filter(|&v| free(v))
            .max_by(|&a, &b| hs[a].cmp(&hs[b]).then(b.cmp(&a)))
            .expect("a loop-free graph always has a free vertex");
        alive[v] = false;
        steps.push(PeelStep {
            vertex: v,
            targets: g.targets(v),
        });
    }
    Ok(steps)
}

/// Inverse of [`decompose_nonloop`].
pub fn reconstruct(steps: &[PeelStep]) -> Result<AdmissibleGraph, GraphError> {
    let n = steps.len();
    let mut edges: Vec<Option<[Target; 2]>> = vec![None; n];
    for s in steps.iter().rev() {
        if s.vertex >= n || edges[s.vertex].is_some() {
            return Err(GraphError::Invalid(
                "peel sequence repeats or skips a vertex".into(),
            ));
        }
        edges[s.vertex] = Some(s.targets);
    }
    AdmissibleGraph::new(edges.into_iter().map(|e| e.expect("filled")).collect())
}

/// Base wedge `1:(X,Y)` followed by wedges `(X, t)`; `attachments[i]` is the
/// 1-based vertex that wedge `i + 2` lands on.
pub fn build_w_computable(attachments: &[usize]) -> Result<AdmissibleGraph, GraphError> {
    let mut edges = vec![[Target::X, Target::Y]];
    for (i, &t) in attachments.iter().enumerate() {
        if t == 0 || t > i + 1 {
            return Err(GraphError::Invalid(format!(
                "wedge {} cannot attach to vertex {t}",
                i + 2
            )));
        }
        edges.push([Target::X, Target::Aerial(t - 1)]);
    }
    AdmissibleGraph::new(edges)
}

/// The chain `1:(X,Y); 2:(X,1); ...; m:(X,m-1)`, which carries `ad_X^{m-1}` on top of `[X,Y]`.
pub fn hat_gamma(m: usize) -> AdmissibleGraph {
    assert!(m >= 1, "chain needs a vertex");
    build_w_computable(&(1..m).collect::<Vec<_>>()).expect("valid chain")
}

/// `1:(X,2); 2:(Y,1)`, the two-vertex loop.
pub fn gamma_loop() -> AdmissibleGraph {
    AdmissibleGraph::new(vec![
        [Target::X, Target::Aerial(1)],
        [Target::Y, Target::Aerial(0)],
    ])
    .expect("valid")
}
