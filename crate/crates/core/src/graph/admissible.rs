//! Admissible graphs: aerial vertices `1..n`, each sending an ordered pair of
//! edges to two distinct targets among the other aerial vertices and the
//! ground vertices `X`, `Y`.

use std::fmt;

use crate::algebra::ParseError;

use super::GraphError;

/// Edge target. The derived order `X < Y < 1 < 2 < ...` drives enumeration and
/// canonical forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    X,
    Y,
    /// 0-based aerial vertex.
    Aerial(usize),
}

impl Target {
    pub fn is_ground(self) -> bool {
        !matches!(self, Target::Aerial(_))
    }

    pub fn aerial(self) -> Option<usize> {
        match self {
            Target::Aerial(v) => Some(v),
            _ => None,
        }
    }

    fn map(self, perm: &[usize]) -> Target {
        match self {
            Target::Aerial(v) => Target::Aerial(perm[v]),
            g => g,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::X => f.write_str("X"),
            Target::Y => f.write_str("Y"),
            Target::Aerial(v) => write!(f, "{}", v + 1),
        }
    }
}

/// `edges[k] = [first, second]` for aerial vertex `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleGraph {
    edges: Vec<[Target; 2]>,
}

impl AdmissibleGraph {
    /// The graph with no aerial vertices.
    pub fn empty() -> Self {
        AdmissibleGraph { edges: Vec::new() }
    }

    pub fn new(edges: Vec<[Target; 2]>) -> Result<Self, GraphError> {
        let n = edges.len();
        for (k, [a, b]) in edges.iter().enumerate() {
            if a == b {
                return Err(GraphError::Invalid(format!(
                    "vertex {} has both edges on {a}",
                    k + 1
                )));
            }
            for t in [a, b] {
                if let Target::Aerial(v) = t {
                    if *v == k {
                        return Err(GraphError::Invalid(format!(
                            "vertex {} points at itself",
                            k + 1
                        )));
                    }
                    if *v >= n {
                        return Err(GraphError::Invalid(format!(
                            "vertex {} points at missing vertex {}",
                            k + 1,
                            v + 1
                        )));
                    }
                }
            }
        }
        Ok(AdmissibleGraph { edges })
    }

    pub(crate) fn from_edges_unchecked(edges: Vec<[Target; 2]>) -> Self {
        AdmissibleGraph { edges }
    }

    pub fn n(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[Target; 2]] {
        &self.edges
    }

    pub fn targets(&self, k: usize) -> [Target; 2] {
        self.edges[k]
    }

    /// Aerial vertices with an edge into `v`, with the slot (0 or 1) used.
    pub fn incoming(&self, v: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (k, e) in self.edges.iter().enumerate() {
            for (s, t) in e.iter().enumerate() {
                if *t == Target::Aerial(v) {
                    out.push((k, s));
                }
            }
        }
        out
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.incoming(v).len()
    }

    /// Relabels vertex `k` as `perm[k]` and swaps the edge pair of every `k`
    /// whose bit is set in `flips` (bits index old labels).
    pub fn relabel(&self, perm: &[usize], flips: u64) -> AdmissibleGraph {
        let n = self.n();
        let mut edges = vec![[Target::X, Target::X]; n];
        for (k, [a, b]) in self.edges.iter().enumerate() {
            let (a, b) = (a.map(perm), b.map(perm));
            edges[perm[k]] = if flips >> k & 1 == 1 { [b, a] } else { [a, b] };
        }
        AdmissibleGraph { edges }
    }

    /// Swaps the edge order at vertex `k`.
    pub fn flip(&self, k: usize) -> AdmissibleGraph {
        let mut g = self.clone();
        g.edges[k].swap(0, 1);
        g
    }

    /// Exchanges the ground vertices `X` and `Y`.
    pub fn mirror(&self) -> AdmissibleGraph {
        let sw = |t: Target| match t {
            Target::X => Target::Y,
            Target::Y => Target::X,
            a => a,
        };
        AdmissibleGraph {
            edges: self.edges.iter().map(|[a, b]| [sw(*a), sw(*b)]).collect(),
        }
    }

    /// Disjoint union with `other` placed above (its labels shifted by `self.n()`).
    pub fn product(&self, other: &AdmissibleGraph) -> AdmissibleGraph {
        let shift = self.n();
        let mv = |t: Target| match t {
            Target::Aerial(v) => Target::Aerial(v + shift),
            g => g,
        };
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|[a, b]| [mv(*a), mv(*b)]));
        AdmissibleGraph { edges }
    }

    /// Connected components of the aerial part, each relabeled `1..m` in
    /// increasing order of the original labels, listed by smallest label.
    pub fn factorize(&self) -> Vec<AdmissibleGraph> {
        let n = self.n();
        let mut comp: Vec<usize> = (0..n).collect();
        fn find(c: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while c[r] != r {
                r = c[r];
            }
            let mut v = v;
            while c[v] != r {
                let nx = c[v];
                c[v] = r;
                v = nx;
            }
            r
        }
        for (k, e) in self.edges.iter().enumerate() {
            for t in e {
                if let Target::Aerial(v) = t {
                    let (a, b) = (find(&mut comp, k), find(&mut comp, *v));
                    if a != b {
                        comp[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|v| find(&mut comp, v)).collect();
        let mut seen: Vec<usize> = Vec::new();
        for &r in &roots {
            if !seen.contains(&r) {
                seen.push(r);
            }
        }
        seen.iter()
            .map(|&r| {
                let members: Vec<usize> = (0..n).filter(|&v| roots[v] == r).collect();
                let mut perm = vec![usize::MAX; n];
                for (new, &old) in members.iter().enumerate() {
                    perm[old] = new;
                }
                AdmissibleGraph {
                    edges: members
                        .iter()
                        .map(|&old| {
                            let [a, b] = self.edges[old];
                            [a.map(&perm), b.map(&perm)]
                        })
                        .collect(),
                }
            })
            .collect()
    }

    /// Parses `1:(X,Y);2:(X,1)`; the empty string is the graph with no vertices.
    pub fn parse(s: &str) -> Result<AdmissibleGraph, GraphError> {
        let src = s.as_bytes();
        let mut entries: Vec<(usize, usize, [Target; 2])> = Vec::new();
        let mut pos = 0usize;
        let ws = |pos: &mut usize| {
            while *pos < src.len() && src[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, c: u8| -> Result<(), GraphError> {
            ws(pos);
            if src.get(*pos) == Some(&c) {
                *pos += 1;
                Ok(())
            } else {
                Err(ParseError::new(*pos, format!("expected `{}`", c as char)).into())
            }
        };
        let number = |pos: &mut usize| -> Result<usize, GraphError> {
            ws(pos);
            let start = *pos;
            while *pos < src.len() && src[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos]
                .parse::<usize>()
                .map_err(|_| ParseError::new(start, "expected a vertex number").into())
        };
        let target = |pos: &mut usize| -> Result<(Target, usize), GraphError> {
            ws(pos);
            let at = *pos;
            match src.get(*pos) {
                Some(b'X') => {
                    *pos += 1;
                    Ok((Target::X, at))
                }
                Some(b'Y') => {
                    *pos += 1;
                    Ok((Target::Y, at))
                }
                _ => {
                    let v = number(pos)?;
                    if v == 0 {
                        return Err(ParseError::new(at, "vertices are numbered from 1").into());
                    }
                    Ok((Target::Aerial(v - 1), at))
                }
            }
        };
        ws(&mut pos);
        if pos == src.len() {
            return Ok(AdmissibleGraph::empty());
        }
        loop {
            ws(&mut pos);
            let at = pos;
            let k = number(&mut pos)?;
            expect(&mut pos, b':')?;
            expect(&mut pos, b'(')?;
            let (a, _) = target(&mut pos)?;
            expect(&mut pos, b',')?;
            let (b, _) = target(&mut pos)?;
            expect(&mut pos, b')')?;
            entries.push((k, at, [a, b]));
            ws(&mut pos);
            match src.get(pos) {
                None => break,
                Some(b';') => pos += 1,
                Some(_) => return Err(ParseError::new(pos, "expected `;`").into()),
            }
        }
        let n = entries.len();
        let mut edges: Vec<Option<[Target; 2]>> = vec![None; n];
        for (k, at, e) in entries {
            if k == 0 || k > n {
                return Err(ParseError::new(at, format!("vertex {k} out of range 1..={n}")).into());
            }
            if edges[k - 1].is_some() {
                return Err(ParseError::new(at, format!("vertex {k} listed twice")).into());
            }
            edges[k - 1] = Some(e);
        }
        AdmissibleGraph::new(edges.into_iter().map(|e| e.expect("all listed")).collect())
    }
}

impl fmt::Display for AdmissibleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, [a, b]) in self.edges.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            write!(f, "{}:({a},{b})", k + 1)?;
        }
        Ok(())
    }
}
