//! The product whose symbol is `exp(H(X, Y) - X - Y)`, with brackets read off
//! as contractions against a linear Poisson structure.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::algebra::{EpsSeries, Polynomial, Rational};
use crate::free_lie::{hausdorff_series, lie_to_lgraph, BracketTree, LieSeries};
use crate::lie::{linear_poisson, StructureConstants};

use super::bidiff::{graph_operator, BiDiffOp};
use super::{StarError, StarProduct};

/// `exp(sum_w h_w B_w)` where `w` runs over the Lyndon terms of `series` with
/// at least one bracket and `B_w` is the graph operator of the standard
/// bracketing of `w`, placed at ε^(brackets).
pub fn cbh_operator(
    c: &StructureConstants,
    series: &LieSeries,
    order: usize,
    cap: Option<u32>,
) -> Result<BiDiffOp, StarError> {
    c.require_lie()?;
    if series.letters() != 2 {
        return Err(StarError::Precondition(
            "the Hausdorff series lives in two letters".into(),
        ));
    }
    if series.degree() < order + 1 {
        return Err(StarError::Precondition(format!(
            "series known through degree {}, order {order} needs {}",
            series.degree(),
            order + 1
        )));
    }
    let alpha = linear_poisson(c);
    let mut rem = BiDiffOp::zero(c.dim(), order, cap);
    for (w, h) in series.terms() {
        if w.len() < 2 || w.len() > order + 1 {
            continue;
        }
        let graph = lie_to_lgraph(&BracketTree::standard(w))
            .expect("two-letter Lyndon words of length >= 2 are brackets");
        rem.add_scaled(
            &graph_operator(&graph, &alpha, &Rational::one(), order, cap),
            h,
        );
    }
    rem.exp()
}

/// Operators are built lazily per derivative cap, since inputs of low degree
/// only ever see a small corner of the full operator.
pub struct CbhStar {
    c: StructureConstants,
    series: LieSeries,
    order: usize,
    cache: Mutex<BTreeMap<u32, Arc<BiDiffOp>>>,
}

impl CbhStar {
    pub fn new(c: &StructureConstants, order: usize) -> Result<Self, StarError> {
        Self::with_series(c, hausdorff_series(order + 1), order)
    }

    /// Uses `series` in place of the Hausdorff series; meant for controls.
    pub fn with_series(
        c: &StructureConstants,
        series: LieSeries,
        order: usize,
    ) -> Result<Self, StarError> {
        c.require_lie()?;
        Ok(CbhStar {
            c: c.clone(),
            series,
            order,
            cache: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn operator(&self, cap: u32) -> Result<Arc<BiDiffOp>, StarError> {
        if let Some(op) = self.cache.lock().expect("cache").get(&cap) {
            return Ok(op.clone());
        }
        let op = Arc::new(cbh_operator(&self.c, &self.series, self.order, Some(cap))?);
        self.cache
            .lock()
            .expect("cache")
            .entry(cap)
            .or_insert_with(|| op.clone());
        Ok(op)
    }
}

impl StarProduct for CbhStar {
    fn nvars(&self) -> usize {
        self.c.dim()
    }

    fn order(&self) -> usize {
        self.order
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.check_inputs(f, g)?;
        let cap = f.total_degree().unwrap_or(0) + g.total_degree().unwrap_or(0);
        self.operator(cap)?.apply(f, g)
    }
}

pub fn cbh_star(
    c: &StructureConstants,
    f: &Polynomial,
    g: &Polynomial,
    order: usize,
) -> Result<EpsSeries, StarError> {
    CbhStar::new(c, order)?.star(f, g)
}
