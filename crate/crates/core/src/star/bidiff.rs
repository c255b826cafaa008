//! Bidifferential operators `sum ε^m c(x) d^L ⊗ d^R` acting on pairs of polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::algebra::{EpsSeries, Monomial, Polynomial, Rational};
use crate::graph::{has_loop, AdmissibleGraph, Target};
use crate::lie::PoissonStructure;

use super::StarError;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct OpKey {
    eps: usize,
    left: Monomial,
    right: Monomial,
}

/// Terms are kept up to ε^order; with a derivative cap, terms with more than
/// `cap` derivatives in total are dropped, which is harmless on inputs whose
/// degrees add up to at most `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiDiffOp {
    nvars: usize,
    order: usize,
    cap: Option<u32>,
    terms: BTreeMap<OpKey, Polynomial>,
}

impl BiDiffOp {
    pub fn zero(nvars: usize, order: usize, cap: Option<u32>) -> Self {
        BiDiffOp {
            nvars,
            order,
            cap,
            terms: BTreeMap::new(),
        }
    }

    /// `f ⊗ g ↦ f g`.
    pub fn identity(nvars: usize, order: usize, cap: Option<u32>) -> Self {
        let mut op = Self::zero(nvars, order, cap);
        op.add_term(
            0,
            Monomial::one(nvars),
            Monomial::one(nvars),
            &Polynomial::one(nvars),
        );
        op
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cap(&self) -> Option<u32> {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn admits(&self, eps: usize, left: &Monomial, right: &Monomial) -> bool {
        eps <= self.order && self.cap.is_none_or(|c| left.degree() + right.degree() <= c)
    }

    pub fn add_term(&mut self, eps: usize, left: Monomial, right: Monomial, coeff: &Polynomial) {
        if coeff.is_zero() || !self.admits(eps, &left, &right) {
            return;
        }
        let key = OpKey { eps, left, right };
        match self.terms.get_mut(&key) {
            Some(p) => {
                *p = &*p + coeff;
                if p.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, coeff.clone());
            }
        }
    }

    /// `(ε power, left multi-index, right multi-index, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Monomial, &Monomial, &Polynomial)> {
        self.terms
            .iter()
            .map(|(k, c)| (k.eps, &k.left, &k.right, c))
    }

    /// Terms at exactly ε^k.
    pub fn eps_part(&self, k: usize) -> BiDiffOp {
        let mut out = BiDiffOp::zero(self.nvars, self.order, self.cap);
        for (key, c) in self.terms.iter().filter(|(key, _)| key.eps == k) {
            out.terms.insert(key.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, o: &BiDiffOp) -> BiDiffOp {
        let mut out = self.clone();
        out.add_scaled(o, &Rational::one());
        out
    }

    pub fn add_scaled(&mut self, o: &BiDiffOp, c: &Rational) {
        assert_eq!(self.nvars, o.nvars, "variable sets differ");
        for (k, p) in &o.terms {
            self.add_term(k.eps, k.left.clone(), k.right.clone(), &p.scale(c));
        }
    }

    pub fn scale(&self, c: &Rational) -> BiDiffOp {
        let mut out = BiDiffOp::zero(self.nvars, self.order, self.cap);
        out.add_scaled(self, c);
        out
    }

    /// Product with constant-coefficient composition: coefficients multiply,
    /// multi-indices add, and derivatives never act on coefficients.
    pub fn compose_const(&self, o: &BiDiffOp) -> BiDiffOp {
        assert_eq!(self.nvars, o.nvars, "variable sets differ");
        let mut out = BiDiffOp::zero(self.nvars, self.order.min(o.order), self.cap.or(o.cap));
        for (a, pa) in &self.terms {
            for (b, pb) in &o.terms {
                let eps = a.eps + b.eps;
                let left = a.left.mul(&b.left);
                let right = a.right.mul(&b.right);
                if out.admits(eps, &left, &right) {
                    out.add_term(eps, left, right, &(pa * pb));
                }
            }
        }
        out
    }

    /// `exp` for the constant-coefficient product; needs every term at ε^1 or higher.
    pub fn exp(&self) -> Result<BiDiffOp, StarError> {
        if self.terms.keys().any(|k| k.eps == 0) {
            return Err(StarError::Precondition(
                "exp needs an operator without ε^0 terms".into(),
            ));
        }
        let mut out = BiDiffOp::identity(self.nvars, self.order, self.cap);
        let mut power = out.clone();
        for k in 1..=self.order {
            power = power
                .compose_const(self)
                .scale(&Rational::new(1.into(), (k as i64).into()));
            if power.is_zero() {
                break;
            }
            out = out.add(&power);
        }
        Ok(out)
    }

    pub fn apply(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        if f.nvars() != self.nvars || g.nvars() != self.nvars {
            return Err(StarError::VariableMismatch {
                expected: self.nvars,
                got: if f.nvars() != self.nvars {
                    f.nvars()
                } else {
                    g.nvars()
                },
            });
        }
        if let Some(cap) = self.cap {
            let need = f.total_degree().unwrap_or(0) + g.total_degree().unwrap_or(0);
            if need > cap {
                return Err(StarError::DegreeCap { needed: need, cap });
            }
        }
        let mut out = EpsSeries::zero(self.nvars, self.order);
        let mut df: HashMap<&Monomial, Polynomial> = HashMap::new();
        let mut dg: HashMap<&Monomial, Polynomial> = HashMap::new();
        for (k, c) in &self.terms {
            let a = df.entry(&k.left).or_insert_with(|| f.derive_multi(&k.left));
            if a.is_zero() {
                continue;
            }
            let a = a.clone();
            let b = dg
                .entry(&k.right)
                .or_insert_with(|| g.derive_multi(&k.right));
            if b.is_zero() {
                continue;
            }
            out.add_at(k.eps, &(&(c * &a) * b));
        }
        Ok(out)
    }
}

impl fmt::Display for BiDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let d = |m: &Monomial| -> String {
            if m.is_one() {
                "1".into()
            } else {
                m.to_indices()
                    .iter()
                    .map(|i| format!("d{}", i + 1))
                    .collect::<Vec<_>>()
                    .join("")
            }
        };
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "eps^{}: ({c}) {} ⊗ {}", k.eps, d(&k.left), d(&k.right))?;
        }
        Ok(())
    }
}

/// Operator of a graph coloured by `alpha`: every vertex `k` carries
/// `d_{incoming indices} alpha^{I(e_k^1) I(e_k^2)}`, edges into `X` and `Y`
/// become derivatives of the left and right argument, and the result is
/// multiplied by `scale^n` and placed at ε^n.
///
/// Index assignments are searched vertex by vertex over the nonzero entries of
/// `alpha`, pruning as soon as a vertex factor vanishes.
pub fn graph_operator(
    g: &AdmissibleGraph,
    alpha: &PoissonStructure,
    scale: &Rational,
    order: usize,
    cap: Option<u32>,
) -> BiDiffOp {
    let d = alpha.dim();
    let n = g.n();
    let mut out = BiDiffOp::zero(d, order, cap);
    if n > order {
        return out;
    }
    let ground_edges = g.edges().iter().flatten().filter(|t| t.is_ground()).count() as u32;
    if cap.is_some_and(|c| ground_edges > c) {
        return out;
    }
    if n == 0 {
        return BiDiffOp::identity(d, order, cap);
    }
    let pairs: Vec<(usize, usize)> = (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && !alpha.entry(a, b).is_zero())
        .collect();

    // senders before receivers when there is no loop
    let vorder: Vec<usize> = if has_loop(g) {
        (0..n).collect()
    } else {
        let mut indeg: Vec<usize> = (0..n).map(|v| g.in_degree(v)).collect();
        let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut ord = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            ord.push(v);
            for t in g.targets(v) {
                if let Target::Aerial(w) = t {
                    indeg[w] -= 1;
                    if indeg[w] == 0 {
                        ready.push(w);
                    }
                }
            }
        }
        ord
    };
    let pos: Vec<usize> = {
        let mut p = vec![0; n];
        for (i, &v) in vorder.iter().enumerate() {
            p[v] = i;
        }
        p
    };
    let incoming: Vec<Vec<(usize, usize)>> = (0..n).map(|v| g.incoming(v)).collect();
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let last = incoming[v]
            .iter()
            .map(|&(k, _)| pos[k])
            .chain(std::iter::once(pos[v]))
            .max()
            .expect("nonempty");
        due[last].push(v);
    }

    struct Ctx<'a> {
        g: &'a AdmissibleGraph,
        alpha: &'a PoissonStructure,
        pairs: &'a [(usize, usize)],
        vorder: &'a [usize],
        incoming: &'a [Vec<(usize, usize)>],
        due: &'a [Vec<usize>],
        memo: HashMap<(usize, usize, Monomial), Polynomial>,
        acc: BTreeMap<(Monomial, Monomial), Polynomial>,
        d: usize,
    }

    fn rec(ctx: &mut Ctx, step: usize, chosen: &mut [(usize, usize)], prod: Polynomial) {
        let n = chosen.len();
        if step == n {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (k, e) in ctx.g.edges().iter().enumerate() {
                for (s, t) in e.iter().enumerate() {
                    let idx = if s == 0 { chosen[k].0 } else { chosen[k].1 };
                    match t {
                        Target::X => left.push(idx),
                        Target::Y => right.push(idx),
                        Target::Aerial(_) => {}
                    }
                }
            }
            let key = (
                Monomial::from_indices(ctx.d, &left),
                Monomial::from_indices(ctx.d, &right),
            );
            let slot = ctx
                .acc
                .entry(key)
                .or_insert_with(|| Polynomial::zero(ctx.d));
            *slot = &*slot + &prod;
            return;
        }
        let v = ctx.vorder[step];
        for pi in 0..ctx.pairs.len() {
            chosen[v] = ctx.pairs[pi];
            let mut p = prod.clone();
            let mut dead = false;
            for &w in &ctx.due[step] {
                let idx: Vec<usize> = ctx.incoming[w]
                    .iter()
                    .map(|&(k, s)| if s == 0 { chosen[k].0 } else { chosen[k].1 })
                    .collect();
                let m = Monomial::from_indices(ctx.d, &idx);
                let (a, b) = chosen[w];
                let key = (a, b, m);
                if !ctx.memo.contains_key(&key) {
                    let val = ctx.alpha.entry(a, b).derive_multi(&key.2);
                    ctx.memo.insert(key.clone(), val);
                }
                let f = &ctx.memo[&key];
                if f.is_zero() {
                    dead = true;
                    break;
                }
                p = &p * f;
            }
            if !dead {
                rec(ctx, step + 1, chosen, p);
            }
        }
    }

    let mut ctx = Ctx {
        g,
        alpha,
        pairs: &pairs,
        vorder: &vorder,
        incoming: &incoming,
        due: &due,
        memo: HashMap::new(),
        acc: BTreeMap::new(),
        d,
    };
    let mut chosen = vec![(0, 0); n];
    rec(&mut ctx, 0, &mut chosen, Polynomial::one(d));
    let s = (0..n).fold(Rational::one(), |acc, _| acc * scale);
    for ((l, r), p) in ctx.acc {
        out.add_term(n, l, r, &p.scale(&s));
    }
    out
}
