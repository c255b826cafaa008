//! The ε-scaled enveloping algebra in PBW normal form, symmetrization and its inverse.
//!
//! Generators satisfy `X^a X^b = X^b X^a + ε [X^a, X^b]`; normal words are
//! nondecreasing in the generator index.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_traits::{One, Zero};

use crate::algebra::{factorial, EpsSeries, Monomial, Polynomial, Rational};
use crate::lie::StructureConstants;

use super::{StarError, StarProduct};

/// `(normal word, ε power) -> coefficient`.
pub type PbwElement = BTreeMap<(Vec<usize>, usize), Rational>;

type Terms = Arc<Vec<(Vec<usize>, usize, Rational)>>;

pub struct PbwAlgebra {
    c: StructureConstants,
    order: usize,
    brackets: Vec<Vec<Vec<(usize, Rational)>>>,
    insert_memo: Mutex<HashMap<(Vec<usize>, usize), Terms>>,
    sigma_memo: Mutex<HashMap<Vec<u32>, Terms>>,
}

fn add_into(e: &mut PbwElement, w: Vec<usize>, eps: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    let key = (w, eps);
    let slot = e.entry(key.clone()).or_insert_with(Rational::zero);
    *slot += c;
    if slot.is_zero() {
        e.remove(&key);
    }
}

impl PbwAlgebra {
    pub fn new(c: &StructureConstants, order: usize) -> Result<Self, StarError> {
        c.require_lie()?;
        let d = c.dim();
        let brackets = (0..d)
            .map(|a| (0..d).map(|b| c.bracket_of(a, b)).collect())
            .collect();
        Ok(PbwAlgebra {
            c: c.clone(),
            order,
            brackets,
            insert_memo: Mutex::new(HashMap::new()),
            sigma_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn dim(&self) -> usize {
        self.c.dim()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Normal form of `u X^x` for a normal word `u`.
    fn right_mul_gen(&self, u: &[usize], x: usize) -> Terms {
        match u.last() {
            None => return Arc::new(vec![(vec![x], 0, Rational::one())]),
            Some(&a) if a <= x => {
                let mut w = u.to_vec();
                w.push(x);
                return Arc::new(vec![(w, 0, Rational::one())]);
            }
            _ => {}
        }
        let key = (u.to_vec(), x);
        if let Some(t) = self.insert_memo.lock().expect("memo").get(&key) {
            return t.clone();
        }
        let a = *u.last().expect("nonempty");
        let head = &u[..u.len() - 1];
        let mut acc = PbwElement::new();
        // u' X^a X^x = u' X^x X^a + ε sum_k c_k^{ax} u' X^k
        for (w, e, c) in self.right_mul_gen(head, x).iter() {
            for (w2, e2, c2) in self.right_mul_gen(w, a).iter() {
                if e + e2 <= self.order {
                    add_into(&mut acc, w2.clone(), e + e2, c * c2);
                }
            }
        }
        if self.order >= 1 {
            for (k, ck) in &self.brackets[a][x] {
                for (w, e, c) in self.right_mul_gen(head, *k).iter() {
                    if *e < self.order {
                        add_into(&mut acc, w.clone(), e + 1, c * ck);
                    }
                }
            }
        }
        let out: Terms = Arc::new(acc.into_iter().map(|((w, e), c)| (w, e, c)).collect());
        self.insert_memo
            .lock()
            .expect("memo")
            .insert(key, out.clone());
        out
    }

    /// Normal form of an arbitrary word of generators.
    pub fn normal_form(&self, word: &[usize]) -> PbwElement {
        let mut cur = PbwElement::new();
        cur.insert((Vec::new(), 0), Rational::one());
        for &x in word {
            cur = self.right_mul_letter(&cur, x);
        }
        cur
    }

    fn right_mul_letter(&self, a: &PbwElement, x: usize) -> PbwElement {
        let mut out = PbwElement::new();
        for ((w, e), c) in a {
            for (w2, e2, c2) in self.right_mul_gen(w, x).iter() {
                if e + e2 <= self.order {
                    add_into(&mut out, w2.clone(), e + e2, c * c2);
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &PbwElement, b: &PbwElement) -> PbwElement {
        let mut out = PbwElement::new();
        for ((wb, eb), cb) in b {
            let mut part = a.clone();
            for &x in wb {
                part = self.right_mul_letter(&part, x);
            }
            for ((w, e), c) in part {
                if e + eb <= self.order {
                    add_into(&mut out, w, e + eb, c * cb);
                }
            }
        }
        out
    }

    /// Symmetrization of a monomial: the average over all orderings of its factors.
    fn sigma_monomial(&self, m: &Monomial) -> Terms {
        let key = m.exps().to_vec();
        if let Some(t) = self.sigma_memo.lock().expect("memo").get(&key) {
            return t.clone();
        }
        let letters = m.to_indices();
        let n = letters.len() as u32;
        let mut acc = PbwElement::new();
        let mut arrangements = Vec::new();
        distinct_permutations(&mut letters.clone(), 0, &mut arrangements);
        // each distinct arrangement stands for prod(e_i!) orderings out of n!
        let weight = Rational::new(m.factorial_product(), factorial(n));
        for arr in arrangements {
            for ((w, e), c) in self.normal_form(&arr) {
                add_into(&mut acc, w, e, c * &weight);
            }
        }
        let out: Terms = Arc::new(acc.into_iter().map(|((w, e), c)| (w, e, c)).collect());
        self.sigma_memo
            .lock()
            .expect("memo")
            .insert(key, out.clone());
        out
    }

    pub fn sigma(&self, p: &Polynomial) -> PbwElement {
        let mut out = PbwElement::new();
        for (m, c) in p.terms() {
            for (w, e, k) in self.sigma_monomial(m).iter() {
                add_into(&mut out, w.clone(), *e, k * c);
            }
        }
        out
    }

    /// Inverse of symmetrization, by eliminating the longest words first.
    pub fn sigma_inverse(&self, a: &PbwElement) -> EpsSeries {
        let d = self.dim();
        let mut out = EpsSeries::zero(d, self.order);
        let mut rest = a.clone();
        let max_len = rest.keys().map(|(w, _)| w.len()).max().unwrap_or(0);
        for len in (0..=max_len).rev() {
            let current: Vec<((Vec<usize>, usize), Rational)> = rest
                .iter()
                .filter(|((w, _), _)| w.len() == len)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            for ((w, e), c) in current {
                let m = Monomial::from_indices(d, &w);
                out.add_at(e, &Polynomial::monomial(d, m.clone(), c.clone()));
                for (w2, e2, c2) in self.sigma_monomial(&m).iter() {
                    if e + e2 <= self.order {
                        add_into(&mut rest, w2.clone(), e + e2, -(&c * c2));
                    }
                }
            }
            debug_assert!(rest.keys().all(|(w, _)| w.len() < len || len == 0));
        }
        out
    }
}

fn distinct_permutations(v: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if start == v.len() {
        out.push(v.clone());
        return;
    }
    let mut used: Vec<usize> = Vec::new();
    for i in start..v.len() {
        if used.contains(&v[i]) {
            continue;
        }
        used.push(v[i]);
        v.swap(start, i);
        distinct_permutations(v, start + 1, out);
        v.swap(start, i);
    }
}

/// `p ⊛ q = σ⁻¹(σ(p) σ(q))` in the ε-scaled enveloping algebra.
pub struct UeaStar {
    alg: PbwAlgebra,
}

impl UeaStar {
    pub fn new(c: &StructureConstants, order: usize) -> Result<Self, StarError> {
        Ok(UeaStar {
            alg: PbwAlgebra::new(c, order)?,
        })
    }

    pub fn algebra(&self) -> &PbwAlgebra {
        &self.alg
    }
}

impl StarProduct for UeaStar {
    fn nvars(&self) -> usize {
        self.alg.dim()
    }

    fn order(&self) -> usize {
        self.alg.order
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.check_inputs(f, g)?;
        let prod = self.alg.mul(&self.alg.sigma(f), &self.alg.sigma(g));
        Ok(self.alg.sigma_inverse(&prod))
    }
}

/// One-shot `p ⊛ q` to order `order`.
pub fn uea_star(
    c: &StructureConstants,
    p: &Polynomial,
    q: &Polynomial,
    order: usize,
) -> Result<EpsSeries, StarError> {
    UeaStar::new(c, order)?.star(p, q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::lie::{heisenberg, strictly_upper};

    fn elem(items: &[(&[usize], usize, Rational)]) -> PbwElement {
        let mut e = PbwElement::new();
        for (w, k, c) in items {
            add_into(&mut e, w.to_vec(), *k, c.clone());
        }
        e
    }

    #[test]
    fn heisenberg_normal_forms() {
        let a = PbwAlgebra::new(&heisenberg(), 3).unwrap();
        assert_eq!(
            a.normal_form(&[1, 0]),
            elem(&[(&[0, 1], 0, int(1)), (&[2], 1, int(-1))])
        );
        assert_eq!(
            a.normal_form(&[1, 0, 0]),
            elem(&[(&[0, 0, 1], 0, int(1)), (&[0, 2], 1, int(-2))])
        );
    }

    #[test]
    fn symmetrization_of_product() {
        let a = PbwAlgebra::new(&heisenberg(), 2).unwrap();
        let p = Polynomial::parse("x1*x2", 3).unwrap();
        assert_eq!(
            a.sigma(&p),
            elem(&[(&[0, 1], 0, int(1)), (&[2], 1, rat(-1, 2))])
        );
        let back = a.sigma_inverse(&a.sigma(&p));
        assert_eq!(back, EpsSeries::from_poly(p, 2));
    }

    #[test]
    fn heisenberg_example() {
        let x1 = Polynomial::var(3, 0);
        let x2 = Polynomial::var(3, 1);
        let r = uea_star(&heisenberg(), &x1.pow(2), &x2, 3).unwrap();
        assert_eq!(r.coeff(0), &Polynomial::parse("x1^2*x2", 3).unwrap());
        assert_eq!(r.coeff(1), &Polynomial::parse("x1*x3", 3).unwrap());
        assert!(r.coeff(2).is_zero() && r.coeff(3).is_zero());
    }

    #[test]
    fn sigma_round_trip_strictly_upper() {
        let c = strictly_upper(4);
        let a = PbwAlgebra::new(&c, 4).unwrap();
        for s in ["x1*x2*x4", "x6^2*x1 - x3", "x2*x5*x4*x1"] {
            let p = Polynomial::parse(s, 6).unwrap();
            assert_eq!(a.sigma_inverse(&a.sigma(&p)), EpsSeries::from_poly(p, 4));
        }
    }
}
