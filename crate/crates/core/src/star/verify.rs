//! Associativity, degree and equivalence checks for star products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, EpsSeries, Monomial, Polynomial, Rational};

use super::{StarError, StarProduct};

/// `(f ⋆ g) ⋆ h - f ⋆ (g ⋆ h)`.
pub fn check_associativity<S: StarProduct + ?Sized>(
    star: &S,
    f: &Polynomial,
    g: &Polynomial,
    h: &Polynomial,
) -> Result<EpsSeries, StarError> {
    let n = star.order();
    let fg = star.star(f, g)?;
    let gh = star.star(g, h)?;
    let lhs = star.star_series(&fg, &EpsSeries::from_poly(h.clone(), n))?;
    let rhs = star.star_series(&EpsSeries::from_poly(f.clone(), n), &gh)?;
    Ok(lhs.checked_sub(&rhs)?)
}

/// `deg(p ⋆ q - p q) < deg p + deg q` on every sample pair.
pub fn degree_property_p1<S: StarProduct + ?Sized>(
    star: &S,
    samples: &[(Polynomial, Polynomial)],
) -> Result<bool, StarError> {
    for (p, q) in samples {
        let (Some(dp), Some(dq)) = (p.total_degree(), q.total_degree()) else {
            continue;
        };
        let r = star.star(p, q)?;
        if !(r.coeff(0) - &(p * q)).is_zero() {
            return Ok(false);
        }
        let bad = r.coeffs()[1..]
            .iter()
            .filter_map(Polynomial::total_degree)
            .any(|d| d >= dp + dq);
        if bad {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All monomials in `nvars` variables of total degree `1..=max_deg`.
pub fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Polynomial> {
    fn rec(nvars: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == nvars {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(nvars, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut ms = Vec::new();
    rec(nvars, 0, max_deg, &mut vec![0; nvars], &mut ms);
    ms.sort();
    ms.into_iter()
        .filter(|m| !m.is_one())
        .map(|m| Polynomial::monomial(nvars, m, int(1)))
        .collect()
}

/// `count` random polynomials with small integer coefficients, reproducible from `seed`.
pub fn seeded_polynomials(nvars: usize, count: usize, max_deg: u32, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut p = Polynomial::zero(nvars);
            for _ in 0..rng.gen_range(1..=3) {
                let deg = rng.gen_range(0..=max_deg);
                let idx: Vec<usize> = (0..deg).map(|_| rng.gen_range(0..nvars)).collect();
                let c = int(rng.gen_range(-3i64..=3));
                p.add_term(Monomial::from_indices(nvars, &idx), c);
            }
            p
        })
        .collect()
}

fn seeded_linear(nvars: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    (0..nvars).map(|_| int(rng.gen_range(-2i64..=2))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum EquivalenceMode {
    /// Every pair of monomials with total degree at most `degree_bound`.
    MonomialPairs { degree_bound: u32 },
    /// `(X)^n ⋆ Y` for `n = 1..=max_n` and seeded linear `X, Y`.
    XnyPolarized {
        max_n: u32,
        trials: usize,
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub f: String,
    pub g: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub mode: EquivalenceMode,
    pub p1_first: bool,
    pub p1_second: bool,
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl EquivalenceReport {
    pub fn equal(&self) -> bool {
        self.p1_first && self.p1_second && self.mismatches.is_empty()
    }
}

/// Compares two star products pair by pair. The property-(P1) precondition is
/// checked on the same pairs and reported rather than enforced.
pub fn check_equivalence<A, B>(
    a: &A,
    b: &B,
    mode: EquivalenceMode,
) -> Result<EquivalenceReport, StarError>
where
    A: StarProduct + ?Sized,
    B: StarProduct + ?Sized,
{
    if a.nvars() != b.nvars() {
        return Err(StarError::VariableMismatch {
            expected: a.nvars(),
            got: b.nvars(),
        });
    }
    let d = a.nvars();
    let pairs: Vec<(Polynomial, Polynomial)> = match mode {
        EquivalenceMode::MonomialPairs { degree_bound } => {
            let ms = monomials_up_to(d, degree_bound);
            let mut v = Vec::new();
            for f in &ms {
                for g in &ms {
                    let df = f.total_degree().unwrap_or(0);
                    let dg = g.total_degree().unwrap_or(0);
                    if df + dg <= degree_bound {
                        v.push((f.clone(), g.clone()));
                    }
                }
            }
            v
        }
        EquivalenceMode::XnyPolarized {
            max_n,
            trials,
            seed,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = Vec::new();
            for _ in 0..trials {
                let x = Polynomial::linear(&seeded_linear(d, &mut rng));
                let y = Polynomial::linear(&seeded_linear(d, &mut rng));
                for n in 1..=max_n {
                    v.push((x.pow(n), y.clone()));
                }
            }
            v
        }
    };
    let results: Vec<Result<Option<Mismatch>, StarError>> = pairs
        .par_iter()
        .map(|(f, g)| {
            let ra = a.star(f, g)?;
            let rb = b.star(f, g)?;
            let n = ra.order().min(rb.order());
            let diff = ra.truncate(n)?.checked_sub(&rb.truncate(n)?)?;
            Ok((!diff.is_zero()).then(|| Mismatch {
                f: f.to_string(),
                g: g.to_string(),
                difference: diff.to_string(),
            }))
        })
        .collect();
    let mut mismatches = Vec::new();
    for r in results {
        if let Some(m) = r? {
            mismatches.push(m);
        }
    }
    Ok(EquivalenceReport {
        mode,
        p1_first: degree_property_p1(a, &pairs)?,
        p1_second: degree_property_p1(b, &pairs)?,
        compared: pairs.len(),
        mismatches,
    })
}

/// Plain multiplication, as a (commutative) star product with no corrections.
pub struct Pointwise {
    pub nvars: usize,
    pub order: usize,
}

impl StarProduct for Pointwise {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn order(&self) -> usize {
        self.order
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.check_inputs(f, g)?;
        Ok(EpsSeries::from_poly(f * g, self.order))
    }
}

/// Views a product on `d + 1` variables, the last one central, as a product on
/// `d` variables by setting the central coordinate to 1.
pub struct CentralSpecialization<S> {
    pub inner: S,
}

impl<S: StarProduct> StarProduct for CentralSpecialization<S> {
    fn nvars(&self) -> usize {
        self.inner.nvars() - 1
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn star(&self, f: &Polynomial, g: &Polynomial) -> Result<EpsSeries, StarError> {
        self.check_inputs(f, g)?;
        let n = self.inner.nvars();
        let r = self.inner.star(&f.embed(n)?, &g.embed(n)?)?;
        Ok(r.map_coeffs(|p| p.specialize(n - 1, &int(1)))?)
    }
}
