//! JSON form: `{"dim": d, "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}]}`.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{parse_rational, Rational};

use super::structure::StructureConstants;
use super::LieStructError;

#[derive(Serialize, Deserialize)]
struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    schema: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    brackets: Vec<BracketEntry>,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    i: usize,
    j: usize,
    coeffs: BTreeMap<String, String>,
}

impl StructureConstants {
    /// Loads the JSON form; each listed bracket also fixes its antisymmetric partner.
    pub fn from_json(text: &str) -> Result<StructureConstants, LieStructError> {
        let file: AlgebraFile =
            serde_json::from_str(text).map_err(|e| LieStructError::Json(e.to_string()))?;
        let d = file.dim;
        if d == 0 {
            return Err(LieStructError::Json("dim must be positive".into()));
        }
        let mut c = StructureConstants::zero(d, file.name.unwrap_or_else(|| "custom".into()));
        let mut seen: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        let check = |v: usize| {
            if v == 0 || v > d {
                Err(LieStructError::IndexOutOfRange { index: v, dim: d })
            } else {
                Ok(v - 1)
            }
        };
        for b in &file.brackets {
            let (i, j) = (check(b.i)?, check(b.j)?);
            let mut row = vec![Rational::zero(); d];
            for (k, v) in &b.coeffs {
                let k: usize = k
                    .trim()
                    .parse()
                    .map_err(|_| LieStructError::Json(format!("bad basis index `{k}`")))?;
                let k = check(k)?;
                row[k] = parse_rational(v).map_err(|e| LieStructError::Json(e.to_string()))?;
            }
            if i == j {
                if row.iter().any(|v| !v.is_zero()) {
                    return Err(LieStructError::InconsistentBracket { i: b.i, j: b.j });
                }
                continue;
            }
            let neg: Vec<Rational> = row.iter().map(|v| -v.clone()).collect();
            for (key, val) in [((i, j), row), ((j, i), neg)] {
                if let Some(prev) = seen.get(&key) {
                    if *prev != val {
                        return Err(LieStructError::InconsistentBracket { i: b.i, j: b.j });
                    }
                }
                for (k, v) in val.iter().enumerate() {
                    c.set(k, key.0, key.1, v.clone());
                }
                seen.insert(key, val);
            }
        }
        Ok(c)
    }

    /// JSON form listing each nonzero bracket once, with `i < j`.
    pub fn to_json(&self) -> String {
        let d = self.dim();
        let mut brackets = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let coeffs: BTreeMap<String, String> = self
                    .bracket_of(i, j)
                    .into_iter()
                    .map(|(k, v)| ((k + 1).to_string(), v.to_string()))
                    .collect();
                if !coeffs.is_empty() {
                    brackets.push(BracketEntry {
                        i: i + 1,
                        j: j + 1,
                        coeffs,
                    });
                }
            }
        }
        let file = AlgebraFile {
            schema: Some(1),
            name: Some(self.name().to_string()),
            dim: d,
            brackets,
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }
}
