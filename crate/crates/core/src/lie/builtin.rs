//! Named algebras.

use crate::algebra::{int, Rational};

use super::structure::StructureConstants;
use super::LieStructError;

/// `[X1, X2] = X3`.
pub fn heisenberg() -> StructureConstants {
    let mut c = StructureConstants::zero(3, "heisenberg");
    c.set_bracket(0, 1, &[(2, int(1))]);
    c
}

/// `[X1, X2] = X2`; solvable, not nilpotent.
pub fn solvable2() -> StructureConstants {
    let mut c = StructureConstants::zero(2, "solvable2");
    c.set_bracket(0, 1, &[(1, int(1))]);
    c
}

/// Basis `E_ab` (a < b) of strictly upper triangular `n x n` matrices, ordered by
/// distance from the diagonal and then by row. `strictly_upper(3)` is `heisenberg`.
pub fn strictly_upper_basis(n: usize) -> Vec<(usize, usize)> {
    let mut basis = Vec::new();
    for level in 1..n {
        for a in 0..n - level {
            basis.push((a, a + level));
        }
    }
    basis
}

pub fn strictly_upper(n: usize) -> StructureConstants {
    let basis = strictly_upper_basis(n);
    let pos = |e: (usize, usize)| basis.iter().position(|&b| b == e).expect("basis element");
    let mut c = StructureConstants::zero(basis.len(), format!("strictly_upper({n})"));
    for (i, &(a, b)) in basis.iter().enumerate() {
        for (j, &(p, q)) in basis.iter().enumerate() {
            // [E_ab, E_pq] = δ_bp E_aq - δ_qa E_pb
            if b == p {
                let k = pos((a, q));
                c.set(k, i, j, c.get(k, i, j) + int(1));
            }
            if q == a {
                let k = pos((p, b));
                c.set(k, i, j, c.get(k, i, j) - int(1));
            }
        }
    }
    c
}

/// `[X^i, X^j] = alpha^{ij} H` with `H` the extra last coordinate.
pub fn moyal_trick(alpha: &[Vec<Rational>]) -> Result<StructureConstants, LieStructError> {
    let d = alpha.len();
    for (i, row) in alpha.iter().enumerate() {
        if row.len() != d {
            return Err(LieStructError::InvalidMatrix("matrix is not square".into()));
        }
        for j in 0..d {
            if &row[j] + &alpha[j][i] != int(0) {
                return Err(LieStructError::InvalidMatrix(
                    "matrix is not antisymmetric".into(),
                ));
            }
        }
    }
    let mut c = StructureConstants::zero(d + 1, "moyal_trick");
    for (i, row) in alpha.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            c.set(d, i, j, v.clone());
        }
    }
    Ok(c)
}

/// Standard symplectic matrix on `2k` coordinates: `alpha^{2a-1, 2a} = 1`.
pub fn symplectic_matrix(k: usize) -> Vec<Vec<Rational>> {
    let d = 2 * k;
    let mut m = vec![vec![int(0); d]; d];
    for a in 0..k {
        m[2 * a][2 * a + 1] = int(1);
        m[2 * a + 1][2 * a] = int(-1);
    }
    m
}

/// Resolves `heisenberg`, `solvable2`, `strictly_upper(n)` or `moyal_trick(k)`
/// (the last with the standard symplectic matrix on `2k` coordinates).
pub fn builtin_algebra(name: &str) -> Result<StructureConstants, LieStructError> {
    let name = name.trim();
    let arg = |prefix: &str| -> Option<Result<usize, LieStructError>> {
        let rest = name
            .strip_prefix(prefix)?
            .strip_prefix('(')?
            .strip_suffix(')')?;
        Some(
            rest.trim()
                .parse::<usize>()
                .map_err(|_| LieStructError::UnknownBuiltin(name.to_string())),
        )
    };
    match name {
        "heisenberg" => return Ok(heisenberg()),
        "solvable2" => return Ok(solvable2()),
        _ => {}
    }
    if let Some(n) = arg("strictly_upper") {
        let n = n?;
        if n < 2 {
            return Err(LieStructError::UnknownBuiltin(name.to_string()));
        }
        return Ok(strictly_upper(n));
    }
    if let Some(k) = arg("moyal_trick") {
        let k = k?;
        if k == 0 {
            return Err(LieStructError::UnknownBuiltin(name.to_string()));
        }
        let mut c = moyal_trick(&symplectic_matrix(k))?;
        c.set_name(format!("moyal_trick({k})"));
        return Ok(c);
    }
    Err(LieStructError::UnknownBuiltin(name.to_string()))
}
