//! Smith–Thom maximality, Galois-maximality and cohomology of K4 with
//! coefficients in an F2[K4]-module.
//!
//! `F2[K4] = F2[x, y]/(x², y²)` with `x = τ1 + 1`, `y = τ2 + 1`. The minimal
//! resolution of F2 is the tensor square of the periodic resolution of
//! `F2[x]/(x²)`, so `H^n(K4; M)` is the cohomology of `M^{n+1} → M^{n+2}`
//! with `(d m)_k = x m_k + y m_{k−1}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{rank, F2Matrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaximalityError {
    #[error("invalid K4-module: {0}")]
    InvalidModule(String),
    #[error("module file: {0}")]
    Parse(String),
}

/// An F2[K4]-module given by the matrices of the two generating involutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K4Module {
    dim: usize,
    t1: F2Matrix,
    t2: F2Matrix,
}

impl K4Module {
    pub fn new(t1: F2Matrix, t2: F2Matrix) -> Result<Self, MaximalityError> {
        let bad = |s: &str| Err(MaximalityError::InvalidModule(s.into()));
        let dim = t1.rows();
        if t1.cols() != dim || t2.rows() != dim || t2.cols() != dim {
            return bad("T1 and T2 must be square of the same size");
        }
        let id = F2Matrix::identity(dim);
        if t1.mul(&t1) != id {
            return bad("T1 is not an involution");
        }
        if t2.mul(&t2) != id {
            return bad("T2 is not an involution");
        }
        if t1.mul(&t2) != t2.mul(&t1) {
            return bad("T1 and T2 do not commute");
        }
        Ok(K4Module { dim, t1, t2 })
    }

    pub fn trivial(dim: usize) -> Self {
        K4Module {
            dim,
            t1: F2Matrix::identity(dim),
            t2: F2Matrix::identity(dim),
        }
    }

    /// The regular module on the basis `e, τ1, τ2, τ1τ2`.
    pub fn free() -> Self {
        let perm = |p: [usize; 4]| {
            let mut m = F2Matrix::zeros(4, 4);
            for (c, r) in p.into_iter().enumerate() {
                m.set(r, c, true);
            }
            m
        };
        K4Module {
            dim: 4,
            t1: perm([1, 0, 3, 2]),
            t2: perm([2, 3, 0, 1]),
        }
    }

    pub fn direct_sum(&self, o: &K4Module) -> K4Module {
        K4Module {
            dim: self.dim + o.dim,
            t1: self.t1.direct_sum(&o.t1),
            t2: self.t2.direct_sum(&o.t2),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn t1(&self) -> &F2Matrix {
        &self.t1
    }

    pub fn t2(&self) -> &F2Matrix {
        &self.t2
    }

    /// Matrix of `d: M^{n+1} → M^{n+2}` acting on column vectors.
    fn differential(&self, n: usize) -> F2Matrix {
        let id = F2Matrix::identity(self.dim);
        let x = self.t1.add(&id);
        let y = self.t2.add(&id);
        let d = self.dim;
        let mut out = F2Matrix::zeros((n + 2) * d, (n + 1) * d);
        for l in 0..=n {
            for (k, blk) in [(l, &x), (l + 1, &y)] {
                for r in 0..d {
                    for c in 0..d {
                        if blk.get(r, c) {
                            out.set(k * d + r, l * d + c, true);
                        }
                    }
                }
            }
        }
        out
    }
}

/// `dim H^n(K4; M)`.
pub fn group_hn(m: &K4Module, n: usize) -> usize {
    let cochains = (n + 1) * m.dim;
    let out_rank = rank(&m.differential(n));
    let in_rank = if n == 0 {
        0
    } else {
        rank(&m.differential(n - 1))
    };
    cochains - out_rank - in_rank
}

/// `dim H^1(K4; M)`.
pub fn group_h1(m: &K4Module) -> usize {
    group_hn(m, 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Maximal,
    Strict,
    Violated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaximalityReport {
    pub status: Status,
    pub lhs: u64,
    /// Right-hand side; a half-integer only when the parity warning is set.
    pub rhs: f64,
    pub warning: Option<String>,
}

fn compare(lhs2: u64, rhs2: u64) -> Status {
    match lhs2.cmp(&rhs2) {
        std::cmp::Ordering::Equal => Status::Maximal,
        std::cmp::Ordering::Less => Status::Strict,
        std::cmp::Ordering::Greater => Status::Violated,
    }
}

/// `Σ dim H^i(X^{K4}) ≤ Σ dim H^i(X)`.
pub fn smith_thom(betti_x: &[u64], betti_fixed: &[u64]) -> MaximalityReport {
    let lhs: u64 = betti_fixed.iter().sum();
    let rhs: u64 = betti_x.iter().sum();
    MaximalityReport {
        status: compare(lhs, rhs),
        lhs,
        rhs: rhs as f64,
        warning: None,
    }
}

/// `Σ dim H^i(X^{K4}) ≤ ½ Σ dim H^1(K4; H^i(X))`, the halving applied after
/// summation.
pub fn galois_maximal(
    betti_x: &[u64],
    modules: &[K4Module],
    betti_fixed: &[u64],
) -> Result<MaximalityReport, MaximalityError> {
    if modules.len() != betti_x.len() {
        return Err(MaximalityError::InvalidModule(format!(
            "{} modules for {} degrees",
            modules.len(),
            betti_x.len()
        )));
    }
    for (i, (m, b)) in modules.iter().zip(betti_x).enumerate() {
        if m.dim as u64 != *b {
            return Err(MaximalityError::InvalidModule(format!(
                "module in degree {i} has dimension {} but betti_X[{i}] = {b}",
                m.dim
            )));
        }
    }
    let lhs: u64 = betti_fixed.iter().sum();
    let rhs2: u64 = modules.iter().map(|m| group_h1(m) as u64).sum();
    Ok(MaximalityReport {
        status: compare(2 * lhs, rhs2),
        lhs,
        rhs: rhs2 as f64 / 2.0,
        warning: (rhs2 % 2 == 1)
            .then(|| format!("sum of dim H^1 is odd ({rhs2}); the bound is not an integer")),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleEntry {
    degree: usize,
    t1: Vec<Vec<u8>>,
    t2: Vec<Vec<u8>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleFile {
    #[serde(default)]
    module: Vec<ModuleEntry>,
}

fn matrix(rows: &[Vec<u8>]) -> Result<F2Matrix, MaximalityError> {
    if rows.iter().flatten().any(|b| *b > 1) {
        return Err(MaximalityError::Parse(
            "matrix entries must be 0 or 1".into(),
        ));
    }
    if rows.iter().any(|r| r.len() != rows.len()) {
        return Err(MaximalityError::Parse("matrices must be square".into()));
    }
    Ok(if rows.is_empty() {
        F2Matrix::zeros(0, 0)
    } else {
        F2Matrix::from_rows(rows)
    })
}

/// Parses a TOML module file of `[[module]]` tables with `degree`, `t1`, `t2`.
pub fn parse_modules(text: &str) -> Result<BTreeMap<usize, K4Module>, MaximalityError> {
    let f: ModuleFile = toml::from_str(text).map_err(|e| MaximalityError::Parse(e.to_string()))?;
    let mut out = BTreeMap::new();
    for e in f.module {
        let m = K4Module::new(matrix(&e.t1)?, matrix(&e.t2)?)?;
        if out.insert(e.degree, m).is_some() {
            return Err(MaximalityError::Parse(format!(
                "degree {} given twice",
                e.degree
            )));
        }
    }
    Ok(out)
}

/// One module per degree of `betti_x`: the given ones, trivial elsewhere.
pub fn modules_for(
    betti_x: &[u64],
    given: &BTreeMap<usize, K4Module>,
) -> Result<Vec<K4Module>, MaximalityError> {
    if let Some(d) = given.keys().find(|d| **d >= betti_x.len()) {
        return Err(MaximalityError::InvalidModule(format!(
            "module given in degree {d} beyond the Betti table"
        )));
    }
    Ok(betti_x
        .iter()
        .enumerate()
        .map(|(i, b)| {
            given
                .get(&i)
                .cloned()
                .unwrap_or_else(|| K4Module::trivial(*b as usize))
        })
        .collect())
}
