//! The quaternionic conjugation equation and its C2 form, evaluated on
//! spaces given by truncated polynomial cohomology.
//!
//! For `x ∈ H^{4n}(X)` the right-hand side is
//! `κ(x) p0^n + Σ_{0<i+j≤n} Sq(j,i)(κ(x)) p1^j p0^{n−j−i}`
//! in `H*(X^{K4}) ⊗ F2[t, t′]`. The section σ itself is not modelled.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::steenrod::{dickson_p0, dickson_p1, milnor_act_truncated, F2Poly, MilnorOp};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConjugationError {
    #[error("class is not homogeneous of a degree divisible by {factor}")]
    DegreeError { factor: u32 },
    #[error("invalid space model `{model}`: {reason}")]
    InvalidModel { model: String, reason: String },
    #[error("kappa is not defined on monomial {0:?}")]
    MissingKappa(Vec<u32>),
    #[error("model file: {0}")]
    Parse(String),
}

/// Which group the model is for: K4 quarters degrees, C2 halves them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    #[default]
    #[serde(alias = "K4")]
    K4,
    #[serde(alias = "C2")]
    C2,
}

impl Group {
    pub fn factor(self) -> u32 {
        match self {
            Group::K4 => 4,
            Group::C2 => 2,
        }
    }

    fn t_vars(self) -> usize {
        match self {
            Group::K4 => 2,
            Group::C2 => 1,
        }
    }
}

/// `F2[x_1, …, x_k] / (x_i^{h_i})`, graded by generator degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedRing {
    pub names: Vec<String>,
    pub degrees: Vec<u32>,
    pub heights: Vec<Option<u32>>,
}

impl TruncatedRing {
    pub fn single(name: &str, degree: u32, height: Option<u32>) -> Self {
        TruncatedRing {
            names: vec![name.into()],
            degrees: vec![degree],
            heights: vec![height],
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn is_finite(&self) -> bool {
        self.heights.iter().all(Option::is_some)
    }

    pub fn degree_of(&self, m: &[u32]) -> u32 {
        F2Poly::monomial_degree(m, &self.degrees)
    }

    pub fn reduce(&self, p: &F2Poly) -> F2Poly {
        p.truncate(&self.heights)
    }

    pub fn mul(&self, a: &F2Poly, b: &F2Poly) -> F2Poly {
        self.reduce(&a.mul(b))
    }

    /// Standard monomials of degree `d`.
    pub fn monomials_in_degree(&self, d: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut cur = vec![0; self.nvars()];
        self.fill(0, d, &mut cur, &mut out);
        out
    }

    fn fill(&self, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == self.nvars() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = self.degrees[i];
        let mut e = 0;
        loop {
            if self.heights[i].is_some_and(|h| e >= h) || e * w > left {
                break;
            }
            cur[i] = e;
            self.fill(i + 1, left - e * w, cur, out);
            if w == 0 {
                break;
            }
            e += 1;
        }
        cur[i] = 0;
    }

    /// Betti numbers `dim H^i` for `i = 0..=top degree` (finite rings only).
    pub fn betti(&self) -> Option<Vec<u64>> {
        if !self.is_finite() {
            return None;
        }
        let top: u32 = self
            .degrees
            .iter()
            .zip(&self.heights)
            .map(|(d, h)| d * (h.unwrap().saturating_sub(1)))
            .sum();
        Some(
            (0..=top)
                .map(|d| self.monomials_in_degree(d).len() as u64)
                .collect(),
        )
    }

    pub fn show(&self, p: &F2Poly) -> String {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        p.show(&names)
    }

    pub fn parse(&self, s: &str) -> Result<F2Poly, ConjugationError> {
        let names: Vec<&str> = self.names.iter().map(String::as_str).collect();
        F2Poly::parse(s, &names).map_err(|e| ConjugationError::Parse(e.to_string()))
    }
}

/// How κ is specified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Kappa {
    /// Images of the ambient generators, extended multiplicatively.
    Multiplicative(Vec<F2Poly>),
    /// Images of individual ambient monomials, extended linearly.
    Table(BTreeMap<Vec<u32>, F2Poly>),
}

/// Cohomology of a candidate conjugation space and of its fixed points,
/// with the degree-dividing map κ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceModel {
    pub name: String,
    pub group: Group,
    pub ambient: TruncatedRing,
    pub fixed: TruncatedRing,
    pub kappa: Kappa,
}

impl SpaceModel {
    /// `HP^n` (or `HP^∞` for `None`): `H*(X) = F2[y]/(y^{n+1})`, `|y| = 4`,
    /// fixed points `RP^n` with `κ(y) = c`.
    pub fn hp(n: Option<u32>) -> Self {
        let h = n.map(|n| n + 1);
        SpaceModel {
            name: n.map_or("HP^inf".into(), |n| format!("HP^{n}")),
            group: Group::K4,
            ambient: TruncatedRing::single("y", 4, h),
            fixed: TruncatedRing::single("c", 1, h),
            kappa: Kappa::Multiplicative(vec![F2Poly::var(1, 0)]),
        }
    }

    /// `CP^n` as a C2 conjugation space: `|y| = 2`, fixed points `RP^n`.
    pub fn cp(n: Option<u32>) -> Self {
        let h = n.map(|n| n + 1);
        SpaceModel {
            name: n.map_or("CP^inf".into(), |n| format!("CP^{n}")),
            group: Group::C2,
            ambient: TruncatedRing::single("y", 2, h),
            fixed: TruncatedRing::single("c", 1, h),
            kappa: Kappa::Multiplicative(vec![F2Poly::var(1, 0)]),
        }
    }

    fn invalid(&self, reason: String) -> ConjugationError {
        ConjugationError::InvalidModel {
            model: self.name.clone(),
            reason,
        }
    }

    /// κ applied to a polynomial in the ambient ring.
    pub fn kappa(&self, x: &F2Poly) -> Result<F2Poly, ConjugationError> {
        let x = self.ambient.reduce(x);
        let out = match &self.kappa {
            Kappa::Multiplicative(imgs) => x.substitute(imgs),
            Kappa::Table(t) => {
                let mut out = F2Poly::zero(self.fixed.nvars());
                for m in x.terms() {
                    let img = t
                        .get(m)
                        .ok_or_else(|| ConjugationError::MissingKappa(m.clone()))?;
                    out.add_assign(img);
                }
                out
            }
        };
        Ok(self.fixed.reduce(&out))
    }

    /// Checks the structural invariants: fixed generators in degree 1,
    /// ambient cohomology concentrated in degrees divisible by the group
    /// factor, κ dividing degrees and bijective in every degree up to
    /// `max_degree` (the whole ring when finite).
    pub fn validate(&self, max_degree: u32) -> Result<(), ConjugationError> {
        let f = self.group.factor();
        for (n, d) in self.fixed.names.iter().zip(&self.fixed.degrees) {
            if *d != 1 {
                return Err(self.invalid(format!("fixed generator `{n}` must have degree 1")));
            }
        }
        for (n, d) in self.ambient.names.iter().zip(&self.ambient.degrees) {
            if *d == 0 || d % f != 0 {
                return Err(self.invalid(format!(
                    "ambient generator `{n}` has degree {d}, not a positive multiple of {f}"
                )));
            }
        }
        let top = match (self.ambient.betti(), self.fixed.betti()) {
            (Some(a), Some(b)) => (a.len() as u32).max(f * b.len() as u32),
            _ => max_degree,
        };
        for d in 0..=top / f {
            let src = self.ambient.monomials_in_degree(f * d);
            let tgt = self.fixed.monomials_in_degree(d);
            if src.len() != tgt.len() {
                return Err(self.invalid(format!(
                    "dim H^{}(X) = {} but dim H^{d}(fixed) = {}",
                    f * d,
                    src.len(),
                    tgt.len()
                )));
            }
            let mut rows = Vec::new();
            for m in &src {
                let img = self.kappa(&F2Poly::monomial(m.clone()))?;
                if !img.is_zero() && img.weighted_degree(&self.fixed.degrees) != Some(d) {
                    return Err(self.invalid(format!("kappa does not divide degrees on {m:?}")));
                }
                rows.push(
                    tgt.iter()
                        .map(|t| u8::from(img.contains(t)))
                        .collect::<Vec<u8>>(),
                );
            }
            let m = crate::f2linalg::F2Matrix::from_rows(&rows);
            if crate::f2linalg::rank(&m) != tgt.len() {
                return Err(self.invalid(format!("kappa is not bijective in degree {}", f * d)));
            }
        }
        Ok(())
    }

    /// `(betti_X, betti_fixed)` for finite models.
    pub fn betti(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        Some((self.ambient.betti()?, self.fixed.betti()?))
    }

    /// Degree `n` with `x ∈ H^{factor·n}(X)`; zero classes have no degree.
    fn quarter_degree(&self, x: &F2Poly) -> Result<Option<u32>, ConjugationError> {
        let f = self.group.factor();
        let x = self.ambient.reduce(x);
        if x.is_zero() {
            return Ok(None);
        }
        match x.weighted_degree(&self.ambient.degrees) {
            Some(d) if d % f == 0 => Ok(Some(d / f)),
            _ => Err(ConjugationError::DegreeError { factor: f }),
        }
    }

    /// The tensor ring `H*(X^G) ⊗ F2[t(, t′)]` that classes live in.
    pub fn tensor_heights(&self) -> Vec<Option<u32>> {
        let mut h = self.fixed.heights.clone();
        h.extend(std::iter::repeat_n(None, self.group.t_vars()));
        h
    }

    fn tensor_nvars(&self) -> usize {
        self.fixed.nvars() + self.group.t_vars()
    }
}

/// An element of `H*(X^G) ⊗ F2[t(, t′)]`; the polynomial has the fixed
/// generators first, then `t` (and `t′`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationClass {
    pub fixed_vars: usize,
    pub t_vars: usize,
    pub poly: F2Poly,
}

impl ConjugationClass {
    /// Total degree with fixed generators weighted by `fixed_degrees` and
    /// `t`, `t′` of degree 1.
    pub fn total_degree(&self, fixed_degrees: &[u32]) -> Option<u32> {
        let mut w = fixed_degrees.to_vec();
        w.extend(std::iter::repeat_n(1, self.t_vars));
        self.poly.weighted_degree(&w)
    }

    /// The part whose fixed-cohomology component has degree `d`.
    pub fn fixed_degree_part(&self, fixed_degrees: &[u32], d: u32) -> F2Poly {
        let terms = self
            .poly
            .terms()
            .filter(|m| F2Poly::monomial_degree(&m[..self.fixed_vars], fixed_degrees) == d)
            .cloned();
        F2Poly::from_terms(self.poly.nvars(), terms)
    }

    pub fn show(&self, fixed_names: &[String]) -> String {
        let mut names: Vec<&str> = fixed_names.iter().map(String::as_str).collect();
        names.push("t");
        if self.t_vars == 2 {
            names.push("t'");
        }
        self.poly.show(&names)
    }
}

/// One summand `Sq(j,i)(κ(x)) · p1^j · p0^{n−j−i}` of the right-hand side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugationTerm {
    pub i: u32,
    pub j: u32,
    pub coefficient: F2Poly,
    pub dickson: F2Poly,
}

/// The summands of the conjugation equation for `x`, in order of
/// increasing `i + j`, starting with `(0, 0)`.
pub fn conjugation_terms(
    space: &SpaceModel,
    x: &F2Poly,
) -> Result<Vec<ConjugationTerm>, ConjugationError> {
    if space.group != Group::K4 {
        return Err(space.invalid("conjugation_rhs needs a K4 model".into()));
    }
    let Some(n) = space.quarter_degree(x)? else {
        return Ok(Vec::new());
    };
    let k = space.kappa(x)?;
    let (p0, p1) = (dickson_p0(), dickson_p1());
    let mut out = Vec::new();
    for s in 0..=n {
        for i in 0..=s {
            let j = s - i;
            let coefficient = milnor_act_truncated(&MilnorOp::sq2(j, i), &k, &space.fixed.heights);
            out.push(ConjugationTerm {
                i,
                j,
                coefficient,
                dickson: p1.pow(j).mul(&p0.pow(n - s)),
            });
        }
    }
    Ok(out)
}

fn assemble(space: &SpaceModel, parts: impl Iterator<Item = (F2Poly, F2Poly)>) -> ConjugationClass {
    let nf = space.fixed.nvars();
    let n = space.tensor_nvars();
    let mut poly = F2Poly::zero(n);
    for (coef, tt) in parts {
        poly.add_assign(&coef.embed(n, 0).mul(&tt.embed(n, nf)));
    }
    ConjugationClass {
        fixed_vars: nf,
        t_vars: space.group.t_vars(),
        poly: poly.truncate(&space.tensor_heights()),
    }
}

/// `κ(x) p0^n + Σ_{0<i+j≤n} Sq(j,i)(κ(x)) p1^j p0^{n−j−i}`.
pub fn conjugation_rhs(
    space: &SpaceModel,
    x: &F2Poly,
) -> Result<ConjugationClass, ConjugationError> {
    let terms = conjugation_terms(space, x)?;
    Ok(assemble(
        space,
        terms.into_iter().map(|t| (t.coefficient, t.dickson)),
    ))
}

/// `κ(x) t^n + Σ_{i=1}^n Sq^i(κ(x)) t^{n−i}` for a C2 model.
pub fn conjugation_rhs_c2(
    space: &SpaceModel,
    x: &F2Poly,
) -> Result<ConjugationClass, ConjugationError> {
    if space.group != Group::C2 {
        return Err(space.invalid("conjugation_rhs_c2 needs a C2 model".into()));
    }
    let Some(n) = space.quarter_degree(x)? else {
        return Ok(assemble(space, std::iter::empty()));
    };
    let k = space.kappa(x)?;
    let parts = (0..=n).map(|i| {
        (
            milnor_act_truncated(&MilnorOp::sq(i), &k, &space.fixed.heights),
            F2Poly::monomial(vec![n - i]),
        )
    });
    Ok(assemble(space, parts))
}

/// Whether `Φ(x·y) = Φ(x)·Φ(y)` in the truncated tensor ring.
pub fn check_multiplicativity(
    space: &SpaceModel,
    x: &F2Poly,
    y: &F2Poly,
) -> Result<bool, ConjugationError> {
    let phi = |p: &F2Poly| match space.group {
        Group::K4 => conjugation_rhs(space, p),
        Group::C2 => conjugation_rhs_c2(space, p),
    };
    let xy = space.ambient.mul(x, y);
    let lhs = phi(&xy)?;
    let (a, b) = (phi(x)?, phi(y)?);
    let rhs = a.poly.mul(&b.poly).truncate(&space.tensor_heights());
    Ok(lhs.poly == rhs)
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[error("purity fails at index {index}: {reason}")]
pub struct PurityFailure {
    pub index: usize,
    pub reason: String,
}

/// Cell degrees `n_i` of a pure decomposition `⋁ S^{n_i ρ} ∧ HF2`, read off
/// from Betti numbers of `X` and of its fixed points.
pub fn purity_certificate(
    betti_x: &[u64],
    betti_fixed: &[u64],
) -> Result<Vec<usize>, PurityFailure> {
    let at = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
    let top = betti_x.len().max(4 * betti_fixed.len());
    for i in 0..top {
        let b = at(betti_x, i);
        if i % 4 != 0 {
            if b != 0 {
                return Err(PurityFailure {
                    index: i,
                    reason: format!("betti_X[{i}] = {b} in a degree not divisible by 4"),
                });
            }
        } else if b != at(betti_fixed, i / 4) {
            return Err(PurityFailure {
                index: i,
                reason: format!(
                    "betti_X[{i}] = {b} but betti_fixed[{}] = {}",
                    i / 4,
                    at(betti_fixed, i / 4)
                ),
            });
        }
    }
    Ok(betti_fixed
        .iter()
        .enumerate()
        .flat_map(|(n, m)| std::iter::repeat_n(n, *m as usize))
        .collect())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenFile {
    name: String,
    degree: u32,
    #[serde(default)]
    height: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    name: String,
    #[serde(default)]
    group: Group,
    ambient: Vec<GenFile>,
    fixed: Vec<GenFile>,
    #[serde(default)]
    kappa: BTreeMap<String, String>,
    #[serde(default)]
    kappa_table: BTreeMap<String, String>,
}

fn ring_of(gens: Vec<GenFile>) -> TruncatedRing {
    TruncatedRing {
        names: gens.iter().map(|g| g.name.clone()).collect(),
        degrees: gens.iter().map(|g| g.degree).collect(),
        heights: gens.iter().map(|g| g.height).collect(),
    }
}

/// Parses a TOML model file:
///
/// ```toml
/// name = "HP^2"
/// ambient = [{ name = "y", degree = 4, height = 3 }]
/// fixed = [{ name = "c", degree = 1, height = 3 }]
/// kappa = { y = "c" }
/// ```
///
/// `kappa` gives images of generators (multiplicative extension);
/// `kappa_table` instead maps ambient monomials to images.
pub fn parse_model(text: &str) -> Result<SpaceModel, ConjugationError> {
    let f: ModelFile = toml::from_str(text).map_err(|e| ConjugationError::Parse(e.to_string()))?;
    let ambient = ring_of(f.ambient);
    let fixed = ring_of(f.fixed);
    let bad = |reason: String| ConjugationError::InvalidModel {
        model: f.name.clone(),
        reason,
    };
    let kappa = match (f.kappa.is_empty(), f.kappa_table.is_empty()) {
        (false, true) => {
            let mut imgs = Vec::new();
            for n in &ambient.names {
                let s = f
                    .kappa
                    .get(n)
                    .ok_or_else(|| bad(format!("no kappa image for `{n}`")))?;
                imgs.push(fixed.parse(s)?);
            }
            if let Some(extra) = f.kappa.keys().find(|k| !ambient.names.contains(k)) {
                return Err(bad(format!("kappa names unknown generator `{extra}`")));
            }
            Kappa::Multiplicative(imgs)
        }
        (true, false) => {
            let mut table = BTreeMap::new();
            for (m, img) in &f.kappa_table {
                let p = ambient.parse(m)?;
                if p.len() != 1 {
                    return Err(bad(format!("kappa_table key `{m}` is not a monomial")));
                }
                let mono = p.terms().next().unwrap().clone();
                table.insert(mono, fixed.parse(img)?);
            }
            Kappa::Table(table)
        }
        _ => return Err(bad("give exactly one of `kappa` and `kappa_table`".into())),
    };
    Ok(SpaceModel {
        name: f.name,
        group: f.group,
        ambient,
        fixed,
        kappa,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(k: u32) -> F2Poly {
        F2Poly::monomial(vec![k])
    }

    /// c^a t^b t'^c in the tensor ring of a one-generator K4 model.
    fn ctt(a: u32, b: u32, c: u32) -> Vec<u32> {
        vec![a, b, c]
    }

    #[test]
    fn hp1_truncates_to_c_p0() {
        let r = conjugation_rhs(&SpaceModel::hp(Some(1)), &y(1)).unwrap();
        assert_eq!(r.poly, F2Poly::from_terms(3, [ctt(1, 2, 1), ctt(1, 1, 2)]));
        assert_eq!(r.show(&["c".into()]), "c*t^2*t' + c*t*t'^2");
    }

    #[test]
    fn untruncated_y() {
        let hp = SpaceModel::hp(None);
        let r = conjugation_rhs(&hp, &y(1)).unwrap();
        let c = |k| F2Poly::monomial(vec![k]);
        let want = [
            (c(1), dickson_p0()),
            (c(2), dickson_p1()),
            (c(4), F2Poly::one(2)),
        ];
        assert_eq!(r, assemble(&hp, want.into_iter()));
        assert_eq!(conjugation_rhs(&hp, &y(0)).unwrap().poly, F2Poly::one(3));
    }

    #[test]
    fn square_of_y() {
        let hp = SpaceModel::hp(None);
        let c = |k| F2Poly::monomial(vec![k]);
        let want = [
            (c(2), dickson_p0().pow(2)),
            (c(4), dickson_p1().pow(2)),
            (c(8), F2Poly::one(2)),
        ];
        let phi2 = conjugation_rhs(&hp, &y(2)).unwrap();
        assert_eq!(phi2, assemble(&hp, want.into_iter()));
        assert!(check_multiplicativity(&hp, &y(1), &y(1)).unwrap());
        assert!(check_multiplicativity(&hp, &y(3), &y(0)).unwrap());
    }

    #[test]
    fn c2_examples() {
        let r = conjugation_rhs_c2(&SpaceModel::cp(Some(1)), &y(1)).unwrap();
        assert_eq!(r.poly, F2Poly::monomial(vec![1, 1]));
        let r = conjugation_rhs_c2(&SpaceModel::cp(None), &y(1)).unwrap();
        assert_eq!(r.poly, F2Poly::from_terms(2, [vec![1, 1], vec![2, 0]]));
        let r = conjugation_rhs_c2(&SpaceModel::cp(None), &y(0)).unwrap();
        assert_eq!(r.poly, F2Poly::one(2));
    }

    #[test]
    fn degree_errors() {
        let mut m = SpaceModel::hp(None);
        m.ambient.degrees = vec![2];
        assert_eq!(
            conjugation_rhs(&m, &y(1)),
            Err(ConjugationError::DegreeError { factor: 4 })
        );
        let two = TruncatedRing {
            names: vec!["y".into(), "z".into()],
            degrees: vec![4, 8],
            heights: vec![None, None],
        };
        let m = SpaceModel {
            ambient: two,
            fixed: TruncatedRing {
                names: vec!["c".into(), "d".into()],
                degrees: vec![1, 1],
                heights: vec![None, None],
            },
            kappa: Kappa::Multiplicative(vec![F2Poly::var(2, 0), F2Poly::var(2, 1)]),
            ..SpaceModel::hp(None)
        };
        let mixed = F2Poly::from_terms(2, [vec![1, 0], vec![0, 1]]);
        assert!(conjugation_rhs(&m, &mixed).is_err());
    }

    #[test]
    fn validation() {
        for n in 0..5 {
            SpaceModel::hp(Some(n)).validate(0).unwrap();
        }
        SpaceModel::hp(None).validate(40).unwrap();
        let mut bad = SpaceModel::hp(Some(2));
        bad.kappa = Kappa::Multiplicative(vec![F2Poly::zero(1)]);
        assert!(bad.validate(0).is_err());
        let mut bad = SpaceModel::hp(Some(2));
        bad.fixed.heights = vec![Some(2)];
        assert!(bad.validate(0).is_err());
    }

    #[test]
    fn purity() {
        assert_eq!(
            purity_certificate(&[1, 0, 0, 0, 1], &[1, 1]),
            Ok(vec![0, 1])
        );
        assert_eq!(purity_certificate(&[1], &[1]), Ok(vec![0]));
        assert_eq!(purity_certificate(&[1, 1], &[1, 5]).unwrap_err().index, 1);
        assert_eq!(
            purity_certificate(&[1, 0, 0, 0, 2], &[1, 1])
                .unwrap_err()
                .index,
            4
        );
        let (bx, bf) = SpaceModel::hp(Some(3)).betti().unwrap();
        assert_eq!(purity_certificate(&bx, &bf), Ok(vec![0, 1, 2, 3]));
    }

    #[test]
    fn model_file() {
        let m = parse_model(
            r#"
name = "HP^2"
ambient = [{ name = "y", degree = 4, height = 3 }]
fixed = [{ name = "c", degree = 1, height = 3 }]
kappa = { y = "c" }
"#,
        )
        .unwrap();
        assert_eq!(m.ambient, SpaceModel::hp(Some(2)).ambient);
        assert_eq!(m.kappa, SpaceModel::hp(Some(2)).kappa);
        let t = parse_model(
            r#"
name = "table"
ambient = [{ name = "y", degree = 4, height = 2 }]
fixed = [{ name = "c", degree = 1, height = 2 }]
kappa_table = { "1" = "1", "y" = "c" }
"#,
        )
        .unwrap();
        t.validate(0).unwrap();
        assert_eq!(
            conjugation_rhs(&t, &y(1)).unwrap(),
            conjugation_rhs(&SpaceModel::hp(Some(1)), &y(1)).unwrap()
        );
        assert!(parse_model("name = \"x\"\nambient = []\nfixed = []\n").is_err());
    }
}
