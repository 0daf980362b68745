//! Mod-2 Steenrod operations in the Milnor basis acting on polynomial
//! algebras on degree-1 generators, and the Dickson invariants of K4.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    #[error("cannot parse operation `{0}` (expected e.g. `Sq(2,1)`)")]
    BadOp(String),
    #[error("cannot parse polynomial `{input}`: {reason}")]
    BadPoly { input: String, reason: String },
}

/// A Milnor basis element `Sq(r1, …, rk)`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MilnorOp {
    profile: Vec<u32>,
}

impl MilnorOp {
    pub fn new(mut profile: Vec<u32>) -> Self {
        while profile.last() == Some(&0) {
            profile.pop();
        }
        MilnorOp { profile }
    }

    pub fn identity() -> Self {
        MilnorOp::default()
    }

    /// The classical square `Sq^i = Sq(i)`.
    pub fn sq(i: u32) -> Self {
        MilnorOp::new(vec![i])
    }

    /// `Sq(j, i)`: first slot j, second slot i.
    pub fn sq2(j: u32, i: u32) -> Self {
        MilnorOp::new(vec![j, i])
    }

    pub fn profile(&self) -> &[u32] {
        &self.profile
    }

    pub fn is_identity(&self) -> bool {
        self.profile.is_empty()
    }

    /// `Σ r_i (2^i − 1)`.
    pub fn degree(&self) -> u32 {
        self.profile
            .iter()
            .enumerate()
            .map(|(k, r)| r * ((1 << (k + 1)) - 1))
            .sum()
    }

    /// `Σ r_i`, the lowest degree on which the operation can act nontrivially.
    pub fn excess(&self) -> u32 {
        self.profile.iter().sum()
    }

    fn minus_slot(&self, k: usize) -> MilnorOp {
        let mut p = self.profile.clone();
        p[k] -= 1;
        MilnorOp::new(p)
    }
}

impl fmt::Display for MilnorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.profile.iter().map(|r| r.to_string()).collect();
        if parts.is_empty() {
            write!(f, "Sq(0)")
        } else {
            write!(f, "Sq({})", parts.join(","))
        }
    }
}

impl FromStr for MilnorOp {
    type Err = SteenrodError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SteenrodError::BadOp(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix("Sq(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(MilnorOp::identity());
        }
        let profile = inner
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MilnorOp::new(profile))
    }
}

/// Polynomial over F2 in `nvars` commuting variables with non-negative
/// exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Poly {
    nvars: usize,
    terms: BTreeSet<Vec<u32>>,
}

/// An element of `F2[t, t′]`.
pub type BivariatePoly = F2Poly;

impl F2Poly {
    pub fn zero(nvars: usize) -> Self {
        F2Poly {
            nvars,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars])
    }

    pub fn monomial(exps: Vec<u32>) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeSet::new();
        terms.insert(exps);
        F2Poly { nvars, terms }
    }

    /// The `i`-th variable.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut p = F2Poly::zero(nvars);
        for t in terms {
            p.toggle(t);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.terms.contains(m)
    }

    pub fn toggle(&mut self, m: Vec<u32>) {
        assert_eq!(m.len(), self.nvars, "monomial arity");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn add(&self, o: &F2Poly) -> F2Poly {
        assert_eq!(self.nvars, o.nvars);
        F2Poly {
            nvars: self.nvars,
            terms: self.terms.symmetric_difference(&o.terms).cloned().collect(),
        }
    }

    pub fn add_assign(&mut self, o: &F2Poly) {
        for t in &o.terms {
            self.toggle(t.clone());
        }
    }

    pub fn mul(&self, o: &F2Poly) -> F2Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut out = F2Poly::zero(self.nvars);
        for a in &self.terms {
            for b in &o.terms {
                out.toggle(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> F2Poly {
        let mut out = F2Poly::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Weighted degree of a monomial.
    pub fn monomial_degree(m: &[u32], weights: &[u32]) -> u32 {
        m.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    /// Total degree (all variables of degree 1) if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        self.weighted_degree(&vec![1; self.nvars])
    }

    /// The common weighted degree of all terms, if nonzero and homogeneous.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        let mut it = self.terms.iter().map(|m| Self::monomial_degree(m, weights));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Drops every monomial in which some variable reaches its height
    /// (`x_i^{h_i} = 0`); `None` means no truncation.
    pub fn truncate(&self, heights: &[Option<u32>]) -> F2Poly {
        F2Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|m| m.iter().zip(heights).all(|(e, h)| h.is_none_or(|h| *e < h)))
                .cloned()
                .collect(),
        }
    }

    /// Substitutes `x_i ↦ images[i]` (all images in a common ring).
    pub fn substitute(&self, images: &[F2Poly]) -> F2Poly {
        assert_eq!(images.len(), self.nvars);
        let n = images.first().map_or(0, |p| p.nvars);
        let mut out = F2Poly::zero(n);
        for m in &self.terms {
            let mut t = F2Poly::one(n);
            for (img, e) in images.iter().zip(m) {
                t = t.mul(&img.pow(*e));
            }
            out.add_assign(&t);
        }
        out
    }

    /// Embeds into a ring with more variables, placing variable `i` at
    /// position `at + i`.
    pub fn embed(&self, nvars: usize, at: usize) -> F2Poly {
        let terms = self.terms.iter().map(|m| {
            let mut e = vec![0; nvars];
            e[at..at + m.len()].copy_from_slice(m);
            e
        });
        F2Poly::from_terms(nvars, terms)
    }

    /// Splits off the variables `at..at+len`: returns the pairs
    /// `(monomial in those variables, coefficient in the others)`.
    pub fn split(&self, at: usize, len: usize) -> Vec<(Vec<u32>, F2Poly)> {
        let mut map: std::collections::BTreeMap<Vec<u32>, F2Poly> = Default::default();
        for m in &self.terms {
            let key = m[at..at + len].to_vec();
            let mut rest = m.clone();
            rest[at..at + len].iter_mut().for_each(|e| *e = 0);
            map.entry(key)
                .or_insert_with(|| F2Poly::zero(self.nvars))
                .toggle(rest);
        }
        map.into_iter().collect()
    }

    pub fn show(&self, names: &[&str]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<(u32, String)> = self
            .terms
            .iter()
            .rev()
            .map(|m| {
                let f: Vec<String> = m
                    .iter()
                    .zip(names)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, n)| {
                        if *e == 1 {
                            n.to_string()
                        } else {
                            format!("{n}^{e}")
                        }
                    })
                    .collect();
                let s = if f.is_empty() {
                    "1".into()
                } else {
                    f.join("*")
                };
                (m.iter().sum::<u32>(), s)
            })
            .collect();
        parts.sort_by_key(|(d, _)| *d);
        parts
            .into_iter()
            .map(|(_, s)| s)
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Parses `+`-separated products of `name` / `name^k` / `1`.
    pub fn parse(s: &str, names: &[&str]) -> Result<F2Poly, SteenrodError> {
        let bad = |reason: String| SteenrodError::BadPoly {
            input: s.to_string(),
            reason,
        };
        let n = names.len();
        let t = s.trim();
        if t == "0" {
            return Ok(F2Poly::zero(n));
        }
        let mut out = F2Poly::zero(n);
        for term in t.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(bad("empty term".into()));
            }
            let mut e = vec![0u32; n];
            for factor in term.split('*') {
                let factor = factor.trim();
                if factor == "1" {
                    continue;
                }
                let (name, k) = match factor.split_once('^') {
                    Some((a, b)) => (
                        a.trim(),
                        b.trim()
                            .trim_matches(|c| c == '{' || c == '}')
                            .parse::<u32>()
                            .map_err(|_| bad(format!("bad exponent in `{factor}`")))?,
                    ),
                    None => (factor, 1),
                };
                let i = names
                    .iter()
                    .position(|x| *x == name)
                    .ok_or_else(|| bad(format!("unknown variable `{name}`")))?;
                e[i] += k;
            }
            out.toggle(e);
        }
        Ok(out)
    }
}

/// Action of `op` on a polynomial in degree-1 generators.
pub fn milnor_act(op: &MilnorOp, p: &F2Poly) -> F2Poly {
    let mut memo = HashMap::new();
    let mut out = F2Poly::zero(p.nvars);
    for m in &p.terms {
        out.add_assign(&act_monomial(op, m, &mut memo));
    }
    out
}

/// `milnor_act` followed by truncation `x_i^{h_i} = 0`.
pub fn milnor_act_truncated(op: &MilnorOp, p: &F2Poly, heights: &[Option<u32>]) -> F2Poly {
    milnor_act(op, &p.truncate(heights)).truncate(heights)
}

/// Generator rule: `Sq(∅)t = t`, `Sq(e_k)t = t^{2^k}`, everything else 0.
fn act_generator(op: &MilnorOp) -> Option<u32> {
    match op.profile.as_slice() {
        [] => Some(1),
        p if p.iter().sum::<u32>() == 1 => {
            let k = p.iter().position(|r| *r == 1).unwrap() + 1;
            Some(1 << k)
        }
        _ => None,
    }
}

type Memo = HashMap<(MilnorOp, Vec<u32>), F2Poly>;

/// Cartan rule peeling one generator at a time:
/// `Sq(R)(x·m) = Σ_{R′+R″=R} Sq(R′)(x)·Sq(R″)(m)`, where only `R′ = 0` and
/// `R′ = e_k` contribute.
fn act_monomial(op: &MilnorOp, m: &[u32], memo: &mut Memo) -> F2Poly {
    let n = m.len();
    let Some(v) = m.iter().position(|e| *e > 0) else {
        return if op.is_identity() {
            F2Poly::one(n)
        } else {
            F2Poly::zero(n)
        };
    };
    if op.is_identity() {
        return F2Poly::monomial(m.to_vec());
    }
    let key = (op.clone(), m.to_vec());
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let mut rest = m.to_vec();
    rest[v] -= 1;
    let mut out = F2Poly::zero(n);
    let mut splits = vec![(MilnorOp::identity(), op.clone())];
    for k in 0..op.profile.len() {
        if op.profile[k] > 0 {
            let mut e = vec![0; k + 1];
            e[k] = 1;
            splits.push((MilnorOp::new(e), op.minus_slot(k)));
        }
    }
    for (first, second) in splits {
        let Some(power) = act_generator(&first) else {
            continue;
        };
        let tail = act_monomial(&second, &rest, memo);
        for t in tail.terms {
            let mut t = t;
            t[v] += power;
            out.toggle(t);
        }
    }
    memo.insert(key, out.clone());
    out
}

/// `p0 = t t′ (t + t′) = t²t′ + t t′²`, degree 3.
pub fn dickson_p0() -> BivariatePoly {
    F2Poly::from_terms(2, [vec![2, 1], vec![1, 2]])
}

/// `p1 = t² + t t′ + t′²`, degree 2.
pub fn dickson_p1() -> BivariatePoly {
    F2Poly::from_terms(2, [vec![2, 0], vec![1, 1], vec![0, 2]])
}

/// The six invertible 2×2 matrices over F2, as `[[a, b], [c, d]]`
/// acting by `t ↦ a t + b t′`, `t′ ↦ c t + d t′`.
pub fn gl2_f2() -> Vec<[[u8; 2]; 2]> {
    let mut out = Vec::new();
    for bits in 0u8..16 {
        let m = [[bits >> 3 & 1, bits >> 2 & 1], [bits >> 1 & 1, bits & 1]];
        if (m[0][0] * m[1][1] + m[0][1] * m[1][0]) % 2 == 1 {
            out.push(m);
        }
    }
    out
}

/// Applies a linear substitution of `(t, t′)`.
pub fn substitute_linear(p: &BivariatePoly, g: [[u8; 2]; 2]) -> BivariatePoly {
    let lin = |r: [u8; 2]| {
        F2Poly::from_terms(
            2,
            [
                (r[0] == 1).then_some(vec![1, 0]),
                (r[1] == 1).then_some(vec![0, 1]),
            ]
            .into_iter()
            .flatten(),
        )
    };
    p.substitute(&[lin(g[0]), lin(g[1])])
}

/// Whether `Sq(R)` kills every monomial of `F2[t, t′]` of degree at most
/// `n` and below the excess `Σ r_i`.
pub fn excess_vanishing_check(op: &MilnorOp, n: u32) -> bool {
    let top = n.min(op.excess().saturating_sub(1));
    if op.excess() == 0 {
        return true;
    }
    (0..=top).all(|d| (0..=d).all(|a| milnor_act(op, &F2Poly::monomial(vec![a, d - a])).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(a: u32) -> F2Poly {
        F2Poly::monomial(vec![a])
    }

    /// Lucas: C(a, i) is odd iff the bits of i are a subset of those of a.
    fn binom_odd(a: u32, i: u32) -> bool {
        i <= a && (a & i) == i
    }

    #[test]
    fn lucas_oracle() {
        for a in 0..=16 {
            for i in 0..=16 {
                let want = if binom_odd(a, i) {
                    t(a + i)
                } else {
                    F2Poly::zero(1)
                };
                assert_eq!(milnor_act(&MilnorOp::sq(i), &t(a)), want, "Sq{i} t^{a}");
            }
        }
    }

    #[test]
    fn sq01_matches_admissible_expansion() {
        let x = t(1);
        let lhs = milnor_act(&MilnorOp::sq2(0, 1), &x);
        assert_eq!(lhs, t(4));
        let sq = |i, p: &F2Poly| milnor_act(&MilnorOp::sq(i), p);
        let rhs = sq(3, &x).add(&sq(2, &sq(1, &x)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn parse_and_show() {
        let op: MilnorOp = "Sq(2,1,0)".parse().unwrap();
        assert_eq!(op.profile(), &[2, 1]);
        assert_eq!(op.degree(), 5);
        assert_eq!(op.to_string(), "Sq(2,1)");
        assert!("Sq()".parse::<MilnorOp>().unwrap().is_identity());
        assert!("Sq[1]".parse::<MilnorOp>().is_err());
        let p = F2Poly::parse("t^2*t' + t*t'^2", &["t", "t'"]).unwrap();
        assert_eq!(p, dickson_p0());
        assert_eq!(p.show(&["t", "t'"]), "t^2*t' + t*t'^2");
        assert!(F2Poly::parse("t + s", &["t"]).is_err());
    }

    #[test]
    fn truncated_examples() {
        let c = t(1);
        assert!(milnor_act_truncated(&MilnorOp::sq2(0, 1), &c, &[Some(2)]).is_zero());
        assert_eq!(milnor_act_truncated(&MilnorOp::sq(1), &c, &[Some(3)]), t(2));
        let p = F2Poly::from_terms(1, [vec![1], vec![3]]);
        assert_eq!(
            milnor_act_truncated(&MilnorOp::identity(), &p, &[Some(3)]),
            c
        );
    }

    #[test]
    fn dickson() {
        assert_eq!(dickson_p0().degree(), Some(3));
        assert_eq!(dickson_p1().degree(), Some(2));
        let diag = F2Poly::var(1, 0);
        assert!(dickson_p0().substitute(&[diag.clone(), diag]).is_zero());
        let g = gl2_f2();
        assert_eq!(g.len(), 6);
        for m in g {
            assert_eq!(substitute_linear(&dickson_p0(), m), dickson_p0());
            assert_eq!(substitute_linear(&dickson_p1(), m), dickson_p1());
        }
    }

    #[test]
    fn excess() {
        assert!(excess_vanishing_check(&MilnorOp::sq2(2, 1), 2));
        assert!(excess_vanishing_check(&MilnorOp::sq(1), 1));
        assert!(excess_vanishing_check(&MilnorOp::sq2(0, 1), 0));
        for d in 0..=2 {
            for a in 0..=d {
                let m = F2Poly::monomial(vec![a, d - a]);
                assert!(milnor_act(&MilnorOp::sq2(2, 1), &m).is_zero());
            }
        }
    }

    fn arb_poly(nvars: usize) -> impl Strategy<Value = F2Poly> {
        prop::collection::vec(prop::collection::vec(0u32..4, nvars), 0..4)
            .prop_map(move |ts| F2Poly::from_terms(nvars, ts))
    }

    fn arb_op() -> impl Strategy<Value = MilnorOp> {
        prop::collection::vec(0u32..3, 0..4).prop_map(MilnorOp::new)
    }

    /// Independent Cartan expansion of Sq(R) on a product, summing over all
    /// splittings R = R′ + R″.
    fn cartan_pair(op: &MilnorOp, x: &F2Poly, y: &F2Poly) -> F2Poly {
        let p = op.profile();
        let mut out = F2Poly::zero(x.nvars());
        let mut idx = vec![0u32; p.len()];
        loop {
            let a = MilnorOp::new(idx.clone());
            let b = MilnorOp::new(p.iter().zip(&idx).map(|(r, s)| r - s).collect());
            out.add_assign(&milnor_act(&a, x).mul(&milnor_act(&b, y)));
            let mut k = 0;
            while k < p.len() && idx[k] == p[k] {
                idx[k] = 0;
                k += 1;
            }
            if k == p.len() {
                break;
            }
            idx[k] += 1;
        }
        out
    }

    proptest! {
        #[test]
        fn cartan_both_associations(op in arb_op(), x in arb_poly(2), y in arb_poly(2), z in arb_poly(2)) {
            let left = cartan_pair(&op, &x.mul(&y), &z);
            let right = cartan_pair(&op, &x, &y.mul(&z));
            let direct = milnor_act(&op, &x.mul(&y).mul(&z));
            prop_assert_eq!(&left, &direct);
            prop_assert_eq!(&right, &direct);
        }

        #[test]
        fn sq1_is_derivation(x in arb_poly(2), y in arb_poly(2)) {
            let d = |p: &F2Poly| milnor_act(&MilnorOp::sq(1), p);
            prop_assert_eq!(d(&x.mul(&y)), d(&x).mul(&y).add(&x.mul(&d(&y))));
        }

        #[test]
        fn degree_shift(op in arb_op(), a in 0u32..6, b in 0u32..6) {
            let r = milnor_act(&op, &F2Poly::monomial(vec![a, b]));
            if !r.is_zero() {
                prop_assert_eq!(r.degree(), Some(a + b + op.degree()));
            }
        }
    }
}
