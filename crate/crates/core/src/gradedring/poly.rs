//! Laurent monomials and F2-polynomials over a named, graded atom table.

use std::collections::BTreeSet;
use std::fmt;

use crate::rodegree::RODegree;

use super::RingError;

/// The named classes an object's monomials are built from, kept sorted by
/// name so that exponent vectors order lexicographically by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atoms {
    names: Vec<String>,
    degrees: Vec<RODegree>,
}

impl Atoms {
    pub fn new(mut atoms: Vec<(String, RODegree)>) -> Result<Self, RingError> {
        atoms.sort();
        for w in atoms.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(RingError::Presentation(format!(
                    "duplicate atom `{}`",
                    w[0].0
                )));
            }
        }
        for (name, _) in &atoms {
            if !is_ident(name) {
                return Err(RingError::Presentation(format!("bad atom name `{name}`")));
            }
        }
        let (names, degrees) = atoms.into_iter().unzip();
        Ok(Atoms { names, degrees })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree_of(&self, i: usize) -> RODegree {
        self.degrees[i]
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn one(&self) -> Monomial {
        Monomial(vec![0; self.len()])
    }

    pub fn atom(&self, name: &str) -> Result<Monomial, RingError> {
        let i = self
            .index(name)
            .ok_or_else(|| RingError::UnknownAtom(name.to_string()))?;
        let mut m = self.one();
        m.0[i] = 1;
        Ok(m)
    }

    pub fn degree(&self, m: &Monomial) -> RODegree {
        m.0.iter()
            .zip(&self.degrees)
            .fold(RODegree::ZERO, |acc, (&e, &d)| acc + e * d)
    }

    /// Parses a product such as `a_a0^2*u_b^-1` or `1`.
    pub fn parse_monomial(&self, s: &str) -> Result<Monomial, RingError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut m = self.one();
        if t == "1" {
            return Ok(m);
        }
        if t.is_empty() {
            return Err(RingError::Parse(format!("empty monomial in `{s}`")));
        }
        for factor in t.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e = e
                        .trim_start_matches(['{', '('])
                        .trim_end_matches(['}', ')']);
                    let e: i64 = e
                        .parse()
                        .map_err(|_| RingError::Parse(format!("bad exponent in `{factor}`")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            if name == "1" {
                continue;
            }
            let i = self
                .index(name)
                .ok_or_else(|| RingError::UnknownAtom(name.to_string()))?;
            m.0[i] += exp;
        }
        Ok(m)
    }

    /// Parses a sum of monomials, e.g. `a_a0*u_a1*u_b + a_a1*u_a0*u_b`.
    /// `0` is the zero polynomial.
    pub fn parse_poly(&self, s: &str) -> Result<Poly, RingError> {
        let t = s.trim();
        if t == "0" {
            return Ok(Poly::zero());
        }
        let mut p = Poly::zero();
        for term in t.split('+') {
            p.add_term(self.parse_monomial(term)?);
        }
        Ok(p)
    }

    pub fn show_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .zip(&self.names)
                .filter(|(e, _)| **e != 0)
                .map(|(&e, n)| {
                    if e == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{e}")
                    }
                })
                .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn show_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        p.terms()
            .map(|m| self.show_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// The common degree of all terms, or `None` for the zero polynomial.
    pub fn homogeneous_degree(&self, p: &Poly) -> Result<Option<RODegree>, RingError> {
        let mut degs = p.terms().map(|m| self.degree(m));
        let Some(d) = degs.next() else {
            return Ok(None);
        };
        if degs.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(RingError::Inhomogeneous(self.show_poly(p)))
        }
    }
}

fn is_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic())
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// A Laurent monomial: one integer exponent per atom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: i64) -> Monomial {
        Monomial(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// An F2-linear combination of Laurent monomials.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly(BTreeSet<Monomial>);

impl Poly {
    pub fn zero() -> Self {
        Poly(BTreeSet::new())
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly(BTreeSet::from([m]))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn add_term(&mut self, m: Monomial) {
        if !self.0.remove(&m) {
            self.0.insert(m);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        Poly(self.0.symmetric_difference(&o.0).cloned().collect())
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.0 {
            for b in &o.0 {
                out.add_term(a.mul(b));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly(self.0.iter().map(|a| a.mul(m)).collect())
    }

    /// Nonnegative powers for any polynomial; negative powers only for a
    /// single monomial.
    pub fn pow(&self, k: i64) -> Option<Poly> {
        if k < 0 {
            let m = self.as_monomial()?;
            return Some(Poly::monomial(m.pow(k)));
        }
        let mut acc = match self.0.iter().next() {
            Some(m) => Poly::monomial(Monomial(vec![0; m.0.len()])),
            None => return Some(Poly::zero()),
        };
        for _ in 0..k {
            acc = acc.mul(self);
        }
        Some(acc)
    }

    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.0.len() == 1 {
            self.0.iter().next()
        } else {
            None
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euler_atoms() -> Atoms {
        let d = RODegree::new;
        Atoms::new(vec![
            ("a_a0".into(), d(0, 1, 0, 0)),
            ("a_a1".into(), d(0, 0, 1, 0)),
            ("a_b".into(), d(0, 0, 0, 1)),
            ("u_a0".into(), d(-1, 1, 0, 0)),
            ("u_a1".into(), d(-1, 0, 1, 0)),
            ("u_b".into(), d(-1, 0, 0, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn parse_and_show() {
        let at = euler_atoms();
        let p = at
            .parse_poly("a_a0*u_a1*u_b + a_a1*u_a0*u_b + a_b*u_a0*u_a1")
            .unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(
            at.homogeneous_degree(&p).unwrap(),
            Some(RODegree::new(-2, 1, 1, 1))
        );
        let m = at.parse_monomial("u_a0^{-2}*u_b").unwrap();
        assert_eq!(at.show_monomial(&m), "u_a0^-2*u_b");
        assert_eq!(at.degree(&m), RODegree::new(1, -2, 0, 1));
        assert!(at.parse_poly("a_a0 + u_a0").is_ok());
        assert!(at
            .homogeneous_degree(&at.parse_poly("a_a0 + u_a0").unwrap())
            .is_err());
        assert!(matches!(
            at.parse_monomial("zz"),
            Err(RingError::UnknownAtom(_))
        ));
    }

    #[test]
    fn char_two_arithmetic() {
        let at = euler_atoms();
        let x = at.parse_poly("a_a0 + a_a1").unwrap();
        let sq = x.pow(2).unwrap();
        assert_eq!(sq, at.parse_poly("a_a0^2 + a_a1^2").unwrap());
        assert!(x.add(&x).is_zero());
        let u = at.parse_poly("u_a0").unwrap();
        assert_eq!(u.pow(-2).unwrap(), at.parse_poly("u_a0^-2").unwrap());
        assert!(x.pow(-1).is_none());
    }
}
