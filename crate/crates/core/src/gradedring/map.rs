//! Graded ring maps between presentations, and membership in subrings
//! generated by finitely many elements.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::f2linalg::{BitVec, EchelonBasis};
use crate::rodegree::RODegree;

use super::lattice::Lattice;
use super::{DegreeSpace, Domain, Element, GradedObject, Monomial, Poly, RingError};

/// A degree-preserving map given by images of the source atoms. Families
/// listed in `zero_families` are sent to zero as a whole.
#[derive(Debug, Clone)]
pub struct RingMap {
    pub name: String,
    pub source: Arc<GradedObject>,
    pub target: Arc<GradedObject>,
    images: Vec<Option<Poly>>,
    zero_families: BTreeSet<usize>,
}

impl RingMap {
    pub fn new(
        name: &str,
        source: Arc<GradedObject>,
        target: Arc<GradedObject>,
        images: &[(String, Poly)],
        zero_families: &[String],
    ) -> Result<Self, RingError> {
        let mut table: Vec<Option<Poly>> = vec![None; source.atoms.len()];
        for (atom, img) in images {
            let i = source
                .atoms
                .index(atom)
                .ok_or_else(|| RingError::UnknownAtom(atom.clone()))?;
            let expected = source.atoms.degree_of(i);
            if let Some(found) = target.atoms.homogeneous_degree(img)? {
                if found != expected {
                    return Err(RingError::DegreeMismatch {
                        what: format!("image of `{atom}` under `{name}`"),
                        expected,
                        found,
                    });
                }
            }
            table[i] = Some(img.clone());
        }
        let mut zero = BTreeSet::new();
        for label in zero_families {
            let f = source.family_index(label).ok_or_else(|| {
                RingError::Presentation(format!("no family `{label}` in `{}`", source.name))
            })?;
            zero.insert(f);
        }
        for (f, fam) in source.families.iter().enumerate() {
            if zero.contains(&f) {
                continue;
            }
            #[allow(clippy::needless_range_loop)]
            for i in 0..source.atoms.len() {
                let mut used = fam.prefactors.iter().any(|p| p.0[i] != 0);
                let mut negative = fam.prefactors.iter().any(|p| p.0[i] < 0);
                for g in &fam.gens {
                    let e = g.expr.0[i];
                    used |= e != 0;
                    negative |= e < 0 || (e != 0 && g.domain == Domain::Integer);
                }
                let atom = &source.atoms.names()[i];
                match (&table[i], used) {
                    (None, true) => {
                        return Err(RingError::Presentation(format!(
                            "`{atom}` has no image under `{name}`"
                        )))
                    }
                    (Some(p), true) if negative && p.as_monomial().is_none() => {
                        return Err(RingError::NonInvertibleImage(atom.clone()))
                    }
                    _ => {}
                }
            }
        }
        Ok(RingMap {
            name: name.to_string(),
            source,
            target,
            images: table,
            zero_families: zero,
        })
    }

    /// The map that sends everything to zero.
    pub fn zero(name: &str, source: Arc<GradedObject>, target: Arc<GradedObject>) -> Self {
        let all = (0..source.families.len()).collect();
        RingMap {
            name: name.to_string(),
            images: vec![None; source.atoms.len()],
            source,
            target,
            zero_families: all,
        }
    }

    pub fn is_zero_family(&self, f: usize) -> bool {
        self.zero_families.contains(&f)
    }

    pub fn image_of_atom(&self, atom: &str) -> Option<&Poly> {
        self.source
            .atoms
            .index(atom)
            .and_then(|i| self.images[i].as_ref())
    }

    /// Substitutes atom images into a source monomial.
    pub fn apply_monomial(&self, m: &Monomial) -> Result<Poly, RingError> {
        let mut acc = Poly::monomial(self.target.atoms.one());
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = &self.source.atoms.names()[i];
            let img = self.images[i]
                .as_ref()
                .ok_or_else(|| RingError::Presentation(format!("`{name}` has no image")))?;
            let p = img
                .pow(e)
                .ok_or_else(|| RingError::NonInvertibleImage(name.clone()))?;
            acc = acc.mul(&p);
        }
        Ok(acc)
    }

    /// Applies the map to a polynomial in the source atoms.
    pub fn apply_map(&self, p: &Poly) -> Result<Poly, RingError> {
        let mut out = Poly::zero();
        for t in p.terms() {
            out = out.add(&self.apply_monomial(t)?);
        }
        Ok(out)
    }

    pub fn apply_element(&self, e: &Element) -> Result<Poly, RingError> {
        if self.zero_families.contains(&e.family) {
            return Ok(Poly::zero());
        }
        self.apply_monomial(&e.monomial)
    }

    fn coords(&self, space: &DegreeSpace, p: &Poly) -> Result<BitVec, RingError> {
        let mut v = BitVec::zeros(space.len());
        for t in p.terms() {
            let i = space
                .position(t)
                .ok_or_else(|| RingError::ImageOutsideTarget {
                    term: self.target.atoms.show_monomial(t),
                    degree: space.degree,
                })?;
            v.flip(i);
        }
        Ok(v)
    }

    /// `(kernel dimension, image dimension)` of the map in degree γ.
    pub fn map_rank_in_degree(&self, gamma: RODegree) -> Result<(usize, usize), RingError> {
        let basis = self.source.basis_in_degree(gamma)?;
        if basis.is_empty() {
            return Ok((0, 0));
        }
        let space = self.target.space(gamma)?;
        let mut ech = EchelonBasis::new(space.len());
        for r in &space.relations {
            ech.insert(r.clone());
        }
        let base = ech.rank();
        for e in &basis {
            let img = self.apply_element(e)?;
            ech.insert(self.coords(&space, &img)?);
        }
        let image = ech.rank() - base;
        Ok((basis.len() - image, image))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

struct ProductSpan {
    ech: EchelonBasis,
    base: usize,
    space: DegreeSpace,
    saturated: bool,
}

/// Products of the generators in degree γ with total length at most
/// `budget`, reduced modulo the target's relations. Invertible generators
/// count once per factor of either sign.
fn product_span(
    gens: &[(Poly, Domain)],
    target: &GradedObject,
    gamma: RODegree,
    budget: usize,
) -> Result<ProductSpan, RingError> {
    let mut cols = Vec::new();
    let mut lower = Vec::new();
    let mut factors: Vec<Poly> = Vec::new();
    for (p, dom) in gens {
        let d = target
            .atoms
            .homogeneous_degree(p)?
            .ok_or_else(|| RingError::Presentation("zero generator".into()))?;
        cols.push(d.to_array());
        lower.push(Some(if *dom == Domain::Positive { 1 } else { 0 }));
        factors.push(p.clone());
        if *dom == Domain::Integer {
            let inv = p
                .pow(-1)
                .ok_or_else(|| RingError::NonInvertibleImage(target.atoms.show_poly(p)))?;
            cols.push((-d).to_array());
            lower.push(Some(0));
            factors.push(inv);
        }
    }
    let lat = Lattice::new(&cols, lower);
    let ones = vec![1i64; cols.len()];
    let budget = budget as i64;
    let (sols, saturated) = if lat.is_bounded() {
        let all = lat
            .solve(gamma.to_array(), &[])
            .map_err(|_| infinite(target, gamma))?;
        let sat = all.iter().all(|e| e.iter().sum::<i64>() <= budget);
        let kept = all
            .into_iter()
            .filter(|e| e.iter().sum::<i64>() <= budget)
            .collect();
        (kept, sat)
    } else {
        let sols = lat
            .solve(gamma.to_array(), &[(ones, budget)])
            .map_err(|_| infinite(target, gamma))?;
        (sols, false)
    };
    let space = target.space(gamma)?;
    let mut ech = EchelonBasis::new(space.len());
    for r in &space.relations {
        ech.insert(r.clone());
    }
    let base = ech.rank();
    for e in sols {
        let mut prod = Poly::monomial(target.atoms.one());
        for (f, &k) in factors.iter().zip(&e) {
            if k > 0 {
                prod = prod.mul(&f.pow(k).expect("nonnegative power"));
            }
        }
        let mut v = BitVec::zeros(space.len());
        for t in prod.terms() {
            let i = space
                .position(t)
                .ok_or_else(|| RingError::ImageOutsideTarget {
                    term: target.atoms.show_monomial(t),
                    degree: gamma,
                })?;
            v.flip(i);
        }
        ech.insert(v);
    }
    Ok(ProductSpan {
        ech,
        base,
        space,
        saturated,
    })
}

fn infinite(target: &GradedObject, degree: RODegree) -> RingError {
    RingError::InfiniteFiber {
        object: format!("subring of {}", target.name),
        family: "products".into(),
        degree,
    }
}

/// Decides whether `p` lies in the subring of `target` generated by `gens`,
/// looking at products of at most `budget` generators.
pub fn subring_membership(
    gens: &[Poly],
    target: &GradedObject,
    p: &Poly,
    budget: usize,
) -> Result<Membership, RingError> {
    let Some(gamma) = target.atoms.homogeneous_degree(p)? else {
        return Ok(Membership::Yes);
    };
    let g: Vec<(Poly, Domain)> = gens.iter().map(|x| (x.clone(), Domain::Natural)).collect();
    let span = product_span(&g, target, gamma, budget)?;
    let mut v = BitVec::zeros(span.space.len());
    for t in p.terms() {
        match span.space.position(t) {
            Some(i) => v.flip(i),
            None => {
                return Err(RingError::ImageOutsideTarget {
                    term: target.atoms.show_monomial(t),
                    degree: gamma,
                })
            }
        }
    }
    Ok(if span.ech.contains(&v) {
        Membership::Yes
    } else if span.saturated {
        Membership::No
    } else {
        Membership::Unknown
    })
}

/// Dimension of the degree-γ part of the subring generated by `gens`
/// (modulo the target's relations), and whether the budget saturated it.
pub fn subring_span_dim(
    gens: &[(Poly, Domain)],
    target: &GradedObject,
    gamma: RODegree,
    budget: usize,
) -> Result<(usize, bool), RingError> {
    let span = product_span(gens, target, gamma, budget)?;
    Ok((span.ech.rank() - span.base, span.saturated))
}
