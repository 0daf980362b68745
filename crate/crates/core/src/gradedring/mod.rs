//! Presentations of RO(K4)-graded F2-modules as sums of monomial families,
//! with degreewise dimension and basis computations.
//!
//! A family is the F2-span of the Laurent monomials
//! `prefactor · Π gen_i^{e_i}` where each exponent ranges over the domain of
//! its generator, shifted in degree by `offset`. A family with several
//! prefactors is the span of the union of the corresponding monomial sets,
//! i.e. the submodule generated by those prefactors. Families may carry
//! homogeneous relations; the degree-γ piece of the quotient is the span of
//! the family monomials of degree γ modulo the products `m · r` for each
//! relation `r` and family monomial `m` of degree `γ − |r|`, where terms of
//! `m · r` outside the family are dropped. For polynomial and Laurent rings
//! this is the usual ideal quotient; for modules over such rings (negative
//! cones, suspended summands) it is the quotient by the submodule generated
//! by the relations.
//!
//! A family may instead name ambient generators. It is then the subspace
//! spanned by its own monomials inside the ambient family's quotient, which
//! is how a subring of a quotient ring (for example one generated by
//! `u^2/v` inside a ring where `v` is invertible) is presented.

mod lattice;
mod map;
mod poly;
mod presentation;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{rank, BitVec, EchelonBasis, F2Matrix};
use crate::rodegree::RODegree;

use lattice::Lattice;
pub use map::{subring_membership, subring_span_dim, Membership, RingMap};
pub use poly::{Atoms, Monomial, Poly};
pub use presentation::{parse_gen_list, parse_map_decl, parse_object, GenList, MapDecl};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("infinite fiber in `{object}` (family `{family}`) at degree {degree}")]
    InfiniteFiber {
        object: String,
        family: String,
        degree: RODegree,
    },
    #[error("degree mismatch for {what}: expected {expected}, found {found}")]
    DegreeMismatch {
        what: String,
        expected: RODegree,
        found: RODegree,
    },
    #[error("inhomogeneous polynomial `{0}`")]
    Inhomogeneous(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("image term `{term}` of degree {degree} lies outside the target")]
    ImageOutsideTarget { term: String, degree: RODegree },
    #[error("`{0}` is used with negative exponents but its image is not a monomial")]
    NonInvertibleImage(String),
    #[error("invalid presentation: {0}")]
    Presentation(String),
}

/// Exponent range of a generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    /// `e ≥ 0`
    Natural,
    /// `e ≥ 1`
    Positive,
    /// `e ∈ Z` (an invertible generator)
    Integer,
}

impl Domain {
    fn lower(self) -> Option<i64> {
        match self {
            Domain::Natural => Some(0),
            Domain::Positive => Some(1),
            Domain::Integer => None,
        }
    }
}

/// A generator of a family: a named Laurent monomial in the object's atoms.
#[derive(Debug, Clone)]
pub struct GenSpec {
    pub name: String,
    pub degree: RODegree,
    pub domain: Domain,
    pub expr: Monomial,
}

#[derive(Debug, Clone)]
pub struct MonomialFamily {
    pub label: String,
    pub offset: RODegree,
    pub prefactors: Vec<Monomial>,
    pub gens: Vec<GenSpec>,
    /// Homogeneous relations with their degrees.
    pub relations: Vec<(Poly, RODegree)>,
    pub note: Option<String>,
    pub ambient: Option<Vec<GenSpec>>,
    lattice: Lattice,
    ambient_lattice: Option<Lattice>,
}

impl MonomialFamily {
    /// Degree of the family member `m` (a monomial already including the
    /// prefactor).
    pub fn degree_of(&self, atoms: &Atoms, m: &Monomial) -> RODegree {
        self.offset + atoms.degree(m)
    }
}

/// Builder input for one family.
#[derive(Debug, Clone)]
pub struct FamilyDef {
    pub label: String,
    pub offset: RODegree,
    pub prefactors: Vec<Monomial>,
    pub gens: Vec<(String, Domain, Monomial)>,
    pub relations: Vec<Poly>,
    pub note: Option<String>,
    pub ambient_gens: Option<Vec<(String, Domain, Monomial)>>,
}

/// A member of a graded object: a monomial of one family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub family: usize,
    pub monomial: Monomial,
}

#[derive(Debug, Clone)]
pub struct GradedObject {
    pub name: String,
    pub atoms: Atoms,
    pub families: Vec<MonomialFamily>,
}

/// The monomials of one family in one degree together with the relation
/// rows (indexed by those monomials). For families with ambient generators
/// `monomials` are the ambient ones and `members` marks the family's own.
#[derive(Debug, Clone)]
pub struct FamilyFiber {
    pub monomials: Vec<Monomial>,
    pub relations: Vec<BitVec>,
    pub members: Vec<usize>,
}

impl FamilyFiber {
    fn is_full(&self) -> bool {
        self.members.len() == self.monomials.len()
    }

    pub fn dim(&self) -> usize {
        let n = self.monomials.len();
        if self.is_full() {
            return n - rank(&F2Matrix::from_bitvecs(self.relations.clone(), n));
        }
        self.surviving_members().len()
    }

    /// Members that are independent modulo the relations, chosen greedily
    /// in monomial order.
    fn surviving_members(&self) -> Vec<usize> {
        let n = self.monomials.len();
        let mut ech = EchelonBasis::new(n);
        for r in &self.relations {
            ech.insert(r.clone());
        }
        self.members
            .iter()
            .copied()
            .filter(|&i| {
                let mut v = BitVec::zeros(n);
                v.set(i, true);
                ech.insert(v)
            })
            .collect()
    }
}

/// The whole degree-γ piece of an object in global coordinates.
#[derive(Debug, Clone)]
pub struct DegreeSpace {
    pub degree: RODegree,
    pub elements: Vec<Element>,
    pub relations: Vec<BitVec>,
    index: HashMap<Monomial, usize>,
}

impl DegreeSpace {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Position of the first element whose monomial is `m`.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn relation_rank(&self) -> usize {
        rank(&F2Matrix::from_bitvecs(self.relations.clone(), self.len()))
    }

    pub fn dim(&self) -> usize {
        self.len() - self.relation_rank()
    }
}

impl GradedObject {
    pub fn new(name: &str, atoms: Atoms, defs: Vec<FamilyDef>) -> Result<Self, RingError> {
        let mut families = Vec::with_capacity(defs.len());
        let mut labels = std::collections::BTreeSet::new();
        for def in defs {
            if !labels.insert(def.label.clone()) {
                return Err(RingError::Presentation(format!(
                    "duplicate family label `{}` in `{name}`",
                    def.label
                )));
            }
            families.push(build_family(name, &atoms, def)?);
        }
        Ok(GradedObject {
            name: name.to_string(),
            atoms,
            families,
        })
    }

    pub fn family_index(&self, label: &str) -> Option<usize> {
        self.families.iter().position(|f| f.label == label)
    }

    fn infinite(&self, f: usize, degree: RODegree) -> RingError {
        RingError::InfiniteFiber {
            object: self.name.clone(),
            family: self.families[f].label.clone(),
            degree,
        }
    }

    /// Distinct monomials of family `f` in degree `gamma`, sorted.
    pub fn family_monomials(&self, f: usize, gamma: RODegree) -> Result<Vec<Monomial>, RingError> {
        let fam = &self.families[f];
        self.solve_monomials(f, &fam.lattice, &fam.gens, gamma)
    }

    fn ambient_monomials(&self, f: usize, gamma: RODegree) -> Result<Vec<Monomial>, RingError> {
        let fam = &self.families[f];
        match (&fam.ambient, &fam.ambient_lattice) {
            (Some(gens), Some(lat)) => self.solve_monomials(f, lat, gens, gamma),
            _ => self.family_monomials(f, gamma),
        }
    }

    fn solve_monomials(
        &self,
        f: usize,
        lattice: &Lattice,
        gens: &[GenSpec],
        gamma: RODegree,
    ) -> Result<Vec<Monomial>, RingError> {
        let fam = &self.families[f];
        let mut out = Vec::new();
        for pre in &fam.prefactors {
            let rhs = gamma - fam.offset - self.atoms.degree(pre);
            let sols = lattice
                .solve(rhs.to_array(), &[])
                .map_err(|_| self.infinite(f, gamma))?;
            out.extend(sols.iter().map(|e| {
                gens.iter()
                    .zip(e)
                    .fold(pre.clone(), |acc, (g, &k)| acc.mul(&g.expr.pow(k)))
            }));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// The family monomials of degree `gamma` as elements.
    pub fn enumerate_monomials(
        &self,
        f: usize,
        gamma: RODegree,
    ) -> Result<Vec<Element>, RingError> {
        Ok(self
            .family_monomials(f, gamma)?
            .into_iter()
            .map(|monomial| Element {
                family: f,
                monomial,
            })
            .collect())
    }

    pub fn family_fiber(&self, f: usize, gamma: RODegree) -> Result<FamilyFiber, RingError> {
        let own = self.family_monomials(f, gamma)?;
        let monomials = if self.families[f].ambient.is_some() {
            self.ambient_monomials(f, gamma)?
        } else {
            own.clone()
        };
        let members = own
            .iter()
            .map(|m| {
                monomials.binary_search(m).map_err(|_| {
                    RingError::Presentation(format!(
                        "monomial {} of family `{}` is not in its ambient family",
                        self.atoms.show_monomial(m),
                        self.families[f].label
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let mut relations = Vec::new();
        if !own.is_empty() {
            for (r, rdeg) in &self.families[f].relations {
                for m in self.ambient_monomials(f, gamma - *rdeg)? {
                    let mut row = BitVec::zeros(monomials.len());
                    for term in r.terms() {
                        if let Ok(i) = monomials.binary_search(&m.mul(term)) {
                            row.flip(i);
                        }
                    }
                    if !row.is_zero() {
                        relations.push(row);
                    }
                }
            }
        }
        Ok(FamilyFiber {
            monomials,
            relations,
            members,
        })
    }

    pub fn dim_in_degree(&self, gamma: RODegree) -> Result<usize, RingError> {
        let mut total = 0;
        for f in 0..self.families.len() {
            total += self.family_fiber(f, gamma)?.dim();
        }
        Ok(total)
    }

    /// Coset representatives of a basis of the degree-γ piece: per family,
    /// the monomials that are not pivots of the reduced relation matrix.
    pub fn basis_in_degree(&self, gamma: RODegree) -> Result<Vec<Element>, RingError> {
        let mut out = Vec::new();
        for f in 0..self.families.len() {
            let fib = self.family_fiber(f, gamma)?;
            if !fib.is_full() {
                for i in fib.surviving_members() {
                    out.push(Element {
                        family: f,
                        monomial: fib.monomials[i].clone(),
                    });
                }
                continue;
            }
            let m = F2Matrix::from_bitvecs(fib.relations.clone(), fib.monomials.len());
            let (_, pivots) = m.rref();
            let mut is_pivot = vec![false; fib.monomials.len()];
            for p in pivots {
                is_pivot[p] = true;
            }
            for (i, mono) in fib.monomials.into_iter().enumerate() {
                if !is_pivot[i] {
                    out.push(Element {
                        family: f,
                        monomial: mono,
                    });
                }
            }
        }
        Ok(out)
    }

    /// All families side by side in degree γ, relation rows included.
    /// Objects with ambient families have no such coordinates.
    pub fn space(&self, gamma: RODegree) -> Result<DegreeSpace, RingError> {
        if let Some(fam) = self.families.iter().find(|f| f.ambient.is_some()) {
            return Err(RingError::Presentation(format!(
                "family `{}` of `{}` is a subspace of an ambient family and has no standalone coordinates",
                fam.label, self.name
            )));
        }
        let mut elements = Vec::new();
        let mut fibers = Vec::new();
        for f in 0..self.families.len() {
            let fib = self.family_fiber(f, gamma)?;
            elements.extend(fib.monomials.iter().map(|m| Element {
                family: f,
                monomial: m.clone(),
            }));
            fibers.push(fib);
        }
        let n = elements.len();
        let mut relations = Vec::new();
        let mut base = 0;
        for fib in &fibers {
            for row in &fib.relations {
                let mut g = BitVec::zeros(n);
                for i in row.ones() {
                    g.set(base + i, true);
                }
                relations.push(g);
            }
            base += fib.monomials.len();
        }
        let mut index = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            index.entry(e.monomial.clone()).or_insert(i);
        }
        Ok(DegreeSpace {
            degree: gamma,
            elements,
            relations,
            index,
        })
    }

    pub fn element_degree(&self, e: &Element) -> RODegree {
        self.families[e.family].degree_of(&self.atoms, &e.monomial)
    }

    pub fn show_element(&self, e: &Element) -> String {
        let off = self.families[e.family].offset;
        let body = self.atoms.show_monomial(&e.monomial);
        if off.is_zero() {
            body
        } else if off == RODegree::ONE {
            format!("S^-1*{body}")
        } else {
            format!("S[{off}]*{body}")
        }
    }

    /// Whether the degree map of every family has finite fibers.
    pub fn all_fibers_finite(&self) -> bool {
        self.families.iter().all(|f| {
            f.lattice.is_bounded() && f.ambient_lattice.as_ref().is_none_or(|l| l.is_bounded())
        })
    }
}

fn build_gens(
    object: &str,
    label: &str,
    atoms: &Atoms,
    defs: Vec<(String, Domain, Monomial)>,
) -> Result<Vec<GenSpec>, RingError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut gens = Vec::new();
    for (name, domain, expr) in defs {
        if !seen.insert(name.clone()) {
            return Err(RingError::Presentation(format!(
                "duplicate generator `{name}` in family `{label}` of `{object}`"
            )));
        }
        if expr.0.len() != atoms.len() {
            return Err(RingError::Presentation(format!(
                "generator `{name}` has wrong arity"
            )));
        }
        gens.push(GenSpec {
            degree: atoms.degree(&expr),
            name,
            domain,
            expr,
        });
    }
    Ok(gens)
}

fn lattice_of(gens: &[GenSpec]) -> Lattice {
    let cols: Vec<[i64; 4]> = gens.iter().map(|g| g.degree.to_array()).collect();
    let lower = gens.iter().map(|g| g.domain.lower()).collect();
    Lattice::new(&cols, lower)
}

fn build_family(object: &str, atoms: &Atoms, def: FamilyDef) -> Result<MonomialFamily, RingError> {
    let gens = build_gens(object, &def.label, atoms, def.gens)?;
    let ambient = match def.ambient_gens {
        Some(a) => Some(build_gens(object, &def.label, atoms, a)?),
        None => None,
    };
    let mut support = vec![false; atoms.len()];
    if def.prefactors.is_empty() {
        return Err(RingError::Presentation(format!(
            "family `{}` of `{object}` has no prefactor",
            def.label
        )));
    }
    let all_gens = gens.iter().chain(ambient.iter().flatten());
    for e in all_gens.map(|g| &g.expr).chain(&def.prefactors) {
        for (i, &x) in e.0.iter().enumerate() {
            support[i] |= x != 0;
        }
    }
    let mut relations = Vec::new();
    for r in def.relations {
        let deg = atoms.homogeneous_degree(&r)?.ok_or_else(|| {
            RingError::Presentation(format!("zero relation in family `{}`", def.label))
        })?;
        for t in r.terms() {
            for (i, &x) in t.0.iter().enumerate() {
                if x != 0 && !support[i] {
                    return Err(RingError::Presentation(format!(
                        "relation `{}` in family `{}` uses `{}`, which is not among its generators",
                        atoms.show_poly(&r),
                        def.label,
                        atoms.names()[i]
                    )));
                }
            }
        }
        relations.push((r, deg));
    }
    Ok(MonomialFamily {
        label: def.label,
        offset: def.offset,
        prefactors: def.prefactors,
        relations,
        note: def.note,
        lattice: lattice_of(&gens),
        ambient_lattice: ambient.as_deref().map(lattice_of),
        ambient,
        gens,
    })
}
