//! TOML presentation files.
//!
//! An object file lists its atoms with degrees and one `[[families]]` table
//! per summand:
//!
//! ```toml
//! key = "R.phi"
//! provenance = "..."
//!
//! [atoms]
//! x0 = [1, 0, 0, 0]
//!
//! [[families]]
//! label = "ring"
//! offset = [0, 0, 0, 0]          # optional
//! prefactor = "1"                # optional; or `prefactors = [...]`
//! gens = [{ name = "x0", domain = "natural" }]
//! relations = ["x0*x1 + x0*x2 + x1*x2"]
//! ```
//!
//! A generator's `expr` defaults to the atom of the same name; an explicit
//! `degree`, if given, is checked against the expression.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::rodegree::RODegree;

use super::{Atoms, Domain, FamilyDef, GradedObject, Monomial, Poly, RingError};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectFile {
    key: String,
    #[serde(default)]
    provenance: String,
    atoms: BTreeMap<String, [i64; 4]>,
    families: Vec<FamilyFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilyFile {
    label: String,
    #[serde(default)]
    offset: [i64; 4],
    #[serde(default)]
    prefactor: Option<String>,
    #[serde(default)]
    prefactors: Vec<String>,
    gens: Vec<GenFile>,
    #[serde(default)]
    relations: Vec<String>,
    #[serde(default)]
    note: Option<String>,
    #[serde(default)]
    ambient_gens: Option<Vec<GenFile>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GenFile {
    name: String,
    domain: Domain,
    #[serde(default)]
    expr: Option<String>,
    #[serde(default)]
    degree: Option<[i64; 4]>,
}

fn toml_err(e: toml::de::Error) -> RingError {
    RingError::Parse(e.to_string())
}

/// Parses an object file, returning the object and its provenance string.
pub fn parse_object(text: &str) -> Result<(GradedObject, String), RingError> {
    let file: ObjectFile = toml::from_str(text).map_err(toml_err)?;
    let atoms = Atoms::new(
        file.atoms
            .into_iter()
            .map(|(n, d)| (n, RODegree::from_array(d)))
            .collect(),
    )?;
    let mut defs = Vec::new();
    for fam in file.families {
        let mut prefactors = fam
            .prefactors
            .iter()
            .map(|s| atoms.parse_monomial(s))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(s) = &fam.prefactor {
            prefactors.insert(0, atoms.parse_monomial(s)?);
        }
        if prefactors.is_empty() {
            prefactors.push(atoms.one());
        }
        let gens = parse_gens(&atoms, &file.key, fam.gens)?;
        let ambient_gens = match fam.ambient_gens {
            Some(a) => Some(parse_gens(&atoms, &file.key, a)?),
            None => None,
        };
        let relations = fam
            .relations
            .iter()
            .map(|r| atoms.parse_poly(r))
            .collect::<Result<Vec<_>, _>>()?;
        defs.push(FamilyDef {
            label: fam.label,
            offset: RODegree::from_array(fam.offset),
            prefactors,
            gens,
            relations,
            note: fam.note,
            ambient_gens,
        });
    }
    let obj = GradedObject::new(&file.key, atoms, defs)?;
    Ok((obj, file.provenance))
}

fn parse_gens(
    atoms: &Atoms,
    key: &str,
    files: Vec<GenFile>,
) -> Result<Vec<(String, Domain, Monomial)>, RingError> {
    let mut gens = Vec::new();
    for g in files {
        let expr = match &g.expr {
            Some(s) => atoms.parse_monomial(s)?,
            None => atoms.atom(&g.name)?,
        };
        if let Some(d) = g.degree {
            let found = atoms.degree(&expr);
            let expected = RODegree::from_array(d);
            if found != expected {
                return Err(RingError::DegreeMismatch {
                    what: format!("generator `{}` of `{key}`", g.name),
                    expected,
                    found,
                });
            }
        }
        gens.push((g.name, g.domain, expr));
    }
    Ok(gens)
}

/// A map file: atom images as polynomial strings in the target's atoms.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapDecl {
    pub key: String,
    pub source: String,
    pub target: String,
    #[serde(default)]
    pub provenance: String,
    #[serde(default)]
    pub zero_families: Vec<String>,
    pub images: BTreeMap<String, String>,
}

pub fn parse_map_decl(text: &str) -> Result<MapDecl, RingError> {
    toml::from_str(text).map_err(toml_err)
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenListEntry {
    pub poly: String,
    pub degree: [i64; 4],
}

/// A list of elements of a target object, each with its stated degree.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenList {
    pub key: String,
    pub target: String,
    #[serde(default)]
    pub provenance: String,
    pub gens: Vec<GenListEntry>,
    #[serde(default)]
    pub relations: Vec<String>,
}

pub fn parse_gen_list(text: &str) -> Result<GenList, RingError> {
    toml::from_str(text).map_err(toml_err)
}

impl GenList {
    /// Parses the generators against `atoms`, checking each stated degree.
    pub fn polys(&self, atoms: &Atoms) -> Result<Vec<Poly>, RingError> {
        self.gens
            .iter()
            .map(|g| {
                let p = atoms.parse_poly(&g.poly)?;
                let expected = RODegree::from_array(g.degree);
                match atoms.homogeneous_degree(&p)? {
                    Some(found) if found != expected => Err(RingError::DegreeMismatch {
                        what: format!("`{}` in `{}`", g.poly, self.key),
                        expected,
                        found,
                    }),
                    _ => Ok(p),
                }
            })
            .collect()
    }
}
