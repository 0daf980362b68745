//! The built-in graded objects, maps and exact-sequence bookkeeping.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::f2linalg::{BitVec, EchelonBasis};
use crate::gradedring::{
    parse_gen_list, parse_map_decl, parse_object, subring_span_dim, GenList, GradedObject,
    Monomial, Poly, RingError, RingMap,
};
use crate::rodegree::RODegree;

pub const OBJECT_SOURCES: &[(&str, &str)] = &[
    (
        "ek4_euler.toml",
        include_str!("../presentations/ek4_euler.toml"),
    ),
    (
        "ek4_tform.toml",
        include_str!("../presentations/ek4_tform.toml"),
    ),
    (
        "efsubk_comh1.toml",
        include_str!("../presentations/efsubk_comh1.toml"),
    ),
    (
        "efsubk_prop2.toml",
        include_str!("../presentations/efsubk_prop2.toml"),
    ),
    ("efk.toml", include_str!("../presentations/efk.toml")),
    ("ec2.toml", include_str!("../presentations/ec2.toml")),
    (
        "ker_delta_u.toml",
        include_str!("../presentations/ker_delta_u.toml"),
    ),
    (
        "coker_delta_u.toml",
        include_str!("../presentations/coker_delta_u.toml"),
    ),
    (
        "qtot_image.toml",
        include_str!("../presentations/qtot_image.toml"),
    ),
    ("r_phi.toml", include_str!("../presentations/r_phi.toml")),
    (
        "geomfix_laurent.toml",
        include_str!("../presentations/geomfix_laurent.toml"),
    ),
];

pub const MAP_SOURCES: &[(&str, &str)] = &[
    ("q_star.toml", include_str!("../presentations/q_star.toml")),
    (
        "euler_to_t.toml",
        include_str!("../presentations/euler_to_t.toml"),
    ),
    ("q_tot.toml", include_str!("../presentations/q_tot.toml")),
    (
        "ker_inclusion.toml",
        include_str!("../presentations/ker_inclusion.toml"),
    ),
    (
        "r_to_laurent.toml",
        include_str!("../presentations/r_to_laurent.toml"),
    ),
];

pub const GEN_LIST_SOURCES: &[(&str, &str)] = &[(
    "pi_star_image.toml",
    include_str!("../presentations/pi_star_image.toml"),
)];

/// Key of the dimension function reconstructed from ker/coker of δ^u.
pub const EP_DERIVED: &str = "EP.derived";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{file}: {source}")]
    Load { file: String, source: RingError },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown catalog key `{0}`")]
    UnknownKey(String),
    #[error("duplicate catalog key `{0}`")]
    Duplicate(String),
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: String,
    pub object: Arc<GradedObject>,
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct MapEntry {
    pub key: String,
    pub map: RingMap,
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub maps: Vec<MapEntry>,
    pub gen_lists: Vec<GenList>,
}

/// Loads the shipped catalog.
pub fn load_catalog() -> Result<Catalog, CatalogError> {
    load_catalog_with(&[])
}

/// Loads the shipped catalog plus extra object presentations given as
/// `(file name, contents)`.
pub fn load_catalog_with(extra: &[(String, String)]) -> Result<Catalog, CatalogError> {
    let text = |v: &[(&str, &str)]| -> Vec<(String, String)> {
        v.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    };
    let mut objects = text(OBJECT_SOURCES);
    objects.extend_from_slice(extra);
    Catalog::from_sources(&objects, &text(MAP_SOURCES), &text(GEN_LIST_SOURCES))
}

impl Catalog {
    /// Builds a catalog from `(file name, contents)` pairs.
    pub fn from_sources(
        objects: &[(String, String)],
        maps: &[(String, String)],
        lists: &[(String, String)],
    ) -> Result<Self, CatalogError> {
        let mut entries: Vec<CatalogEntry> = Vec::new();
        for (file, src) in objects {
            let (object, provenance) = parse_object(src).map_err(|source| CatalogError::Load {
                file: file.clone(),
                source,
            })?;
            let key = object.name.clone();
            if key == EP_DERIVED || entries.iter().any(|e| e.key == key) {
                return Err(CatalogError::Duplicate(key));
            }
            entries.push(CatalogEntry {
                key,
                object: Arc::new(object),
                provenance,
            });
        }
        let mut cat = Catalog {
            entries,
            maps: Vec::new(),
            gen_lists: Vec::new(),
        };
        for (file, src) in maps {
            let load = |source| CatalogError::Load {
                file: file.clone(),
                source,
            };
            let decl = parse_map_decl(src).map_err(load)?;
            let source = cat.object(&decl.source)?.clone();
            let target = cat.object(&decl.target)?.clone();
            let images = decl
                .images
                .iter()
                .map(|(atom, s)| Ok((atom.clone(), target.atoms.parse_poly(s)?)))
                .collect::<Result<Vec<(String, Poly)>, RingError>>()
                .map_err(load)?;
            let map = RingMap::new(&decl.key, source, target, &images, &decl.zero_families)
                .map_err(load)?;
            if cat.maps.iter().any(|m| m.key == decl.key) {
                return Err(CatalogError::Duplicate(decl.key));
            }
            cat.maps.push(MapEntry {
                key: decl.key,
                map,
                provenance: decl.provenance,
            });
        }
        for (file, src) in lists {
            let load = |source| CatalogError::Load {
                file: file.clone(),
                source,
            };
            let list = parse_gen_list(src).map_err(load)?;
            let target = cat.object(&list.target)?.clone();
            list.polys(&target.atoms).map_err(load)?;
            for r in &list.relations {
                let p = target.atoms.parse_poly(r).map_err(load)?;
                target.atoms.homogeneous_degree(&p).map_err(load)?;
            }
            cat.gen_lists.push(list);
        }
        Ok(cat)
    }

    pub fn keys(&self) -> Vec<String> {
        let mut k: Vec<String> = self.entries.iter().map(|e| e.key.clone()).collect();
        k.push(EP_DERIVED.to_string());
        k
    }

    pub fn entry(&self, key: &str) -> Result<&CatalogEntry, CatalogError> {
        self.entries
            .iter()
            .find(|e| e.key == key)
            .ok_or_else(|| CatalogError::UnknownKey(key.to_string()))
    }

    pub fn object(&self, key: &str) -> Result<&Arc<GradedObject>, CatalogError> {
        Ok(&self.entry(key)?.object)
    }

    pub fn map(&self, key: &str) -> Result<&RingMap, CatalogError> {
        self.map_entry(key).map(|m| &m.map)
    }

    pub fn map_entry(&self, key: &str) -> Result<&MapEntry, CatalogError> {
        self.maps
            .iter()
            .find(|m| m.key == key)
            .ok_or_else(|| CatalogError::UnknownKey(key.to_string()))
    }

    pub fn gen_list(&self, key: &str) -> Result<&GenList, CatalogError> {
        self.gen_lists
            .iter()
            .find(|g| g.key == key)
            .ok_or_else(|| CatalogError::UnknownKey(key.to_string()))
    }

    pub fn provenance(&self, key: &str) -> Result<String, CatalogError> {
        if key == EP_DERIVED {
            return Ok(format!(
                "Derived: dim ker_delta_u + dim coker_delta_u in each degree, from the long exact sequence of E_C2 Z/2+ -> EP+ -> EF<K>. {}",
                self.entry("ker_delta_u")?.provenance
            ));
        }
        if let Ok(e) = self.entry(key) {
            return Ok(e.provenance.clone());
        }
        if let Ok(m) = self.map_entry(key) {
            return Ok(m.provenance.clone());
        }
        Ok(self.gen_list(key)?.provenance.clone())
    }

    /// Dimension of a catalog key in degree γ, including `EP.derived`.
    pub fn dim(&self, key: &str, gamma: RODegree) -> Result<usize, CatalogError> {
        if key == EP_DERIVED {
            return ep_derived_dim(self, gamma);
        }
        Ok(self.object(key)?.dim_in_degree(gamma)?)
    }
}

/// Reconstructed dimension of H(EP+) in degree γ.
pub fn ep_derived_dim(cat: &Catalog, gamma: RODegree) -> Result<usize, CatalogError> {
    Ok(cat.object("ker_delta_u")?.dim_in_degree(gamma)?
        + cat.object("coker_delta_u")?.dim_in_degree(gamma)?)
}

/// A rectangular set of degrees, iterated in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeBox {
    pub lo: [i64; 4],
    pub hi: [i64; 4],
}

impl DegreeBox {
    /// All degrees with every coordinate in `-k..=k`.
    pub fn cube(k: i64) -> Self {
        DegreeBox {
            lo: [-k; 4],
            hi: [k; 4],
        }
    }

    pub fn single(g: RODegree) -> Self {
        DegreeBox {
            lo: g.to_array(),
            hi: g.to_array(),
        }
    }

    pub fn degrees(&self) -> Vec<RODegree> {
        let mut out = Vec::new();
        let [l0, l1, l2, l3] = self.lo;
        let [h0, h1, h2, h3] = self.hi;
        for a in l0..=h0 {
            for b in l1..=h1 {
                for c in l2..=h2 {
                    for d in l3..=h3 {
                        out.push(RODegree::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }
}

/// The long exact sequence of a cofibre sequence `X → Y → Z`, recorded via
/// the map `map: H(Y) → H(X)` and the key of `H(Z)`:
/// `dim Z(γ) = ker map(γ) + dim X(γ − shift) − rank map(γ − shift)`.
#[derive(Debug, Clone, Serialize)]
pub struct ExactTriple {
    pub name: String,
    pub left: String,
    pub middle: String,
    pub right: String,
    pub map: String,
    pub shift: RODegree,
}

impl ExactTriple {
    /// `EK4+ → EF(⊆K)+ → EF⟨K⟩`.
    pub fn free_to_subk() -> Self {
        ExactTriple {
            name: "EK4+ -> EF(<=K)+ -> EF<K>".into(),
            left: "EK4.t-form".into(),
            middle: "EF_subK.comh1".into(),
            right: "EF_K".into(),
            map: "q_star".into(),
            shift: RODegree::ONE,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct LesRow {
    pub degree: RODegree,
    pub right_dim: usize,
    pub kernel: usize,
    pub left_dim_shifted: usize,
    pub image_shifted: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LesReport {
    pub triple: ExactTriple,
    pub rows: Vec<LesRow>,
    pub provenance: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DeltaRow {
    pub degree: RODegree,
    pub ec2: usize,
    pub kernel: usize,
    pub efk_next: usize,
    pub coker_next: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DeltaReport {
    pub rows: Vec<DeltaRow>,
    pub provenance: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CompareRow {
    pub degree: RODegree,
    pub first: usize,
    pub second: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareReport {
    pub first: String,
    pub second: String,
    pub rows: Vec<CompareRow>,
    pub provenance: BTreeMap<String, String>,
}

pub trait AuditReport {
    fn failures(&self) -> usize;
    fn total(&self) -> usize;
    fn passed(&self) -> bool {
        self.failures() == 0
    }
}

impl AuditReport for LesReport {
    fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
    fn total(&self) -> usize {
        self.rows.len()
    }
}

impl AuditReport for DeltaReport {
    fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
    fn total(&self) -> usize {
        self.rows.len()
    }
}

impl AuditReport for CompareReport {
    fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.pass).count()
    }
    fn total(&self) -> usize {
        self.rows.len()
    }
}

fn provenance_of(cat: &Catalog, keys: &[&str]) -> Result<BTreeMap<String, String>, CatalogError> {
    keys.iter()
        .map(|k| Ok((k.to_string(), cat.provenance(k)?)))
        .collect()
}

/// Runs `f` on every degree of the box in parallel; rows come back in box
/// order regardless of scheduling.
fn sweep<T, F>(bx: &DegreeBox, f: F) -> Result<Vec<T>, CatalogError>
where
    T: Send,
    F: Fn(RODegree) -> Result<T, CatalogError> + Sync + Send,
{
    bx.degrees().into_par_iter().map(f).collect()
}

pub fn audit_les(
    cat: &Catalog,
    triple: &ExactTriple,
    bx: &DegreeBox,
) -> Result<LesReport, CatalogError> {
    let map = cat.map(&triple.map)?;
    let right = cat.object(&triple.right)?;
    let left = cat.object(&triple.left)?;
    let rows = sweep(bx, |g| {
        let right_dim = right.dim_in_degree(g)?;
        let (kernel, _) = map.map_rank_in_degree(g)?;
        let gs = g - triple.shift;
        let left_dim_shifted = left.dim_in_degree(gs)?;
        let (_, image_shifted) = map.map_rank_in_degree(gs)?;
        Ok(LesRow {
            degree: g,
            right_dim,
            kernel,
            left_dim_shifted,
            image_shifted,
            pass: right_dim + image_shifted == kernel + left_dim_shifted,
        })
    })?;
    Ok(LesReport {
        triple: triple.clone(),
        rows,
        provenance: provenance_of(
            cat,
            &[&triple.left, &triple.middle, &triple.right, &triple.map],
        )?,
    })
}

/// `dim EC2(γ) = dim ker δ^u(γ) + dim EF⟨K⟩(γ+1) − dim coker δ^u(γ+1)`.
pub fn audit_delta_u(cat: &Catalog, bx: &DegreeBox) -> Result<DeltaReport, CatalogError> {
    let ec2 = cat.object("EC2")?;
    let ker = cat.object("ker_delta_u")?;
    let efk = cat.object("EF_K")?;
    let cok = cat.object("coker_delta_u")?;
    let rows = sweep(bx, |g| {
        let next = g + RODegree::ONE;
        let (e, k, f, c) = (
            ec2.dim_in_degree(g)?,
            ker.dim_in_degree(g)?,
            efk.dim_in_degree(next)?,
            cok.dim_in_degree(next)?,
        );
        Ok(DeltaRow {
            degree: g,
            ec2: e,
            kernel: k,
            efk_next: f,
            coker_next: c,
            pass: e + c == k + f,
        })
    })?;
    Ok(DeltaReport {
        rows,
        provenance: provenance_of(cat, &["EC2", "ker_delta_u", "EF_K", "coker_delta_u"])?,
    })
}

/// Degreewise dimension comparison of two catalog objects.
pub fn compare_dims(
    cat: &Catalog,
    first: &str,
    second: &str,
    bx: &DegreeBox,
) -> Result<CompareReport, CatalogError> {
    let rows = sweep(bx, |g| {
        let a = cat.dim(first, g)?;
        let b = cat.dim(second, g)?;
        Ok(CompareRow {
            degree: g,
            first: a,
            second: b,
            pass: a == b,
        })
    })?;
    Ok(CompareReport {
        first: first.into(),
        second: second.into(),
        rows,
        provenance: provenance_of(cat, &[first, second])?,
    })
}

/// The two presentation-equivalence checks: both forms of H(EF(⊆K)+) and
/// both forms of H(EK4+).
pub fn audit_presentations(
    cat: &Catalog,
    bx: &DegreeBox,
) -> Result<Vec<CompareReport>, CatalogError> {
    Ok(vec![
        compare_dims(cat, "EF_subK.comh1", "EF_subK.prop2", bx)?,
        compare_dims(cat, "EK4.euler", "EK4.t-form", bx)?,
    ])
}

/// `R.phi` against the Laurent-Euler-class ring in degrees `(d, 0, 0, 0)`,
/// `0 ≤ d ≤ dmax`, through `x_V ↦ u_V/a_V`: a row passes when the map is
/// injective and onto (`first` = dim R, `second` = rank of the map).
pub fn laurent_vs_r(cat: &Catalog, dmax: i64) -> Result<CompareReport, CatalogError> {
    let map = cat.map("r_to_laurent")?;
    let laurent = cat.object("geomfix.laurent")?;
    let bx = DegreeBox {
        lo: [0; 4],
        hi: [dmax, 0, 0, 0],
    };
    let rows = sweep(&bx, |g| {
        let (kernel, image) = map.map_rank_in_degree(g)?;
        let dim_r = map.source.dim_in_degree(g)?;
        Ok(CompareRow {
            degree: g,
            first: dim_r,
            second: image,
            pass: kernel == 0 && image == laurent.dim_in_degree(g)?,
        })
    })?;
    Ok(CompareReport {
        first: "R.phi".into(),
        second: "geomfix.laurent".into(),
        rows,
        provenance: provenance_of(cat, &["R.phi", "geomfix.laurent", "r_to_laurent"])?,
    })
}

/// Rank of `q_tot` against `qtot.image`, and injectivity of the inclusion
/// of ker δ^u into E_C2 Z/2+, over a box.
pub fn image_checks(cat: &Catalog, bx: &DegreeBox) -> Result<Vec<CompareReport>, CatalogError> {
    let qtot = cat.map("q_tot")?;
    let image = cat.object("qtot.image")?;
    let rows = sweep(bx, |g| {
        let (_, rank) = qtot.map_rank_in_degree(g)?;
        let d = image.dim_in_degree(g)?;
        Ok(CompareRow {
            degree: g,
            first: d,
            second: rank,
            pass: d == rank,
        })
    })?;
    let incl = cat.map("ker_inclusion")?;
    let ker_rows = sweep(bx, |g| {
        let (kernel, image) = incl.map_rank_in_degree(g)?;
        Ok(CompareRow {
            degree: g,
            first: kernel + image,
            second: image,
            pass: kernel == 0,
        })
    })?;
    Ok(vec![
        CompareReport {
            first: "qtot.image".into(),
            second: "rank q_tot".into(),
            rows,
            provenance: provenance_of(cat, &["qtot.image", "q_tot"])?,
        },
        CompareReport {
            first: "ker_delta_u".into(),
            second: "rank ker_inclusion".into(),
            rows: ker_rows,
            provenance: provenance_of(cat, &["ker_delta_u", "ker_inclusion"])?,
        },
    ])
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RelationCheck {
    pub object: String,
    pub family: String,
    pub relation: String,
    pub image: String,
    pub holds: bool,
}

/// Whether `p` vanishes in the quotient `obj` (lies in the relation span
/// of its degree).
fn vanishes_in(obj: &GradedObject, p: &Poly) -> Result<bool, CatalogError> {
    let Some(g) = obj.atoms.homogeneous_degree(p)? else {
        return Ok(true);
    };
    let space = obj.space(g)?;
    let mut ech = EchelonBasis::new(space.len());
    for r in &space.relations {
        ech.insert(r.clone());
    }
    let mut v = BitVec::zeros(space.len());
    for t in p.terms() {
        match space.position(t) {
            Some(i) => v.flip(i),
            None => return Ok(false),
        }
    }
    Ok(ech.contains(&v))
}

/// Checks that a catalog map is well defined: every relation of every
/// source family not sent to zero maps into the target's relations.
pub fn map_respects_relations(
    cat: &Catalog,
    key: &str,
) -> Result<Vec<RelationCheck>, CatalogError> {
    let map = cat.map(key)?;
    let mut out = Vec::new();
    for (fi, fam) in map.source.families.iter().enumerate() {
        if map.is_zero_family(fi) {
            continue;
        }
        for (rel, _) in &fam.relations {
            let img = map.apply_map(rel)?;
            out.push(RelationCheck {
                object: map.source.name.clone(),
                family: fam.label.clone(),
                relation: map.source.atoms.show_poly(rel),
                image: map.target.atoms.show_poly(&img),
                holds: vanishes_in(&map.target, &img)?,
            });
        }
    }
    Ok(out)
}

/// Every relation written in the Euler and orientation classes alone (in
/// any catalog object or generator list) is sent to zero by
/// `a_a0 = t0 u_a0`, `a_a1 = (t0 + t1) u_a1`, `a_b = t1 u_b`.
pub fn euler_coherence(cat: &Catalog) -> Result<Vec<RelationCheck>, CatalogError> {
    let map = cat.map("euler_to_t")?;
    let euler = &map.source;
    let mut rels: Vec<(String, String, String)> = Vec::new();
    for e in &cat.entries {
        if !e
            .object
            .atoms
            .names()
            .iter()
            .all(|n| euler.atoms.index(n).is_some())
        {
            continue;
        }
        for fam in &e.object.families {
            for (rel, _) in &fam.relations {
                rels.push((
                    e.key.clone(),
                    fam.label.clone(),
                    e.object.atoms.show_poly(rel),
                ));
            }
        }
    }
    for l in &cat.gen_lists {
        for r in &l.relations {
            rels.push((l.key.clone(), "relations".into(), r.clone()));
        }
    }
    rels.into_iter()
        .map(|(object, family, relation)| {
            let img = map.apply_map(&euler.atoms.parse_poly(&relation)?)?;
            Ok(RelationCheck {
                object,
                family,
                image: map.target.atoms.show_poly(&img),
                holds: img.is_zero(),
                relation,
            })
        })
        .collect()
}

/// Compares `qtot.image` with the span of products of at most `budget` of
/// its generators inside `EK4.euler`. Rows where the budget did not
/// provably exhaust the products compare a lower bound, so the `second`
/// column never exceeds the true span.
pub fn qtot_span_check(
    cat: &Catalog,
    bx: &DegreeBox,
    budget: usize,
) -> Result<CompareReport, CatalogError> {
    let image = cat.object("qtot.image")?;
    let ambient = cat.object("EK4.euler")?;
    let gens = image.families[0]
        .gens
        .iter()
        .map(|g| {
            let text = image.atoms.show_monomial(&g.expr);
            Ok((
                Poly::monomial(ambient.atoms.parse_monomial(&text)?),
                g.domain,
            ))
        })
        .collect::<Result<Vec<_>, RingError>>()?;
    let rows = sweep(bx, |g| {
        let a = image.dim_in_degree(g)?;
        let (b, _) = subring_span_dim(&gens, ambient, g, budget)?;
        Ok(CompareRow {
            degree: g,
            first: a,
            second: b,
            pass: a == b,
        })
    })?;
    Ok(CompareReport {
        first: "qtot.image".into(),
        second: "products in EK4.euler".into(),
        rows,
        provenance: provenance_of(cat, &["qtot.image", "EK4.euler"])?,
    })
}

/// The generators of `pi_star.image` and the image of each listed relation
/// under `euler_to_t` (zero when the relation holds in EK4.t-form).
pub fn pi_star_relation_images(cat: &Catalog) -> Result<Vec<Poly>, CatalogError> {
    let list = cat.gen_list("pi_star.image")?;
    let map = cat.map("euler_to_t")?;
    let src = cat.object(&list.target)?;
    list.polys(&src.atoms)?;
    list.relations
        .iter()
        .map(|r| Ok(map.apply_map(&src.atoms.parse_poly(r)?)?))
        .collect()
}

/// Points `(x0, x1, x2)` of F2³ on `x0x1 + x0x2 + x1x2 = 0`, sorted.
pub fn f2_points_of_euler() -> Vec<[u8; 3]> {
    let mut out: Vec<[u8; 3]> = (0..8u8)
        .map(|b| [b >> 2 & 1, b >> 1 & 1, b & 1])
        .filter(|[x, y, z]| (x * y + x * z + y * z) % 2 == 0)
        .collect();
    out.sort();
    out
}

/// The monomials `x0^i x2^j` (i+j = d) and `x1^m x2^n` (m ≥ 1, m+n = d) of
/// R.phi in internal degree d.
pub fn remark_basis(r: &GradedObject, d: i64) -> Result<Vec<Monomial>, CatalogError> {
    let mut out = Vec::new();
    for i in 0..=d {
        out.push(r.atoms.parse_monomial(&format!("x0^{i}*x2^{}", d - i))?);
    }
    for m in 1..=d {
        out.push(r.atoms.parse_monomial(&format!("x1^{m}*x2^{}", d - m))?);
    }
    Ok(out)
}

/// Whether the given monomials are linearly independent in the quotient
/// at degree `(d, 0, 0, 0)` and as many as its dimension.
pub fn is_basis_of_quotient(
    obj: &GradedObject,
    gamma: RODegree,
    monos: &[Monomial],
) -> Result<bool, CatalogError> {
    let space = obj.space(gamma)?;
    let mut ech = EchelonBasis::new(space.len());
    for r in &space.relations {
        ech.insert(r.clone());
    }
    for m in monos {
        let Some(i) = space.position(m) else {
            return Ok(false);
        };
        let mut v = BitVec::zeros(space.len());
        v.set(i, true);
        if !ech.insert(v) {
            return Ok(false);
        }
    }
    Ok(monos.len() == space.dim())
}

/// CSV dimension table `c1,cA0,cA1,cB,dim` sorted by degree.
pub fn dimension_csv(cat: &Catalog, key: &str, bx: &DegreeBox) -> Result<String, CatalogError> {
    let dims = sweep(bx, |g| Ok((g, cat.dim(key, g)?)))?;
    let mut out = String::from("c1,cA0,cA1,cB,dim\n");
    for (g, d) in dims {
        let [a, b, c, e] = g.to_array();
        let _ = writeln!(out, "{a},{b},{c},{e},{d}");
    }
    Ok(out)
}
