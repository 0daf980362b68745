//! Acceptance suite: one line per criterion.
//!
//! Criterion 5 is a documented, reproducible failure of the shipped δ^u
//! presentations (see README). The process exits nonzero if any other
//! criterion fails, or if criterion 5's failure signature changes.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use k4coh::catalog::{
    audit_delta_u, audit_les, audit_presentations, euler_coherence, f2_points_of_euler,
    image_checks, is_basis_of_quotient, laurent_vs_r, load_catalog, map_respects_relations,
    pi_star_relation_images, qtot_span_check, remark_basis, AuditReport, Catalog, DegreeBox,
    ExactTriple, GEN_LIST_SOURCES, MAP_SOURCES, OBJECT_SOURCES,
};
use k4coh::conjugation::{
    check_multiplicativity, conjugation_rhs, conjugation_rhs_c2, purity_certificate, SpaceModel,
};
use k4coh::maximality::{
    galois_maximal, group_h1, group_hn, modules_for, smith_thom, K4Module, Status,
};
use k4coh::rodegree::RODegree;
use k4coh::steenrod::{
    dickson_p0, dickson_p1, gl2_f2, milnor_act, substitute_linear, F2Poly, MilnorOp,
};
use rayon::prelude::*;

/// Number of degrees in the |coords| ≤ 3 box where the shipped δ^u
/// presentations violate the bookkeeping identity.
const DELTA_U_KNOWN_MISMATCHES: usize = 671;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ok(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn lucas_odd(a: u32, i: u32) -> bool {
    i <= a && a & i == i
}

fn criterion_1(cat: &Catalog) -> Outcome {
    let r = cat.object("R.phi").unwrap();
    let mut bad = Vec::new();
    for d in 0..=12i64 {
        let g = RODegree::new(d, 0, 0, 0);
        let quotient = r.dim_in_degree(g).unwrap();
        let monos = remark_basis(r, d).unwrap();
        let expected = if d == 0 { 1 } else { 2 * d as usize + 1 };
        let basis = is_basis_of_quotient(r, g, &monos).unwrap();
        if quotient != expected || monos.len() != quotient || !basis {
            bad.push(d);
        }
    }
    let laurent = laurent_vs_r(cat, 12).unwrap();
    ok(
        bad.is_empty() && laurent.passed(),
        format!(
            "dim R_d = 2d+1 for d <= 12 by quotient and by monomial basis; Laurent form agrees: {}; bad d: {bad:?}",
            laurent.passed()
        ),
    )
}

fn criterion_2() -> Outcome {
    let p = f2_points_of_euler();
    ok(
        p == vec![[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0]],
        format!("{p:?}"),
    )
}

fn criterion_3(cat: &Catalog, bx: &DegreeBox) -> Outcome {
    let reps = audit_presentations(cat, bx).unwrap();
    let detail: Vec<String> = reps
        .iter()
        .map(|r| {
            format!(
                "{} vs {}: {}/{}",
                r.first,
                r.second,
                r.total() - r.failures(),
                r.total()
            )
        })
        .collect();
    ok(reps.iter().all(|r| r.passed()), detail.join("; "))
}

fn criterion_4(cat: &Catalog, bx: &DegreeBox) -> Outcome {
    let r = audit_les(cat, &ExactTriple::free_to_subk(), bx).unwrap();
    ok(
        r.passed() && r.total() >= 2401,
        format!("{}/{} degrees", r.total() - r.failures(), r.total()),
    )
}

fn criterion_5(cat: &Catalog, bx: &DegreeBox) -> Outcome {
    let r = audit_delta_u(cat, bx).unwrap();
    ok(
        r.passed(),
        format!("{}/{} degrees", r.total() - r.failures(), r.total()),
    )
}

fn criterion_6(cat: &Catalog) -> Outcome {
    let euler = cat.object("EK4.euler").unwrap();
    let map = cat.map("euler_to_t").unwrap();
    let rel = &euler.families[0].relations[0].0;
    let image_zero = map.apply_map(rel).unwrap().is_zero();
    let list = cat.gen_list("pi_star.image").unwrap();
    let gens_ok = list.gens.len() == 9 && list.polys(&euler.atoms).is_ok();
    let rels_zero = pi_star_relation_images(cat)
        .unwrap()
        .iter()
        .all(|p| p.is_zero());
    let copies = euler_coherence(cat).unwrap();
    let copies_ok = copies.iter().all(|c| c.holds);
    ok(
        image_zero && gens_ok && rels_zero && copies_ok,
        format!(
            "Euler relation -> 0: {image_zero}; nine generators of stated degree: {gens_ok}; relation among them -> 0: {rels_zero}; all {} catalog copies -> 0: {copies_ok}",
            copies.len()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut bad = 0;
    for a in 0..=16 {
        for i in 0..=16 {
            let got = milnor_act(&MilnorOp::sq(i), &F2Poly::monomial(vec![a]));
            let want = if lucas_odd(a, i) {
                F2Poly::monomial(vec![a + i])
            } else {
                F2Poly::zero(1)
            };
            bad += usize::from(got != want);
        }
    }
    let t = F2Poly::var(1, 0);
    let sq = |i, p: &F2Poly| milnor_act(&MilnorOp::sq(i), p);
    let q = milnor_act(&MilnorOp::sq2(0, 1), &t);
    let admissible = sq(3, &t).add(&sq(2, &sq(1, &t)));
    let q_ok = q == F2Poly::monomial(vec![4]) && q == admissible;
    ok(
        bad == 0 && q_ok,
        format!("Lucas mismatches: {bad} of 289; Sq(0,1)t = t^4 = (Sq3 + Sq2Sq1)t: {q_ok}"),
    )
}

fn criterion_8() -> Outcome {
    let g = gl2_f2();
    let fixed = g.iter().all(|m| {
        substitute_linear(&dickson_p0(), *m) == dickson_p0()
            && substitute_linear(&dickson_p1(), *m) == dickson_p1()
    });
    ok(g.len() == 6 && fixed, format!("{} group elements", g.len()))
}

/// Independent expansion: `Sq(j,i) c^n` is `c^{n+j+3i}` times the
/// multinomial `n! / (i! j! (n−i−j)!)` mod 2, which is odd iff the binary
/// digits of `i`, `j`, `n−i−j` are disjoint.
fn phi_oracle(space: &SpaceModel, n: u32) -> F2Poly {
    let h = space.tensor_heights();
    let mut out = F2Poly::zero(3);
    for i in 0..=n {
        for j in 0..=n - i {
            let r = n - i - j;
            if i & j != 0 || i & r != 0 || j & r != 0 {
                continue;
            }
            let c = F2Poly::monomial(vec![n + j + 3 * i, 0, 0]);
            let tt = dickson_p1().pow(j).mul(&dickson_p0().pow(r)).embed(3, 1);
            out.add_assign(&c.mul(&tt));
        }
    }
    out.truncate(&h)
}

fn c2_oracle(space: &SpaceModel, n: u32) -> F2Poly {
    let terms = (0..=n)
        .filter(|i| lucas_odd(n, *i))
        .map(|i| vec![n + i, n - i]);
    F2Poly::from_terms(2, terms).truncate(&space.tensor_heights())
}

fn criterion_9() -> Outcome {
    let mut bad = Vec::new();
    let y = |k: u32| F2Poly::monomial(vec![k]);
    for n in 0..=8u32 {
        let hp = SpaceModel::hp(Some(n));
        for k in 0..=n {
            let r = conjugation_rhs(&hp, &y(k)).unwrap();
            let homog = r.total_degree(&[1]) == Some(4 * k);
            let lead = r.fixed_degree_part(&[1], k)
                == F2Poly::monomial(vec![k, 0, 0]).mul(&dickson_p0().pow(k).embed(3, 1));
            if !homog || !lead || r.poly != phi_oracle(&hp, k) {
                bad.push(format!("HP^{n} y^{k}"));
            }
        }
        let cp = SpaceModel::cp(Some(n));
        for k in 0..=n {
            if conjugation_rhs_c2(&cp, &y(k)).unwrap().poly != c2_oracle(&cp, k) {
                bad.push(format!("CP^{n} y^{k}"));
            }
        }
    }
    let inf = SpaceModel::hp(None);
    let mut pairs = 0;
    for a in 0..=8 {
        for b in a..=8 - a {
            pairs += 1;
            if !check_multiplicativity(&inf, &y(a), &y(b)).unwrap() {
                bad.push(format!("Phi(y^{a} y^{b})"));
            }
        }
        if conjugation_rhs(&inf, &y(a)).unwrap().poly != phi_oracle(&inf, a) {
            bad.push(format!("HP^inf y^{a}"));
        }
        let cinf = SpaceModel::cp(None);
        if conjugation_rhs_c2(&cinf, &y(a)).unwrap().poly != c2_oracle(&cinf, a) {
            bad.push(format!("CP^inf y^{a}"));
        }
    }
    ok(
        bad.is_empty(),
        format!("HP^n, n <= 8; {pairs} untruncated product pairs; failures: {bad:?}"),
    )
}

fn criterion_10() -> Outcome {
    let hn: Vec<usize> = (0..=5)
        .map(|n| group_hn(&K4Module::trivial(1), n))
        .collect();
    let h1 = (0..=20).all(|m| group_h1(&K4Module::trivial(m)) == 2 * m);
    let free = group_h1(&K4Module::free());
    ok(
        hn == vec![1, 2, 3, 4, 5, 6] && h1 && free == 0,
        format!("H^n(trivial) = {hn:?}; H^1 = 2m for m <= 20: {h1}; H^1(free) = {free}"),
    )
}

fn criterion_11() -> Outcome {
    let mut bad = Vec::new();
    for n in 0..=8u32 {
        let (bx, bf) = SpaceModel::hp(Some(n)).betti().unwrap();
        let cells = purity_certificate(&bx, &bf);
        let st = smith_thom(&bx, &bf);
        let mods = modules_for(&bx, &Default::default()).unwrap();
        let gm = galois_maximal(&bx, &mods, &bf).unwrap();
        let want: Vec<usize> = (0..=n as usize).collect();
        if cells.as_ref() != Ok(&want)
            || st.status != Status::Maximal
            || gm.status != Status::Maximal
        {
            bad.push(n);
        }
    }
    ok(bad.is_empty(), format!("HP^n, n <= 8; failing n: {bad:?}"))
}

fn sources(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

fn drop_term(rel: &str, k: usize) -> String {
    let terms: Vec<&str> = rel.split('+').map(str::trim).collect();
    let kept: Vec<&str> = terms
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, t)| *t)
        .collect();
    if kept.is_empty() {
        "0".into()
    } else {
        kept.join(" + ")
    }
}

type Sources = Vec<(String, String)>;
/// Label plus mutated object, map and generator-list sources.
type Mutation = (String, Sources, Sources, Sources);

/// Every single-token corruption: each q★ image replaced by 0, removed,
/// or with one atom swapped for another; each relation with one term
/// dropped.
fn mutations() -> Vec<Mutation> {
    let objects = sources(OBJECT_SOURCES);
    let maps = sources(MAP_SOURCES);
    let lists = sources(GEN_LIST_SOURCES);
    let mut out = Vec::new();

    let qi = maps.iter().position(|(f, _)| f == "q_star.toml").unwrap();
    let q: toml::Value = toml::from_str(&maps[qi].1).unwrap();
    let target_atoms: Vec<String> = {
        let t = objects.iter().find(|(f, _)| f == "ek4_tform.toml").unwrap();
        let v: toml::Value = toml::from_str(&t.1).unwrap();
        v["atoms"].as_table().unwrap().keys().cloned().collect()
    };
    let images = q["images"].as_table().unwrap().clone();
    for (atom, img) in &images {
        let img = img.as_str().unwrap();
        let mut variants = vec![
            ("0".to_string(), format!("{atom} -> 0")),
            (String::new(), format!("{atom} removed")),
        ];
        let tokens: Vec<&str> = img
            .split(|c: char| !(c.is_alphanumeric() || c == '_'))
            .filter(|t| target_atoms.iter().any(|a| a == t))
            .collect();
        for tok in tokens.iter().collect::<BTreeSet<_>>() {
            for other in target_atoms.iter().filter(|a| a != tok) {
                let s = replace_token(img, tok, other);
                variants.push((s.clone(), format!("{atom} -> {s}")));
            }
        }
        for (s, name) in variants {
            let mut v = q.clone();
            let tbl = v["images"].as_table_mut().unwrap();
            if s.is_empty() {
                tbl.remove(atom);
            } else {
                tbl.insert(atom.clone(), toml::Value::String(s));
            }
            let mut m = maps.clone();
            m[qi].1 = toml::to_string(&v).unwrap();
            out.push((format!("q_star: {name}"), objects.clone(), m, lists.clone()));
        }
    }

    for (oi, (file, text)) in objects.iter().enumerate() {
        let v: toml::Value = toml::from_str(text).unwrap();
        let fams = v
            .get("families")
            .and_then(|f| f.as_array())
            .cloned()
            .unwrap_or_default();
        for (fi, fam) in fams.iter().enumerate() {
            let rels = fam
                .get("relations")
                .and_then(|r| r.as_array())
                .cloned()
                .unwrap_or_default();
            for (ri, rel) in rels.iter().enumerate() {
                let rel = rel.as_str().unwrap();
                for k in 0..rel.split('+').count() {
                    let mut w = v.clone();
                    w["families"][fi]["relations"][ri] = toml::Value::String(drop_term(rel, k));
                    let mut o = objects.clone();
                    o[oi].1 = toml::to_string(&w).unwrap();
                    out.push((
                        format!("{file} family {fi} relation {ri}: drop term {k}"),
                        o,
                        maps.clone(),
                        lists.clone(),
                    ));
                }
            }
        }
    }

    for (li, (file, text)) in lists.iter().enumerate() {
        let v: toml::Value = toml::from_str(text).unwrap();
        let rels = v["relations"].as_array().cloned().unwrap_or_default();
        for (ri, rel) in rels.iter().enumerate() {
            let rel = rel.as_str().unwrap();
            for k in 0..rel.split('+').count() {
                let mut w = v.clone();
                w["relations"][ri] = toml::Value::String(drop_term(rel, k));
                let mut l = lists.clone();
                l[li].1 = toml::to_string(&w).unwrap();
                out.push((
                    format!("{file} relation {ri}: drop term {k}"),
                    objects.clone(),
                    maps.clone(),
                    l,
                ));
            }
        }
    }
    out
}

fn replace_token(s: &str, tok: &str, with: &str) -> String {
    let mut out = String::new();
    let mut cur = String::new();
    for c in s.chars().chain(std::iter::once('\0')) {
        if c.is_alphanumeric() || c == '_' {
            cur.push(c);
        } else {
            out.push_str(if cur == tok { with } else { &cur });
            cur.clear();
            if c != '\0' {
                out.push(c);
            }
        }
    }
    out
}

/// Which check notices the corrupted catalog, if any.
fn detect(cat: &Catalog, bx: &DegreeBox, baseline_delta: &[bool]) -> Option<String> {
    let degrees = bx.degrees();
    let dims_differ = |a: &str, b: &str| {
        degrees
            .par_iter()
            .any(|g| cat.dim(a, *g).ok() != cat.dim(b, *g).ok())
    };
    if dims_differ("EF_subK.comh1", "EF_subK.prop2") || dims_differ("EK4.euler", "EK4.t-form") {
        return Some("criterion 3".into());
    }
    let triple = ExactTriple::free_to_subk();
    if degrees
        .par_iter()
        .any(|g| audit_les(cat, &triple, &DegreeBox::single(*g)).map_or(true, |r| !r.passed()))
    {
        return Some("criterion 4".into());
    }
    if degrees.par_iter().zip(baseline_delta).any(|(g, base)| {
        audit_delta_u(cat, &DegreeBox::single(*g)).map_or(true, |r| r.passed() != *base)
    }) {
        return Some("criterion 5 mismatch set".into());
    }
    for m in &cat.maps {
        if !map_respects_relations(cat, &m.key).is_ok_and(|v| v.iter().all(|c| c.holds)) {
            return Some(format!("map {} not well defined", m.key));
        }
    }
    if !criterion_1(cat).pass {
        return Some("criterion 1".into());
    }
    if !criterion_6(cat).pass {
        return Some("criterion 6".into());
    }
    if !image_checks(cat, &DegreeBox::cube(2)).is_ok_and(|v| v.iter().all(|r| r.passed())) {
        return Some("image of q_tot / kernel inclusion".into());
    }
    if !qtot_span_check(cat, &DegreeBox::cube(2), 10).is_ok_and(|r| r.passed()) {
        return Some("qtot.image span".into());
    }
    None
}

fn criterion_12(cat: &Catalog, bx: &DegreeBox) -> Outcome {
    let baseline: Vec<bool> = audit_delta_u(cat, bx)
        .unwrap()
        .rows
        .iter()
        .map(|r| r.pass)
        .collect();
    let muts = mutations();
    let mut missed = Vec::new();
    let mut by_construction = 0;
    let mut by_check: std::collections::BTreeMap<String, usize> = Default::default();
    for (name, o, m, l) in &muts {
        match Catalog::from_sources(o, m, l) {
            Err(_) => by_construction += 1,
            Ok(c) => match detect(&c, bx, &baseline) {
                Some(why) => *by_check.entry(why).or_default() += 1,
                None => missed.push(name.clone()),
            },
        }
    }
    ok(
        missed.is_empty() && !muts.is_empty(),
        format!(
            "{} mutations, {} rejected at load, caught by {:?}, {} undetected {:?}",
            muts.len(),
            by_construction,
            by_check,
            missed.len(),
            missed
        ),
    )
}

fn main() {
    let cat = load_catalog().expect("catalog loads");
    let bx = DegreeBox::cube(3);
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let checks: Vec<(u32, &str, Check)> = vec![
        (
            1,
            "geometric fixed-point ring",
            Box::new(|| criterion_1(&cat)),
        ),
        (2, "F2-points", Box::new(criterion_2)),
        (
            3,
            "presentation equivalence",
            Box::new(|| criterion_3(&cat, &bx)),
        ),
        (
            4,
            "LES audit EK4+ -> EF(<=K)+ -> EF<K>",
            Box::new(|| criterion_4(&cat, &bx)),
        ),
        (
            5,
            "delta^u bookkeeping",
            Box::new(|| criterion_5(&cat, &bx)),
        ),
        (
            6,
            "Euler-relation coherence",
            Box::new(|| criterion_6(&cat)),
        ),
        (7, "Steenrod oracle", Box::new(criterion_7)),
        (8, "Dickson invariance", Box::new(criterion_8)),
        (9, "conjugation equation", Box::new(criterion_9)),
        (10, "group cohomology", Box::new(criterion_10)),
        (11, "maximality chain", Box::new(criterion_11)),
        (
            12,
            "negative controls",
            Box::new(|| criterion_12(&cat, &bx)),
        ),
    ];
    let mut unexpected = Vec::new();
    let mut total = Duration::ZERO;
    for (n, name, f) in &checks {
        let start = Instant::now();
        let o = f();
        let el = start.elapsed();
        total += el;
        println!(
            "criterion {n:>2} {:<4} {name} [{:.2?}] {}",
            if o.pass { "PASS" } else { "FAIL" },
            el,
            o.detail
        );
        if *n == 5 {
            let sig = format!("{}/2401", 2401 - DELTA_U_KNOWN_MISMATCHES);
            if !o.detail.starts_with(&sig) {
                unexpected.push(format!("criterion 5 signature changed: {}", o.detail));
            }
        } else if !o.pass {
            unexpected.push(format!("criterion {n}"));
        }
    }
    println!("total {total:.2?}");
    println!("known failure: criterion 5 ({DELTA_U_KNOWN_MISMATCHES} degrees, see README)");
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance results: {unexpected:?}");
        std::process::exit(1);
    }
}
