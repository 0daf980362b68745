//! Command-line front end. Exit status: 0 success, 1 audit or check
//! failure, 2 usage or input error.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::catalog::{
    audit_delta_u, audit_les, dimension_csv, f2_points_of_euler, load_catalog, load_catalog_with,
    AuditReport, Catalog, CatalogError, DegreeBox, ExactTriple,
};
use crate::conjugation::{
    check_multiplicativity, conjugation_rhs, conjugation_rhs_c2, conjugation_terms, parse_model,
    purity_certificate, ConjugationError, Group, SpaceModel,
};
use crate::gradedring::RingError;
use crate::maximality::{
    galois_maximal, modules_for, parse_modules, smith_thom, MaximalityError, Status,
};
use crate::rodegree::{DegreeParseError, RODegree};
use crate::steenrod::{milnor_act_truncated, F2Poly, MilnorOp, SteenrodError};

/// Environment variable holding the worker count for degree sweeps.
pub const WORKERS_ENV: &str = "K4COH_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "k4coh", version, about = "RO(K4)-graded cohomology calculator")]
pub struct Cli {
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Worker threads for degree sweeps.
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimension of a catalog object in one degree or over a box.
    Dim(ObjectArgs),
    /// Basis of a catalog object in one degree.
    Basis(ObjectArgs),
    /// Kernel and image of a catalog map in one degree.
    Map {
        #[arg(long = "map")]
        key: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: String,
        /// Also apply the map to this source polynomial.
        #[arg(long)]
        apply: Option<String>,
    },
    /// Rank bookkeeping of EK4+ -> EF(<=K)+ -> EF<K> over a box.
    AuditLes(BoxArgs),
    /// Bookkeeping of the boundary map of E_C2 Z/2+ -> EP+ -> EF<K> over a box.
    AuditDelta(BoxArgs),
    /// F2-points of Spec R.
    Points,
    /// Apply a Milnor basis element to a polynomial.
    Steenrod {
        #[arg(long)]
        op: String,
        #[arg(long)]
        poly: String,
        /// Number of variables, or a comma-separated list of names.
        #[arg(long, default_value = "1")]
        vars: String,
        /// Impose x^k = 0 on every variable.
        #[arg(long)]
        truncate: Option<u32>,
    },
    /// Evaluate and check the conjugation equation on a space model.
    Conjcheck {
        /// Built-in model family: `hp` (K4) or `cp` (C2).
        #[arg(long, conflicts_with = "model_file")]
        model: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        model_file: Option<std::path::PathBuf>,
        /// Highest class degree (in units of the group factor) examined on
        /// untruncated models.
        #[arg(long, default_value_t = 8)]
        max_n: u32,
        #[arg(long)]
        multiplicativity: bool,
        #[arg(long)]
        purity: bool,
    },
    /// Smith–Thom and Galois-maximality from Betti numbers.
    Maximality {
        #[arg(long)]
        betti_x: String,
        #[arg(long)]
        betti_fixed: String,
        #[arg(long)]
        modules: Option<std::path::PathBuf>,
    },
    /// List catalog keys with provenance.
    CatalogList,
}

#[derive(Debug, Args)]
pub struct ObjectArgs {
    #[arg(long)]
    pub object: String,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "box")]
    pub degree: Option<String>,
    /// Sweep all degrees with coordinates in -k..=k instead.
    #[arg(long = "box", id = "box", conflicts_with = "degree")]
    pub cube: Option<i64>,
    /// Extra presentation files (TOML) added to the catalog.
    #[arg(long)]
    pub presentation: Vec<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct BoxArgs {
    #[arg(long = "box", default_value_t = 3)]
    pub cube: i64,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Degree(#[from] DegreeParseError),
    #[error(transparent)]
    Steenrod(#[from] SteenrodError),
    #[error(transparent)]
    Conjugation(#[from] ConjugationError),
    #[error(transparent)]
    Maximality(#[from] MaximalityError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

/// Result of a command: text for stdout and the exit status.
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    if let Some(n) = cli.workers {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let fmt = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        Format::Human
    };
    match execute(&cli.command, fmt) {
        Ok((ok, stdout)) => Outcome {
            status: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let stderr = if fmt == Format::Json {
                json!({ "error": e.to_string() }).to_string() + "\n"
            } else {
                format!("error: {e}\n")
            };
            Outcome {
                status: 2,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

fn read_file(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn catalog_for(a: &ObjectArgs) -> Result<Catalog, CliError> {
    let extra = a
        .presentation
        .iter()
        .map(|p| Ok((p.display().to_string(), read_file(p)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(load_catalog_with(&extra)?)
}

fn parse_degree(s: &str) -> Result<RODegree, CliError> {
    Ok(s.parse::<RODegree>()?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn provenance_map(cat: &Catalog, keys: &[&str]) -> Result<BTreeMap<String, String>, CliError> {
    keys.iter()
        .map(|k| Ok((k.to_string(), cat.provenance(k)?)))
        .collect()
}

fn execute(cmd: &Command, fmt: Format) -> Result<(bool, String), CliError> {
    let mut out = String::new();
    match cmd {
        Command::Dim(a) => {
            let cat = catalog_for(a)?;
            let prov = provenance_map(&cat, &[&a.object])?;
            if let Some(k) = a.cube {
                let bx = DegreeBox::cube(k);
                let csv = dimension_csv(&cat, &a.object, &bx)?;
                match fmt {
                    Format::Json => {
                        let rows: Vec<_> = csv
                            .lines()
                            .skip(1)
                            .map(|l| {
                                let v: Vec<i64> =
                                    l.split(',').map(|x| x.parse().unwrap()).collect();
                                json!({ "degree": [v[0], v[1], v[2], v[3]], "dim": v[4] })
                            })
                            .collect();
                        out = to_json(
                            &json!({ "object": a.object, "rows": rows, "provenance": prov }),
                        );
                    }
                    _ => out = csv,
                }
                return Ok((true, out));
            }
            let g = parse_degree(a.degree.as_deref().unwrap_or_default())?;
            let d = cat.dim(&a.object, g)?;
            match fmt {
                Format::Json => {
                    out = to_json(&json!({
                        "object": a.object, "degree": g, "dim": d, "provenance": prov
                    }))
                }
                Format::Csv => {
                    let [x, y, z, w] = g.to_array();
                    out = format!("c1,cA0,cA1,cB,dim\n{x},{y},{z},{w},{d}\n");
                }
                Format::Human => out = format!("{d}\n"),
            }
        }
        Command::Basis(a) => {
            let cat = catalog_for(a)?;
            let obj = cat.object(&a.object)?;
            let g = parse_degree(
                a.degree
                    .as_deref()
                    .ok_or_else(|| CliError::Usage("basis needs --degree".into()))?,
            )?;
            let names: Vec<String> = obj
                .basis_in_degree(g)?
                .iter()
                .map(|e| obj.show_element(e))
                .collect();
            match fmt {
                Format::Json => {
                    out = to_json(&json!({
                        "object": a.object, "degree": g, "basis": names,
                        "provenance": provenance_map(&cat, &[&a.object])?
                    }))
                }
                Format::Csv => {
                    out.push_str("element\n");
                    for n in &names {
                        let _ = writeln!(out, "\"{n}\"");
                    }
                }
                Format::Human => {
                    for n in &names {
                        let _ = writeln!(out, "{n}");
                    }
                }
            }
        }
        Command::Map { key, degree, apply } => {
            let cat = load_catalog()?;
            let entry = cat.map_entry(key)?;
            let map = &entry.map;
            let g = parse_degree(degree)?;
            let (kernel, image) = map.map_rank_in_degree(g)?;
            let images: Vec<(String, String)> = map
                .source
                .basis_in_degree(g)?
                .iter()
                .map(|e| {
                    Ok((
                        map.source.show_element(e),
                        map.target.atoms.show_poly(&map.apply_element(e)?),
                    ))
                })
                .collect::<Result<_, RingError>>()?;
            let applied = match apply {
                Some(s) => {
                    let p = map.source.atoms.parse_poly(s)?;
                    Some(map.target.atoms.show_poly(&map.apply_map(&p)?))
                }
                None => None,
            };
            let prov = provenance_map(&cat, &[key, &map.source.name, &map.target.name])?;
            match fmt {
                Format::Json => {
                    out = to_json(&json!({
                        "map": key, "degree": g, "kernel": kernel, "image": image,
                        "images": images.iter().map(|(a, b)| json!({"element": a, "image": b})).collect::<Vec<_>>(),
                        "applied": applied, "provenance": prov
                    }))
                }
                Format::Csv => {
                    out.push_str("element,image\n");
                    for (a, b) in &images {
                        let _ = writeln!(out, "\"{a}\",\"{b}\"");
                    }
                }
                Format::Human => {
                    let _ = writeln!(out, "kernel {kernel}, image {image}");
                    for (a, b) in &images {
                        let _ = writeln!(out, "  {a} -> {b}");
                    }
                    if let Some(a) = applied {
                        let _ = writeln!(out, "applied: {a}");
                    }
                }
            }
        }
        Command::AuditLes(b) => {
            let cat = load_catalog()?;
            let r = audit_les(&cat, &ExactTriple::free_to_subk(), &DegreeBox::cube(b.cube))?;
            out = match fmt {
                Format::Json => to_json(&r),
                Format::Csv => {
                    let mut s = String::from(
                        "c1,cA0,cA1,cB,right,kernel,left_shifted,image_shifted,pass\n",
                    );
                    for w in &r.rows {
                        let [x, y, z, v] = w.degree.to_array();
                        let _ = writeln!(
                            s,
                            "{x},{y},{z},{v},{},{},{},{},{}",
                            w.right_dim, w.kernel, w.left_dim_shifted, w.image_shifted, w.pass
                        );
                    }
                    s
                }
                Format::Human => summary(
                    &r,
                    &r.triple.name,
                    r.rows.iter().filter(|w| !w.pass).map(|w| w.degree),
                ),
            };
            return Ok((r.passed(), out));
        }
        Command::AuditDelta(b) => {
            let cat = load_catalog()?;
            let r = audit_delta_u(&cat, &DegreeBox::cube(b.cube))?;
            out = match fmt {
                Format::Json => to_json(&r),
                Format::Csv => {
                    let mut s = String::from("c1,cA0,cA1,cB,ec2,kernel,efk_next,coker_next,pass\n");
                    for w in &r.rows {
                        let [x, y, z, v] = w.degree.to_array();
                        let _ = writeln!(
                            s,
                            "{x},{y},{z},{v},{},{},{},{},{}",
                            w.ec2, w.kernel, w.efk_next, w.coker_next, w.pass
                        );
                    }
                    s
                }
                Format::Human => summary(
                    &r,
                    "delta^u",
                    r.rows.iter().filter(|w| !w.pass).map(|w| w.degree),
                ),
            };
            return Ok((r.passed(), out));
        }
        Command::Points => {
            let pts = f2_points_of_euler();
            out = match fmt {
                Format::Json => to_json(&json!({ "points": pts })),
                _ => {
                    let mut s = if fmt == Format::Csv {
                        "x0,x1,x2\n".to_string()
                    } else {
                        String::new()
                    };
                    for [a, b, c] in pts {
                        let _ = writeln!(s, "{a},{b},{c}");
                    }
                    s
                }
            };
        }
        Command::Steenrod {
            op,
            poly,
            vars,
            truncate,
        } => {
            let op: MilnorOp = op.parse()?;
            let names: Vec<String> = match vars.parse::<usize>() {
                Ok(1) => vec!["t".into()],
                Ok(2) => vec!["t".into(), "t'".into()],
                Ok(n) => (1..=n).map(|i| format!("x{i}")).collect(),
                Err(_) => vars.split(',').map(|s| s.trim().to_string()).collect(),
            };
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let p = F2Poly::parse(poly, &refs)?;
            let r = milnor_act_truncated(&op, &p, &vec![*truncate; refs.len()]);
            let shown = r.show(&refs);
            out = match fmt {
                Format::Json => to_json(
                    &json!({ "op": op.to_string(), "input": p.show(&refs), "result": shown }),
                ),
                Format::Csv => format!("op,result\n{op},\"{shown}\"\n"),
                Format::Human => format!("{shown}\n"),
            };
        }
        Command::Conjcheck {
            model,
            n,
            model_file,
            max_n,
            multiplicativity,
            purity,
        } => {
            let space = match (model.as_deref(), model_file) {
                (_, Some(path)) => parse_model(&read_file(path)?)?,
                (Some("hp") | None, None) => SpaceModel::hp(*n),
                (Some("cp"), None) => SpaceModel::cp(*n),
                (Some(m), None) => {
                    return Err(CliError::Usage(format!("unknown model `{m}` (hp, cp)")))
                }
            };
            let (ok, report) = conjcheck(&space, *max_n, *multiplicativity, *purity)?;
            out = match fmt {
                Format::Json => to_json(&report),
                Format::Csv => {
                    let mut s = String::from("class,rhs,homogeneous,leading\n");
                    for c in &report.classes {
                        let _ = writeln!(
                            s,
                            "\"{}\",\"{}\",{},{}",
                            c.class, c.rhs, c.homogeneous, c.leading
                        );
                    }
                    s
                }
                Format::Human => {
                    let mut s = format!("model {}\n", report.model);
                    for c in &report.classes {
                        let _ = writeln!(s, "Phi({}) = {}", c.class, c.rhs);
                    }
                    if let Some(m) = &report.multiplicativity {
                        let _ = writeln!(s, "multiplicativity: {}/{} pairs", m.passed, m.pairs);
                    }
                    if let Some(p) = &report.purity {
                        let _ = writeln!(s, "purity: {p}");
                    }
                    let _ = writeln!(
                        s,
                        "{}",
                        if ok {
                            "all checks pass"
                        } else {
                            "CHECK FAILED"
                        }
                    );
                    s
                }
            };
            return Ok((ok, out));
        }
        Command::Maximality {
            betti_x,
            betti_fixed,
            modules,
        } => {
            let parse = |s: &str| -> Result<Vec<u64>, CliError> {
                s.split(',')
                    .filter(|x| !x.trim().is_empty())
                    .map(|x| {
                        x.trim()
                            .parse::<u64>()
                            .map_err(|_| CliError::Usage(format!("bad Betti number `{x}`")))
                    })
                    .collect()
            };
            let bx = parse(betti_x)?;
            let bf = parse(betti_fixed)?;
            let given = match modules {
                Some(path) => parse_modules(&read_file(path)?)?,
                None => BTreeMap::new(),
            };
            let st = smith_thom(&bx, &bf);
            let gm = galois_maximal(&bx, &modules_for(&bx, &given)?, &bf)?;
            let ok = st.status != Status::Violated && gm.status != Status::Violated;
            out = match fmt {
                Format::Json => to_json(&json!({ "smith_thom": st, "galois": gm })),
                Format::Csv => format!(
                    "inequality,status,lhs,rhs\nsmith_thom,{:?},{},{}\ngalois,{:?},{},{}\n",
                    st.status, st.lhs, st.rhs, gm.status, gm.lhs, gm.rhs
                ),
                Format::Human => {
                    let mut s = format!(
                        "smith-thom: {:?} ({} vs {})\ngalois:     {:?} ({} vs {})\n",
                        st.status, st.lhs, st.rhs, gm.status, gm.lhs, gm.rhs
                    );
                    if let Some(w) = &gm.warning {
                        let _ = writeln!(s, "warning: {w}");
                    }
                    s
                }
            };
            return Ok((ok, out));
        }
        Command::CatalogList => {
            let cat = load_catalog()?;
            let mut rows: Vec<(String, &str, String)> = Vec::new();
            for k in cat.keys() {
                let p = cat.provenance(&k)?;
                rows.push((k, "object", p));
            }
            for m in &cat.maps {
                rows.push((m.key.clone(), "map", m.provenance.clone()));
            }
            for g in &cat.gen_lists {
                rows.push((g.key.clone(), "generators", g.provenance.clone()));
            }
            out = match fmt {
                Format::Json => to_json(
                    &rows
                        .iter()
                        .map(|(k, kind, p)| json!({ "key": k, "kind": kind, "provenance": p }))
                        .collect::<Vec<_>>(),
                ),
                Format::Csv => {
                    let mut s = String::from("key,kind,provenance\n");
                    for (k, kind, p) in &rows {
                        let _ = writeln!(s, "{k},{kind},\"{}\"", p.replace('"', "\"\""));
                    }
                    s
                }
                Format::Human => {
                    let mut s = String::new();
                    for (k, kind, p) in &rows {
                        let _ = writeln!(s, "{k:<16} {kind:<10} {p}");
                    }
                    s
                }
            };
        }
    }
    Ok((true, out))
}

fn summary<R: AuditReport>(r: &R, name: &str, bad: impl Iterator<Item = RODegree>) -> String {
    let mut s = format!(
        "{name}: {}/{} degrees pass\n",
        r.total() - r.failures(),
        r.total()
    );
    for g in bad.take(20) {
        let _ = writeln!(s, "  fails at {g}");
    }
    if r.failures() > 20 {
        let _ = writeln!(s, "  ...");
    }
    s
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassCheck {
    pub class: String,
    pub rhs: String,
    pub homogeneous: bool,
    pub leading: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct MultiplicativityCheck {
    pub pairs: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjReport {
    pub model: String,
    pub classes: Vec<ClassCheck>,
    pub multiplicativity: Option<MultiplicativityCheck>,
    pub purity: Option<String>,
}

/// Evaluates the conjugation equation on every ambient monomial of degree
/// at most `factor · max_n` (all of them for finite models).
pub fn conjcheck(
    space: &SpaceModel,
    max_n: u32,
    multiplicativity: bool,
    purity: bool,
) -> Result<(bool, ConjReport), CliError> {
    space.validate(space.group.factor() * max_n)?;
    let f = space.group.factor();
    let top = match space.ambient.betti() {
        Some(b) => (b.len() as u32).saturating_sub(1) / f,
        None => max_n,
    };
    let monos: Vec<F2Poly> = (0..=top)
        .flat_map(|n| space.ambient.monomials_in_degree(f * n))
        .map(F2Poly::monomial)
        .collect();
    let mut ok = true;
    let mut classes = Vec::new();
    for x in &monos {
        let n = x.weighted_degree(&space.ambient.degrees).unwrap_or(0) / f;
        let rhs = match space.group {
            Group::K4 => conjugation_rhs(space, x)?,
            Group::C2 => conjugation_rhs_c2(space, x)?,
        };
        let homogeneous =
            rhs.poly.is_zero() || rhs.total_degree(&space.fixed.degrees) == Some(f * n);
        let k = space.kappa(x)?;
        let lead = rhs.fixed_degree_part(&space.fixed.degrees, n);
        let nf = space.fixed.nvars();
        let tv = rhs.t_vars;
        let block = match space.group {
            Group::K4 => {
                let terms = conjugation_terms(space, x)?;
                terms[0].dickson.clone()
            }
            Group::C2 => F2Poly::monomial(vec![n]),
        };
        let want = k
            .embed(nf + tv, 0)
            .mul(&block.embed(nf + tv, nf))
            .truncate(&space.tensor_heights());
        let leading = lead == want;
        ok &= homogeneous && leading;
        classes.push(ClassCheck {
            class: space.ambient.show(x),
            rhs: rhs.show(&space.fixed.names),
            homogeneous,
            leading,
        });
    }
    let multiplicativity = if multiplicativity {
        let mut pairs = 0;
        let mut passed = 0;
        for (i, x) in monos.iter().enumerate() {
            for y in &monos[i..] {
                let d = x.weighted_degree(&space.ambient.degrees).unwrap_or(0)
                    + y.weighted_degree(&space.ambient.degrees).unwrap_or(0);
                if d > f * top {
                    continue;
                }
                pairs += 1;
                if check_multiplicativity(space, x, y)? {
                    passed += 1;
                }
            }
        }
        ok &= pairs == passed;
        Some(MultiplicativityCheck { pairs, passed })
    } else {
        None
    };
    let purity = if purity {
        match (space.group, space.betti()) {
            (Group::K4, Some((bx, bf))) => Some(match purity_certificate(&bx, &bf) {
                Ok(cells) => format!("pure, cells {cells:?}"),
                Err(e) => {
                    ok = false;
                    e.to_string()
                }
            }),
            _ => return Err(CliError::Usage("--purity needs a finite K4 model".into())),
        }
    } else {
        None
    };
    Ok((
        ok,
        ConjReport {
            model: space.name.clone(),
            classes,
            multiplicativity,
            purity,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("k4coh").chain(args.iter().copied()))
    }

    #[test]
    fn dim_examples() {
        let o = run_args(&["dim", "--object", "R.phi", "--degree", "5,0,0,0"]);
        assert_eq!((o.status, o.stdout.as_str()), (0, "11\n"));
        let o = run_args(&["dim", "--object", "EK4.t-form", "--degree", "0,0,0,0"]);
        assert_eq!(o.stdout, "1\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run_args(&["dim", "--object", "nope", "--degree", "0,0,0,0"]).status,
            2
        );
        assert_eq!(
            run_args(&["dim", "--object", "R.phi", "--degree", "1,2"]).status,
            2
        );
        assert_eq!(run_args(&["frobnicate"]).status, 2);
        assert_eq!(
            run_args(&["steenrod", "--op", "Sq[1]", "--poly", "t"]).status,
            2
        );
        assert_eq!(run_args(&["--help"]).status, 0);
    }

    #[test]
    fn points_and_steenrod() {
        let o = run_args(&["points"]);
        assert_eq!(o.stdout.lines().count(), 4);
        let o = run_args(&["steenrod", "--op", "Sq(0,1)", "--poly", "t"]);
        assert_eq!(o.stdout, "t^4\n");
        let o = run_args(&[
            "steenrod",
            "--op",
            "Sq(1)",
            "--poly",
            "c",
            "--vars",
            "c",
            "--truncate",
            "3",
        ]);
        assert_eq!(o.stdout, "c^2\n");
    }

    #[test]
    fn conjcheck_hp() {
        let o = run_args(&[
            "conjcheck",
            "--model",
            "hp",
            "--n",
            "3",
            "--multiplicativity",
            "--purity",
        ]);
        assert_eq!(o.status, 0, "{}", o.stdout);
        assert!(o.stdout.contains("cells [0, 1, 2, 3]"));
    }

    #[test]
    fn maximality_cli() {
        let o = run_args(&[
            "maximality",
            "--betti-x",
            "1,0,0,0,1",
            "--betti-fixed",
            "1,1",
        ]);
        assert_eq!(o.status, 0);
        assert!(o.stdout.contains("Maximal"));
        let o = run_args(&["maximality", "--betti-x", "1", "--betti-fixed", "1,1"]);
        assert_eq!(o.status, 1);
    }
}
