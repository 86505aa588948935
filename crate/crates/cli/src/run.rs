//! Command execution. Every command returns a [`Report`]; only invalid input is an error.

use crate::config::{AlgebraArgs, SetlabArgs};
use duplicial_core::algebra::json::parse_structure;
use duplicial_core::algebra::{check_structure, make_preset, HopfData, PresetId, Structure};
use duplicial_core::coefficients::json::parse_coefficients;
use duplicial_core::coefficients::{check_anti_yd, regular_source, sayd_map, twist_coefficient, LeftCoefficient, RightCoefficient};
use duplicial_core::distlaw::{
    antipode_one_cell, check_distlaw, check_lift, codiagonal_context, inverse_antipode_one_cell, yd_context, LawKind,
};
use duplicial_core::duplicial::{cc_towers, classical_cyclic_object, DuplicialTower, TowerConfig};
use duplicial_core::homology::homology_report_to;
use duplicial_core::linalg::{Field, LinMap};
use duplicial_core::report::CheckReport;
use duplicial_core::settrack::{check_bimonad, search_entwined, BimonadOps};
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Display;
use std::path::Path;
use thiserror::Error;

/// Errors that stop a run before any report exists; all exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Output(String),
}

fn input_err(where_: impl Display, e: impl Display) -> CliError {
    CliError::Input(format!("{where_}: {e}"))
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: Value,
    pub result: Value,
    pub checks: CheckReport,
    pub passed: bool,
    #[serde(skip)]
    pub table: Table,
}

/// Rows for `--format csv`.
#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    fn new(command: &'static str, config: Value, result: Value, checks: CheckReport, table: Table) -> Report {
        let passed = checks.all_passed();
        Report { tool: "duplicial", version: env!("CARGO_PKG_VERSION"), command, config, result, checks, passed, table }
    }
}

fn checks_table(r: &CheckReport) -> Table {
    Table {
        header: vec!["name", "passed", "detail"],
        rows: r
            .entries
            .iter()
            .map(|e| vec![e.name.clone(), e.passed.to_string(), e.witness.clone().unwrap_or_default()])
            .collect(),
    }
}

struct Loaded {
    structure: Structure,
    field: Field,
    source: String,
}

fn load(args: &AlgebraArgs) -> Result<Loaded, CliError> {
    let field = args
        .field
        .as_deref()
        .map(|f| f.parse::<Field>().map_err(|e| input_err("--field", e)))
        .transpose()?;
    match (&args.preset, &args.input) {
        (Some(p), _) => {
            let id: PresetId = p.parse().map_err(|e| input_err("--preset", e))?;
            let field = field.unwrap_or(Field::Rational);
            let structure = make_preset(&id, field).map_err(|e| input_err(format!("preset {p}"), e))?;
            Ok(Loaded { structure, field, source: format!("preset:{p}") })
        }
        (None, Some(path)) => {
            let text = read(path)?;
            let structure = parse_structure(&text, field).map_err(|e| input_err(path.display(), e))?;
            let field = structure.algebra().field();
            Ok(Loaded { structure, field, source: path.display().to_string() })
        }
        (None, None) => Err(CliError::Usage("one of --preset or --input is required".into())),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input_err(path.display(), e))
}

struct Coefficients {
    m: RightCoefficient,
    n: LeftCoefficient,
    /// Checks skipped by `--force`.
    bypassed: CheckReport,
}

fn coefficients(h: &HopfData, choice: &str, force: bool) -> Result<Coefficients, CliError> {
    let trivial = |m| Coefficients { m, n: LeftCoefficient::trivial(h), bypassed: CheckReport::new() };
    match choice {
        "trivial" => Ok(trivial(RightCoefficient::trivial(h))),
        s if s.starts_with("twist:") => {
            let cell = match &s[6..] {
                "antipode" => antipode_one_cell(h),
                "inverse_antipode" => inverse_antipode_one_cell(h),
                other => return Err(CliError::Usage(format!("unknown one-cell `{other}` in --coeff"))),
            }
            .map_err(|e| input_err("--coeff", e))?;
            let m = twist_coefficient(h, &cell, &regular_source(h)).map_err(|e| input_err("--coeff", e))?;
            Ok(trivial(m))
        }
        path => {
            let text = read(Path::new(path))?;
            let (m, n, bypassed) = parse_coefficients(h, &text, force).map_err(|e| input_err(path, e))?;
            Ok(Coefficients { m, n, bypassed })
        }
    }
}

fn config_json(args: &AlgebraArgs, loaded: &Loaded) -> Value {
    json!({
        "source": loaded.source,
        "field": loaded.field.to_string(),
        "coeff": args.coeff,
        "max_degree": args.max_degree,
        "classical": args.classical,
        "force": args.force,
        "format": args.out.format,
        "emit_matrices": args.out.emit_matrices,
    })
}

fn hopf_or_usage<'a>(s: &'a Structure, what: &str) -> Result<&'a HopfData, CliError> {
    s.hopf().map_err(|_| CliError::Usage(format!("{what} needs a Hopf algebra")))
}

pub fn check(args: &AlgebraArgs) -> Result<Report, CliError> {
    let loaded = load(args)?;
    let s = &loaded.structure;
    let mut checks = CheckReport::new();
    checks.extend_prefixed("structure: ", check_structure(s, s.strength()));
    if let Some(b) = s.bialgebra() {
        let ctx = codiagonal_context(b).map_err(|e| input_err("codiagonal law", e))?;
        checks.extend_prefixed("codiagonal lift: ", check_lift(&ctx.adj, &ctx.lift));
        checks.extend_prefixed("codiagonal law: ", check_distlaw(&ctx, LawKind::Comonad));
    }
    if let Structure::Hopf(h) = s {
        let ctx = yd_context(h);
        checks.extend_prefixed("yd lift: ", check_lift(&ctx.adj, &ctx.lift));
        checks.extend_prefixed("yd law: ", check_distlaw(&ctx, LawKind::Comonad));
        checks.extend_prefixed("yd mixed law: ", check_distlaw(&ctx, LawKind::Mixed));
        let cell = antipode_one_cell(h).map_err(|e| input_err("antipode one-cell", e))?;
        checks.extend_prefixed("antipode one-cell: ", cell.check());
    }
    let mut bypassed = CheckReport::new();
    if let Some(choice) = &args.coeff {
        let h = hopf_or_usage(s, "--coeff")?;
        let c = coefficients(h, choice, args.force)?;
        checks.extend_prefixed("M: ", c.m.check(h));
        checks.extend_prefixed("N: ", c.n.check_counit());
        if let Some(f) = sayd_map(h, &c.m, &c.n) {
            checks.push("M stable over N", f.is_identity(), None);
        }
        checks.extend_prefixed("M: ", check_anti_yd(h, &c.m));
        bypassed = c.bypassed;
    }
    let result = json!({
        "name": structure_name(s),
        "strength": s.strength(),
        "dim": s.algebra().dim(),
        "bypassed": bypassed,
    });
    let table = checks_table(&checks);
    Ok(Report::new("check", config_json(args, &loaded), result, checks, table))
}

fn structure_name(s: &Structure) -> String {
    match s.bialgebra() {
        Some(b) => b.name.clone(),
        None => "algebra".to_string(),
    }
}

fn towers(loaded: &Loaded, args: &AlgebraArgs, top: usize) -> Result<Vec<DuplicialTower>, CliError> {
    let s = &loaded.structure;
    if args.classical || !matches!(s, Structure::Hopf(_)) {
        if args.coeff.is_some() {
            return Err(CliError::Usage("--coeff needs a Hopf algebra and the coefficient towers".into()));
        }
        return Ok(vec![classical_cyclic_object(s.algebra(), top)]);
    }
    let h = hopf_or_usage(s, "coefficient towers")?;
    let c = coefficients(h, args.coeff.as_deref().unwrap_or("trivial"), args.force)?;
    let (ct, cs) = cc_towers(h, &c.n, &c.m, &TowerConfig::new(top)).map_err(|e| input_err("towers", e))?;
    Ok(vec![ct, cs])
}

fn matrix_json(m: &LinMap) -> Value {
    let entries: Vec<Value> = m
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().map(move |(j, x)| json!([i, j, x.to_string()])))
        .collect();
    json!({ "rows": m.codomain().dim(), "cols": m.domain().dim(), "entries": entries })
}

fn tower_matrices(t: &DuplicialTower) -> Value {
    let degrees: Vec<Value> = (0..=t.n_max())
        .map(|n| {
            let faces: Vec<Value> = if n == 0 { Vec::new() } else { (0..=n).map(|i| matrix_json(t.face(n, i))).collect() };
            let degs: Vec<Value> = if n < t.n_max() { (0..=n).map(|j| matrix_json(t.degeneracy(n, j))).collect() } else { Vec::new() };
            json!({ "degree": n, "faces": faces, "degeneracies": degs, "t": matrix_json(&t.t[n]) })
        })
        .collect();
    Value::Array(degrees)
}

fn is_cyclic(t: &DuplicialTower) -> bool {
    (0..=t.n_max()).all(|n| t.big_t(n).is_identity())
}

pub fn complex(args: &AlgebraArgs) -> Result<Report, CliError> {
    let loaded = load(args)?;
    let ts = towers(&loaded, args, args.max_degree)?;
    let mut checks = CheckReport::new();
    let mut out = Vec::new();
    let mut table = Table { header: vec!["tower", "degree", "dim"], rows: Vec::new() };
    for t in &ts {
        checks.extend_prefixed(&format!("{}: ", t.name()), t.check());
        let mut v = json!({ "name": t.name(), "dims": t.dims(), "cyclic": is_cyclic(t) });
        if args.out.emit_matrices {
            v["matrices"] = tower_matrices(t);
        }
        out.push(v);
        for (n, d) in t.dims().into_iter().enumerate() {
            table.rows.push(vec![t.name().to_string(), n.to_string(), d.to_string()]);
        }
    }
    Ok(Report::new("complex", config_json(args, &loaded), json!({ "towers": out }), checks, table))
}

pub fn homology(args: &AlgebraArgs) -> Result<Report, CliError> {
    let loaded = load(args)?;
    let n = args.max_degree;
    let ts = towers(&loaded, args, n + 1)?;
    let mut checks = CheckReport::new();
    let mut out = Vec::new();
    let mut table = Table { header: vec!["tower", "degree", "hh", "hc"], rows: Vec::new() };
    for t in &ts {
        let r = homology_report_to(t, n).map_err(|e| CliError::Usage(e.to_string()))?;
        checks.extend_prefixed(&format!("{}: ", t.name()), r.checks.clone());
        for d in 0..=n {
            let hc = r.hc.as_ref().map(|v| v[d].to_string()).unwrap_or_default();
            table.rows.push(vec![t.name().to_string(), d.to_string(), r.hh[d].to_string(), hc]);
        }
        out.push(json!({
            "name": t.name(),
            "hh": r.hh,
            "hc": r.hc,
            "cyclic": r.hc.is_some(),
            "truncation_flagged": r.truncation_flagged,
        }));
    }
    Ok(Report::new("homology", config_json(args, &loaded), json!({ "towers": out }), checks, table))
}

/// Carriers above this size need `--force`.
pub const SETLAB_LIMIT: usize = 3;

pub fn setlab(args: &SetlabArgs) -> Result<Report, CliError> {
    let n = args.search_entwined;
    if !args.force && (n > SETLAB_LIMIT || args.x_size > SETLAB_LIMIT) {
        return Err(CliError::Usage(format!(
            "carrier {n} and alphabet {} exceed {SETLAB_LIMIT}; the enumeration grows like n^(n²), pass --force to run it anyway",
            args.x_size
        )));
    }
    if n > SETLAB_LIMIT {
        eprintln!("warning: enumerating {n}^{} tables", n * n);
    }
    let mut checks = CheckReport::new();
    checks.extend_prefixed("bimonad: ", check_bimonad(args.x_size, args.size_bound, &BimonadOps::default()));
    let search = search_entwined(n, args.witnesses);
    let expected = usize::from(n == 0);
    checks.push(
        format!("entwined structures on {n} elements: {expected}"),
        search.entwined == expected,
        (search.entwined != expected).then(|| format!("found {}", search.entwined)),
    );
    let mut result = serde_json::to_value(&search).map_err(|e| CliError::Output(e.to_string()))?;
    result["bimonad"] = json!({ "x_size": args.x_size, "size_bound": args.size_bound });
    let config = json!({
        "search_entwined": n,
        "x_size": args.x_size,
        "size_bound": args.size_bound,
        "witnesses": args.witnesses,
        "force": args.force,
        "format": args.out.format,
    });
    let mut table = checks_table(&checks);
    for key in ["n", "semigroups", "forests_checked", "entwined", "entwined_displayed"] {
        table.rows.push(vec![key.to_string(), String::new(), result[key].to_string()]);
    }
    Ok(Report::new("setlab", config, result, checks, table))
}
