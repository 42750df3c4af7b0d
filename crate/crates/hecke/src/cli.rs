//! Command-line front end: `verify`, `predict` and `enumerate-image`.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::gf::{make_field, Fel, FieldCtx, GfError};
use crate::hoefsmit::{build_rep_b, HeckeError, HeckeParams, Rep};
use crate::images::{
    classify_field_case, derived_subgroup_order, find_params_b, find_params_d, predict_image_b,
    predict_image_d, transversal_b, transversal_d, GroupLabel, ImagesError, DEFAULT_CAP,
};
use crate::report::{envelope, to_pretty, verify_json, IMAGE_NOTE};
use crate::suites::{default_suites, run_suite, Setting, Suite, SuiteError, SuiteResult};
use crate::typed::{build_rep_d, DParams};

/// `println!` that ignores a closed stdout.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("enumeration exceeded the cap of {0} elements")]
    Overflow(usize),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Overflow(_) => EXIT_OVERFLOW,
            _ => EXIT_CONFIG,
        }
    }
}

impl From<GfError> for CliError {
    fn from(e: GfError) -> CliError {
        CliError::Config(e.to_string())
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> CliError {
        CliError::Config(e.to_string())
    }
}

impl From<ImagesError> for CliError {
    fn from(e: ImagesError) -> CliError {
        match e {
            ImagesError::Overflow(c) => CliError::Overflow(c),
            e => CliError::Config(e.to_string()),
        }
    }
}

impl From<SuiteError> for CliError {
    fn from(e: SuiteError) -> CliError {
        match e {
            SuiteError::Images(e) => e.into(),
            e => CliError::Config(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum Kind {
    A,
    B,
    D,
}

#[derive(Debug, Parser)]
#[command(name = "hecke", version, about = "Hecke algebra representations over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification suites and report pass or fail.
    Verify(Opts),
    /// Print the predicted image of the derived subgroup for each class.
    Predict(Opts),
    /// Enumerate the derived-subgroup images and compare orders with the prediction.
    EnumerateImage(Opts),
}

#[derive(Debug, Clone, clap::Args)]
pub struct Opts {
    /// Algebra type.
    #[arg(long = "type", value_enum, ignore_case = true, default_value = "B")]
    pub kind: Kind,
    /// Rank.
    #[arg(long)]
    pub n: usize,
    /// Characteristic.
    #[arg(long)]
    pub p: Option<u64>,
    /// Multiplicative order of `α`; fixes the field as the smallest one containing it.
    #[arg(long)]
    pub alpha_order: Option<u64>,
    /// `β` as an integer, `order:k`, or `coeffs:c0,c1,..` in the field basis.
    #[arg(long)]
    pub beta_spec: Option<String>,
    /// Field case to search parameters for (type D: 1 split, 2 unitary).
    #[arg(long)]
    pub case: Option<u8>,
    /// Suites to run (comma separated); all applicable ones by default.
    #[arg(long = "suite", value_delimiter = ',')]
    pub suites: Vec<String>,
    /// Bound on enumerated group elements.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Seed for sampled words.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetaSpec {
    Int(i64),
    Order(u64),
    Coeffs(Vec<u64>),
}

pub fn parse_beta_spec(s: &str) -> Result<BetaSpec, CliError> {
    let bad = || CliError::Config(format!("bad --beta-spec {s:?}"));
    if let Some(k) = s.strip_prefix("order:") {
        return k.trim().parse().map(BetaSpec::Order).map_err(|_| bad());
    }
    if let Some(c) = s.strip_prefix("coeffs:") {
        return c
            .split(',')
            .map(|x| x.trim().parse::<u64>())
            .collect::<Result<Vec<_>, _>>()
            .map(BetaSpec::Coeffs)
            .map_err(|_| bad());
    }
    s.trim().parse().map(BetaSpec::Int).map_err(|_| bad())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Degree of the smallest extension of `F_p` with an element of order `k`.
fn degree_for_order(p: u64, k: u64) -> Result<u32, CliError> {
    if k == 0 || gcd(p, k) != 1 {
        return Err(CliError::Config(format!("no element of order {k} in characteristic {p}")));
    }
    let mut x = p % k;
    let mut d = 1;
    while x != 1 % k {
        x = (x as u128 * p as u128 % k as u128) as u64;
        d += 1;
        if d > 64 {
            return Err(CliError::Config(format!("order {k} needs too large a field")));
        }
    }
    Ok(d)
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn explicit_field(o: &Opts, p: u64, alpha_order: u64) -> Result<(FieldCtx, Fel, Option<BetaSpec>), CliError> {
    let spec = o.beta_spec.as_deref().map(parse_beta_spec).transpose()?;
    let mut d = degree_for_order(p, alpha_order)?;
    if let Some(BetaSpec::Order(k)) = spec {
        let e = degree_for_order(p, k)?;
        d = d * e / gcd(d as u64, e as u64) as u32;
    }
    let f = make_field(p, d)?;
    let alpha = f.find_element_of_order(alpha_order)?;
    Ok((f, alpha, spec))
}

fn beta_from_spec(f: &FieldCtx, spec: &BetaSpec) -> Result<Fel, CliError> {
    Ok(match spec {
        BetaSpec::Int(k) => f.from_int(*k),
        BetaSpec::Order(k) => f.find_element_of_order(*k)?,
        BetaSpec::Coeffs(c) => {
            if c.len() > f.d() as usize {
                return Err(config(format!("{} coefficients for a field of degree {}", c.len(), f.d())));
            }
            let mut c = c.clone();
            c.resize(f.d() as usize, 0);
            f.from_coeffs(&c)?
        }
    })
}

/// Turn options into a setting, searching for parameters when only `--case` is given.
pub fn resolve(o: &Opts) -> Result<Setting, CliError> {
    if o.kind == Kind::D {
        return resolve_d(o);
    }
    if o.n < 2 {
        return Err(config("type A and B need --n at least 2"));
    }
    let params = match (o.alpha_order, o.case) {
        (Some(ao), _) => {
            let p = o.p.ok_or_else(|| config("--alpha-order needs --p"))?;
            let (f, alpha, spec) = explicit_field(o, p, ao)?;
            match spec {
                Some(spec) => HeckeParams::new(f.clone(), alpha, beta_from_spec(&f, &spec)?, o.n)?,
                None if o.kind == Kind::A => f
                    .elements()
                    .skip(1)
                    .find_map(|b| HeckeParams::new(f.clone(), alpha, b, o.n).ok())
                    .ok_or_else(|| config("no admissible β in this field"))?,
                None => return Err(config("type B needs --beta-spec")),
            }
        }
        (None, Some(c)) => {
            if !(1..=6).contains(&c) {
                return Err(config("--case must be 1 to 6"));
            }
            if o.beta_spec.is_some() {
                return Err(config("--beta-spec needs --alpha-order"));
            }
            find_params_b(c, o.n, 1, o.p)?
                .into_iter()
                .next()
                .ok_or_else(|| config(format!("no parameters for case {c} found in the search range")))?
        }
        (None, None) => return Err(config("give --alpha-order or --case")),
    };
    let case = classify_field_case(&params)?;
    if let Some(c) = o.case {
        if c != case.case_id {
            return Err(config(format!("parameters realize case {}, not {c}", case.case_id)));
        }
    }
    Ok(Setting::B {
        params,
        case,
        type_a: o.kind == Kind::A,
    })
}

fn resolve_d(o: &Opts) -> Result<Setting, CliError> {
    if o.n < 4 {
        return Err(config("type D needs --n at least 4"));
    }
    if o.p == Some(2) {
        return Err(config("type D needs odd characteristic"));
    }
    if o.beta_spec.is_some() {
        return Err(config("type D takes no --beta-spec"));
    }
    let params = match (o.alpha_order, o.case) {
        (Some(ao), _) => {
            let p = o.p.ok_or_else(|| config("--alpha-order needs --p"))?;
            let (f, alpha, _) = explicit_field(o, p, ao)?;
            DParams::new(f, alpha, o.n)?
        }
        (None, Some(c @ (1 | 2))) => find_params_d(c == 1, o.n, 1, o.p)?
            .into_iter()
            .next()
            .ok_or_else(|| config("no parameters found in the search range"))?,
        (None, Some(_)) => return Err(config("type D --case is 1 (split) or 2 (unitary)")),
        (None, None) => return Err(config("give --alpha-order or --case")),
    };
    if let Some(c) = o.case {
        let got = if params.field_split() { 1 } else { 2 };
        if got != c {
            return Err(config(format!("parameters realize case {got}, not {c}")));
        }
    }
    Ok(Setting::D { params })
}

fn write_out(o: &Opts, v: &Value) -> Result<(), CliError> {
    if let Some(path) = &o.out {
        std::fs::write(path, to_pretty(v) + "\n").map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
    }
    Ok(())
}

fn header(s: &Setting) -> String {
    let f = s.field();
    let mut h = format!("type {} n={} p={} d={}", s.type_name(), s.n(), f.p(), f.d());
    match s {
        Setting::B { params, case, .. } => {
            h += &format!(
                " alpha={} beta={} case={} degrees={:?} alpha_degrees={:?}",
                f.show(params.alpha),
                f.show(params.beta),
                case.case_id,
                case.degrees,
                case.dtilde
            );
        }
        Setting::D { params } => {
            h += &format!(" alpha={} split={}", f.show(params.alpha), params.field_split());
        }
    }
    h
}

pub fn verify(o: &Opts) -> Result<i32, CliError> {
    let setting = resolve(o)?;
    let suites: Vec<Suite> = if o.suites.is_empty() {
        default_suites(&setting)
    } else {
        o.suites.iter().map(|s| s.parse()).collect::<Result<_, SuiteError>>()?
    };
    out!("{}", header(&setting));
    let mut results = Vec::new();
    for s in suites {
        let r = run_suite(s, &setting, o.seed)?;
        let failed: Vec<&str> = r.cases.iter().filter(|c| !c.passed).map(|c| c.label.as_str()).collect();
        let status = if r.passed { "PASS" } else { "FAIL" };
        out!("{status} {s} ({} cases)", r.cases.len());
        for f in failed {
            out!("  failed: {f}");
        }
        results.push(r);
    }
    write_out(o, &verify_json(&setting, &results, o.seed))?;
    Ok(suite_exit_code(&results))
}

/// `0` when every suite passed, `1` otherwise.
pub fn suite_exit_code(results: &[SuiteResult]) -> i32 {
    if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

/// Class representatives with their predicted groups and modules.
fn predictions(setting: &Setting) -> Result<Vec<(String, usize, GroupLabel, Rep)>, CliError> {
    match setting {
        Setting::B { params, case, type_a } => transversal_b(params.n, case)
            .into_iter()
            .filter(|l| !type_a || l.right.is_empty())
            .map(|l| {
                Ok((
                    l.to_string(),
                    l.dim() as usize,
                    predict_image_b(&l, case)?,
                    build_rep_b(&l, params)?,
                ))
            })
            .collect(),
        Setting::D { params } => transversal_d(params.n)
            .into_iter()
            .map(|l| {
                Ok((
                    l.to_string(),
                    l.dim() as usize,
                    predict_image_d(&l, params)?,
                    build_rep_d(&l, params)?,
                ))
            })
            .collect(),
    }
}

fn order_str(o: Option<u128>) -> String {
    o.map_or_else(|| "overflow".to_string(), |x| x.to_string())
}

pub fn predict(o: &Opts) -> Result<i32, CliError> {
    let setting = resolve(o)?;
    let rows = predictions(&setting)?;
    out!("{}", header(&setting));
    out!("{:<24} {:>6}  {:<24} order", "module", "dim", "image");
    let mut out = Vec::new();
    for (label, dim, g, _) in &rows {
        out!("{label:<24} {dim:>6}  {:<24} {}", g.to_string(), order_str(g.order()));
        out.push(json!({"module": label, "dim": dim, "image": g.to_string(), "group": g, "order": g.order().map(|x| x.to_string())}));
    }
    write_out(o, &envelope("predict", &setting, json!({"predictions": out})))?;
    Ok(EXIT_OK)
}

pub fn enumerate_image(o: &Opts) -> Result<i32, CliError> {
    let setting = resolve(o)?;
    let rows = predictions(&setting)?;
    out!("{}", header(&setting));
    let f = setting.field();
    let mut out = Vec::new();
    let mut all_ok = true;
    let mut overflow = None;
    for (label, dim, g, rep) in &rows {
        match derived_subgroup_order(&rep.gens, f, o.cap) {
            Ok(k) => {
                let ok = g.order() == Some(k as u128);
                all_ok &= ok;
                out!(
                    "{} {label:<24} {dim:>4}  {:<24} predicted {} enumerated {k}",
                    if ok { "PASS" } else { "FAIL" },
                    g.to_string(),
                    order_str(g.order())
                );
                out.push(json!({"module": label, "image": g.to_string(), "predicted_order": g.order().map(|x| x.to_string()), "enumerated_order": k, "matches": ok}));
            }
            Err(ImagesError::Overflow(c)) => {
                out!("OVERFLOW {label:<24} {dim:>4}  {:<24} cap {c}", g.to_string());
                out.push(json!({"module": label, "image": g.to_string(), "overflow": c}));
                overflow = Some(c);
                break;
            }
            Err(e) => return Err(e.into()),
        }
    }
    write_out(
        o,
        &envelope(
            "enumerate-image",
            &setting,
            json!({"cap": o.cap, "images": out, "passed": all_ok && overflow.is_none(), "note": IMAGE_NOTE}),
        ),
    )?;
    if let Some(c) = overflow {
        return Err(CliError::Overflow(c));
    }
    Ok(if all_ok { EXIT_OK } else { EXIT_FAILURE })
}

/// Parse arguments, run, print errors, and return the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let res = match &cli.command {
        Command::Verify(o) => verify(o),
        Command::Predict(o) => predict(o),
        Command::EnumerateImage(o) => enumerate_image(o),
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
