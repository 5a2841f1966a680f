//! The `kch` command line: argument parsing, pipelines and reports.
//!
//! Every subcommand builds a JSON value (top-level `"schema": 1`) and prints
//! it as JSON or as `path: value` lines. Exit status: 0 success, 1
//! computation failure, 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::augment::{
    count_augmentations_exhaustive, count_augmentations_with, first_difference, is_prime, presentation_signature,
    AugConfig, AugError, AugTableJson, Difference,
};
use crate::augpoly::{augmentation_polynomial, check_apoly_divisibility, AugPolyResult};
use crate::dga::{build_dga, check_d_squared, check_grading};
use crate::diagram::PdCode;
use crate::hc0::{extract_presentation, simplify, Hc0Json, Presentation};
use crate::knots::{parse_table, BUILTIN};
use crate::laurent::LaurentPoly;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    #[default]
    Json,
}

/// Bounds and options shared by all pipelines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub primes: Vec<u64>,
    pub max_generators: usize,
    pub max_prime: u64,
    pub output: OutputFormat,
    /// 1-based crossing to treat as crossing 1.
    pub basepoint_crossing: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            primes: vec![2, 3, 5, 7],
            max_generators: 16,
            max_prime: 13,
            output: OutputFormat::Json,
            basepoint_crossing: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.max_generators == 0 || self.max_prime < 2 {
            return Err("bounds must be positive".into());
        }
        for &p in &self.primes {
            if !is_prime(p) {
                return Err(format!("{p} is not prime"));
            }
            if p > self.max_prime {
                return Err(format!("prime {p} exceeds --max-prime {}", self.max_prime));
            }
        }
        Ok(())
    }

    pub fn aug_config(&self) -> AugConfig {
        AugConfig { max_prime: self.max_prime, max_generators: self.max_generators }
    }

    /// Moves the chosen crossing to the front, keeping the others in order.
    pub fn apply_basepoint(&self, pd: &PdCode) -> Result<PdCode, String> {
        let Some(k) = self.basepoint_crossing else {
            return Ok(pd.clone());
        };
        let n = pd.num_crossings();
        if k == 0 || k > n {
            return Err(format!("--basepoint-crossing {k} out of range 1..={n}"));
        }
        let perm: Vec<usize> = std::iter::once(k - 1).chain((0..n).filter(|&x| x != k - 1)).collect();
        pd.renumber(&perm, 1).map_err(|e| e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(name = "kch", version, about = "Knot contact homology: DGA checks, cord algebra, augmentation counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    #[arg(long, global = true, default_value_t = 16)]
    max_generators: usize,
    #[arg(long, global = true, default_value_t = 13)]
    max_prime: u64,
    /// Crossing (1-based) to number first.
    #[arg(long, global = true)]
    basepoint_crossing: Option<usize>,
}

#[derive(Args, Debug)]
struct KnotArg {
    /// PD code, `PD[X[..],..]` or `{"crossings": [[..],..]}`.
    #[arg(long, conflicts_with_all = ["file", "knot"])]
    pd: Option<String>,
    /// File holding a PD code.
    #[arg(long, conflicts_with = "knot")]
    file: Option<PathBuf>,
    /// Name from the bundled table.
    #[arg(long)]
    knot: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a diagram and print its crossing data.
    Parse(KnotArg),
    /// Build the DGA; with --check run the ∂² and grading checks.
    Dga {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        check: bool,
    },
    /// Cord algebra presentation.
    Hc0 {
        #[command(flatten)]
        knot: KnotArg,
        /// Skip simplification.
        #[arg(long)]
        raw: bool,
    },
    /// Augmentation counts over 𝔽_p.
    Aug {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        prime: u64,
        #[arg(long, requires = "mu")]
        lambda: Option<u64>,
        #[arg(long, requires = "lambda")]
        mu: Option<u64>,
        /// Count on the unsimplified presentation.
        #[arg(long)]
        raw: bool,
        /// Use the exhaustive reference search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Augmentation polynomial.
    Augpoly(KnotArg),
    /// Whether (1 − μ²)·A divides Ã(λ, −μ²).
    ApolyCheck {
        #[arg(long)]
        apoly: String,
        /// Augmentation polynomial; computed from the diagram if absent.
        #[arg(long)]
        augpoly: Option<String>,
        #[command(flatten)]
        knot: KnotArg,
    },
    /// Compare augmentation signatures of two diagrams.
    Compare {
        #[arg(long)]
        pd_a: String,
        #[arg(long)]
        pd_b: String,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7])]
        primes: Vec<u64>,
    },
    /// Full report for every knot of a table file (bundled table if absent).
    Table {
        file: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7])]
        primes: Vec<u64>,
    },
}

/// Failure carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn computation(message: impl ToString) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

impl From<AugError> for Failure {
    fn from(e: AugError) -> Self {
        match e {
            AugError::NotPrime(_) | AugError::PrimeTooLarge { .. } | AugError::MismatchedPrimes(..) => usage(e),
            AugError::Intractable { .. } | AugError::UnknownGenerator(_) => computation(e),
        }
    }
}

fn load_knot(k: &KnotArg, cfg: &RunConfig) -> Result<PdCode, Failure> {
    let pd = match (&k.pd, &k.file, &k.knot) {
        (Some(s), _, _) => PdCode::parse_any(s).map_err(usage)?,
        (_, Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            PdCode::parse_any(text.trim()).map_err(usage)?
        }
        (_, _, Some(name)) => crate::knots::get(name).ok_or_else(|| usage(format!("no bundled knot {name:?}")))?,
        _ => return Err(usage("one of --pd, --file or --knot is required")),
    };
    cfg.apply_basepoint(&pd).map_err(usage)
}

fn simplified(pd: &PdCode) -> Presentation {
    simplify(&extract_presentation(&pd.crossing_data()))
}

pub fn parse_report(pd: &PdCode) -> Value {
    let cd = pd.crossing_data();
    json!({
        "pd": pd.to_string(),
        "n": pd.num_crossings(),
        "arcs": cd.n(),
        "writhe": pd.writhe(),
        "planar": pd.is_planar(),
        "degenerate": cd.is_degenerate(),
        "crossings": cd.crossings.iter().map(|x| json!({
            "over": x.over, "left": x.left, "right": x.right, "sign": x.sign,
        })).collect::<Vec<_>>(),
    })
}

pub fn dga_report(pd: &PdCode, check: bool) -> Value {
    let dga = build_dga(&pd.crossing_data());
    if !check {
        let differential: serde_json::Map<String, Value> = dga
            .generators()
            .iter()
            .map(|&g| (g.to_string(), Value::String(dga.boundary(g).to_string())))
            .collect();
        return json!({ "n": dga.n(), "generators": dga.generators().len(), "differential": differential });
    }
    let dd = check_d_squared(&dga);
    let gr = check_grading(&dga);
    let verdict = |b: bool| if b { "pass" } else { "fail" };
    let failures: Vec<Value> = dd
        .report
        .failures
        .iter()
        .map(|f| json!({"check": "d_squared", "generator": f.generator, "residue": f.residue}))
        .chain(gr.failures.iter().map(|f| json!({"check": "grading", "generator": f.generator, "residue": f.residue})))
        .collect();
    json!({
        "n": dga.n(),
        "generators": dga.generators().len(),
        "d_squared": verdict(dd.report.pass),
        "grading": verdict(gr.pass),
        "convention": dd.convention,
        "conventions": dd.conventions,
        "failures": failures,
    })
}

/// Per-knot batch report.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arcs: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d_squared: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grading: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Hc0Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmentations: Option<Vec<AugTableJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augpoly: Option<AugPolyResult>,
}

/// All reports plus the pairwise distinguish matrix (`null` where either
/// knot failed).
#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub schema: u32,
    pub primes: Vec<u64>,
    pub knots: Vec<Report>,
    pub distinguished: Vec<Vec<Option<bool>>>,
}

fn knot_report(
    name: String,
    line: usize,
    pd: Result<PdCode, String>,
    cfg: &RunConfig,
) -> (Report, Option<crate::augment::Signature>) {
    let mut r = Report {
        name,
        line,
        error: None,
        pd: None,
        n: None,
        arcs: None,
        d_squared: None,
        grading: None,
        presentation: None,
        augmentations: None,
        augpoly: None,
    };
    let pd = match pd.and_then(|pd| cfg.apply_basepoint(&pd)) {
        Ok(pd) => pd,
        Err(e) => {
            r.error = Some(e);
            return (r, None);
        }
    };
    let cd = pd.crossing_data();
    let dga = build_dga(&cd);
    r.pd = Some(pd.to_string());
    r.n = Some(pd.num_crossings());
    r.arcs = Some(cd.n());
    r.d_squared = Some(check_d_squared(&dga).report.pass);
    r.grading = Some(check_grading(&dga).pass);
    let pres = simplified(&pd);
    r.presentation = Some(pres.to_json());
    r.augpoly = Some(augmentation_polynomial(&pres));
    match presentation_signature(&pres, &cfg.primes, &cfg.aug_config()) {
        Ok(sig) => {
            r.augmentations = Some(sig.to_json());
            (r, Some(sig))
        }
        Err(e) => {
            r.error = Some(e.to_string());
            (r, None)
        }
    }
}

/// Reports every entry of a knot table; bad entries are recorded, not fatal.
/// Entries run in parallel; output order follows the input.
pub fn run_table(text: &str, cfg: &RunConfig) -> TableReport {
    let entries = parse_table(text);
    let results: Vec<_> = entries
        .into_par_iter()
        .map(|e| knot_report(e.name, e.line, e.pd.map_err(|x| x.to_string()), cfg))
        .collect();
    let distinguished = results
        .iter()
        .map(|(_, a)| {
            results
                .iter()
                .map(|(_, b)| match (a, b) {
                    (Some(a), Some(b)) => first_difference(a, b).ok().map(|d| d.is_some()),
                    _ => None,
                })
                .collect()
        })
        .collect();
    TableReport {
        schema: SCHEMA,
        primes: cfg.primes.clone(),
        knots: results.into_iter().map(|(r, _)| r).collect(),
        distinguished,
    }
}

fn run(cli: Cli) -> Result<Value, Failure> {
    let mut cfg = RunConfig {
        output: cli.output,
        max_generators: cli.max_generators,
        max_prime: cli.max_prime,
        basepoint_crossing: cli.basepoint_crossing,
        ..RunConfig::default()
    };
    let value = match cli.command {
        Command::Parse(k) => parse_report(&load_knot(&k, &cfg)?),
        Command::Dga { knot, check } => {
            let v = dga_report(&load_knot(&knot, &cfg)?, check);
            if check && (v["d_squared"] != "pass" || v["grading"] != "pass") {
                return Err(computation(format!("DGA check failed: {}", v["failures"])));
            }
            v
        }
        Command::Hc0 { knot, raw } => {
            let pd = load_knot(&knot, &cfg)?;
            let p = extract_presentation(&pd.crossing_data());
            let p = if raw { p } else { simplify(&p) };
            serde_json::to_value(p.to_json()).expect("serializable")
        }
        Command::Aug { knot, prime, lambda, mu, raw, exhaustive } => {
            let pd = load_knot(&knot, &cfg)?;
            let p = extract_presentation(&pd.crossing_data());
            let p = if raw { p } else { simplify(&p) };
            if let (Some(l), Some(m)) = (lambda, mu) {
                if l == 0 || m == 0 || l >= prime || m >= prime {
                    return Err(usage(format!("--lambda and --mu must lie in 1..{prime}")));
                }
            }
            let table = if exhaustive {
                count_augmentations_exhaustive(&p, prime)?
            } else {
                count_augmentations_with(&p, prime, &cfg.aug_config())?
            };
            let mut j = table.to_json();
            if let (Some(l), Some(m)) = (lambda, mu) {
                j.table.retain(|c| c.lambda == l && c.mu == m);
                j.total = j.table.iter().map(|c| c.count).sum();
            }
            serde_json::to_value(j).expect("serializable")
        }
        Command::Augpoly(k) => {
            let r = augmentation_polynomial(&simplified(&load_knot(&k, &cfg)?));
            serde_json::to_value(r).expect("serializable")
        }
        Command::ApolyCheck { apoly, augpoly, knot } => {
            let apoly: LaurentPoly = apoly.parse().map_err(|e| usage(format!("--apoly: {e}")))?;
            let aug = match augpoly {
                Some(s) => s.parse().map_err(|e| usage(format!("--augpoly: {e}")))?,
                None => {
                    let r = augmentation_polynomial(&simplified(&load_knot(&knot, &cfg)?));
                    if !r.supported {
                        return Err(computation(r.warnings.join("; ")));
                    }
                    r.polynomial
                }
            };
            let divides = check_apoly_divisibility(&aug, &apoly).map_err(usage)?;
            json!({ "augpoly": aug.to_string(), "apoly": apoly.to_string(), "divides": divides })
        }
        Command::Compare { pd_a, pd_b, primes } => {
            cfg.primes = primes;
            cfg.validate().map_err(usage)?;
            let a = cfg.apply_basepoint(&PdCode::parse_any(&pd_a).map_err(usage)?).map_err(usage)?;
            let b = cfg.apply_basepoint(&PdCode::parse_any(&pd_b).map_err(usage)?).map_err(usage)?;
            let sa = presentation_signature(&simplified(&a), &cfg.primes, &cfg.aug_config())?;
            let sb = presentation_signature(&simplified(&b), &cfg.primes, &cfg.aug_config())?;
            let diff: Option<Difference> = first_difference(&sa, &sb)?;
            json!({ "primes": cfg.primes, "distinguished": diff.is_some(), "first_difference": diff })
        }
        Command::Table { file, primes } => {
            cfg.primes = primes;
            cfg.validate().map_err(usage)?;
            let text = match file {
                Some(path) => std::fs::read_to_string(&path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
                None => BUILTIN.to_string(),
            };
            serde_json::to_value(run_table(&text, &cfg)).expect("serializable")
        }
    };
    Ok(with_schema(value))
}

fn with_schema(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut out = serde_json::Map::new();
            out.insert("schema".into(), json!(SCHEMA));
            out.extend(m.into_iter().filter(|(k, _)| k != "schema"));
            Value::Object(out)
        }
        other => other,
    }
}

/// `path: value` lines, one per leaf. Paths join keys and indices with `.`.
pub fn render_text(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) if !m.is_empty() => m.iter().for_each(|(k, x)| walk(&join(k), x, out)),
            Value::Array(a) if !a.is_empty() => {
                a.iter().enumerate().for_each(|(i, x)| walk(&join(&i.to_string()), x, out))
            }
            leaf => {
                out.push_str(prefix);
                out.push_str(": ");
                out.push_str(&leaf.to_string());
                out.push('\n');
            }
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}

/// Rebuilds the JSON value from [`render_text`] output.
pub fn parse_text(text: &str) -> Result<Value, String> {
    fn insert(slot: &mut Value, path: &[&str], leaf: Value) -> Result<(), String> {
        let Some((head, rest)) = path.split_first() else {
            *slot = leaf;
            return Ok(());
        };
        let child = match head.parse::<usize>() {
            Ok(i) => {
                if slot.is_null() {
                    *slot = Value::Array(Vec::new());
                }
                let a = slot.as_array_mut().ok_or("mixed array and object")?;
                if a.len() == i {
                    a.push(Value::Null);
                }
                a.get_mut(i).ok_or("array indices out of order")?
            }
            Err(_) => {
                if slot.is_null() {
                    *slot = Value::Object(serde_json::Map::new());
                }
                let m = slot.as_object_mut().ok_or("mixed array and object")?;
                m.entry(head.to_string()).or_insert(Value::Null)
            }
        };
        insert(child, rest, leaf)
    }
    let mut root = Value::Null;
    for line in text.lines() {
        let (path, leaf) = line.split_once(": ").ok_or_else(|| format!("bad line {line:?}"))?;
        let leaf: Value = serde_json::from_str(leaf).map_err(|e| e.to_string())?;
        let parts: Vec<&str> = if path.is_empty() { Vec::new() } else { path.split('.').collect() };
        insert(&mut root, &parts, leaf)?;
    }
    Ok(root)
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(s) = std::env::var("KCH_THREADS") {
        let k: usize = s.trim().parse().ok().filter(|&k| k > 0).ok_or_else(|| usage(format!("KCH_THREADS={s:?}")))?;
        b = b.num_threads(k);
    }
    b.build().map_err(computation)
}

/// Runs the command line, writing the report to `out` and diagnostics to
/// `err`; returns the exit status.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let output = cli.output;
    let result = thread_pool().and_then(|pool| pool.install(|| run(cli)));
    match result {
        Ok(v) => {
            let text = match output {
                OutputFormat::Json => serde_json::to_string_pretty(&v).expect("serializable") + "\n",
                OutputFormat::Text => render_text(&v),
            };
            match out.write_all(text.as_bytes()) {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(err, "kch: {e}");
                    1
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "kch: {}", f.message);
            f.code
        }
    }
}
