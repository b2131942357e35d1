//! Command-line front end. [`run`] takes the registry explicitly so tests can
//! drive it with a scratch catalog.

use crate::quad::{find_integral, integral_catalog_with};
use crate::registry::{Expected, Filter, Registry, Selection, Status, SuiteOptions, TolClass, Verdict};
use crate::report::{fmt_sig, round_sig, to_json, to_markdown, to_text, Config};
use crate::series::{find_series, power_series_eval, power_series_ids, sum_catalog_with};
use crate::specfun::{self, FnEvalResult, ZetaKind};
use crate::{Error, Result, Settings, DEFAULT_MAX_TERMS};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::ffi::OsString;
use std::io::Write;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUTED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "gammaverify", version, about = "Numerically verify closed forms for log-gamma integrals and series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities and report a verdict for each parameter set.
    Verify(VerifyArgs),
    /// Evaluate one special function, catalogued series or integral.
    Eval(EvalArgs),
    /// Check one parametric identity on an evenly spaced grid.
    Sweep(SweepArgs),
    /// List catalogued identities.
    List(ListArgs),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Override every identity's tolerance class.
    #[arg(long, value_enum)]
    tol_class: Option<TolArg>,
    /// Directly summed terms before a series tail model takes over.
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    parallelism: usize,
    /// Leave wall times out of every output.
    #[arg(long)]
    no_timing: bool,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<String>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("selection").required(true).args(["ids", "section", "all"]))]
struct VerifyArgs {
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    ids: Vec<String>,
    /// Every identity of one section.
    #[arg(long)]
    section: Option<u32>,
    /// The whole catalog.
    #[arg(long)]
    all: bool,
    /// Write the Markdown report here.
    #[arg(long, value_name = "PATH")]
    md: Option<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum TolArg {
    Strict,
    Standard,
    Slow,
}

impl From<TolArg> for TolClass {
    fn from(t: TolArg) -> TolClass {
        match t {
            TolArg::Strict => TolClass::Strict,
            TolArg::Standard => TolClass::Standard,
            TolArg::Slow => TolClass::Slow,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq)]
enum EvalKind {
    Fn,
    Series,
    Integral,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(value_enum)]
    kind: EvalKind,
    /// Function name, series id or integral id.
    key: String,
    /// Numeric arguments.
    #[arg(allow_negative_numbers = true)]
    params: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: u64,
}

#[derive(Args, Debug)]
struct SweepArgs {
    id: String,
    #[arg(long)]
    param: String,
    #[arg(long, allow_negative_numbers = true)]
    from: f64,
    #[arg(long, allow_negative_numbers = true)]
    to: f64,
    #[arg(long)]
    steps: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct ListArgs {
    #[arg(long)]
    section: Option<u32>,
    /// CONFIRMED, DISPUTED or DIVERGENT-PROBE.
    #[arg(long)]
    expected: Option<String>,
}

/// Run one invocation and return the process exit code.
pub fn run<I, T>(args: I, registry: &Registry, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let code = if matches!(e.kind(), DisplayHelp | DisplayVersion) { EXIT_OK } else { EXIT_USAGE };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, registry, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Sweep(a) => cmd_sweep(a, registry, out),
        Command::List(a) => cmd_list(a, registry, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::UnknownId(id) = &e {
                let near = registry.near_matches(id);
                if !near.is_empty() {
                    let _ = writeln!(err, "did you mean: {}", near.join(", "));
                }
            }
            EXIT_USAGE
        }
    }
}

fn settings_of(max_terms: u64) -> Result<Settings> {
    Settings::new(max_terms, Settings::default().quad_level_cap)
}

fn config_of(c: &Common) -> Result<(Config, SuiteOptions)> {
    if c.parallelism < 1 {
        return Err(Error::Misuse("--parallelism must be at least 1".into()));
    }
    let settings = settings_of(c.max_terms)?;
    let tol = c.tol_class.map(TolClass::from);
    let mut config = Config::new(tol, settings, c.parallelism);
    config.json_path = c.json.clone();
    let opts = SuiteOptions { tol_override: tol, settings, parallelism: Some(c.parallelism) };
    Ok((config, opts))
}

fn write_file(path: &str, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| Error::Misuse(format!("cannot write {path}: {e}")))
}

fn exit_for(verdicts: &[Verdict]) -> i32 {
    if verdicts.iter().any(Verdict::is_failure) {
        EXIT_REFUTED
    } else {
        EXIT_OK
    }
}

fn cmd_verify(a: VerifyArgs, registry: &Registry, out: &mut dyn Write) -> Result<i32> {
    let selection = if a.all {
        Selection::All
    } else if let Some(s) = a.section {
        Selection::Section(s)
    } else {
        Selection::Ids(a.ids.clone())
    };
    let (mut config, opts) = config_of(&a.common)?;
    config.md_path = a.md.clone();
    let report = registry.run_suite(&selection, &opts)?;
    let timing = !a.common.no_timing;
    write!(out, "{}", to_text(&report, timing)).map_err(io)?;
    if let Some(p) = &config.json_path {
        write_file(p, &to_json(&report, &config, timing))?;
    }
    if let Some(p) = &config.md_path {
        write_file(p, &to_markdown(&report, registry, &config, timing))?;
    }
    Ok(exit_for(&report.verdicts))
}

fn io(e: std::io::Error) -> Error {
    Error::Misuse(format!("output: {e}"))
}

fn arity(key: &str, params: &[f64], n: usize) -> Result<()> {
    if params.len() == n {
        Ok(())
    } else {
        Err(Error::Misuse(format!("{key} takes {n} argument(s), got {}", params.len())))
    }
}

fn as_order(key: &str, x: f64) -> Result<u32> {
    if x >= 0.0 && x.fract() == 0.0 && x <= 64.0 {
        Ok(x as u32)
    } else {
        Err(Error::Domain(format!("{key}: order must be an integer in [0, 64], got {x}")))
    }
}

/// Names accepted by `eval fn`, with their argument lists.
pub const FUNCTIONS: &[(&str, &str)] = &[
    ("lambda", "x"),
    ("lambda-digamma", "x"),
    ("lambda-series", "x"),
    ("loggamma", "x"),
    ("digamma", "x"),
    ("polygamma", "k x"),
    ("log-barnes-g", "x"),
    ("zeta", "s"),
    ("hurwitz-zeta", "s a"),
    ("zeta-prime", "s"),
    ("si", "x"),
    ("ci", "x"),
    ("ei", "x"),
    ("clausen", "theta"),
    ("bernoulli", "n x"),
];

/// Evaluates one of [`FUNCTIONS`] by name.
pub fn eval_fn(key: &str, p: &[f64]) -> Result<FnEvalResult> {
    let n = FUNCTIONS.iter().find(|(k, _)| *k == key).map(|(_, a)| a.split(' ').count());
    let Some(n) = n else {
        let names: Vec<&str> = FUNCTIONS.iter().map(|(k, _)| *k).collect();
        return Err(Error::Misuse(format!("unknown function `{key}`; known: {}", names.join(", "))));
    };
    arity(key, p, n)?;
    match key {
        "lambda" => specfun::lambda_fn(p[0]),
        "lambda-digamma" => specfun::lambda_digamma(p[0]),
        "lambda-series" => specfun::lambda_series(p[0]),
        "loggamma" => specfun::log_gamma(p[0]),
        "digamma" => specfun::digamma_real(p[0]),
        "polygamma" => specfun::polygamma(as_order(key, p[0])?, p[1]),
        "log-barnes-g" => specfun::log_barnes_g(p[0]),
        "zeta" => specfun::zeta_family(ZetaKind::Zeta, p[0], 1.0),
        "hurwitz-zeta" => specfun::zeta_family(ZetaKind::Hurwitz, p[0], p[1]),
        "zeta-prime" => specfun::zeta_family(ZetaKind::ZetaPrime, p[0], 1.0),
        "si" => specfun::si(p[0]),
        "ci" => specfun::ci(p[0]),
        "ei" => specfun::exp_integral(p[0]),
        "clausen" => specfun::clausen_cl2(p[0]),
        _ => specfun::bernoulli_poly(as_order(key, p[0])?, p[1]),
    }
}

/// Sums a catalog series (`S-*`, `FS-*`) or power series (`PS-*`).
pub fn eval_series(key: &str, p: &[f64], settings: &Settings) -> Result<FnEvalResult> {
    if find_series(key).is_some() {
        return Ok(sum_catalog_with(key, p, settings)?.to_eval());
    }
    if power_series_ids().contains(&key) {
        arity(key, p, 1)?;
        return Ok(power_series_eval(key, p[0], settings.max_terms)?.to_eval());
    }
    Err(Error::UnknownId(key.to_string()))
}

pub fn eval_integral(key: &str, p: &[f64], settings: &Settings) -> Result<FnEvalResult> {
    let entry = find_integral(key).ok_or_else(|| Error::UnknownId(key.to_string()))?;
    let r = integral_catalog_with(key, p, entry.default_tol, settings.quad_level_cap)?;
    Ok(FnEvalResult::new(r.value, r.abs_err))
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> Result<i32> {
    let settings = settings_of(a.max_terms)?;
    let r = match a.kind {
        EvalKind::Fn => eval_fn(&a.key, &a.params)?,
        EvalKind::Series => eval_series(&a.key, &a.params, &settings)?,
        EvalKind::Integral => eval_integral(&a.key, &a.params, &settings)?,
    };
    let mut head = a.key.clone();
    for x in &a.params {
        head.push(' ');
        head.push_str(&fmt_sig(*x));
    }
    writeln!(out, "{head} = {} ± {}", fmt_sig(r.value), fmt_sig(r.abs_err)).map_err(io)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SweepRow {
    param: f64,
    lhs: Option<f64>,
    rhs: Option<f64>,
    residual: Option<f64>,
    budget: Option<f64>,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct SweepDoc<'a> {
    schema_version: &'static str,
    config: &'a Config,
    id: &'a str,
    param: &'a str,
    expected_status: Expected,
    rows: Vec<SweepRow>,
}

fn rounded(x: Option<f64>) -> Option<f64> {
    x.map(round_sig)
}

fn cmd_sweep(a: SweepArgs, registry: &Registry, out: &mut dyn Write) -> Result<i32> {
    let rec = registry.get(&a.id)?;
    if !rec.is_parametric() {
        return Err(Error::Misuse(format!("{} has no parameters to sweep", rec.id)));
    }
    let Some(slot) = rec.params.iter().position(|p| p.name == a.param) else {
        let names: Vec<&str> = rec.params.iter().map(|p| p.name).collect();
        return Err(Error::Misuse(format!("{} has no parameter `{}`; it takes {}", rec.id, a.param, names.join(", "))));
    };
    if a.steps < 2 || a.from.partial_cmp(&a.to) != Some(std::cmp::Ordering::Less) {
        return Err(Error::Misuse("a sweep needs --from < --to and --steps ≥ 2".into()));
    }
    let (config, opts) = config_of(&a.common)?;
    let base: Vec<f64> = rec.param_sets.first().map(|p| p.to_vec()).unwrap_or_default();
    let points: Vec<Vec<f64>> = (0..a.steps)
        .map(|i| {
            let mut p = base.clone();
            p[slot] = a.from + (a.to - a.from) * i as f64 / (a.steps - 1) as f64;
            p
        })
        .collect();
    for p in &points {
        rec.check_params(p)?;
    }
    let run = || -> Vec<Result<Verdict>> {
        use rayon::prelude::*;
        points.par_iter().map(|p| registry.verify(rec.id, Some(p), opts.tol_override, &opts.settings)).collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.common.parallelism)
        .build()
        .map_err(|e| Error::Misuse(format!("thread pool: {e}")))?;
    let verdicts = pool.install(run).into_iter().collect::<Result<Vec<_>>>()?;

    let timing = !a.common.no_timing;
    let width = 16;
    writeln!(out, "{:<w$}  {:<22}  {:<22}  {:<22}  status", a.param, "lhs", "rhs", "residual", w = width).map_err(io)?;
    for (p, v) in points.iter().zip(&verdicts) {
        let f = |x: Option<f64>| x.map_or("—".to_string(), fmt_sig);
        write!(
            out,
            "{:<w$}  {:<22}  {:<22}  {:<22}  {}",
            fmt_sig(p[slot]),
            f(v.lhs.map(|s| s.value)),
            f(v.rhs.map(|s| s.value)),
            f(v.residual),
            v.status.name(),
            w = width
        )
        .map_err(io)?;
        if timing {
            write!(out, "  {} s", fmt_sig(round_sig(v.wall_time))).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    if let Some(path) = &config.json_path {
        let doc = SweepDoc {
            schema_version: crate::report::SCHEMA_VERSION,
            config: &config,
            id: rec.id,
            param: &a.param,
            expected_status: rec.expected,
            rows: points
                .iter()
                .zip(&verdicts)
                .map(|(p, v)| SweepRow {
                    param: round_sig(p[slot]),
                    lhs: rounded(v.lhs.map(|s| s.value)),
                    rhs: rounded(v.rhs.map(|s| s.value)),
                    residual: rounded(v.residual),
                    budget: rounded(v.budget),
                    status: v.status,
                    note: v.note.clone(),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Misuse(e.to_string()))?;
        s.push('\n');
        write_file(path, &s)?;
    }
    Ok(exit_for(&verdicts))
}

fn cmd_list(a: ListArgs, registry: &Registry, out: &mut dyn Write) -> Result<i32> {
    let expected = match &a.expected {
        Some(s) => Some(Expected::parse(s).ok_or_else(|| Error::Misuse(format!("unknown expected status `{s}`")))?),
        None => None,
    };
    let recs = registry.list(&Filter { section: a.section, expected });
    let width = recs.iter().map(|r| r.id.chars().count()).max().unwrap_or(0);
    for r in &recs {
        let params: Vec<String> = r.params.iter().map(|p| p.describe()).collect();
        writeln!(
            out,
            "{:<w$}  {:>2}  {:<15}  {:<8}  {}{}",
            r.id,
            r.section,
            r.expected.name(),
            r.tol_class.name(),
            r.anchor,
            if params.is_empty() { String::new() } else { format!("  [{}]", params.join("; ")) },
            w = width
        )
        .map_err(io)?;
    }
    writeln!(out, "{} identities", recs.len()).map_err(io)?;
    Ok(EXIT_OK)
}
