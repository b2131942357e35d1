//! Deterministic JSON, Markdown and plain-text renderings of suite reports.
//! Every number is rounded to 15 significant digits, ties to even.

use crate::registry::{Expected, Registry, Report, SideValue, Status, TolClass, Verdict};
use crate::Settings;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const SCHEMA_VERSION: &str = "1.0";

/// Round to 15 significant digits. Rust's formatter rounds exact ties to
/// even, so this is round-half-even on the binary value.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// `%.15g`-style text: positional for moderate exponents, otherwise
/// scientific, trailing zeros removed.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{x:.14e}");
    let (mant, exp) = s.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("exponent digits");
    let (sign, mant) = mant.strip_prefix('-').map_or(("", mant), |m| ("-", m));
    let digits: String = mant.chars().filter(|c| *c != '.').collect();
    if (-5..15).contains(&exp) {
        let body = if exp >= 0 {
            let split = exp as usize + 1;
            format!("{}.{}", &digits[..split], &digits[split..])
        } else {
            format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
        };
        let body = body.trim_end_matches('0').trim_end_matches('.');
        format!("{sign}{body}")
    } else {
        let m = format!("{}.{}", &digits[..1], &digits[1..]);
        let m = m.trim_end_matches('0').trim_end_matches('.');
        format!("{sign}{m}e{exp}")
    }
}

fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig(*x))
}

fn ser_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_f64(round_sig(*v)),
        None => s.serialize_none(),
    }
}

/// The settings a run used, as recorded in every report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    /// `None` means each identity's own tolerance class.
    #[serde(serialize_with = "ser_tol")]
    pub tol_class: Option<TolClass>,
    pub max_terms: u64,
    pub quad_level_cap: u32,
    pub parallelism: usize,
    #[serde(skip)]
    pub json_path: Option<String>,
    #[serde(skip)]
    pub md_path: Option<String>,
}

fn ser_tol<S: Serializer>(t: &Option<TolClass>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(t.map_or("per-identity", TolClass::name))
}

impl Config {
    pub fn new(tol_class: Option<TolClass>, settings: Settings, parallelism: usize) -> Config {
        Config {
            tol_class,
            max_terms: settings.max_terms,
            quad_level_cap: settings.quad_level_cap,
            parallelism,
            json_path: None,
            md_path: None,
        }
    }
}

#[derive(Serialize)]
struct JsonSide {
    #[serde(serialize_with = "ser_f64")]
    value: f64,
    #[serde(serialize_with = "ser_f64")]
    abs_err: f64,
}

impl From<SideValue> for JsonSide {
    fn from(s: SideValue) -> Self {
        JsonSide { value: s.value, abs_err: s.abs_err }
    }
}

struct Params<'a>(&'a [(String, f64)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, &round_sig(*v))?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct JsonRoute {
    recipe: String,
    baseline: Option<JsonSide>,
    quadrupled: Option<JsonSide>,
    #[serde(serialize_with = "ser_opt_f64")]
    shift: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

#[derive(Serialize)]
struct JsonDiagnostics {
    lhs: JsonRoute,
    rhs: JsonRoute,
}

#[derive(Serialize)]
struct JsonVerdict<'a> {
    id: &'a str,
    anchor: &'a str,
    params: Params<'a>,
    lhs: Option<JsonSide>,
    rhs: Option<JsonSide>,
    #[serde(serialize_with = "ser_opt_f64")]
    residual: Option<f64>,
    #[serde(serialize_with = "ser_opt_f64")]
    budget: Option<f64>,
    status: Status,
    expected_status: Expected,
    tol_class: TolClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostics: Option<JsonDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_f64")]
    wall_time: Option<f64>,
}

fn route(r: &crate::registry::RouteDiagnostics) -> JsonRoute {
    JsonRoute {
        recipe: r.recipe.clone(),
        baseline: r.baseline.map(Into::into),
        quadrupled: r.quadrupled.map(Into::into),
        shift: r.shift,
        note: r.note.clone(),
    }
}

fn json_verdict(v: &Verdict, timing: bool) -> JsonVerdict<'_> {
    JsonVerdict {
        id: &v.id,
        anchor: &v.anchor,
        params: Params(&v.params),
        lhs: v.lhs.map(Into::into),
        rhs: v.rhs.map(Into::into),
        residual: v.residual,
        budget: v.budget,
        status: v.status,
        expected_status: v.expected_status,
        tol_class: v.tol_class,
        note: v.note.as_deref(),
        diagnostics: v.diagnostics.as_ref().map(|d| JsonDiagnostics { lhs: route(&d.lhs), rhs: route(&d.rhs) }),
        wall_time: timing.then_some(v.wall_time),
    }
}

#[derive(Serialize)]
struct JsonSummary<'a> {
    total: usize,
    counts: crate::registry::StatusCounts,
    by_expected: BTreeMap<&'static str, crate::registry::StatusCounts>,
    failures: &'a [String],
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema_version: &'static str,
    config: &'a Config,
    verdicts: Vec<JsonVerdict<'a>>,
    summary: JsonSummary<'a>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_opt_f64")]
    total_wall_time: Option<f64>,
}

/// Pretty-printed JSON with a trailing newline. With `timing` false every
/// wall-time field is omitted, so equal runs give equal bytes.
pub fn to_json(report: &Report, config: &Config, timing: bool) -> String {
    let doc = JsonReport {
        schema_version: SCHEMA_VERSION,
        config,
        verdicts: report.verdicts.iter().map(|v| json_verdict(v, timing)).collect(),
        summary: JsonSummary {
            total: report.verdicts.len(),
            counts: report.summary.counts,
            by_expected: report.summary.by_expected.iter().map(|(e, c)| (e.name(), *c)).collect(),
            failures: &report.summary.failures,
        },
        total_wall_time: timing.then_some(report.total_wall_time),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

fn params_text(v: &Verdict) -> String {
    v.params.iter().map(|(k, x)| format!("{k}={}", fmt_sig(*x))).collect::<Vec<_>>().join(", ")
}

fn side_text(s: Option<SideValue>) -> String {
    s.map_or("—".into(), |s| format!("{} ± {}", fmt_sig(s.value), fmt_sig(s.abs_err)))
}

fn opt_text(x: Option<f64>) -> String {
    x.map_or("—".into(), fmt_sig)
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Markdown grouped by section, then an appendix setting quoted values of
/// the disputed identities beside the computed ones.
pub fn to_markdown(report: &Report, registry: &Registry, config: &Config, timing: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Identity verification report\n");
    let _ = writeln!(
        out,
        "schema {SCHEMA_VERSION}; tolerance class {}; max terms {}; quadrature level cap {}; parallelism {}\n",
        config.tol_class.map_or("per-identity", TolClass::name),
        config.max_terms,
        config.quad_level_cap,
        config.parallelism
    );
    let c = &report.summary.counts;
    let _ = writeln!(out, "| | CONFIRMED | REFUTED | INCONCLUSIVE | total |\n|---|---|---|---|---|");
    let _ = writeln!(out, "| all | {} | {} | {} | {} |", c.confirmed, c.refuted, c.inconclusive, c.total());
    for (e, c) in &report.summary.by_expected {
        let _ = writeln!(out, "| expected {} | {} | {} | {} | {} |", e.name(), c.confirmed, c.refuted, c.inconclusive, c.total());
    }
    if report.summary.failures.is_empty() {
        let _ = writeln!(out, "\nNo expected-CONFIRMED identity was refuted.");
    } else {
        let _ = writeln!(out, "\nRefuted expected-CONFIRMED identities: {}", report.summary.failures.join(", "));
    }
    if timing {
        let _ = writeln!(out, "\nWall time {} s.", fmt_sig(round_sig(report.total_wall_time)));
    }

    let section_of = |id: &str| registry.get(id).map(|r| r.section).unwrap_or(0);
    let mut sections: BTreeMap<u32, Vec<&Verdict>> = BTreeMap::new();
    for v in &report.verdicts {
        sections.entry(section_of(&v.id)).or_default().push(v);
    }
    for (sec, vs) in &sections {
        let _ = writeln!(out, "\n## Section {sec}\n");
        let _ = writeln!(out, "| id | params | lhs | rhs | residual | budget | status | expected |");
        let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
        for v in vs {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} | {} | {} |",
                v.id,
                params_text(v),
                side_text(v.lhs),
                side_text(v.rhs),
                opt_text(v.residual),
                opt_text(v.budget),
                v.status.name(),
                v.expected_status.name()
            );
        }
    }

    let disputed: Vec<&Verdict> = report.verdicts.iter().filter(|v| v.expected_status == Expected::Disputed).collect();
    if !disputed.is_empty() {
        let _ = writeln!(out, "\n## Appendix: disputed identities\n");
        for v in disputed {
            let label = v.label();
            let _ = writeln!(out, "### {label}\n");
            let _ = writeln!(out, "`{}`\n", v.anchor);
            let rec = registry.get(&v.id).ok();
            if let Some(r) = rec.filter(|r| !r.note.is_empty()) {
                let _ = writeln!(out, "{}\n", r.note);
            }
            let _ = writeln!(out, "| quantity | quoted | computed |\n|---|---|---|");
            for q in rec.map_or(&[][..], |r| r.quoted) {
                let _ = writeln!(out, "| {} | {} | |", md_escape(q.label), fmt_sig(q.value));
            }
            let lhs_recipe = rec.map_or("lhs", |r| r.lhs.recipe);
            let rhs_recipe = rec.map_or("rhs", |r| r.rhs.recipe);
            let _ = writeln!(out, "| lhs: {} | | {} |", md_escape(lhs_recipe), side_text(v.lhs));
            let _ = writeln!(out, "| rhs: {} | | {} |", md_escape(rhs_recipe), side_text(v.rhs));
            let _ = writeln!(out, "| residual | | {} |", opt_text(v.residual));
            let _ = writeln!(out, "\nStatus {} (budget {}).", v.status.name(), opt_text(v.budget));
            if let Some(n) = &v.note {
                let _ = writeln!(out, "\n{n}");
            }
            let _ = writeln!(out);
        }
    }
    out
}

/// One aligned line per verdict plus a summary line.
pub fn to_text(report: &Report, timing: bool) -> String {
    let mut out = String::new();
    let width = report.verdicts.iter().map(|v| v.label().chars().count()).max().unwrap_or(0);
    for v in &report.verdicts {
        let label = v.label();
        let pad = width - label.chars().count();
        let _ = write!(
            out,
            "{label}{}  {:<12}  expected {:<15}  residual {:<22}  budget {}",
            " ".repeat(pad),
            v.status.name(),
            v.expected_status.name(),
            opt_text(v.residual),
            opt_text(v.budget)
        );
        if timing {
            let _ = write!(out, "  {} s", fmt_sig(round_sig(v.wall_time)));
        }
        if let Some(n) = &v.note {
            let _ = write!(out, "  ({n})");
        }
        out.push('\n');
    }
    let c = &report.summary.counts;
    let _ = write!(out, "{} verdicts: {} CONFIRMED, {} REFUTED, {} INCONCLUSIVE", c.total(), c.confirmed, c.refuted, c.inconclusive);
    if !report.summary.failures.is_empty() {
        let _ = write!(out, "; refuted expected-CONFIRMED: {}", report.summary.failures.join(", "));
    }
    if timing {
        let _ = write!(out, "; {} s", fmt_sig(round_sig(report.total_wall_time)));
    }
    out.push('\n');
    out
}
