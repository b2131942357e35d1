//! Identity catalog and verdict engine. Each record pairs two evaluation
//! routes for one identity; a verdict compares them against an error budget.

mod catalog;

pub use catalog::IDENTITIES;

use crate::specfun::FnEvalResult;
use crate::{Error, Result, Settings};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;
use std::time::Instant;

/// Factor separating INCONCLUSIVE from REFUTED.
pub const REFUTE_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TolClass {
    Strict,
    Standard,
    Slow,
}

impl TolClass {
    pub const ALL: [TolClass; 3] = [TolClass::Strict, TolClass::Standard, TolClass::Slow];

    pub fn tolerance(self) -> f64 {
        match self {
            TolClass::Strict => 1e-9,
            TolClass::Standard => 1e-7,
            TolClass::Slow => 1e-5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TolClass::Strict => "strict",
            TolClass::Standard => "standard",
            TolClass::Slow => "slow",
        }
    }

    pub fn parse(s: &str) -> Option<TolClass> {
        TolClass::ALL.into_iter().find(|t| t.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Expected {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "DISPUTED")]
    Disputed,
    #[serde(rename = "DIVERGENT-PROBE")]
    DivergentProbe,
}

impl Expected {
    pub const ALL: [Expected; 3] = [Expected::Confirmed, Expected::Disputed, Expected::DivergentProbe];

    pub fn name(self) -> &'static str {
        match self {
            Expected::Confirmed => "CONFIRMED",
            Expected::Disputed => "DISPUTED",
            Expected::DivergentProbe => "DIVERGENT-PROBE",
        }
    }

    pub fn parse(s: &str) -> Option<Expected> {
        Expected::ALL.into_iter().find(|e| e.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "CONFIRMED")]
    Confirmed,
    #[serde(rename = "REFUTED")]
    Refuted,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl Status {
    pub const ALL: [Status; 3] = [Status::Confirmed, Status::Refuted, Status::Inconclusive];

    pub fn classify(residual: f64, budget: f64) -> Status {
        if residual <= budget {
            Status::Confirmed
        } else if residual > REFUTE_FACTOR * budget {
            Status::Refuted
        } else {
            Status::Inconclusive
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Status::Confirmed => "CONFIRMED",
            Status::Refuted => "REFUTED",
            Status::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub const fn open(lo: f64, hi: f64) -> Interval {
        Interval { lo, hi, lo_closed: false, hi_closed: false }
    }

    pub const fn closed(lo: f64, hi: f64) -> Interval {
        Interval { lo, hi, lo_closed: true, hi_closed: true }
    }

    /// (lo, hi]
    pub const fn left_open(lo: f64, hi: f64) -> Interval {
        Interval { lo, hi, lo_closed: false, hi_closed: true }
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{}, {}{r}", self.lo, self.hi)
    }
}

/// One parameter of a parametric identity. `lattice` > 0 restricts values
/// to multiples of it (1 for integers).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: &'static [Interval],
    pub lattice: f64,
}

impl ParamSpec {
    pub const fn real(name: &'static str, domain: &'static [Interval]) -> ParamSpec {
        ParamSpec { name, domain, lattice: 0.0 }
    }

    pub const fn integer(name: &'static str, domain: &'static [Interval]) -> ParamSpec {
        ParamSpec { name, domain, lattice: 1.0 }
    }

    pub fn contains(&self, x: f64) -> bool {
        x.is_finite() && self.domain.iter().any(|i| i.contains(x)) && (self.lattice == 0.0 || (x / self.lattice).fract() == 0.0)
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.domain.iter().map(|i| i.to_string()).collect();
        let mut s = format!("{} ∈ {}", self.name, parts.join(" ∪ "));
        if self.lattice == 1.0 {
            s.push_str(", integer");
        } else if self.lattice > 0.0 {
            s.push_str(&format!(", multiple of {}", self.lattice));
        }
        s
    }
}

pub type SideFn = fn(&[f64], &Settings) -> Result<FnEvalResult>;

/// One evaluation route: a human-readable recipe and the function computing it.
#[derive(Clone, Copy)]
pub struct Side {
    pub recipe: &'static str,
    pub eval: SideFn,
}

impl fmt::Debug for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Side").field("recipe", &self.recipe).finish()
    }
}

/// A value quoted alongside a disputed identity, for side-by-side reporting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quoted {
    pub label: &'static str,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct IdentityRecord {
    pub id: &'static str,
    pub section: u32,
    pub anchor: &'static str,
    pub params: &'static [ParamSpec],
    /// Parameter tuples checked by default; one empty tuple for
    /// parameter-free identities.
    pub param_sets: &'static [&'static [f64]],
    pub lhs: Side,
    pub rhs: Side,
    pub tol_class: TolClass,
    pub expected: Expected,
    pub quoted: &'static [Quoted],
    pub note: &'static str,
}

impl IdentityRecord {
    pub fn is_parametric(&self) -> bool {
        !self.params.is_empty()
    }

    pub fn check_params(&self, params: &[f64]) -> Result<()> {
        if params.len() != self.params.len() {
            return Err(Error::ParamDomain {
                id: self.id.to_string(),
                detail: format!("expected {} parameter(s), got {}", self.params.len(), params.len()),
            });
        }
        for (spec, &x) in self.params.iter().zip(params) {
            if !spec.contains(x) {
                return Err(Error::ParamDomain {
                    id: self.id.to_string(),
                    detail: format!("{} = {x} outside {}", spec.name, spec.describe()),
                });
            }
        }
        Ok(())
    }

    /// The same identity with the two routes exchanged.
    pub fn swapped(&self) -> IdentityRecord {
        IdentityRecord { lhs: self.rhs, rhs: self.lhs, ..self.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SideValue {
    pub value: f64,
    pub abs_err: f64,
}

impl From<FnEvalResult> for SideValue {
    fn from(r: FnEvalResult) -> Self {
        SideValue { value: r.value, abs_err: r.abs_err }
    }
}

/// How a route behaves when its term and level budgets are quadrupled.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RouteDiagnostics {
    pub recipe: String,
    pub baseline: Option<SideValue>,
    pub quadrupled: Option<SideValue>,
    /// |quadrupled − baseline|, when both evaluations succeed.
    pub shift: Option<f64>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub lhs: RouteDiagnostics,
    pub rhs: RouteDiagnostics,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub id: String,
    pub anchor: String,
    pub params: Vec<(String, f64)>,
    pub lhs: Option<SideValue>,
    pub rhs: Option<SideValue>,
    pub residual: Option<f64>,
    pub budget: Option<f64>,
    pub status: Status,
    pub expected_status: Expected,
    pub tol_class: TolClass,
    pub note: Option<String>,
    pub wall_time: f64,
    pub diagnostics: Option<Diagnostics>,
}

impl Verdict {
    /// An expected-CONFIRMED identity that came back REFUTED.
    pub fn is_failure(&self) -> bool {
        self.expected_status == Expected::Confirmed && self.status == Status::Refuted
    }

    pub fn label(&self) -> String {
        if self.params.is_empty() {
            self.id.clone()
        } else {
            let p: Vec<String> = self.params.iter().map(|(n, v)| format!("{n}={v}")).collect();
            format!("{}[{}]", self.id, p.join(","))
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Filter {
    pub section: Option<u32>,
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Selection {
    All,
    Section(u32),
    Ids(Vec<String>),
}

#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Replaces every record's own tolerance class when set.
    pub tol_override: Option<TolClass>,
    pub settings: Settings,
    /// Worker threads; `None` uses rayon's global pool.
    pub parallelism: Option<usize>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StatusCounts {
    #[serde(rename = "CONFIRMED")]
    pub confirmed: usize,
    #[serde(rename = "REFUTED")]
    pub refuted: usize,
    #[serde(rename = "INCONCLUSIVE")]
    pub inconclusive: usize,
}

impl StatusCounts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Confirmed => self.confirmed += 1,
            Status::Refuted => self.refuted += 1,
            Status::Inconclusive => self.inconclusive += 1,
        }
    }

    pub fn get(&self, s: Status) -> usize {
        match s {
            Status::Confirmed => self.confirmed,
            Status::Refuted => self.refuted,
            Status::Inconclusive => self.inconclusive,
        }
    }

    pub fn total(&self) -> usize {
        self.confirmed + self.refuted + self.inconclusive
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Summary {
    pub counts: StatusCounts,
    /// Status counts per expected status, in `Expected::ALL` order.
    pub by_expected: Vec<(Expected, StatusCounts)>,
    /// Labels of expected-CONFIRMED verdicts that came back REFUTED.
    pub failures: Vec<String>,
}

impl Summary {
    pub fn from_verdicts(verdicts: &[Verdict]) -> Summary {
        let mut counts = StatusCounts::default();
        let mut by_expected: Vec<(Expected, StatusCounts)> = Expected::ALL.iter().map(|&e| (e, StatusCounts::default())).collect();
        let mut failures = Vec::new();
        for v in verdicts {
            counts.add(v.status);
            if let Some(slot) = by_expected.iter_mut().find(|(e, _)| *e == v.expected_status) {
                slot.1.add(v.status);
            }
            if v.is_failure() {
                failures.push(v.label());
            }
        }
        Summary { counts, by_expected, failures }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
    pub total_wall_time: f64,
    pub tol_override: Option<TolClass>,
    pub settings: Settings,
}

impl Report {
    pub fn has_failures(&self) -> bool {
        !self.summary.failures.is_empty()
    }
}

fn eval_side(side: &Side, params: &[f64], settings: &Settings) -> Result<FnEvalResult> {
    let r = (side.eval)(params, settings)?;
    if !r.value.is_finite() || !r.abs_err.is_finite() {
        return Err(Error::NonFinite(format!("{} gave {} ± {}", side.recipe, r.value, r.abs_err)));
    }
    Ok(r)
}

fn build_verdict(
    rec: &IdentityRecord,
    params: &[f64],
    lhs: Result<FnEvalResult>,
    rhs: Result<FnEvalResult>,
    tol: TolClass,
    started: Instant,
) -> Verdict {
    let names = rec.params.iter().map(|p| p.name.to_string());
    let mut v = Verdict {
        id: rec.id.to_string(),
        anchor: rec.anchor.to_string(),
        params: names.zip(params.iter().copied()).collect(),
        lhs: None,
        rhs: None,
        residual: None,
        budget: None,
        status: Status::Inconclusive,
        expected_status: rec.expected,
        tol_class: tol,
        note: None,
        wall_time: 0.0,
        diagnostics: None,
    };
    let mut notes = Vec::new();
    match &lhs {
        Ok(l) => v.lhs = Some((*l).into()),
        Err(e) => notes.push(format!("lhs route failed: {e}")),
    }
    match &rhs {
        Ok(r) => v.rhs = Some((*r).into()),
        Err(e) => notes.push(format!("rhs route failed: {e}")),
    }
    if let (Ok(l), Ok(r)) = (lhs, rhs) {
        let residual = (l.value - r.value).abs();
        let budget = l.abs_err + r.abs_err + tol.tolerance();
        v.residual = Some(residual);
        v.budget = Some(budget);
        v.status = Status::classify(residual, budget);
    }
    if !notes.is_empty() {
        v.note = Some(notes.join("; "));
    }
    v.wall_time = started.elapsed().as_secs_f64();
    v
}

fn route_diagnostics(side: &Side, params: &[f64], base: &Settings, quad: &Result<FnEvalResult>) -> RouteDiagnostics {
    let baseline = eval_side(side, params, base);
    let mut notes = Vec::new();
    if let Err(e) = &baseline {
        notes.push(format!("baseline: {e}"));
    }
    if let Err(e) = quad {
        notes.push(format!("quadrupled: {e}"));
    }
    let shift = match (&baseline, quad) {
        (Ok(a), Ok(b)) => Some((a.value - b.value).abs()),
        _ => None,
    };
    RouteDiagnostics {
        recipe: side.recipe.to_string(),
        baseline: baseline.ok().map(Into::into),
        quadrupled: quad.as_ref().ok().map(|r| (*r).into()),
        shift,
        note: if notes.is_empty() { None } else { Some(notes.join("; ")) },
    }
}

fn edit_distance(a: &str, b: &str) -> usize {
    strsim::levenshtein(&a.to_ascii_lowercase(), &b.to_ascii_lowercase())
}

/// An ordered set of identity records with the verdict operations.
#[derive(Debug, Clone)]
pub struct Registry {
    records: Vec<IdentityRecord>,
}

impl Registry {
    pub fn builtin() -> Registry {
        Registry::from_records(IDENTITIES.to_vec())
    }

    /// Records are kept in lexicographic id order.
    pub fn from_records(mut records: Vec<IdentityRecord>) -> Registry {
        records.sort_by(|a, b| a.id.cmp(b.id));
        Registry { records }
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&IdentityRecord> {
        self.records.iter().find(|r| r.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Up to five ids closest to `id` by edit distance.
    pub fn near_matches(&self, id: &str) -> Vec<&'static str> {
        let mut scored: Vec<(usize, &'static str)> = self.records.iter().map(|r| (edit_distance(id, r.id), r.id)).collect();
        scored.sort();
        let limit = (id.chars().count() / 2).max(2);
        scored.into_iter().filter(|(d, _)| *d <= limit).take(5).map(|(_, s)| s).collect()
    }

    pub fn list(&self, filter: &Filter) -> Vec<&IdentityRecord> {
        self.records
            .iter()
            .filter(|r| filter.section.is_none_or(|s| r.section == s))
            .filter(|r| filter.expected.is_none_or(|e| r.expected == e))
            .collect()
    }

    fn resolve_params<'a>(&self, rec: &'a IdentityRecord, params: Option<&'a [f64]>) -> Result<&'a [f64]> {
        let p = match params {
            Some(p) => p,
            None => rec.param_sets.first().copied().unwrap_or(&[]),
        };
        rec.check_params(p)?;
        Ok(p)
    }

    fn verify_record(&self, rec: &IdentityRecord, params: &[f64], tol: TolClass, settings: &Settings) -> Verdict {
        let started = Instant::now();
        let lhs = eval_side(&rec.lhs, params, settings);
        let rhs = eval_side(&rec.rhs, params, settings);
        build_verdict(rec, params, lhs, rhs, tol, started)
    }

    /// Both routes of one identity at `params` (the record's first default
    /// tuple when `None`).
    pub fn verify(&self, id: &str, params: Option<&[f64]>, tol_override: Option<TolClass>, settings: &Settings) -> Result<Verdict> {
        let rec = self.get(id)?;
        let p = self.resolve_params(rec, params)?;
        Ok(self.verify_record(rec, p, tol_override.unwrap_or(rec.tol_class), settings))
    }

    /// Strict tolerance, quadrupled term budgets and per-route convergence
    /// diagnostics, for DISPUTED records only.
    pub fn adjudicate(&self, id: &str, params: Option<&[f64]>, settings: &Settings) -> Result<Verdict> {
        let rec = self.get(id)?;
        if rec.expected != Expected::Disputed {
            return Err(Error::Misuse(format!("{id} is {} and not a disputed identity", rec.expected.name())));
        }
        let p = self.resolve_params(rec, params)?;
        let started = Instant::now();
        let heavy = settings.quadrupled();
        let lhs = eval_side(&rec.lhs, p, &heavy);
        let rhs = eval_side(&rec.rhs, p, &heavy);
        let diagnostics =
            Diagnostics { lhs: route_diagnostics(&rec.lhs, p, settings, &lhs), rhs: route_diagnostics(&rec.rhs, p, settings, &rhs) };
        let mut v = build_verdict(rec, p, lhs, rhs, TolClass::Strict, started);
        v.diagnostics = Some(diagnostics);
        v.wall_time = started.elapsed().as_secs_f64();
        Ok(v)
    }

    /// (record, parameter tuple) pairs for a selection, in catalog order.
    pub fn expand(&self, selection: &Selection) -> Result<Vec<(&IdentityRecord, &'static [f64])>> {
        let recs: Vec<&IdentityRecord> = match selection {
            Selection::All => self.records.iter().collect(),
            Selection::Section(s) => self.records.iter().filter(|r| r.section == *s).collect(),
            Selection::Ids(ids) => {
                for id in ids {
                    self.get(id)?;
                }
                self.records.iter().filter(|r| ids.iter().any(|i| i == r.id)).collect()
            }
        };
        let items: Vec<_> = recs.into_iter().flat_map(|r| r.param_sets.iter().map(move |p| (r, *p))).collect();
        if items.is_empty() {
            return Err(Error::EmptySelection);
        }
        Ok(items)
    }

    pub fn run_suite(&self, selection: &Selection, opts: &SuiteOptions) -> Result<Report> {
        let items = self.expand(selection)?;
        let started = Instant::now();
        let work = || -> Vec<Verdict> {
            items
                .par_iter()
                .map(|(rec, p)| self.verify_record(rec, p, opts.tol_override.unwrap_or(rec.tol_class), &opts.settings))
                .collect()
        };
        let verdicts = match opts.parallelism {
            Some(n) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(n.max(1))
                    .build()
                    .map_err(|e| Error::Misuse(format!("thread pool: {e}")))?;
                pool.install(work)
            }
            None => work(),
        };
        let summary = Summary::from_verdicts(&verdicts);
        Ok(Report {
            verdicts,
            summary,
            total_wall_time: started.elapsed().as_secs_f64(),
            tol_override: opts.tol_override,
            settings: opts.settings,
        })
    }
}

pub fn list_identities(filter: &Filter) -> Vec<IdentityRecord> {
    Registry::builtin().list(filter).into_iter().cloned().collect()
}

pub fn verify_identity(id: &str, params: Option<&[f64]>, tol_override: Option<TolClass>) -> Result<Verdict> {
    Registry::builtin().verify(id, params, tol_override, &Settings::default())
}

pub fn adjudicate_dispute(id: &str) -> Result<Verdict> {
    Registry::builtin().adjudicate(id, None, &Settings::default())
}

pub fn run_suite(selection: &Selection, opts: &SuiteOptions) -> Result<Report> {
    Registry::builtin().run_suite(selection, opts)
}
