//! Infinite-series engine: direct compensated summation followed by a tail
//! model, plus the keyed catalog of named sums.

mod catalog;
mod expand;
mod power;

pub use catalog::{find_series, log_g_fourier_coeffs, series_ids, sum_catalog, sum_catalog_with, t_n, SeriesEntry, SERIES};
pub use expand::{log1p_rem, psi1_minus_log};
pub use power::{power_series_eval, power_series_ids, zeta_minus_one, PowerSeriesEntry, POWER_SERIES};

use crate::quad::{integrate_with, EndpointHint, Hints};
use crate::specfun::{bernoulli_number, FnEvalResult, NeumaierSum};
use crate::{Error, Result};
use num_complex::Complex64;
use serde::Serialize;
use std::sync::Arc;

pub type TailFn = Arc<dyn Fn(u64) -> Result<FnEvalResult> + Send + Sync>;

/// How the remainder beyond the directly summed block is obtained.
#[derive(Clone)]
pub enum TailModel {
    /// ∫_N^∞ f + f(N)/2 − Σ_{j≤degree} B_{2j}/(2j)! f^{(2j−1)}(N).
    EulerMaclaurin(u32),
    /// A closed-form tail Σ_{n≥N} supplied by the entry.
    AsymptoticSubtraction(TailFn),
    /// Terms alternate in sign; the tail comes from repeated summation by
    /// parts (Euler's transformation).
    Alternating,
    None,
}

impl TailModel {
    pub fn tag(&self) -> String {
        match self {
            TailModel::EulerMaclaurin(d) => format!("euler_maclaurin({d})"),
            TailModel::AsymptoticSubtraction(_) => "asymptotic_subtraction".into(),
            TailModel::Alternating => "alternating".into(),
            TailModel::None => "none".into(),
        }
    }
}

pub struct SeriesSpec<'a> {
    pub term: &'a (dyn Fn(f64) -> f64 + Sync),
    pub n0: u64,
    pub tail_model: TailModel,
    pub max_terms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub abs_err: f64,
    pub terms_used: u64,
    pub method: String,
}

impl SeriesResult {
    pub fn to_eval(&self) -> FnEvalResult {
        FnEvalResult::new(self.value, self.abs_err)
    }
}

fn checked(term: &(dyn Fn(f64) -> f64 + Sync), n: f64) -> Result<f64> {
    let t = term(n);
    if t.is_finite() {
        Ok(t)
    } else {
        Err(Error::NonFinite(format!("series term at n = {n}")))
    }
}

pub fn sum_series(spec: &SeriesSpec) -> Result<SeriesResult> {
    if spec.max_terms < 1 {
        return Err(Error::Domain("max_terms must be at least 1".into()));
    }
    let mut acc = NeumaierSum::new();
    let end = spec.n0 + spec.max_terms;
    for n in spec.n0..end {
        acc.add(checked(spec.term, n as f64)?);
    }
    let big_n = end as f64;
    let tail = match &spec.tail_model {
        TailModel::EulerMaclaurin(degree) => em_tail(spec.term, big_n, *degree)?,
        TailModel::AsymptoticSubtraction(f) => f(end)?,
        TailModel::Alternating => {
            let h = |x: f64| {
                let s = if (x as u64).is_multiple_of(2) { 1.0 } else { -1.0 };
                s * (spec.term)(x)
            };
            oscillatory_tail(&h, std::f64::consts::PI, end, 0.0)?.re_part()
        }
        TailModel::None => FnEvalResult::new(0.0, checked(spec.term, big_n)?.abs()),
    };
    let value = acc.value() + tail.value;
    Ok(SeriesResult {
        value,
        abs_err: acc.rounding_err() + tail.abs_err + 2.0 * f64::EPSILON * value.abs(),
        terms_used: spec.max_terms,
        method: spec.tail_model.tag(),
    })
}

fn d1_at(f: &(dyn Fn(f64) -> f64 + Sync), x: f64, h: f64) -> f64 {
    (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h)
}

fn d3_at(f: &(dyn Fn(f64) -> f64 + Sync), x: f64, h: f64) -> f64 {
    (f(x + 2.0 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2.0 * h)) / (2.0 * h * h * h)
}

/// f′(x) and f‴(x) by central differences, each with an error estimate
/// from halving the step.
fn derivs(f: &(dyn Fn(f64) -> f64 + Sync), x: f64) -> ((f64, f64), (f64, f64)) {
    let fx = f(x).abs();
    let h1 = (x / 500.0).max(2e-3);
    let d1 = d1_at(f, x, h1);
    let d1_err = (d1 - d1_at(f, x, 2.0 * h1)).abs() / 15.0 + 2.0 * f64::EPSILON * fx / h1;
    let h3 = (x / 100.0).max(0.05);
    let d3 = d3_at(f, x, h3);
    let d3_err = (d3 - d3_at(f, x, 2.0 * h3)).abs() / 3.0 + 4.0 * f64::EPSILON * fx / (h3 * h3 * h3);
    ((d1, d1_err), (d3, d3_err))
}

/// Euler–Maclaurin tail Σ_{n≥N} f(n) for a smooth, eventually monotone f.
pub fn em_tail(f: &(dyn Fn(f64) -> f64 + Sync), n: f64, degree: u32) -> Result<FnEvalResult> {
    // ∫_N^∞ f(x) dx with x = N/s
    let g = |s: f64| {
        let x = n / s;
        let v = f(x) * n / (s * s);
        if v.is_finite() {
            v
        } else {
            0.0
        }
    };
    let fnv = checked(f, n)?;
    let scale = fnv.abs() * n;
    let q = integrate_with(&g, 0.0, 1.0, Hints::new(EndpointHint::LogSingularity, EndpointHint::Regular), 1e-15 * scale.max(1e-300), 12)?;
    let ((d1, d1_err), (d3, d3_err)) = derivs(f, n);
    let mut acc = NeumaierSum::new();
    acc.add(q.value);
    acc.add(0.5 * fnv);
    let b2 = bernoulli_number(2) / 2.0;
    let b4 = bernoulli_number(4) / 24.0;
    acc.add(-b2 * d1);
    let mut remainder = (b4 * d3).abs();
    if degree >= 2 {
        acc.add(-b4 * d3);
        // next term B_6/6! f^{(5)}: (B_6/6!)/(B_4/4!) = −1/42, and f^{(5)}/f''' ~ 30/N² for power-law decay
        remainder = (b4 * d3).abs() * 30.0 / (42.0 * n * n);
    }
    remainder += b2 * d1_err + b4.abs() * d3_err;
    Ok(FnEvalResult::new(acc.value(), 2.0 * remainder + q.abs_err + acc.rounding_err()))
}

/// Complex tail Σ_{n≥N} e^{iθn} h(n) for smooth slowly varying h, from
/// repeated summation by parts:
/// Σ_{n≥M} zⁿh_n = zᴹ/(1−z) Σ_j (z/(1−z))ʲ Δʲh_M + remainder.
pub fn oscillatory_tail(h: &dyn Fn(f64) -> f64, theta: f64, big_n: u64, phase: f64) -> Result<ComplexTail> {
    const K: usize = 12;
    let z = Complex64::from_polar(1.0, theta);
    let one_minus = 1.0 - z;
    if one_minus.norm() < 1e-3 {
        return Err(Error::Domain(format!("oscillatory tail needs θ away from 2πk, got {theta}")));
    }
    let ratio = z / one_minus;
    let mut diffs: Vec<f64> = (0..=K).map(|j| h((big_n + j as u64) as f64)).collect();
    if diffs.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("oscillatory tail term near n = {big_n}")));
    }
    let zm = Complex64::from_polar(1.0, theta * big_n as f64 + phase);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut r = Complex64::new(1.0, 0.0);
    let mut last = 0.0;
    let mut mass = 0.0;
    for j in 0..K {
        let term = r * diffs[0];
        sum += term;
        mass += term.norm();
        last = term.norm();
        for i in 0..K - j {
            diffs[i] = diffs[i + 1] - diffs[i];
        }
        r *= ratio;
    }
    let pre = zm / one_minus;
    let value = pre * sum;
    // phase of zᴺ carries rounding of θN
    let phase_err = f64::EPSILON * (theta * big_n as f64).abs() * value.norm();
    let err = pre.norm() * (2.0 * last + 8.0 * f64::EPSILON * mass) + phase_err;
    Ok(ComplexTail { value, abs_err: err })
}

#[derive(Debug, Clone, Copy)]
pub struct ComplexTail {
    pub value: Complex64,
    pub abs_err: f64,
}

impl ComplexTail {
    pub fn re_part(self) -> FnEvalResult {
        FnEvalResult::new(self.value.re, self.abs_err)
    }
    pub fn im_part(self) -> FnEvalResult {
        FnEvalResult::new(self.value.im, self.abs_err)
    }
}

/// Σ_{n≥n0} e^{i(θn + φ)} h(n): a direct block, then the summation-by-parts
/// tail. Returns the complex sum and one error bound for both parts.
pub fn fourier_sum(h: &(dyn Fn(f64) -> f64 + Sync), theta: f64, phase: f64, n0: u64, direct: u64) -> Result<(Complex64, f64)> {
    let mut re = NeumaierSum::new();
    let mut im = NeumaierSum::new();
    let mut angle_err = 0.0;
    for n in n0..n0 + direct {
        let v = checked(h, n as f64)?;
        let a = theta * n as f64 + phase;
        re.add(v * a.cos());
        im.add(v * a.sin());
        angle_err += f64::EPSILON * a.abs() * v.abs();
    }
    let t = oscillatory_tail(h, theta, n0 + direct, phase)?;
    let err = re.rounding_err().max(im.rounding_err()) + angle_err + t.abs_err;
    Ok((Complex64::new(re.value(), im.value()) + t.value, err))
}
