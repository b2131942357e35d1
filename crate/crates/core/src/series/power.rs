//! Maclaurin families built from ζ at integer arguments.

use super::SeriesResult;
use crate::specfun::{zeta_int, NeumaierSum};
use crate::{Error, Result};

pub struct PowerSeriesEntry {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Coefficient of the n-th term and its power of x, for n ≥ `start`.
    coeff: fn(u32) -> (f64, i32),
    start: u32,
}

/// Σ_{k≥2} k^{−s}, accurate in relative terms for large s.
pub fn zeta_minus_one(s: u32) -> f64 {
    if s < 8 {
        return zeta_int(s) - 1.0;
    }
    let mut acc = 0.0;
    let mut k = 2.0f64;
    loop {
        let t = k.powi(-(s as i32));
        acc += t;
        if t < 1e-20 * acc {
            return acc;
        }
        k += 1.0;
    }
}

fn sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

pub static POWER_SERIES: &[PowerSeriesEntry] = &[
    PowerSeriesEntry {
        id: "PS-1.25",
        anchor: "πt coth πt = 1 − 2 Σ (−1)ⁿ ζ(2n) t^{2n}; series part Σ (−1)ⁿ ζ(2n) t^{2n}",
        coeff: |n| (sign(n) * zeta_int(2 * n), 2 * n as i32),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.1",
        anchor: "Λ(x) = γ + Σ (−1)ⁿ ζ(2n+1) x^{2n}",
        coeff: |n| {
            if n == 0 {
                (crate::specfun::constants().gamma, 0)
            } else {
                (sign(n) * zeta_int(2 * n + 1), 2 * n as i32)
            }
        },
        start: 0,
    },
    PowerSeriesEntry {
        id: "PS-5.17",
        anchor: "Σ ζ(2n+1)/(n+1) x^{2n+2} = −(1+γ)x² − log[G(1+x)G(1−x)]",
        coeff: |n| (zeta_int(2 * n + 1) / (n + 1) as f64, 2 * n as i32 + 2),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.30",
        anchor: "ψ(1+x) = 1/(2x) − π/2 cot(πx) − γ − Σ ζ(2n+1) x^{2n}; series part",
        coeff: |n| (zeta_int(2 * n + 1), 2 * n as i32),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.32",
        anchor: "Σ ζ(2n+1)/(2n+1) x^{2n+1} = ½ log(πx/sin πx) − γx − log Γ(1+x)",
        coeff: |n| (zeta_int(2 * n + 1) / (2 * n + 1) as f64, 2 * n as i32 + 1),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.41-re",
        anchor: "Re log Γ(1+ix) = Σ (−1)ⁿ ζ(2n)/(2n) x^{2n}",
        coeff: |n| (sign(n) * zeta_int(2 * n) / (2 * n) as f64, 2 * n as i32),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.41-im",
        anchor: "Im log Γ(1+ix) + γx = Σ (−1)^{n+1} ζ(2n+1)/(2n+1) x^{2n+1}",
        coeff: |n| (-sign(n) * zeta_int(2 * n + 1) / (2 * n + 1) as f64, 2 * n as i32 + 1),
        start: 1,
    },
    PowerSeriesEntry {
        id: "PS-5.48",
        anchor: "Σ [ζ(2n+1) − 1] x^{2n+2}/(n+1) = −γx² − log[G(1+x)G(1−x)] + log(1−x²)",
        coeff: |n| (zeta_minus_one(2 * n + 1) / (n + 1) as f64, 2 * n as i32 + 2),
        start: 1,
    },
    PowerSeriesEntry { id: "PS-5.53", anchor: "Σ ζ(2n+1)/n u^{2n}", coeff: |n| (zeta_int(2 * n + 1) / n as f64, 2 * n as i32), start: 1 },
    PowerSeriesEntry {
        id: "PS-5.54",
        anchor: "Σ ζ(2n)/n u^{2n−1} + Σ ζ(2n)/(n(2n−1)) u^{2n−1} = ∫₀ᵘ (1/x)(1/x − π cot πx) dx",
        coeff: |n| {
            let nf = n as f64;
            (zeta_int(2 * n) * (1.0 / nf + 1.0 / (nf * (2.0 * nf - 1.0))), 2 * n as i32 - 1)
        },
        start: 1,
    },
];

pub fn power_series_ids() -> Vec<&'static str> {
    POWER_SERIES.iter().map(|e| e.id).collect()
}

/// Partial sum of a catalogued Maclaurin series at |x| < 1, with a
/// geometric bound on the omitted tail.
pub fn power_series_eval(id: &str, x: f64, max_terms: u64) -> Result<SeriesResult> {
    let e = POWER_SERIES.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if !x.is_finite() || x.abs() >= 1.0 {
        return Err(Error::Domain(format!("{id} needs |x| < 1, got {x}")));
    }
    let cap = max_terms.clamp(1, 100_000) as u32;
    let mut acc = NeumaierSum::new();
    let mut last = 0.0f64;
    let mut used = 0u64;
    let x2 = x * x;
    for n in e.start..e.start + cap {
        let (c, k) = (e.coeff)(n);
        let t = if x == 0.0 && k == 0 { c } else { c * x.powi(k) };
        acc.add(t);
        used += 1;
        last = t;
        if t.abs() <= 1e-18 * acc.value().abs() || (x == 0.0 && k > 0) {
            break;
        }
    }
    // coefficients are bounded and non-increasing in size up to a factor 2
    let tail = if x2 == 0.0 { 0.0 } else { 2.0 * last.abs() * x2 / (1.0 - x2) };
    let value = acc.value();
    Ok(SeriesResult {
        value,
        abs_err: tail + acc.rounding_err() + 2.0 * f64::EPSILON * value.abs(),
        terms_used: used,
        method: "power_series".into(),
    })
}

impl PowerSeriesEntry {
    pub fn describe(&self) -> (&'static str, &'static str) {
        (self.id, self.anchor)
    }
}
