//! Named integrals. Each entry fixes its integrand's endpoint behavior so
//! removable singularities are never probed by floating division.

use super::{integrate_semi_infinite_with, integrate_with, Decay, EndpointHint, Hints, QuadResult, COT_TOL, DEFAULT_LEVEL_CAP};
use crate::specfun::{bernoulli_poly, constants, digamma_real, log_barnes_g, log_gamma, zeta_int};
use crate::{Error, Result};
use std::f64::consts::PI;

use EndpointHint::{LogSingularity as Log, Regular as Reg, RemovableByLimit as Lim};

pub struct IntegralEntry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: &'static [&'static str],
    /// Tolerance used when the caller does not supply one.
    pub default_tol: f64,
    eval: fn(&[f64], f64, u32) -> Result<QuadResult>,
}

fn bad(id: &str, detail: impl Into<String>) -> Error {
    Error::ParamDomain { id: id.to_string(), detail: detail.into() }
}

fn need(id: &str, ok: bool, detail: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(bad(id, detail))
    }
}

fn int_param(id: &str, n: f64) -> Result<u32> {
    need(id, (1.0..=8.0).contains(&n) && n.fract() == 0.0, "n must be an integer in [1, 8]")?;
    Ok(n as u32)
}

/// log Γ(1+y), by its ζ series for small |y| so that values near the zeros
/// at y = 0 and y = 1 keep full relative accuracy.
pub fn lgamma1p(y: f64) -> f64 {
    if y.abs() < 0.2 {
        let mut s = -constants().gamma * y;
        let mut p = -y;
        for k in 2..60u32 {
            p *= -y;
            let t = zeta_int(k) * p / k as f64;
            s += t;
            if t.abs() < 1e-18 * s.abs().max(1e-300) {
                break;
            }
        }
        s
    } else if (y - 1.0).abs() < 0.2 {
        // log Γ(2+z) = log(1+z) + log Γ(1+z)
        let z = y - 1.0;
        z.ln_1p() + lgamma1p(z)
    } else {
        log_gamma(1.0 + y).map(|r| r.value).unwrap_or(f64::NAN)
    }
}

/// log Γ(x) on (0, 1] without cancellation near 1.
fn lg(x: f64) -> f64 {
    if x > 0.5 {
        lgamma1p(x - 1.0)
    } else {
        lgamma1p(x) - x.ln()
    }
}

fn psi(x: f64) -> f64 {
    digamma_real(x).map(|r| r.value).unwrap_or(f64::NAN)
}

fn lgb(x: f64) -> f64 {
    log_barnes_g(x).map(|r| r.value).unwrap_or(f64::NAN)
}

/// sin πx using the nearer endpoint of [0, 1].
fn sinpi(x: f64) -> f64 {
    (PI * x.min(1.0 - x)).sin()
}

/// cot πx on (0, 1) with full accuracy near both endpoints.
fn cotpi(x: f64) -> f64 {
    if x > 0.5 {
        -1.0 / (PI * (1.0 - x)).tan()
    } else {
        1.0 / (PI * x).tan()
    }
}

/// (1/x − π cot πx)/x, by Σ 2ζ(2k) x^{2k−2} for small x.
fn cot_defect_over_x(x: f64) -> f64 {
    if x > 0.25 {
        return (1.0 / x - PI * cotpi(x)) / x;
    }
    let x2 = x * x;
    let mut s = 0.0;
    let mut p = 1.0;
    for k in 1..40u32 {
        let t = 2.0 * zeta_int(2 * k) * p;
        s += t;
        if t < 1e-17 * s {
            break;
        }
        p *= x2;
    }
    s
}

/// log x, with log(1 − d) taken through ln_1p near 1.
fn lnx(x: f64) -> f64 {
    if x > 0.5 {
        (-(1.0 - x)).ln_1p()
    } else {
        x.ln()
    }
}

fn fin(f: &dyn Fn(f64) -> f64, a: f64, b: f64, h: Hints, tol: f64, cap: u32) -> Result<QuadResult> {
    integrate_with(f, a, b, h, tol, cap)
}

fn hints(l: EndpointHint, r: EndpointHint) -> Hints {
    Hints::new(l, r)
}

/// d/dx log G(1+x) at x = 1: ½ log 2π − ½ − γ.
fn dlog_g_at_2() -> f64 {
    let c = constants();
    0.5 * c.log_2pi - 0.5 - c.gamma
}

fn semi(f: &dyn Fn(f64) -> f64, limit0: f64, rate: f64, tol: f64, cap: u32) -> Result<QuadResult> {
    integrate_semi_infinite_with(f, 0.0, Lim(limit0), Decay::Exponential(rate), tol, cap)
}

macro_rules! entry {
    ($id:expr, $anchor:expr, [$($p:expr),*], $tol:expr, $f:expr) => {
        IntegralEntry { id: $id, anchor: $anchor, params: &[$($p),*], default_tol: $tol, eval: $f }
    };
}

const T: f64 = super::DEFAULT_TOL;

fn q11(p: &[f64], tol: f64, cap: u32) -> Result<QuadResult> {
    let q = p[0];
    need("Q-1.1", q.abs() <= 50.0, "|p| must not exceed 50")?;
    fin(&|x| (-q * x).exp() * lg(x), 0.0, 1.0, hints(Log, Reg), tol, cap)
}

fn q_lg_cos(p: &[f64], tol: f64, cap: u32) -> Result<QuadResult> {
    let q = p[0];
    need("Q-2.1", q > 0.0 && q <= 16.0, "p must lie in (0, 16]")?;
    fin(&|x| lg(x) * (q * PI * x).cos(), 0.0, 1.0, hints(Log, Reg), tol, cap)
}

fn q_lg_sin(p: &[f64], tol: f64, cap: u32) -> Result<QuadResult> {
    let q = p[0];
    need("Q-2.2", q > 0.0 && q <= 16.0, "p must lie in (0, 16]")?;
    fin(&|x| lg(x) * (q * PI * x).sin(), 0.0, 1.0, hints(Log, Reg), tol, cap)
}

fn psi_sin_sq(a: f64, b: f64, tol: f64, cap: u32) -> Result<QuadResult> {
    // ψ(x) sin²πx = ψ(1+x) sin²πx − sin²πx/x
    fin(
        &|x| {
            let s = sinpi(x);
            psi(1.0 + x) * s * s - s * s / x
        },
        a,
        b,
        hints(Reg, Reg),
        tol,
        cap,
    )
}

fn psi_sin(u: f64, tol: f64, cap: u32) -> Result<QuadResult> {
    fin(
        &|x| {
            let s = sinpi(x);
            psi(1.0 + x) * s - s / x
        },
        0.0,
        u,
        hints(Lim(-PI), Reg),
        tol,
        cap,
    )
}

fn x1mx_cos_cot(tol: f64, cap: u32) -> Result<QuadResult> {
    fin(&|x| x * (1.0 - x) * (PI * x).cos() * cotpi(x), 0.0, 1.0, hints(Lim(1.0 / PI), Lim(1.0 / PI)), tol, cap)
}

/// Σ_{k≥m} yᵏ/k! by its Taylor series, for |y| ≤ 1.
fn exp_rem_series(y: f64, m: u32) -> f64 {
    let mut term = (1..=m).fold(1.0, |acc, k| acc * y / k as f64);
    let mut sum = 0.0f64;
    let mut k = m;
    while term.abs() > 1e-18 * sum.abs() || sum == 0.0 {
        sum += term;
        k += 1;
        term *= y / k as f64;
        if term == 0.0 {
            break;
        }
    }
    sum
}

/// e^{−t} − 1 + t
fn emt_rem(t: f64) -> f64 {
    if t < 1.0 {
        exp_rem_series(-t, 2)
    } else {
        (-t).exp() - 1.0 + t
    }
}

/// sinh y − y (odd part of the exponential remainder)
fn sinh_rem(y: f64) -> f64 {
    if y.abs() < 1.0 {
        0.5 * (exp_rem_series(y, 3) - exp_rem_series(-y, 3))
    } else {
        y.sinh() - y
    }
}

/// sin y − y
fn sin_rem(y: f64) -> f64 {
    if y.abs() < 1.0 {
        let y2 = y * y;
        let mut term = -y * y2 / 6.0;
        let mut sum = 0.0f64;
        let mut k = 3.0;
        while term.abs() > 1e-18 * sum.abs().max(1e-300) {
            sum += term;
            term *= -y2 / ((k + 1.0) * (k + 2.0));
            k += 2.0;
        }
        sum
    } else {
        y.sin() - y
    }
}

fn gauss_family(x: f64, kind: u8, tol: f64, cap: u32) -> Result<QuadResult> {
    // kind 0: sin(xt)/(t(eᵗ−1)) − x/(t eᵗ); 1: cos(xt)/(eᵗ−1) − 1/(t eᵗ);
    // 2: sinh(xt)/(t(eᵗ−1)) − x/(t eᵗ); 3: cosh(xt)/(eᵗ−1) − 1/(t eᵗ);
    // 4: [1/(eᵗ−1) − e^{−t}/t] cos(xt)
    // Each is e^{−t} N(t)/(t(1 − e^{−t})) with N = O(t²) written without cancellation;
    // for large t the hyperbolic kinds switch to e^{(±x−1)t} so nothing overflows.
    let f = move |t: f64| {
        let et = (-t).exp();
        let den = -(-t).exp_m1();
        let pre = et / (t * den);
        let r = emt_rem(t);
        match kind {
            0 => pre * (sin_rem(x * t) + x * r),
            1 => pre * (r - 2.0 * t * (0.5 * x * t).sin().powi(2)),
            2 if t > 20.0 => (((x - 1.0) * t).exp() - (-(x + 1.0) * t).exp()) / (2.0 * t * den) - x * et / t,
            2 => pre * (sinh_rem(x * t) + x * r),
            3 if t > 20.0 => (((x - 1.0) * t).exp() + (-(x + 1.0) * t).exp()) / (2.0 * den) - et / t,
            3 => pre * (r + 2.0 * t * (0.5 * x * t).sinh().powi(2)),
            _ => pre * r * (x * t).cos(),
        }
    };
    let (limit, rate) = match kind {
        0 | 2 => (0.5 * x, if kind == 0 { 1.0 } else { 1.0 - x.abs() }),
        1 | 4 => (0.5, 1.0),
        _ => (0.5, 1.0 - x.abs()),
    };
    semi(&f, limit, rate, tol, cap)
}

pub static INTEGRALS: &[IntegralEntry] = &[
    entry!("Q-1.1", "∫₀¹ e^{−px} log Γ(x) dx, valid for all real p", ["p"], T, q11),
    entry!("Q-1.11", "∫₀¹ e^{−px} log x dx = −(γ + log p − Ei(−p))/p", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-1.11", q > 0.0 && q <= 50.0, "p must lie in (0, 50]")?;
        fin(&|x| (-q * x).exp() * x.ln(), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-1.12", "∫₀¹ e^{−px} ψ(1+x) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-1.12", q.abs() <= 50.0 && q != 0.0, "p must be non-zero with |p| ≤ 50")?;
        fin(&|x| (-q * x).exp() * psi(1.0 + x), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-1.13", "∫₀^∞ e^{−px} ψ(1+x) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-1.13", q > 0.0 && q <= 50.0, "p must lie in (0, 50]")?;
        integrate_semi_infinite_with(&|x| (-q * x).exp() * psi(1.0 + x), 0.0, Reg, Decay::Exponential(q), tol, cap)
    }),
    entry!("Q-2.1", "∫₀¹ log Γ(x) cos(pπx) dx", ["p"], T, q_lg_cos),
    entry!("Q-2.10", "∫₀^{1/2} log sin(πx) cos(2pπx) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-2.10", q.abs() < 8.0, "|p| must be below 8")?;
        fin(&|x| sinpi(x).ln() * (2.0 * q * PI * x).cos(), 0.0, 0.5, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-2.12", "∫₀¹ log(sin πx) sin((2x−1)pπ) dx = 0", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-2.12", q.abs() <= 16.0, "|p| must not exceed 16")?;
        fin(&|x| sinpi(x).ln() * ((2.0 * x - 1.0) * q * PI).sin(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-2.13", "∫₀¹ (2x−1)^{2n+1} log(sin πx) dx = 0", ["n"], T, |p, tol, cap| {
        let n = p[0];
        need("Q-2.13", (0.0..=8.0).contains(&n) && n.fract() == 0.0, "n must be an integer in [0, 8]")?;
        let k = 2 * n as i32 + 1;
        fin(&|x| (2.0 * x - 1.0).powi(k) * sinpi(x).ln(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-2.2", "∫₀¹ log Γ(x) sin(pπx) dx", ["p"], T, q_lg_sin),
    entry!("Q-2.6", "∫₀¹ log(sin πx) sin(pπx) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-2.6", q > 0.0 && q < 2.0, "p must lie in (0, 2)")?;
        fin(&|x| sinpi(x).ln() * (q * PI * x).sin(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-2.6-x", "∫₀¹ x e^{−px} log Γ(x) dx (the p-derivative family of the Laplace integral)", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-2.6-x", q.abs() <= 50.0, "|p| must not exceed 50")?;
        fin(&|x| x * (-q * x).exp() * lg(x), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-2.9", "∫₀¹ log(2 sin πx) cos(2pπx) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-2.9", q > 0.0 && q < 1.0, "p must lie in (0, 1)")?;
        fin(&|x| (2.0 * sinpi(x)).ln() * (2.0 * q * PI * x).cos(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-3.13", "∫₀¹ log Γ(x) sin πx dx = (1/π)[log(π/2) + 1]", [], T, |_, tol, cap| {
        fin(&|x| lg(x) * sinpi(x), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-3.6", "∫₀¹ log Γ(x) cos(pπx) dx, Si/Ci form", ["p"], T, q_lg_cos),
    entry!("Q-3.7", "∫₀¹ log Γ(x) sin(pπx) dx, Si/Ci form", ["p"], T, q_lg_sin),
    entry!("Q-4.1", "∫₀¹ x log Γ(x) dx", [], T, |_, tol, cap| { fin(&|x| x * lg(x), 0.0, 1.0, hints(Reg, Reg), tol, cap) }),
    entry!("Q-4.11", "∫₀¹ x² log Γ(x) dx", [], T, |_, tol, cap| { fin(&|x| x * x * lg(x), 0.0, 1.0, hints(Reg, Reg), tol, cap) }),
    entry!("Q-4.12.10", "∫₀¹ B_{2n}(x) log Γ(x) dx", ["n"], T, |p, tol, cap| {
        let n = int_param("Q-4.12.10", p[0])?;
        need("Q-4.12.10", n <= 6, "n must not exceed 6")?;
        fin(&|x| bernoulli_poly(2 * n, x).map(|r| r.value).unwrap_or(f64::NAN) * lg(x), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-4.12.7", "∫₀¹ B_{2n+1}(x) cot(πx) dx", ["n"], COT_TOL, |p, tol, cap| {
        let n = int_param("Q-4.12.7", p[0])?;
        need("Q-4.12.7", n <= 5, "n must not exceed 5")?;
        // B_{2n+1}(1−x) cot π(1−x) = B_{2n+1}(x) cot πx, so fold onto [0, ½]
        let f = move |x: f64| {
            let y = x.min(1.0 - x);
            bernoulli_poly(2 * n + 1, y).map(|r| r.value).unwrap_or(f64::NAN) / (PI * y).tan()
        };
        let lim = (2 * n + 1) as f64 * bernoulli_poly(2 * n, 0.0).map(|r| r.value).unwrap_or(f64::NAN) / PI;
        fin(&f, 0.0, 1.0, hints(Lim(lim), Lim(lim)), tol, cap)
    }),
    entry!("Q-4.12.8", "∫₀¹ B_{2n}(x) log(sin πx) dx", ["n"], T, |p, tol, cap| {
        let n = int_param("Q-4.12.8", p[0])?;
        need("Q-4.12.8", n <= 6, "n must not exceed 6")?;
        fin(&|x| bernoulli_poly(2 * n, x).map(|r| r.value).unwrap_or(f64::NAN) * sinpi(x).ln(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-4.17", "∫₀ᵘ log Γ(x) dx (Alexeiewsky)", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-4.17", u > 0.0 && u <= 1.0, "u must lie in (0, 1]")?;
        fin(&lg, 0.0, u, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-4.25", "∫₀¹ x log x sin 2nπx dx = −Si(2nπ)/(4π²n²)", ["n"], T, |p, tol, cap| {
        let n = int_param("Q-4.25", p[0])? as f64;
        fin(&|x| x * lnx(x) * (2.0 * n * PI * x).sin(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-4.26-lhs", "∫₀¹ x log x cot(πx) dx", [], COT_TOL, |_, tol, cap| {
        fin(&|x| x * lnx(x) * cotpi(x), 0.0, 1.0, hints(Log, Lim(1.0 / PI)), tol, cap)
    }),
    entry!("Q-4.28-lhs", "∫₀¹ log x log(sin πx) dx", [], T, |_, tol, cap| {
        fin(&|x| lnx(x) * sinpi(x).ln(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-4.29-lhs", "∫₀^π log x log(2 sin(x/2)) dx", [], T, |_, tol, cap| {
        fin(&|x| x.ln() * (2.0 * (0.5 * x).sin()).ln(), 0.0, PI, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-4.3", "∫₀¹ x log Γ(x) cos(2pπx) dx", ["p"], T, |p, tol, cap| {
        let q = p[0];
        need("Q-4.3", q > 0.0 && q <= 8.0, "p must lie in (0, 8]")?;
        fin(&|x| x * lg(x) * (2.0 * q * PI * x).cos(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-4.30-lhs", "∫₀^π log x log(cot(x/2)) dx", [], T, |_, tol, cap| {
        // cot(x/2) = sin((π−x)/2)/sin(x/2)
        fin(&|x| x.ln() * ((0.5 * (PI - x)).sin() / (0.5 * x).sin()).ln(), 0.0, PI, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-4.31", "∫₀¹ x log Γ(x) cot(πx) dx", [], COT_TOL, |_, tol, cap| {
        // x log Γ(x) = x log Γ(1+x) − x log x
        let f = |x: f64| (x * lgamma1p(x) - x * lnx(x)) * cotpi(x);
        fin(&f, 0.0, 1.0, hints(Log, Lim(-constants().gamma / PI)), tol, cap)
    }),
    entry!("Q-4.33", "∫₀¹ log G(1+x) cot(πx) dx", [], COT_TOL, |_, tol, cap| {
        let l0 = 0.5 * (constants().log_2pi - 1.0) / PI;
        let l1 = dlog_g_at_2() / PI;
        fin(&|x| lgb(1.0 + x) * cotpi(x), 0.0, 1.0, hints(Lim(l0), Lim(l1)), tol, cap)
    }),
    entry!("Q-4.34", "∫₀¹ [log G(1+x) − x log Γ(x)] cot(πx) dx = −π/24", [], COT_TOL, |_, tol, cap| {
        let l1 = (0.5 * constants().log_2pi - 0.5) / PI;
        let f = |x: f64| (lgb(1.0 + x) - x * lgamma1p(x) + x * lnx(x)) * cotpi(x);
        fin(&f, 0.0, 1.0, hints(Log, Lim(l1)), tol, cap)
    }),
    entry!("Q-4.35", "∫₀¹ log Γ(1+x) cot(πx) dx", [], COT_TOL, |_, tol, cap| {
        let g = constants().gamma;
        fin(&|x| lgamma1p(x) * cotpi(x), 0.0, 1.0, hints(Lim(-g / PI), Lim((1.0 - g) / PI)), tol, cap)
    }),
    entry!("Q-4.36", "∫₀¹ log²Γ(x) dx", [], T, |_, tol, cap| {
        fin(
            &|x| {
                let v = lg(x);
                v * v
            },
            0.0,
            1.0,
            hints(Log, Reg),
            tol,
            cap,
        )
    }),
    entry!("Q-4.36-xpsi", "∫₀¹ x log Γ(x) ψ(x) dx", [], T, |_, tol, cap| {
        // x ψ(x) = x ψ(1+x) − 1
        fin(&|x| lg(x) * (x * psi(1.0 + x) - 1.0), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-4.37", "∫₀¹ x log Γ(x) ψ(1−x) dx", [], T, |_, tol, cap| {
        // log Γ(x) ψ(1−x) = lgΓ(x)[ψ(2−x) − 1/(1−x)]
        let f = |x: f64| {
            let d = 1.0 - x;
            let l = lg(x);
            x * (l * psi(1.0 + d) - l / d)
        };
        fin(&f, 0.0, 1.0, hints(Log, Lim(-constants().gamma)), tol, cap)
    }),
    entry!("Q-4.4", "∫₀¹ x log Γ(x) cos 2nπx dx", ["n"], T, |p, tol, cap| {
        let n = int_param("Q-4.4", p[0])? as f64;
        fin(&|x| x * lg(x) * (2.0 * n * PI * x).cos(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-4.8", "∫₀¹ x log Γ(x) sin 2nπx dx", ["n"], T, |p, tol, cap| {
        let n = int_param("Q-4.8", p[0])? as f64;
        fin(&|x| x * lg(x) * (2.0 * n * PI * x).sin(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-5.20", "∫₀ˣ πt cot(πt) dt (Kinkelin)", ["x"], T, |p, tol, cap| {
        let x = p[0];
        need("Q-5.20", x > 0.0 && x < 1.0, "x must lie in (0, 1)")?;
        fin(&|t| PI * t * cotpi(t), 0.0, x, hints(Lim(1.0), Reg), tol, cap)
    }),
    entry!("Q-5.34", "∫₀^∞ [sinh(xt)/(t(eᵗ−1)) − x/(t eᵗ)] dt, power-series form", ["x"], T, |p, tol, cap| {
        need("Q-5.34", p[0].abs() < 1.0, "|x| must be below 1")?;
        gauss_family(p[0], 2, tol, cap)
    }),
    entry!(
        "Q-5.35",
        "∫₀^∞ [sinh(xt)/(t(eᵗ−1)) − x/(t eᵗ)] dt = ½[log Γ(1−x) − log Γ(1+x)]",
        ["x"],
        T,
        |p, tol, cap| {
            need("Q-5.35", p[0].abs() < 1.0, "|x| must be below 1")?;
            gauss_family(p[0], 2, tol, cap)
        }
    ),
    entry!("Q-5.36", "∫₀^∞ [cosh(xt)/(eᵗ−1) − 1/(t eᵗ)] dt = −½[ψ(1+x) + ψ(1−x)]", ["x"], T, |p, tol, cap| {
        need("Q-5.36", p[0].abs() < 1.0, "|x| must be below 1")?;
        gauss_family(p[0], 3, tol, cap)
    }),
    entry!("Q-5.4", "∫₀^∞ [sin(xt)/(t(eᵗ−1)) − x/(t eᵗ)] dt", ["x"], T, |p, tol, cap| {
        need("Q-5.4", p[0].abs() <= 4.0, "|x| must not exceed 4")?;
        gauss_family(p[0], 0, tol, cap)
    }),
    entry!("Q-5.45-int", "∫₀¹ (ψ(1+x) + γ)/x dx", [], T, |_, tol, cap| {
        let c = constants();
        fin(&|x| (psi(1.0 + x) + c.gamma) / x, 0.0, 1.0, hints(Lim(c.zeta2), Reg), tol, cap)
    }),
    entry!("Q-5.45.2", "∫₀¹ (1−x) log(1−x)/(x log x) dx", [], T, |_, tol, cap| {
        fin(&|x| (1.0 - x) * (-x).ln_1p() / (x * lnx(x)), 0.0, 1.0, hints(Reg, Log), tol, cap)
    }),
    entry!("Q-5.5", "∫₀^∞ [cos(xt)/(eᵗ−1) − 1/(t eᵗ)] dt = Λ(x)", ["x"], T, |p, tol, cap| {
        need("Q-5.5", p[0].abs() <= 4.0, "|x| must not exceed 4")?;
        gauss_family(p[0], 1, tol, cap)
    }),
    entry!("Q-5.51-int", "∫₀¹ [(1/(2x))(1/x − π cot πx) − x/(1−x²)] dx", [], T, |_, tol, cap| {
        let f = |x: f64| {
            if x <= 0.5 {
                0.5 * cot_defect_over_x(x) - x / ((1.0 - x) * (1.0 + x))
            } else {
                // the 1/(1−x) poles cancel in closed form
                let d = 1.0 - x;
                0.5 / (x * x) + (1.0 + 2.0 * x) / (2.0 * x * (1.0 + x)) - d * cot_defect_over_x(d) / (2.0 * x)
            }
        };
        fin(&f, 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-5.52", "∫₀ᵘ (ψ(1+x) + γ)/x dx", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-5.52", u > 0.0 && u <= 1.0, "u must lie in (0, 1]")?;
        let c = constants();
        fin(&|x| (psi(1.0 + x) + c.gamma) / x, 0.0, u, hints(Lim(c.zeta2), Reg), tol, cap)
    }),
    entry!("Q-5.53", "∫₀ᵘ (1/x)(1/x − π cot πx) dx", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-5.53", u > 0.0 && u < 1.0, "u must lie in (0, 1)")?;
        fin(&cot_defect_over_x, 0.0, u, hints(Lim(2.0 * constants().zeta2), Reg), tol, cap)
    }),
    entry!(
        "Q-5.7",
        "∫₀^∞ [1/(eᵗ−1) − 1/t] cos(xt) dt, as ∫[1/(eᵗ−1) − e^{−t}/t] cos(xt) dt + ½ log(x²/(1+x²))",
        ["x"],
        T,
        |p, tol, cap| {
            let x = p[0];
            need("Q-5.7", x > 0.0 && x <= 4.0, "x must lie in (0, 4]")?;
            let mut r = gauss_family(x, 4, tol, cap)?;
            r.value += 0.5 * (x * x / (1.0 + x * x)).ln();
            Ok(r)
        }
    ),
    entry!("Q-6.10", "∫₀ᵘ ψ(1+x) cos²(πx) dx", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-6.10", u > 0.0 && u < 1.0, "u must lie in (0, 1)")?;
        fin(
            &|x| {
                let c = (PI * x).cos();
                psi(1.0 + x) * c * c
            },
            0.0,
            u,
            hints(Reg, Reg),
            tol,
            cap,
        )
    }),
    entry!("Q-6.14", "∫₀^{1/2} ψ(1+x) cos²(πx) dx", [], T, |_, tol, cap| {
        fin(
            &|x| {
                let c = (PI * x).cos();
                psi(1.0 + x) * c * c
            },
            0.0,
            0.5,
            hints(Reg, Reg),
            tol,
            cap,
        )
    }),
    entry!("Q-6.14.1", "∫₀¹ ψ(x) sin²(πx) dx", [], T, |_, tol, cap| psi_sin_sq(0.0, 1.0, tol, cap)),
    entry!("Q-6.14.2", "∫₀^{1/2} ψ(x) sin²(πx) dx", [], T, |_, tol, cap| psi_sin_sq(0.0, 0.5, tol, cap)),
    entry!("Q-6.15", "∫₀ᵘ sin²(πx)/x dx", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-6.15", u > 0.0 && u <= 8.0, "u must lie in (0, 8]")?;
        fin(&|x| (PI * x).sin().powi(2) / x, 0.0, u, hints(Lim(0.0), Reg), tol, cap)
    }),
    entry!("Q-6.16", "∫₀¹ x log Γ(x) sin 2πx dx = γ/(4π)", [], T, |_, tol, cap| {
        fin(&|x| x * lg(x) * (2.0 * PI * x).sin(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.17", "∫₀¹ log Γ(x) cos 2kπx dx = 1/(4k)", ["k"], T, |p, tol, cap| {
        let k = int_param("Q-6.17", p[0])? as f64;
        fin(&|x| lg(x) * (2.0 * k * PI * x).cos(), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-6.18", "∫₀¹ x log Γ(x) cos 2πx dx", [], T, |_, tol, cap| {
        fin(&|x| x * lg(x) * (2.0 * PI * x).cos(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.22", "∫₀¹ ψ(x) sin(πx) dx", [], T, |_, tol, cap| psi_sin(1.0, tol, cap)),
    entry!("Q-6.24", "∫₀¹ x(1−x) cos(πx) cot(πx) dx = (7ζ(3) − 4)/π³", [], COT_TOL, |_, tol, cap| x1mx_cos_cot(tol, cap)),
    entry!("Q-6.34", "∫₀¹ ψ(x) x(1−x) cos(πx) dx", [], T, |_, tol, cap| {
        fin(&|x| (x * psi(1.0 + x) - 1.0) * (1.0 - x) * (PI * x).cos(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.37", "∫₀¹ x(1−x) cos(πx) cot(πx) dx = (2/π³)[(7/2)ζ(3) − 2]", [], COT_TOL, |_, tol, cap| x1mx_cos_cot(
        tol, cap
    )),
    entry!("Q-6.38", "∫₀¹ x(1−x) cos(πx) ψ(x/2) dx (Glasser)", [], T, |_, tol, cap| {
        // x ψ(x/2) = x ψ(1 + x/2) − 2
        fin(&|x| (x * psi(1.0 + 0.5 * x) - 2.0) * (1.0 - x) * (PI * x).cos(), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.39", "∫₀¹ x(1−x)(1 − cos πx) ψ(x/2) dx", [], T, |_, tol, cap| {
        let f = |x: f64| {
            let h = (0.5 * PI * x).sin();
            (x * psi(1.0 + 0.5 * x) - 2.0) * (1.0 - x) * 2.0 * h * h
        };
        fin(&f, 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.40", "∫₀¹ x(1−x) ψ(x/2) dx", [], T, |_, tol, cap| {
        fin(&|x| (x * psi(1.0 + 0.5 * x) - 2.0) * (1.0 - x), 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.7", "∫₀¹ (y−1)/((1+y) log y) dy = log(π/2)", [], T, |_, tol, cap| {
        fin(&|y| (y - 1.0) / ((1.0 + y) * lnx(y)), 0.0, 1.0, hints(Reg, Lim(0.5)), tol, cap)
    }),
    entry!("Q-6.7.1", "∫₀¹ (1 − cos 2πx) ψ(1−x) dx", [], T, |_, tol, cap| {
        // (1 − cos 2πx) ψ(1−x) = 2 sin²πx [ψ(2−x) − 1/(1−x)]
        let f = |x: f64| {
            let d = 1.0 - x;
            let s = sinpi(x);
            2.0 * s * s * psi(1.0 + d) - 2.0 * s * s / d
        };
        fin(&f, 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.7.2", "∫₀¹ x(1−x)(1 − cos 2πx) ψ(x) dx", [], T, |_, tol, cap| {
        let f = |x: f64| {
            let s = sinpi(x);
            (x * psi(1.0 + x) - 1.0) * (1.0 - x) * 2.0 * s * s
        };
        fin(&f, 0.0, 1.0, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-6.8", "∫₀¹ log Γ(x) sin 2πx dx = (γ + log 2π)/(2π)", [], T, |_, tol, cap| {
        fin(&|x| lg(x) * (2.0 * PI * x).sin(), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-6.9", "∫₀¹ log Γ(x) sin 2kπx dx = (γ + log 2πk)/(2πk)", ["k"], T, |p, tol, cap| {
        let k = int_param("Q-6.9", p[0])? as f64;
        fin(&|x| lg(x) * (2.0 * k * PI * x).sin(), 0.0, 1.0, hints(Log, Reg), tol, cap)
    }),
    entry!("Q-7.13", "∫₀¹ ψ(x) sin²(πx) dx = −½[γ + log 2π]", [], T, |_, tol, cap| psi_sin_sq(0.0, 1.0, tol, cap)),
    entry!("Q-7.15", "∫₀ᵘ ψ(x) sin(πx) dx", ["u"], T, |p, tol, cap| {
        let u = p[0];
        need("Q-7.15", u > 0.0 && u <= 1.0, "u must lie in (0, 1]")?;
        psi_sin(u, tol, cap)
    }),
    entry!("Q-7.17", "∫₀^{1/2} ψ(x) sin(πx) dx", [], T, |_, tol, cap| psi_sin(0.5, tol, cap)),
    entry!("Q-bose-2", "∫₀^∞ t²/(eᵗ − 1) dt = 2ζ(3)", [], T, |_, tol, cap| {
        semi(&|t| t * t / t.exp_m1(), 0.0, 1.0, tol, cap)
    }),
    entry!("Q-gauss-gamma", "∫₀^∞ [1/(eᵗ − 1) − 1/(t eᵗ)] dt = γ", [], T, |_, tol, cap| {
        semi(&|t| 1.0 / t.exp_m1() - (-t).exp() / t, 0.5, 1.0, tol, cap)
    }),
    entry!("Q-log-sin", "∫₀¹ log sin(πx) dx = −log 2", [], T, |_, tol, cap| {
        fin(&|x| sinpi(x).ln(), 0.0, 1.0, Hints::LOG_BOTH, tol, cap)
    }),
    entry!("Q-trunc-loggamma-cot", "∫_ε^{1−ε} log Γ(x) cot(πx) dx (divergent as ε → 0)", ["eps"], COT_TOL, |p, tol, cap| {
        let e = p[0];
        need("Q-trunc-loggamma-cot", e > 0.0 && e < 0.25, "ε must lie in (0, ¼)")?;
        fin(&|x| lg(x) * cotpi(x), e, 1.0 - e, hints(Reg, Reg), tol, cap)
    }),
    entry!("Q-trunc-logx-cot", "∫_ε^{1−ε} log x cot(πx) dx (divergent as ε → 0)", ["eps"], COT_TOL, |p, tol, cap| {
        let e = p[0];
        need("Q-trunc-logx-cot", e > 0.0 && e < 0.25, "ε must lie in (0, ¼)")?;
        fin(&|x| lnx(x) * cotpi(x), e, 1.0 - e, hints(Reg, Reg), tol, cap)
    }),
];

pub fn integral_ids() -> Vec<&'static str> {
    INTEGRALS.iter().map(|e| e.id).collect()
}

pub fn find_integral(id: &str) -> Option<&'static IntegralEntry> {
    INTEGRALS.iter().find(|e| e.id == id)
}

/// Evaluate a catalogued integral with an explicit level cap.
pub fn integral_catalog_with(id: &str, params: &[f64], tol: f64, level_cap: u32) -> Result<QuadResult> {
    let e = find_integral(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if params.len() != e.params.len() {
        return Err(bad(id, format!("expected {} parameter(s) ({}), got {}", e.params.len(), e.params.join(", "), params.len())));
    }
    if let Some(x) = params.iter().find(|x| !x.is_finite()) {
        return Err(bad(id, format!("non-finite parameter {x}")));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    (e.eval)(params, tol, level_cap)
}

pub fn integral_catalog(id: &str, params: &[f64], tol: f64) -> Result<QuadResult> {
    integral_catalog_with(id, params, tol, DEFAULT_LEVEL_CAP)
}
