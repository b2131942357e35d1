//! Named sums. Each entry validates its parameters, then evaluates by direct
//! summation with the tail model that suits its terms.

use super::expand::{log1p_rem, psi1_minus_log};
use super::power::zeta_minus_one;
use super::{fourier_sum, oscillatory_tail, sum_series, SeriesResult, SeriesSpec, TailModel};
use crate::specfun::{
    ci, ci_lattice_asymptotic, constants, digamma_real, hurwitz_derivs, si, si_lattice_asymptotic, zeta_int, NeumaierSum,
};
use crate::{Error, Result, Settings};
use std::f64::consts::{FRAC_PI_2, LN_2, PI};

const TWO_PI: f64 = 2.0 * PI;
/// Beyond this index si/Ci at lattice points come from their asymptotic
/// expansions, which are smooth in n.
const LATTICE_SWITCH: f64 = 200.0;
const EPS: f64 = f64::EPSILON;

pub struct SeriesEntry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub params: &'static [&'static str],
    eval: fn(&[f64], &Settings) -> Result<SeriesResult>,
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

fn em(term: &(dyn Fn(f64) -> f64 + Sync), n0: u64, s: &Settings) -> Result<SeriesResult> {
    sum_series(&SeriesSpec { term, n0, tail_model: TailModel::EulerMaclaurin(2), max_terms: s.max_terms })
}

fn alt(term: &(dyn Fn(f64) -> f64 + Sync), n0: u64, s: &Settings) -> Result<SeriesResult> {
    sum_series(&SeriesSpec { term, n0, tail_model: TailModel::Alternating, max_terms: s.max_terms })
}

fn parity(n: f64) -> f64 {
    if (n as u64).is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

fn with_err(mut r: SeriesResult, extra: f64) -> SeriesResult {
    r.abs_err += extra;
    r
}

fn shifted(mut r: SeriesResult, c: f64) -> SeriesResult {
    r.value += c;
    r.abs_err += EPS * c.abs();
    r
}

/// si(mπ) with cos(mπ) = `cos_sign`: exact kernel at small integer m, the
/// asymptotic expansion beyond the lattice threshold or off the integers, where
/// it is the smooth continuation the Euler–Maclaurin tail integrates.
fn si_at(m: f64, cos_sign: f64) -> f64 {
    if m.fract() == 0.0 && m <= 2.0 * LATTICE_SWITCH {
        si(m * PI).map(|r| r.value - FRAC_PI_2).unwrap_or(f64::NAN)
    } else {
        si_lattice_asymptotic(m * PI, cos_sign).value
    }
}

fn ci_at(m: f64, cos_sign: f64) -> f64 {
    if m.fract() == 0.0 && m <= 2.0 * LATTICE_SWITCH {
        ci(m * PI).map(|r| r.value).unwrap_or(f64::NAN)
    } else {
        ci_lattice_asymptotic(m * PI, cos_sign).value
    }
}

// Kernel error carried by the exactly evaluated lattice terms.
fn lattice_err(weight_sum: f64) -> f64 {
    1e-15 * weight_sum
}

fn harmonic(x: f64) -> f64 {
    digamma_real(x + 1.0).map(|r| r.value).unwrap_or(f64::NAN) + constants().gamma
}

/// ζ′(n) at integer n ≥ 2.
fn zeta_prime_int(n: u32) -> Result<f64> {
    if n >= 14 {
        let mut acc = 0.0;
        let mut k = 2.0f64;
        loop {
            let t = k.ln() * k.powi(-(n as i32));
            acc += t;
            if t < 1e-20 * acc {
                return Ok(-acc);
            }
            k += 1.0;
        }
    }
    Ok(hurwitz_derivs(n as f64, 1.0, 1)?[1].value)
}

/// T_n = Σ_{m≠n} log m/(m²−n²): direct to M−1, then
/// Σ_{m≥M} = −Σ_k n^{2k} ∂_s ζ(2k+2, M).
pub fn t_n(n: u64, direct_to: u64) -> Result<(f64, f64)> {
    let big_m = direct_to.max(4 * n + 16);
    let nf = n as f64;
    let n2 = nf * nf;
    let mut acc = NeumaierSum::new();
    for m in 2..big_m {
        if m != n {
            let mf = m as f64;
            acc.add(mf.ln() / ((mf - nf) * (mf + nf)));
        }
    }
    let mut tail = NeumaierSum::new();
    let mut tail_err = 0.0;
    let mut p = 1.0;
    for k in 0..40u32 {
        let d = hurwitz_derivs(2.0 * k as f64 + 2.0, big_m as f64, 1)?[1];
        let t = -p * d.value;
        tail.add(t);
        tail_err += p * d.abs_err;
        if t.abs() < 1e-18 * tail.value().abs() {
            break;
        }
        p *= n2;
    }
    let v = acc.value() + tail.value();
    Ok((v, acc.rounding_err() + tail_err + tail.rounding_err() + 2.0 * EPS * v.abs()))
}

fn fourier(h: &(dyn Fn(f64) -> f64 + Sync), theta: f64, phase: f64, n0: u64, direct: u64) -> Result<(num_complex::Complex64, f64)> {
    fourier_sum(h, theta, phase, n0, direct)
}

fn osc_result(value: f64, abs_err: f64, terms: u64) -> SeriesResult {
    SeriesResult { value, abs_err, terms_used: terms, method: "asymptotic_subtraction".into() }
}

// theta = 2πx must stay away from multiples of 2π for the summation-by-parts tail.
fn fourier_arg(id: &str, x: f64) -> Result<()> {
    need(id, x > 0.0 && x < 1.0, "argument must lie in (0, 1)")?;
    need(id, x > 1e-3 && x < 1.0 - 1e-3, "argument too close to 0 or 1 for the oscillatory tail")
}

/// Coefficients of the Fourier series of log G(x) on (0,1):
/// log G(x) = a₀ + Σ aₙ cos 2nπx + bₙ sin 2nπx.
pub fn log_g_fourier_coeffs(n: u64, variant_an: bool) -> Result<(f64, f64, f64)> {
    let c = constants();
    let nf = n as f64;
    let (tn, terr) = t_n(n, 10 * n + 100)?;
    let pi2 = PI * PI;
    let t_div = if variant_an { nf * nf } else { pi2 };
    let a = (0.5 * nf.ln() - c.gamma - c.log_2pi - 1.0) / (2.0 * pi2 * nf * nf) - 0.25 / nf - tn / t_div;
    let b = (0.5 / nf - c.gamma - (4.0 * pi2 * nf).ln() - harmonic(nf)) / (TWO_PI * nf);
    Ok((a, b, terr / t_div + 8.0 * EPS * (a.abs() + b.abs())))
}

fn fs_log_g(x: f64, variant: bool) -> Result<SeriesResult> {
    const N: u64 = 2000;
    let c = constants();
    let a0 = 1.0 / 12.0 - 2.0 * c.log_a - 0.25 * c.log_2pi;
    let mut acc = NeumaierSum::new();
    let mut kerr = 0.0;
    let theta = TWO_PI * x;
    for n in 1..=N {
        let (a, b, e) = log_g_fourier_coeffs(n, variant)?;
        let ang = theta * n as f64;
        acc.add(a * ang.cos() + b * ang.sin());
        kerr += e + EPS * ang * (a.abs() + b.abs());
    }
    let ha = |n: f64| log_g_fourier_coeffs(n as u64, variant).map(|r| r.0).unwrap_or(f64::NAN);
    let hb = |n: f64| log_g_fourier_coeffs(n as u64, variant).map(|r| r.1).unwrap_or(f64::NAN);
    let ta = oscillatory_tail(&ha, theta, N + 1, 0.0)?;
    let tb = oscillatory_tail(&hb, theta, N + 1, 0.0)?;
    let v = a0 + acc.value() + ta.value.re + tb.value.im;
    Ok(osc_result(v, kerr + acc.rounding_err() + ta.abs_err + tb.abs_err + 4.0 * EPS * v.abs(), N))
}

macro_rules! entry {
    ($id:expr, $anchor:expr, [$($p:expr),*], $f:expr) => {
        SeriesEntry { id: $id, anchor: $anchor, params: &[$($p),*], eval: $f }
    };
}

pub static SERIES: &[SeriesEntry] = &[
    entry!("FS-3.19", "Σ cos(2nx)/(4n²−1); sin x = 2/π − (4/π) Σ cos 2nx/(4n²−1)", ["x"], |p, s| {
        let x = p[0];
        need("FS-3.19", x > 1e-3 && x < PI - 1e-3, "x must lie in (0, π)")?;
        let h = |n: f64| 1.0 / (4.0 * n * n - 1.0);
        let (z, e) = fourier(&h, 2.0 * x, 0.0, 1, s.max_terms)?;
        Ok(osc_result(z.re, e, s.max_terms))
    }),
    entry!("FS-3.22", "Σ (−1)^{n+1} cos(nu)/(n²−x²); π cos ux/sin πx = 1/x + 2x Σ …", ["x", "u"], |p, s| {
        let (x, u) = (p[0], p[1]);
        need("FS-3.22", x > 0.0 && x < 1.0, "x must lie in (0, 1)")?;
        need("FS-3.22", u.abs() < PI - 1e-3, "u must lie in (−π, π)")?;
        let h = |n: f64| 1.0 / ((n - x) * (n + x));
        // (−1)^{n+1} cos nu = Re e^{i(n(u+π) + π)}
        let (z, e) = fourier(&h, u + PI, PI, 1, s.max_terms)?;
        Ok(osc_result(z.re, e, s.max_terms))
    }),
    entry!("FS-4.16", "log G(x) = a₀ + Σ aₙ cos 2nπx + bₙ sin 2nπx, aₙ with −Tₙ/π²", ["x"], |p, _| {
        fourier_arg("FS-4.16", p[0])?;
        fs_log_g(p[0], false)
    }),
    entry!("FS-4.16-variant", "log G(x) Fourier series with aₙ term −Tₙ/n²", ["x"], |p, _| {
        fourier_arg("FS-4.16-variant", p[0])?;
        fs_log_g(p[0], true)
    }),
    entry!("FS-6.10", "Σ_{n≥2} log(1−1/n²) sin(2nπu)/n", ["u"], |p, s| {
        fourier_arg("FS-6.10", p[0])?;
        let h = |n: f64| (-1.0 / (n * n)).ln_1p() / n;
        let (z, e) = fourier(&h, TWO_PI * p[0], 0.0, 2, s.max_terms)?;
        Ok(osc_result(z.im, e, s.max_terms))
    }),
    entry!("FS-6.2", "−Σ_{n≥2} log(1−1/n²) cos 2nπx = log 2 + π/2 sin 2πx + (1−cos 2πx)(log π + γ + ψ(x))", ["x"], |p, s| {
        fourier_arg("FS-6.2", p[0])?;
        let h = |n: f64| -(-1.0 / (n * n)).ln_1p();
        let (z, e) = fourier(&h, TWO_PI * p[0], 0.0, 2, s.max_terms)?;
        Ok(osc_result(z.re, e, s.max_terms))
    }),
    entry!("FS-7.1", "Σ_{n≥1} sin((2n+1)πx) log(1+1/n)", ["x"], |p, s| {
        fourier_arg("FS-7.1", p[0])?;
        let h = |n: f64| (1.0 / n).ln_1p();
        let (z, e) = fourier(&h, TWO_PI * p[0], PI * p[0], 1, s.max_terms)?;
        Ok(osc_result(z.im, e, s.max_terms))
    }),
    entry!("FS-7.15", "Σ [2n sin 2nπu sin πu + cos 2nπu (cos πu − 1)] log n/(4n²−1)", ["u"], |p, s| {
        let u = p[0];
        need("FS-7.15", u > 0.0 && u <= 1.0, "u must lie in (0, 1]")?;
        let h2 = |n: f64| n.ln() / (4.0 * n * n - 1.0);
        if u == 1.0 {
            // sin 2nπ = 0, cos 2nπ = 1, cos π − 1 = −2
            let r = em(&h2, 1, s)?;
            return Ok(SeriesResult { value: -2.0 * r.value, abs_err: 2.0 * r.abs_err, ..r });
        }
        fourier_arg("FS-7.15", u)?;
        let h1 = |n: f64| 2.0 * n * n.ln() / (4.0 * n * n - 1.0);
        let th = TWO_PI * u;
        let (z1, e1) = fourier(&h1, th, 0.0, 1, s.max_terms)?;
        let (z2, e2) = fourier(&h2, th, 0.0, 1, s.max_terms)?;
        let (su, cu) = (PI * u).sin_cos();
        let v = su * z1.im + (cu - 1.0) * z2.re;
        Ok(osc_result(v, e1 + 2.0 * e2 + 4.0 * EPS * v.abs(), s.max_terms))
    }),
    entry!("FS-8.12", "Σ [sin πt cos 2πnt − (−1)ⁿ − 2n cos πt sin 2πnt]/(4n²−1) = (sin πt − 1)/2", ["t"], |p, s| {
        let t = p[0];
        fourier_arg("FS-8.12", t)?;
        let h = |n: f64| 1.0 / (4.0 * n * n - 1.0);
        let hn = |n: f64| 2.0 * n / (4.0 * n * n - 1.0);
        let th = TWO_PI * t;
        let (z1, e1) = fourier(&h, th, 0.0, 1, s.max_terms)?;
        let (z2, e2) = fourier(&hn, th, 0.0, 1, s.max_terms)?;
        let a = alt(&|n: f64| parity(n) / (4.0 * n * n - 1.0), 1, s)?;
        let (st, ct) = (PI * t).sin_cos();
        let v = st * z1.re - a.value - ct * z2.im;
        Ok(osc_result(v, e1 + e2 + a.abs_err + 4.0 * EPS * v.abs(), s.max_terms))
    }),
    entry!("FS-8.13", "Σ cos(2πnt)/(4n²−1); sin πt = 2/π − (4/π) Σ …", ["t"], |p, s| {
        fourier_arg("FS-8.13", p[0])?;
        let h = |n: f64| 1.0 / (4.0 * n * n - 1.0);
        let (z, e) = fourier(&h, TWO_PI * p[0], 0.0, 1, s.max_terms)?;
        Ok(osc_result(z.re, e, s.max_terms))
    }),
    entry!("FS-8.14", "Σ n sin(2πnt)/(4n²−1) = (π/8) cos πt", ["t"], |p, s| {
        fourier_arg("FS-8.14", p[0])?;
        let h = |n: f64| n / (4.0 * n * n - 1.0);
        let (z, e) = fourier(&h, TWO_PI * p[0], 0.0, 1, s.max_terms)?;
        Ok(osc_result(z.im, e, s.max_terms))
    }),
    entry!("S-1.20", "Σ log n/(n²+u²) = Σ (−1)^m ζ′(2m) u^{2(m−1)}", ["u"], |p, s| {
        let u = p[0];
        let u2 = u * u;
        let r = em(&|n: f64| n.ln() / (n * n + u2), 1, s)?;
        if u.abs() >= 1.0 {
            return Ok(r);
        }
        let mut acc = NeumaierSum::new();
        let mut pw = 1.0;
        for m in 1..200u32 {
            let t = if m % 2 == 0 { 1.0 } else { -1.0 } * zeta_prime_int(2 * m)? * pw;
            acc.add(t);
            if t.abs() < 1e-18 {
                break;
            }
            pw *= u2;
        }
        let dev = (acc.value() - r.value).abs();
        Ok(with_err(r, dev))
    }),
    entry!("S-1.23", "Σ 1/(n²+u²) = Σ (−1)^{m+1} ζ(2m) u^{2(m−1)}", ["u"], |p, s| {
        let u = p[0];
        let u2 = u * u;
        let r = em(&|n: f64| 1.0 / (n * n + u2), 1, s)?;
        if u.abs() >= 1.0 {
            return Ok(r);
        }
        let mut acc = NeumaierSum::new();
        let mut pw = 1.0;
        for m in 1..400u32 {
            let t = if m % 2 == 1 { 1.0 } else { -1.0 } * zeta_int(2 * m) * pw;
            acc.add(t);
            if t.abs() < 1e-18 {
                break;
            }
            pw *= u2;
        }
        let dev = (acc.value() - r.value).abs();
        Ok(with_err(r, dev))
    }),
    entry!("S-1.8", "Σ (γ + log 2πn)/(4π²n² + p²)", ["p"], |p, s| {
        let p2 = p[0] * p[0];
        let g = constants().gamma;
        em(&|n: f64| (g + (TWO_PI * n).ln()) / (4.0 * PI * PI * n * n + p2), 1, s)
    }),
    entry!("S-2.1", "Σ log n/(4n² − p²)", ["p"], |p, s| {
        let q = p[0];
        need("S-2.1", q.abs() < 2.0, "|p| must be below 2")?;
        em(&|n: f64| n.ln() / ((2.0 * n - q) * (2.0 * n + q)), 1, s)
    }),
    entry!("S-2.10", "Σ (−1)ⁿ n/(n² − p²)", ["p"], |p, s| {
        let q = p[0];
        need("S-2.10", q.abs() < 1.0, "|p| must be below 1")?;
        alt(&|n: f64| parity(n) * n / ((n - q) * (n + q)), 1, s)
    }),
    entry!("S-2.8", "Σ 1/(n(n² − p²)); ψ(1+p) + ψ(1−p) + 2γ = −2p² Σ …", ["p"], |p, s| {
        let q = p[0];
        need("S-2.8", q.abs() < 1.0, "|p| must be below 1")?;
        em(&|n: f64| 1.0 / (n * (n - q) * (n + q)), 1, s)
    }),
    entry!("S-3.14", "Σ (Ci(2nπ) − γ − log 2πn)/(4n² − p²)", ["p"], |p, s| {
        let q = p[0];
        need("S-3.14", q.abs() < 2.0, "|p| must be below 2")?;
        let g = constants().gamma;
        let r = em(&|n: f64| (ci_at(2.0 * n, 1.0) - g - (TWO_PI * n).ln()) / ((2.0 * n - q) * (2.0 * n + q)), 1, s)?;
        Ok(with_err(r, lattice_err(1.0)))
    }),
    entry!("S-3.16-ci", "Σ Ci(2nπx)/(4n² − 1), 2x a positive integer", ["x"], |p, s| {
        let x = p[0];
        let k = 2.0 * x;
        need("S-3.16-ci", k >= 1.0 && k.fract() == 0.0 && k <= 64.0, "2x must be an integer in [1, 64]")?;
        let r = if (k as u64).is_multiple_of(2) {
            em(&|n: f64| ci_at(k * n, 1.0) / (4.0 * n * n - 1.0), 1, s)?
        } else {
            alt(&|n: f64| ci_at(k * n, parity(n)) / (4.0 * n * n - 1.0), 1, s)?
        };
        Ok(with_err(r, lattice_err(1.0)))
    }),
    entry!("S-3.16-log", "Σ (γ + log 2πnx)/(4n² − 1)", ["x"], |p, s| {
        let x = p[0];
        need("S-3.16-log", x > 0.0, "x must be positive")?;
        let g = constants().gamma;
        em(&|n: f64| (g + (TWO_PI * n * x).ln()) / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-3.8", "Σ si(2nπ)/(n(4n² − p²)); 2p²/π Σ … (Si/Ci closed form)", ["p"], |p, s| {
        let q = p[0];
        need("S-3.8", q.abs() < 2.0, "|p| must be below 2")?;
        let r = em(&|n: f64| si_at(2.0 * n, 1.0) / (n * (2.0 * n - q) * (2.0 * n + q)), 1, s)?;
        Ok(with_err(r, lattice_err(1.0)))
    }),
    entry!("S-4.2", "Σ (γ + log 2πn)/(n² − p²)", ["p"], |p, s| {
        let q = p[0];
        need("S-4.2", q > 0.0 && q < 1.0, "p must lie in (0, 1)")?;
        let g = constants().gamma;
        em(&|n: f64| (g + (TWO_PI * n).ln()) / ((n - q) * (n + q)), 1, s)
    }),
    entry!("S-4.26", "Σ Si(2πn)/n² = (π/2)ζ(2) + Σ si(2πn)/n²", [], |_, s| {
        let r = em(&|n: f64| si_at(2.0 * n, 1.0) / (n * n), 1, s)?;
        Ok(with_err(shifted(r, FRAC_PI_2 * constants().zeta2), lattice_err(2.0)))
    }),
    entry!("S-4.27", "Σ ζ(2n)/(2n+1)² = Σ (ζ(2n) − 1)/(2n+1)² + Σ 1/(2n+1)²", [], |_, _| {
        let mut acc = NeumaierSum::new();
        let mut n = 1u32;
        loop {
            let t = zeta_minus_one(2 * n) / ((2 * n + 1) as f64).powi(2);
            acc.add(t);
            if t < 1e-20 || n > 200 {
                break;
            }
            n += 1;
        }
        // Σ_{n≥1} 1/(2n+1)² = ζ(2)·3/4 − 1
        let odd = 0.75 * constants().zeta2 - 1.0;
        let v = acc.value() + odd;
        Ok(SeriesResult {
            value: v,
            abs_err: acc.rounding_err() + 4.0 * EPS * v.abs() + 1e-16,
            terms_used: n as u64,
            method: "asymptotic_subtraction".into(),
        })
    }),
    entry!("S-4.29-aux", "Σ Si(nπ)/n² = (π/2)ζ(2) + Σ si(nπ)/n²", [], |_, s| {
        let r = alt(&|n: f64| si_at(n, parity(n)) / (n * n), 1, s)?;
        Ok(with_err(shifted(r, FRAC_PI_2 * constants().zeta2), lattice_err(2.0)))
    }),
    entry!("S-4.3", "Σ (γ + log 2πn)/(n² − p²)²", ["p"], |p, s| {
        let q = p[0];
        need("S-4.3", q > 0.0 && q < 1.0, "p must lie in (0, 1)")?;
        let g = constants().gamma;
        em(&|n: f64| (g + (TWO_PI * n).ln()) / ((n - q) * (n + q)).powi(2), 1, s)
    }),
    entry!("S-4.30-aux", "Σ Si((2n−1)π)/(2n−1)² = (π/2)(π²/8) + Σ si((2n−1)π)/(2n−1)²", [], |_, s| {
        let r = em(&|n: f64| si_at(2.0 * n - 1.0, -1.0) / (2.0 * n - 1.0).powi(2), 1, s)?;
        Ok(with_err(shifted(r, FRAC_PI_2 * PI * PI / 8.0), lattice_err(2.0)))
    }),
    entry!("S-4.31.1", "Σ (γ + log n − Hₙ)/n = γ₁ − ½[ζ(2) − γ²]", [], |_, s| {
        em(&|n: f64| -psi1_minus_log(n) / n, 1, s)
    }),
    entry!("S-4.32", "Σ Hₙ [log(1 + 1/n) − 1/n] = −[γ₁ + ½(ζ(2) + γ²)]", [], |_, s| {
        em(&|n: f64| harmonic(n) * (log1p_rem(1.0 / n, 2) - 0.5 / (n * n)), 1, s)
    }),
    entry!("S-4.32.1", "Σ [(γ + log n)/n − Hₙ log(1 + 1/n)] = 2γ₁ + γ²", [], |_, s| {
        em(&|n: f64| -psi1_minus_log(n) / n + harmonic(n) * (0.5 / (n * n) - log1p_rem(1.0 / n, 2)), 1, s)
    }),
    entry!("S-4.35", "Σ Ci(2πn)/(πn)", [], |_, s| {
        let r = em(&|n: f64| ci_at(2.0 * n, 1.0) / (PI * n), 1, s)?;
        Ok(with_err(r, lattice_err(2.0)))
    }),
    entry!("S-4.4-Tn", "Tₙ = Σ_{m≠n} log m/(m² − n²)", ["n"], |p, s| {
        let n = p[0];
        need("S-4.4-Tn", n >= 1.0 && n.fract() == 0.0 && n <= 1e6, "n must be an integer in [1, 10⁶]")?;
        let n = n as u64;
        let direct = s.max_terms.max(10 * n);
        let (v, e) = t_n(n, direct)?;
        Ok(SeriesResult { value: v, abs_err: e, terms_used: direct, method: "asymptotic_subtraction".into() })
    }),
    entry!("S-5.13", "Σ [n/(n² − x²) − log(1 + 1/n)]; at x = ½ equals −1 + γ + log 4", ["x"], |p, s| {
        let x = p[0];
        need("S-5.13", x.abs() < 1.0, "|x| must be below 1")?;
        let x2 = x * x;
        em(&|n: f64| 0.5 / (n * n) + x2 / (n * (n - x) * (n + x)) - log1p_rem(1.0 / n, 2), 1, s)
    }),
    entry!("S-5.18", "Σ [n log(1 − 1/(4n²)) + ¼ log(1 + 1/n)] = 3ζ′(−1) + ¼ + (1/12) log 2", [], |_, s| {
        em(&|n: f64| -0.125 / (n * n) + n * log1p_rem(-0.25 / (n * n), 1) + 0.25 * log1p_rem(1.0 / n, 2), 1, s)
    }),
    entry!("S-5.24.4", "2 Σ x/(x² + 4π²n²) = 1/(eˣ − 1) − 1/x + ½; series part Σ x/(x² + 4π²n²)", ["x"], |p, s| {
        let x = p[0];
        em(&|n: f64| x / (x * x + 4.0 * PI * PI * n * n), 1, s)
    }),
    entry!("S-5.44.4", "Σ [(1 + n) log(1 + 1/n) − 1 − 1/(2n)] = 1 − ½(γ + log 2π)", [], |_, s| {
        em(&|n: f64| -0.5 / (n * n) + (1.0 + n) * log1p_rem(1.0 / n, 2), 1, s)
    }),
    entry!("S-5.44.5", "Σ [(½ + n) log(1 + 1/n) − 1] = 1 − ½ log 2π", [], |_, s| {
        em(&|n: f64| 1.0 / (12.0 * n * n) + 1.0 / (6.0 * n * n * n) + (n + 0.5) * log1p_rem(1.0 / n, 3), 1, s)
    }),
    entry!("S-5.45", "forms of the ψ/x integral: 1 Σ log(n+1)/(n(n+1)), 2 Σ (−1)^{n+1} ζ(n+1)/n, 3 −Σ_{n≥2} ζ′(n), 4 Σ log(1+1/n)/n", ["form"], |p, s| {
        match p[0] {
            1.0 => em(&|n: f64| n.ln_1p() / (n * (n + 1.0)), 1, s),
            2.0 => {
                let mut acc = NeumaierSum::new();
                let mut n = 1u32;
                loop {
                    let t = if n % 2 == 1 { 1.0 } else { -1.0 } * zeta_minus_one(n + 1) / n as f64;
                    acc.add(t);
                    if t.abs() < 1e-20 || n > 200 {
                        break;
                    }
                    n += 1;
                }
                let v = acc.value() + LN_2;
                Ok(SeriesResult { value: v, abs_err: acc.rounding_err() + 4.0 * EPS * v, terms_used: n as u64, method: "asymptotic_subtraction".into() })
            }
            3.0 => {
                let mut acc = NeumaierSum::new();
                let mut n = 2u32;
                loop {
                    let t = -zeta_prime_int(n)?;
                    acc.add(t);
                    if t.abs() < 1e-20 || n > 200 {
                        break;
                    }
                    n += 1;
                }
                let v = acc.value();
                Ok(SeriesResult { value: v, abs_err: acc.rounding_err() + 1e-15, terms_used: n as u64 - 1, method: "none".into() })
            }
            4.0 => em(&|n: f64| (1.0 / n).ln_1p() / n, 1, s),
            _ => Err(bad("S-5.45", "form must be 1, 2, 3 or 4")),
        }
    }),
    entry!("S-5.46.2", "Σ [ζ(2n+1) − 1] = ¼", [], |_, _| {
        let mut acc = NeumaierSum::new();
        let mut n = 1u32;
        loop {
            let t = zeta_minus_one(2 * n + 1);
            acc.add(t);
            if t < 1e-20 || n > 200 {
                break;
            }
            n += 1;
        }
        let v = acc.value();
        Ok(SeriesResult { value: v, abs_err: acc.rounding_err() + 4.0 * EPS * v, terms_used: n as u64, method: "none".into() })
    }),
    entry!("S-5.49", "Σ_{n≥2} (1/n) log(1 − 1/n²)", [], |_, s| {
        em(&|n: f64| (-1.0 / (n * n)).ln_1p() / n, 2, s)
    }),
    entry!("S-5.52", "Σ (1/n) log((n + u)/n) = ∫₀ᵘ (ψ(1+x) + γ)/x dx", ["u"], |p, s| {
        let u = p[0];
        need("S-5.52", u > -1.0 && u <= 1.0, "u must lie in (−1, 1]")?;
        em(&|n: f64| (u / n).ln_1p() / n, 1, s)
    }),
    entry!("S-5.56", "Σ_{j≥2} [j log(1 − 1/j) + 1 + 1/(2j)] = ½[γ + log 2π − 3]", [], |_, s| {
        em(&|j: f64| j * log1p_rem(-1.0 / j, 2), 2, s)
    }),
    entry!("S-5.57-aux", "1 Σ j/(j²−1)² = 5/16, 2 Σ 1/(j(j²−1)) = ¼, 3 Σ [j log(1−1/j²) + 1/j] = γ − log 2, 4 Σ [j log(1−1/j²) + log(1+1/j)] = 1 − 2 log 2 (all j ≥ 2)", ["which"], |p, s| {
        match p[0] {
            1.0 => em(&|j: f64| j / ((j - 1.0) * (j + 1.0)).powi(2), 2, s),
            2.0 => em(&|j: f64| 1.0 / (j * (j - 1.0) * (j + 1.0)), 2, s),
            3.0 => em(&|j: f64| j * log1p_rem(-1.0 / (j * j), 1), 2, s),
            4.0 => em(&|j: f64| j * log1p_rem(-1.0 / (j * j), 1) - 0.5 / (j * j) + log1p_rem(1.0 / j, 2), 2, s),
            _ => Err(bad("S-5.57-aux", "which must be 1, 2, 3 or 4")),
        }
    }),
    entry!("S-5.58.1", "Σ [j log(1 + 1/j) − 1 + 1/(2j)] = ½[γ − log 2π] + 1", [], |_, s| {
        em(&|j: f64| j * log1p_rem(1.0 / j, 2), 1, s)
    }),
    entry!("S-6.18", "Σ_{n≥2} log n/(n² − 1)", [], |_, s| {
        em(&|n: f64| n.ln() / ((n - 1.0) * (n + 1.0)), 2, s)
    }),
    entry!("S-6.23", "Σ_{n≥2} ψ(n + ½) log(1 − 1/n²)", [], |_, s| {
        em(&|n: f64| digamma_real(n + 0.5).map(|r| r.value).unwrap_or(f64::NAN) * (-1.0 / (n * n)).ln_1p(), 2, s)
    }),
    entry!("S-6.24-aux", "Σ n/(4n² − 1)^k for k ∈ {2, 3}: 1/8 and (7ζ(3) − 6)/64", ["k"], |p, s| {
        let k = p[0];
        need("S-6.24-aux", k == 2.0 || k == 3.0, "k must be 2 or 3")?;
        let k = k as i32;
        em(&|n: f64| n / (4.0 * n * n - 1.0).powi(k), 1, s)
    }),
    entry!("S-6.28", "Σ n/(n² − x²)²; ψ′(1+x) − ψ′(1−x) = −4x Σ …", ["x"], |p, s| {
        let x = p[0];
        need("S-6.28", x.abs() < 1.0, "|x| must be below 1")?;
        em(&|n: f64| n / ((n - x) * (n + x)).powi(2), 1, s)
    }),
    entry!("S-6.3", "Σ_{n≥2} log(1 − 1/n²) = −log 2", [], |_, s| {
        em(&|n: f64| (-1.0 / (n * n)).ln_1p(), 2, s)
    }),
    entry!("S-6.33", "Σ (−1)ⁿ n/(4n² − 1)³", [], |_, s| {
        alt(&|n: f64| parity(n) * n / (4.0 * n * n - 1.0).powi(3), 1, s)
    }),
    entry!("S-6.39", "Σ_{n≥1} log(1 − 1/(4n²))/n²", [], |_, s| {
        em(&|n: f64| (-0.25 / (n * n)).ln_1p() / (n * n), 1, s)
    }),
    entry!("S-6.4", "Σ_{n≥2} (−1)^{n+1} log(1 − 1/n²) = 2 log π − 3 log 2", [], |_, s| {
        alt(&|n: f64| -parity(n) * (-1.0 / (n * n)).ln_1p(), 2, s)
    }),
    entry!("S-6.5", "Σ_{n≥1} (−1)^{n+1} log(1 + 1/n) = log(π/2)", [], |_, s| {
        alt(&|n: f64| -parity(n) * (1.0 / n).ln_1p(), 1, s)
    }),
    entry!("S-6.6", "Σ_{n≥2} (−1)^{n+1} log(1 − 1/n) = log(π/2)", [], |_, s| {
        alt(&|n: f64| -parity(n) * (-1.0 / n).ln_1p(), 2, s)
    }),
    entry!("S-6.7.2", "Σ_{n≥2} log(1 − 1/n²)/n²", [], |_, s| {
        em(&|n: f64| (-1.0 / (n * n)).ln_1p() / (n * n), 2, s)
    }),
    entry!("S-7.11", "Σ (−1)ⁿ log(1 + 1/n)/(2n + 1)", [], |_, s| {
        alt(&|n: f64| parity(n) * (1.0 / n).ln_1p() / (2.0 * n + 1.0), 1, s)
    }),
    entry!("S-7.11b", "Σ (−1)ⁿ n log n/(4n² − 1)", [], |_, s| {
        alt(&|n: f64| parity(n) * n * n.ln() / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-7.12", "Σ log(1 + 1/n)/(2n + 1)", [], |_, s| {
        em(&|n: f64| (1.0 / n).ln_1p() / (2.0 * n + 1.0), 1, s)
    }),
    entry!("S-7.12b", "Σ log n/(4n² − 1)", [], |_, s| {
        em(&|n: f64| n.ln() / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-7.17", "Σ (−1)ⁿ log n/(4n² − 1)", [], |_, s| {
        alt(&|n: f64| parity(n) * n.ln() / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-8.11", "Σ 1/(4n² − 1) = ½", [], |_, s| {
        em(&|n: f64| 1.0 / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-8.15", "Σ (−1)ⁿ/(4n² − 1); 1 = 2/π − (4/π) Σ …", [], |_, s| {
        alt(&|n: f64| parity(n) / (4.0 * n * n - 1.0), 1, s)
    }),
    entry!("S-8.7", "Σ (−1)ⁿ/(n² − μ²); π/sin μπ = 1/μ − 2μ Σ …", ["mu"], |p, s| {
        let mu = p[0];
        need("S-8.7", mu > 0.0 && mu < 1.0, "μ must lie in (0, 1)")?;
        alt(&|n: f64| parity(n) / ((n - mu) * (n + mu)), 1, s)
    }),
];

pub fn series_ids() -> Vec<&'static str> {
    SERIES.iter().map(|e| e.id).collect()
}

pub fn find_series(id: &str) -> Option<&'static SeriesEntry> {
    SERIES.iter().find(|e| e.id == id)
}

/// Evaluate a catalogued sum with explicit numerical settings.
pub fn sum_catalog_with(id: &str, params: &[f64], settings: &Settings) -> Result<SeriesResult> {
    let e = find_series(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    if params.len() != e.params.len() {
        return Err(bad(id, format!("expected {} parameter(s) ({}), got {}", e.params.len(), e.params.join(", "), params.len())));
    }
    if let Some(x) = params.iter().find(|x| !x.is_finite()) {
        return Err(bad(id, format!("non-finite parameter {x}")));
    }
    (e.eval)(params, settings)
}

pub fn sum_catalog(id: &str, params: &[f64]) -> Result<SeriesResult> {
    sum_catalog_with(id, params, &Settings::default())
}
