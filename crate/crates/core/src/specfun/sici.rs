use super::{check_arg, constants, FnEvalResult, NeumaierSum, EPS};
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

const SERIES_MAX: f64 = 4.0;

fn series(x: f64) -> ((f64, f64), (f64, f64)) {
    let mut si = NeumaierSum::new();
    let mut ci = NeumaierSum::new();
    // p = x^m / m! with alternating sign folded in
    let mut p = x;
    let mut m = 1u32;
    loop {
        let mf = m as f64;
        si.add(p / mf);
        p *= x / (mf + 1.0);
        let m2 = mf + 1.0;
        ci.add(-p / m2);
        p *= -x / (m2 + 1.0);
        m += 2;
        if p.abs() < 1e-18 {
            break;
        }
    }
    let ci_v = constants().gamma + x.ln() + ci.value();
    ((si.value(), si.rounding_err() + 2.0 * EPS), (ci_v, ci.rounding_err() + 4.0 * EPS * (x.ln().abs() + 1.0)))
}

// Continued fraction for E1(ix), modified Lentz.
fn continued_fraction(x: f64) -> ((f64, f64), (f64, f64)) {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 2..10_000u32 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 0.5 * EPS {
            break;
        }
    }
    let h = Complex64::new(x.cos(), -x.sin()) * h;
    // phase rounding of cos/sin at large x, plus the fraction's own rounding
    let e = (8.0 + x) * EPS * h.norm() + 4.0 * EPS;
    ((FRAC_PI_2 + h.im, e), (-h.re, e))
}

/// Si(x) and Ci(x). Si is odd; Ci requires x > 0.
pub fn sici(x: f64) -> Result<(FnEvalResult, FnEvalResult)> {
    check_arg(x, "sici")?;
    if x < 0.0 {
        return Err(Error::Domain(format!("sici requires x ≥ 0, got {x}")));
    }
    if x == 0.0 {
        return Err(Error::LogSingularity(0.0));
    }
    let ((s, se), (c, ce)) = if x <= SERIES_MAX { series(x) } else { continued_fraction(x) };
    Ok((FnEvalResult::new(s, se), FnEvalResult::new(c, ce)))
}

/// Si(x) alone; defined at 0 and odd in x.
pub fn si(x: f64) -> Result<FnEvalResult> {
    check_arg(x, "Si")?;
    if x == 0.0 {
        return Ok(FnEvalResult::new(0.0, 0.0));
    }
    let (s, _) = sici(x.abs())?;
    Ok(FnEvalResult::new(x.signum() * s.value, s.abs_err))
}

/// Ci(x) for x > 0.
pub fn ci(x: f64) -> Result<FnEvalResult> {
    Ok(sici(x)?.1)
}

// Asymptotic auxiliary functions f, g with si(x) = −f cos x − g sin x and
// Ci(x) = f sin x − g cos x.
fn aux_fg(x: f64) -> (f64, f64, f64) {
    let ix2 = 1.0 / (x * x);
    let mut f = 0.0;
    let mut g = 0.0;
    let mut tf = 1.0 / x;
    let mut tg = ix2;
    let mut err = 0.0;
    for k in 0..8u32 {
        f += tf;
        g += tg;
        let a = (2 * k + 1) as f64 * (2 * k + 2) as f64;
        let b = (2 * k + 2) as f64 * (2 * k + 3) as f64;
        tf *= -a * ix2;
        tg *= -b * ix2;
        err = tf.abs() + tg.abs();
    }
    (f, g, err)
}

/// si(x) from its asymptotic expansion at lattice points x = mπ where
/// cos x = ±1 exactly (`cos_sign`).
pub fn si_lattice_asymptotic(x: f64, cos_sign: f64) -> FnEvalResult {
    let (f, _, e) = aux_fg(x);
    FnEvalResult::new(-cos_sign * f, e + 2.0 * EPS * f.abs())
}

/// Ci(x) at lattice points x = mπ from the asymptotic expansion.
pub fn ci_lattice_asymptotic(x: f64, cos_sign: f64) -> FnEvalResult {
    let (_, g, e) = aux_fg(x);
    FnEvalResult::new(-cos_sign * g, e + 2.0 * EPS * g.abs())
}
