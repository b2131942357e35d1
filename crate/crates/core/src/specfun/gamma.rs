use super::{check_arg, Cplx, FnEvalResult, EPS};
use crate::{Error, Result};
use std::f64::consts::PI;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)) for the Stirling series of log Γ.
const STIRLING: [f64; 8] =
    [1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0];

// B_{2k} / (2k) for the asymptotic series of ψ.
const DIGAMMA_ASYM: [f64; 7] = [1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0];
const DIGAMMA_NEXT: f64 = 3617.0 / 8160.0;

/// log Γ(x) for x > 0 by upward shift to x ≥ 12 and the Stirling series.
pub fn log_gamma(x: f64) -> Result<FnEvalResult> {
    check_arg(x, "log_gamma")?;
    if x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(FnEvalResult::new(0.0, 0.0));
    }
    let mut y = x;
    let mut prod = 1.0;
    while y < 12.0 {
        prod *= y;
        y += 1.0;
    }
    let ly = y.ln();
    let lead = (y - 0.5) * ly - y;
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING {
        corr += c * p;
        p *= inv2;
    }
    let shift = prod.ln();
    let value = lead + HALF_LN_2PI + corr - shift;
    if !value.is_finite() {
        return Err(Error::Overflow(format!("log_gamma({x})")));
    }
    let trunc = 0.25 * p;
    let err = 4.0 * EPS * (lead.abs() + y + HALF_LN_2PI + shift.abs()) + trunc;
    Ok(FnEvalResult::new(value, err))
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn digamma_asymptotic(y: f64) -> (f64, f64) {
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut s = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_ASYM {
        s += c * p;
        p *= inv2;
    }
    let v = y.ln() - 0.5 * inv - s;
    (v, DIGAMMA_NEXT * p + 2.0 * EPS * y.ln().abs())
}

/// ψ(x) on the real line; poles at non-positive integers.
pub fn digamma_real(x: f64) -> Result<FnEvalResult> {
    check_arg(x, "digamma")?;
    if is_nonpositive_integer(x) {
        return Err(Error::Pole(x));
    }
    if x < 0.0 {
        // ψ(x) = ψ(1−x) − π cot(πx)
        let r = digamma_real(1.0 - x)?;
        // cot has period π, and x − round(x) is exact, so only π·frac is rounded
        let frac = x - x.round();
        let c = PI / (PI * frac).tan();
        return Ok(FnEvalResult::new(r.value - c, r.abs_err + 4.0 * EPS * c.abs() * (1.0 + (PI * frac).abs())));
    }
    let mut y = x;
    let mut shift = super::NeumaierSum::new();
    while y < 10.0 {
        shift.add(1.0 / y);
        y += 1.0;
    }
    let (a, ae) = digamma_asymptotic(y);
    let v = a - shift.value();
    Ok(FnEvalResult::new(v, ae + 2.0 * EPS * (shift.abs_sum() + v.abs())))
}

/// ψ(z) for complex z. Real input takes the real path so the result has an
/// exactly zero imaginary part.
pub fn digamma(z: Cplx) -> Result<FnEvalResult<Cplx>> {
    check_arg(z.re, "digamma")?;
    check_arg(z.im, "digamma")?;
    if z.im == 0.0 {
        let r = digamma_real(z.re)?;
        return Ok(FnEvalResult::new(Cplx::new(r.value, 0.0), r.abs_err));
    }
    let mut w = z;
    let mut shift = Cplx::new(0.0, 0.0);
    let mut mass = 0.0;
    while w.re < 0.0 || w.norm() < 10.0 {
        let t = 1.0 / w;
        shift += t;
        mass += t.norm();
        w += 1.0;
    }
    let inv = 1.0 / w;
    let inv2 = inv * inv;
    let mut s = Cplx::new(0.0, 0.0);
    let mut p = inv2;
    for c in DIGAMMA_ASYM {
        s += c * p;
        p *= inv2;
    }
    let lw = w.ln();
    let v = lw - 0.5 * inv - s - shift;
    let err = DIGAMMA_NEXT * p.norm() + 4.0 * EPS * (lw.norm() + mass + v.norm());
    Ok(FnEvalResult::new(v, err))
}

/// ψ^(k)(x) for k ∈ {1, 2} via ψ^(k)(x) = (−1)^{k+1} k! ζ(k+1, x).
pub fn polygamma(k: u32, x: f64) -> Result<FnEvalResult> {
    check_arg(x, "polygamma")?;
    if !(1..=2).contains(&k) {
        return Err(Error::UnsupportedOrder(k));
    }
    if x <= 0.0 {
        return Err(Error::Domain(format!("polygamma requires x > 0, got {x}")));
    }
    let z = super::zeta::hurwitz_derivs(k as f64 + 1.0, x, 0)?[0];
    let (sign, fact) = if k == 1 { (1.0, 1.0) } else { (-1.0, 2.0) };
    Ok(z.scale(sign * fact))
}
