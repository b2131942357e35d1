use super::{check_arg, zeta::zeta_int, FnEvalResult, NeumaierSum, EPS};
use crate::Result;
use std::f64::consts::PI;

/// Cl₂(θ) for θ ∈ [0, π] from θ − θ log θ + Σ ζ(2k) θ^{2k+1} / (k(2k+1)(2π)^{2k}).
pub(crate) fn clausen_core(theta: f64) -> (f64, f64) {
    if theta == 0.0 {
        return (0.0, 0.0);
    }
    let mut acc = NeumaierSum::new();
    acc.add(theta);
    acc.add(-theta * theta.ln());
    let r = (theta / (2.0 * PI)).powi(2);
    let mut p = theta;
    let mut last = 0.0;
    for k in 1..=60u32 {
        p *= r;
        let kf = k as f64;
        let t = zeta_int(2 * k) * p / (kf * (2.0 * kf + 1.0));
        acc.add(t);
        last = t;
        if t < 1e-18 * acc.value().abs() {
            break;
        }
    }
    (acc.value(), 2.0 * last + acc.rounding_err() + 4.0 * EPS)
}

/// Clausen function Cl₂(θ) = Σ sin(nθ)/n², any real θ.
pub fn clausen_cl2(theta: f64) -> Result<FnEvalResult> {
    check_arg(theta, "clausen_cl2")?;
    let two_pi = 2.0 * PI;
    let mut t = theta.rem_euclid(two_pi);
    let mut sign = 1.0;
    if t > PI {
        t = two_pi - t;
        sign = -1.0;
    }
    let (v, e) = clausen_core(t);
    // reduction error: argument rounding times the derivative −log|2 sin(θ/2)|
    let red = EPS * theta.abs().max(1.0) * (2.0 * (t / 2.0).sin()).ln().abs().min(40.0);
    Ok(FnEvalResult::new(sign * v, e + red))
}
