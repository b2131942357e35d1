//! Cancellation-free forms of terms that behave like differences of nearly
//! equal quantities for large n. Euler–Maclaurin tails integrate these out to
//! very large arguments, where the naive forms would return rounding noise.

use crate::specfun::{bernoulli_number, digamma_real};

/// log(1+y) with its first `k` Taylor terms removed:
/// log(1+y) − Σ_{m≤k} (−1)^{m+1} yᵐ/m.
pub fn log1p_rem(y: f64, k: u32) -> f64 {
    if y.abs() <= 0.25 {
        let mut p = y.powi(k as i32 + 1);
        let mut m = k + 1;
        let mut s = 0.0;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        let mut sg = sign;
        loop {
            let t = sg * p / m as f64;
            s += t;
            if t.abs() <= 1e-18 * s.abs() || m > k + 80 {
                break;
            }
            p *= y;
            sg = -sg;
            m += 1;
        }
        s
    } else {
        let mut poly = 0.0;
        let mut p = 1.0;
        for m in 1..=k {
            p *= y;
            poly += if m % 2 == 1 { p / m as f64 } else { -p / m as f64 };
        }
        y.ln_1p() - poly
    }
}

/// ψ(1+x) − log x, by the asymptotic series for x ≥ 10.
pub fn psi1_minus_log(x: f64) -> f64 {
    if x >= 10.0 {
        // ψ(1+x) = ψ(x) + 1/x and ψ(x) − log x = −1/(2x) − Σ B_{2k}/(2k x^{2k})
        let x2 = 1.0 / (x * x);
        let mut p = 1.0;
        let mut s = 0.0;
        for k in 1..=7usize {
            p *= x2;
            s += bernoulli_number(2 * k) / (2 * k) as f64 * p;
        }
        0.5 / x - s
    } else {
        digamma_real(1.0 + x).map(|r| r.value).unwrap_or(f64::NAN) - x.ln()
    }
}
