use super::{digamma, Cplx, FnEvalResult, NeumaierSum, EPS};
use crate::{Error, Result};

const DIRECT_TERMS: u32 = 10_000;

/// Λ(v) = −½[ψ(1+iv) + ψ(1−iv)] = −Re ψ(1+iv).
pub fn lambda_digamma(v: f64) -> Result<FnEvalResult> {
    let r = digamma(Cplx::new(1.0, v))?;
    Ok(FnEvalResult::new(-r.value.re, r.abs_err))
}

/// Λ(v) = Σ_j [j/(j²+v²) − log(1+1/j)], direct to 10⁴ terms and an
/// Euler–Maclaurin tail.
pub fn lambda_series(v: f64) -> Result<FnEvalResult> {
    super::check_arg(v, "lambda")?;
    let v2 = v * v;
    let f = |x: f64| x / (x * x + v2) - (1.0 / x).ln_1p();
    let mut acc = NeumaierSum::new();
    for j in 1..DIRECT_TERMS {
        acc.add(f(j as f64));
    }
    let n = DIRECT_TERMS as f64;
    // ∫_N^∞ [x/(x²+v²) − 1/x] + ∫_N^∞ [1/x − log(1+1/x)]
    let integral = -0.5 * (v2 / (n * n)).ln_1p() + ((n + 1.0) * (1.0 / n).ln_1p() - 1.0);
    let dfn = (v2 - n * n) / (n * n + v2).powi(2) + 1.0 / (n * (n + 1.0));
    acc.add(integral);
    acc.add(0.5 * f(n));
    acc.add(-dfn / 12.0);
    // next Euler–Maclaurin term is f'''(N)/720 with f''' of order (1+v²)/N⁴·6
    let trunc = 6.0 * (1.0 + v2) / n.powi(4) / 720.0 * 2.0;
    Ok(FnEvalResult::new(acc.value(), trunc + acc.rounding_err() + 4.0 * EPS))
}

/// Λ(v) by the digamma route, cross-checked against the series route.
pub fn lambda_fn(v: f64) -> Result<FnEvalResult> {
    let d = lambda_digamma(v)?;
    let s = lambda_series(v)?;
    let budget = d.abs_err + s.abs_err;
    if (d.value - s.value).abs() > 10.0 * budget {
        return Err(Error::Inconsistent(format!("Λ({v}): digamma route {} vs series route {}", d.value, s.value)));
    }
    Ok(FnEvalResult::new(d.value, d.abs_err.max(s.abs_err)))
}
