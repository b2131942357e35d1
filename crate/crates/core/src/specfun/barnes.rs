use super::{check_arg, constants, log_gamma, zeta::zeta_int, FnEvalResult, NeumaierSum, EPS};
use crate::{Error, Result};

// log G(1+y) for |y| ≤ 1/2 from the Maclaurin series, with ζ(n) split as
// 1 + (ζ(n) − 1) so the unit part sums in closed form.
fn log_g_one_plus(y: f64) -> (f64, f64) {
    let c = constants();
    let mut acc = NeumaierSum::new();
    acc.add(0.5 * (c.log_2pi - 1.0) * y);
    acc.add(-0.5 * (1.0 + c.gamma) * y * y);
    // Σ_{n≥2} (−1)^n y^{n+1}/(n+1) = log(1+y) − y + y²/2
    acc.add(y.ln_1p() - y + 0.5 * y * y);
    let mut p = y * y; // y^{n+1} with sign (−1)^n at n = 1 → −y²
    p = -p;
    let mut last = 0.0;
    for n in 2..200u32 {
        p *= -y;
        let t = (zeta_int(n) - 1.0) * p / (n as f64 + 1.0);
        acc.add(t);
        last = t.abs();
        if last < 1e-20 {
            break;
        }
    }
    (acc.value(), 2.0 * last + acc.rounding_err() + 4.0 * EPS * y.abs())
}

/// log G(x) for 0 < x ≤ 4: Taylor on [1/2, 3/2], shifted with G(1+x) = G(x)Γ(x).
pub fn log_barnes_g(x: f64) -> Result<FnEvalResult> {
    check_arg(x, "log_barnes_g")?;
    if x <= 0.0 || x > 4.0 {
        return Err(Error::Domain(format!("log_barnes_g requires 0 < x ≤ 4, got {x}")));
    }
    if x == 1.0 || x == 2.0 || x == 3.0 {
        // G(1) = G(2) = 1, G(3) = Γ(2) = 1
        return Ok(FnEvalResult::new(0.0, 0.0));
    }
    if x < 0.5 {
        let (v, e) = log_g_one_plus(x);
        let lg = log_gamma(x)?;
        return Ok(FnEvalResult::new(v - lg.value, e + lg.abs_err));
    }
    let mut base = x;
    let mut shift = FnEvalResult::new(0.0, 0.0);
    while base > 1.5 {
        base -= 1.0;
        shift = shift + log_gamma(base)?;
    }
    let (v, e) = log_g_one_plus(base - 1.0);
    Ok(FnEvalResult::new(v + shift.value, e + shift.abs_err))
}
