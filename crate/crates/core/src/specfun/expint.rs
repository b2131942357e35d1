use super::{check_arg, constants, FnEvalResult, NeumaierSum, EPS};
use crate::{Error, Result};

/// Ei(x) for x < 0, i.e. −E₁(−x).
pub fn exp_integral(x: f64) -> Result<FnEvalResult> {
    check_arg(x, "exp_integral")?;
    if x >= 0.0 {
        return Err(Error::Domain(format!("exp_integral requires x < 0, got {x}")));
    }
    let p = -x;
    if p <= 2.0 {
        // γ + log p + Σ (−1)^n p^n / (n·n!)
        let mut acc = NeumaierSum::new();
        let mut t = 1.0;
        for n in 1..200u32 {
            let nf = n as f64;
            t *= -p / nf;
            acc.add(t / nf);
            if t.abs() < 1e-18 {
                break;
            }
        }
        let v = constants().gamma + p.ln() + acc.value();
        return Ok(FnEvalResult::new(v, acc.rounding_err() + 4.0 * EPS * (p.ln().abs() + 1.0)));
    }
    // E₁(p) by continued fraction, modified Lentz
    let tiny = 1e-300;
    let mut b = p + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000u32 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < 0.5 * EPS {
            break;
        }
    }
    let e1 = h * (-p).exp();
    Ok(FnEvalResult::new(-e1, 16.0 * EPS * e1.abs()))
}
