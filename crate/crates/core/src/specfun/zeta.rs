use super::{bernoulli_number, check_arg, constants, FnEvalResult, NeumaierSum, EPS};
use crate::{Error, Result};
use std::f64::consts::PI;
use std::sync::OnceLock;

const DIRECT: usize = 12;
const CORRECTIONS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZetaKind {
    Zeta,
    Hurwitz,
    ZetaPrime,
    ZetaPrime2At2,
    ZetaPrimeNeg1,
}

/// ζ(s,a) and its first `order` derivatives in s by Euler–Maclaurin
/// summation: twelve direct terms, then ten Bernoulli corrections.
pub fn hurwitz_derivs(s: f64, a: f64, order: usize) -> Result<Vec<FnEvalResult>> {
    check_arg(s, "zeta s")?;
    check_arg(a, "zeta a")?;
    if s <= 1.0 {
        return Err(Error::Domain(format!("zeta requires s > 1, got {s}")));
    }
    if a <= 0.0 {
        return Err(Error::Domain(format!("hurwitz zeta requires a > 0, got {a}")));
    }
    let order = order.min(2);
    let mut out = Vec::with_capacity(order + 1);
    let x = DIRECT as f64 + a;
    let lx = x.ln();
    let xs = x.powf(-s);
    for d in 0..=order {
        let mut acc = NeumaierSum::new();
        for n in 0..DIRECT {
            let q = n as f64 + a;
            let lq = q.ln();
            acc.add(q.powf(-s) * (-lq).powi(d as i32));
        }
        // ∫_X^∞ q^{-s} (−log q)^d dq
        let sm1 = s - 1.0;
        let tail = x
            * xs
            * match d {
                0 => 1.0 / sm1,
                1 => -(lx / sm1 + 1.0 / (sm1 * sm1)),
                _ => lx * lx / sm1 + 2.0 * lx / (sm1 * sm1) + 2.0 / (sm1 * sm1 * sm1),
            };
        acc.add(tail);
        acc.add(0.5 * xs * (-lx).powi(d as i32));
        // Bernoulli corrections: b_j (s)_{2j-1} X^{-s-2j+1}, differentiated in s
        let mut fact = 1.0; // (2j)!
        let mut last = 0.0;
        for j in 1..=CORRECTIONS + 1 {
            fact *= (2 * j - 1) as f64 * (2 * j) as f64;
            let b = bernoulli_number(2 * j) / fact;
            let m = 2 * j - 1;
            let mut p = 1.0;
            let mut h1 = 0.0;
            let mut h2 = 0.0;
            for i in 0..m {
                let si = s + i as f64;
                p *= si;
                h1 += 1.0 / si;
                h2 += 1.0 / (si * si);
            }
            let pow = xs * x.powi(-(m as i32));
            let term = b
                * pow
                * match d {
                    0 => p,
                    1 => p * (h1 - lx),
                    _ => p * ((h1 - lx) * (h1 - lx) - h2),
                };
            if j <= CORRECTIONS {
                acc.add(term);
            } else {
                last = term;
            }
        }
        let v = acc.value();
        out.push(FnEvalResult::new(v, last.abs() + acc.rounding_err() + 8.0 * EPS * v.abs()));
    }
    Ok(out)
}

/// ζ(n) for integer n ≥ 2, tabulated up to n = 160 and 1 + 2^{−n} + … beyond.
pub fn zeta_int(n: u32) -> f64 {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    let t = TABLE.get_or_init(|| {
        (0..=160u32)
            .map(|k| if k < 2 { f64::NAN } else { hurwitz_derivs(k as f64, 1.0, 0).map(|r| r[0].value).unwrap_or(f64::NAN) })
            .collect()
    });
    assert!(n >= 2, "zeta_int requires n >= 2");
    if (n as usize) < t.len() {
        t[n as usize]
    } else {
        1.0 + 2f64.powi(-(n as i32))
    }
}

pub fn zeta_family(kind: ZetaKind, s: f64, a: f64) -> Result<FnEvalResult> {
    match kind {
        ZetaKind::Zeta => Ok(hurwitz_derivs(s, 1.0, 0)?[0]),
        ZetaKind::Hurwitz => Ok(hurwitz_derivs(s, a, 0)?[0]),
        ZetaKind::ZetaPrime => Ok(hurwitz_derivs(s, 1.0, 1)?[1]),
        ZetaKind::ZetaPrime2At2 => Ok(hurwitz_derivs(2.0, 1.0, 2)?[2]),
        ZetaKind::ZetaPrimeNeg1 => {
            let c = constants();
            Ok(FnEvalResult::new(c.zeta_prime_neg1, 1e-15))
        }
    }
}

/// ζ′(−1) from ζ′(2) through (1/12)(1 − γ − log 2π) + ζ′(2)/(2π²).
pub(crate) fn zeta_prime_neg1_from(gamma: f64, zeta_prime_2: f64) -> f64 {
    (1.0 - gamma - (2.0 * PI).ln()) / 12.0 + zeta_prime_2 / (2.0 * PI * PI)
}
