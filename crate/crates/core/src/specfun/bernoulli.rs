use super::FnEvalResult;
use crate::{Error, Result};

// B_0..B_30 as (numerator, denominator); odd indices beyond 1 vanish.
const BERNOULLI: [(i64, i64); 31] = [
    (1, 1),
    (-1, 2),
    (1, 6),
    (0, 1),
    (-1, 30),
    (0, 1),
    (1, 42),
    (0, 1),
    (-1, 30),
    (0, 1),
    (5, 66),
    (0, 1),
    (-691, 2730),
    (0, 1),
    (7, 6),
    (0, 1),
    (-3617, 510),
    (0, 1),
    (43867, 798),
    (0, 1),
    (-174611, 330),
    (0, 1),
    (854513, 138),
    (0, 1),
    (-236364091, 2730),
    (0, 1),
    (8553103, 6),
    (0, 1),
    (-23749461029, 870),
    (0, 1),
    (8615841276005, 14322),
];

/// Bernoulli number B_n for n ≤ 30 (B_1 = −1/2).
pub fn bernoulli_number(n: usize) -> f64 {
    let (p, q) = BERNOULLI[n];
    p as f64 / q as f64
}

fn binom(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// B_n(x) for 0 ≤ n ≤ 12, from exact rational coefficients.
pub fn bernoulli_poly(n: u32, x: f64) -> Result<FnEvalResult> {
    if n > 12 {
        return Err(Error::UnsupportedOrder(n));
    }
    super::check_arg(x, "bernoulli_poly")?;
    let n = n as i64;
    // coefficient of x^(n-k) is C(n,k) B_k, reduced exactly
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let (p, q) = BERNOULLI[k as usize];
        let c = binom(n, k);
        let g = gcd(c, q);
        coeffs.push((c / g * p) as f64 / (q / g) as f64);
    }
    let mut acc = 0.0;
    let mut mass = 0.0;
    for c in &coeffs {
        acc = acc * x + c;
        mass = mass * x.abs() + c.abs();
    }
    Ok(FnEvalResult::new(acc, 2.0 * (n as f64 + 1.0) * f64::EPSILON * mass))
}
