use super::{bernoulli_number, FnEvalResult, NeumaierSum};

/// First Stieltjes constant from Σ_{k≤N} log k / k − ½log²N with
/// Euler–Maclaurin corrections at N = 100.
pub fn stieltjes_gamma1() -> FnEvalResult {
    const N: u32 = 100;
    const TERMS: usize = 6;
    let mut acc = NeumaierSum::new();
    for k in 2..=N {
        let k = k as f64;
        acc.add(k.ln() / k);
    }
    let n = N as f64;
    let ln = n.ln();
    acc.add(-0.5 * ln * ln);
    acc.add(-0.5 * ln / n);
    // f^{(m)}(x) = (−1)^m m! (log x − H_m) / x^{m+1} for f = log x / x
    let deriv = |m: usize| {
        let h: f64 = (1..=m).map(|i| 1.0 / i as f64).sum();
        let fact: f64 = (1..=m).map(|i| i as f64).product();
        let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * fact * (ln - h) / n.powi(m as i32 + 1)
    };
    let mut fact = 1.0;
    let mut last = 0.0;
    for j in 1..=TERMS + 1 {
        fact *= ((2 * j - 1) * 2 * j) as f64;
        let t = bernoulli_number(2 * j) / fact * deriv(2 * j - 1);
        if j <= TERMS {
            acc.add(-t);
        } else {
            last = t;
        }
    }
    FnEvalResult::new(acc.value(), last.abs() + acc.rounding_err())
}
