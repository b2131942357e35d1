//! Double-exponential (tanh-sinh) quadrature on finite and semi-infinite
//! intervals, plus the keyed integral catalog.

mod catalog;

pub use catalog::{find_integral, integral_catalog, integral_catalog_with, integral_ids, lgamma1p, IntegralEntry, INTEGRALS};

use crate::specfun::NeumaierSum;
use crate::{Error, Result};
use serde::Serialize;
use std::f64::consts::FRAC_PI_2;

pub const DEFAULT_LEVEL_CAP: u32 = 12;
pub const MAX_LEVEL_CAP: u32 = 14;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const COT_TOL: f64 = 1e-8;
const FIRST_LEVEL: u32 = 2;
const T_MAX: f64 = 6.5;
const LIMIT_WINDOW: f64 = 1e-8;

/// How the integrand behaves at one endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EndpointHint {
    Regular,
    LogSingularity,
    /// Removable singularity: within 1e−8 of the endpoint the integrand is
    /// replaced by this limit value.
    RemovableByLimit(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hints {
    pub left: EndpointHint,
    pub right: EndpointHint,
}

impl Hints {
    pub const REGULAR: Hints = Hints { left: EndpointHint::Regular, right: EndpointHint::Regular };
    pub const LOG_BOTH: Hints = Hints { left: EndpointHint::LogSingularity, right: EndpointHint::LogSingularity };

    pub fn new(left: EndpointHint, right: EndpointHint) -> Self {
        Hints { left, right }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Decay {
    Exponential(f64),
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
    pub evals: u64,
    pub converged: bool,
}

impl QuadResult {
    pub fn to_eval(self) -> crate::specfun::FnEvalResult {
        crate::specfun::FnEvalResult::new(self.value, self.abs_err)
    }
}

struct Node {
    x: f64,
    w: f64,
    dist: f64,
    left: bool,
}

fn nodes_at(a: f64, b: f64, t: f64) -> [Node; 2] {
    let d = 0.5 * (b - a);
    let u = FRAC_PI_2 * t.sinh();
    let e = (-2.0 * u.abs()).exp();
    // 1 − tanh|u| without cancellation
    let dist = d * 2.0 * e / (1.0 + e);
    let ch = u.abs().cosh();
    let w = d * FRAC_PI_2 * t.cosh() / (ch * ch);
    [Node { x: a + dist, w, dist, left: true }, Node { x: b - dist, w, dist, left: false }]
}

struct Accum {
    sum: NeumaierSum,
    abs: f64,
    evals: u64,
    // abscissa parameter at which each side stopped contributing on the first level
    limit_left: f64,
    limit_right: f64,
}

fn eval_node(f: &dyn Fn(f64) -> f64, n: &Node, a: f64, b: f64, hints: &Hints, width: f64) -> Result<Option<f64>> {
    let (endpoint, hint) = if n.left { (a, hints.left) } else { (b, hints.right) };
    if n.x == endpoint || n.dist == 0.0 || !(n.x > a && n.x < b) {
        return Ok(None);
    }
    if let EndpointHint::RemovableByLimit(v) = hint {
        if n.dist < LIMIT_WINDOW {
            return Ok(Some(v));
        }
    }
    let y = f(n.x);
    if y.is_finite() {
        Ok(Some(y))
    } else if n.dist < 1e-12 * width {
        // rounding right at an endpoint; the node's weight is negligible
        Ok(None)
    } else {
        Err(Error::NonFinite(format!("integrand at x = {}", n.x)))
    }
}

fn add_level(f: &dyn Fn(f64) -> f64, a: f64, b: f64, hints: &Hints, h: f64, first: bool, acc: &mut Accum) -> Result<()> {
    let width = b - a;
    let push = |c: f64, acc: &mut Accum| {
        acc.sum.add(c);
        acc.abs += c.abs();
        acc.evals += 1;
    };
    let mut k: u64 = if first { 0 } else { 1 };
    let step = if first { 1 } else { 2 };
    loop {
        let t = k as f64 * h;
        if t > T_MAX || (t > acc.limit_left && t > acc.limit_right) {
            break;
        }
        let ns = nodes_at(a, b, t);
        if k == 0 {
            if let Some(y) = eval_node(f, &ns[0], a, b, hints, width)? {
                push(ns[0].w * y, acc);
            }
        } else {
            for n in &ns {
                let limit = if n.left { acc.limit_left } else { acc.limit_right };
                if t > limit {
                    continue;
                }
                match eval_node(f, n, a, b, hints, width)? {
                    Some(y) => push(n.w * y, acc),
                    None => {
                        if n.left {
                            acc.limit_left = t;
                        } else {
                            acc.limit_right = t;
                        }
                    }
                }
            }
        }
        k += step;
    }
    Ok(())
}

/// ∫_a^b f with tanh-sinh, doubling the level up to `level_cap`.
pub fn integrate_with(f: &dyn Fn(f64) -> f64, a: f64, b: f64, hints: Hints, tol: f64, level_cap: u32) -> Result<QuadResult> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!("integrate needs finite limits, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QuadResult { value: 0.0, abs_err: 0.0, evals: 0, converged: true });
    }
    if a > b {
        let r = integrate_with(f, b, a, Hints::new(hints.right, hints.left), tol, level_cap)?;
        return Ok(QuadResult { value: -r.value, ..r });
    }
    let cap = level_cap.clamp(FIRST_LEVEL + 2, MAX_LEVEL_CAP);
    let mut h = 0.5f64.powi(FIRST_LEVEL as i32);
    let mut acc = Accum { sum: NeumaierSum::new(), abs: 0.0, evals: 0, limit_left: f64::INFINITY, limit_right: f64::INFINITY };
    add_level(f, a, b, &hints, h, true, &mut acc)?;
    // once the first level has found where the integrand stops contributing,
    // finer levels only fill interior gaps
    let mut prev = h * acc.sum.value();
    let mut prev_diff = f64::INFINITY;
    let mut level = FIRST_LEVEL;
    loop {
        level += 1;
        h *= 0.5;
        add_level(f, a, b, &hints, h, false, &mut acc)?;
        let cur = h * acc.sum.value();
        let diff = (cur - prev).abs();
        let rounding = 64.0 * f64::EPSILON * h * acc.abs + 4.0 * f64::EPSILON * cur.abs();
        let est = if prev_diff.is_finite() && prev_diff > 0.0 { diff.min(10.0 * diff * diff / prev_diff) } else { diff };
        let err = est.max(rounding);
        let settled = level >= FIRST_LEVEL + 3 && diff <= prev_diff;
        if (settled && err <= tol) || level >= cap {
            return Ok(QuadResult { value: cur, abs_err: err, evals: acc.evals, converged: settled && err <= tol });
        }
        prev = cur;
        prev_diff = diff;
    }
}

pub fn integrate(f: &dyn Fn(f64) -> f64, a: f64, b: f64, hints: Hints, tol: f64) -> Result<QuadResult> {
    integrate_with(f, a, b, hints, tol, DEFAULT_LEVEL_CAP)
}

/// ∫_a^∞ f. With exponential decay at `rate` the interval is cut where
/// rate·T = 40 and the tail is bounded by |f(T)|/rate; without a decay hint
/// the half-line is mapped onto (0, 1).
pub fn integrate_semi_infinite_with(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    left: EndpointHint,
    decay: Decay,
    tol: f64,
    level_cap: u32,
) -> Result<QuadResult> {
    match decay {
        Decay::Exponential(rate) => {
            if rate.is_nan() || rate <= 0.0 {
                return Err(Error::Domain(format!("decay rate must be positive, got {rate}")));
            }
            let t = a + 40.0 / rate;
            let mut r = integrate_with(f, a, t, Hints::new(left, EndpointHint::Regular), tol, level_cap)?;
            let tail = f(t).abs() / rate;
            r.abs_err += tail;
            r.evals += 1;
            r.converged = r.converged && r.abs_err <= tol;
            Ok(r)
        }
        Decay::None => {
            let g = |s: f64| {
                let one = 1.0 - s;
                f(a + s / one) / (one * one)
            };
            integrate_with(&g, 0.0, 1.0, Hints::new(left, EndpointHint::Regular), tol, level_cap)
        }
    }
}

pub fn integrate_semi_infinite(f: &dyn Fn(f64) -> f64, a: f64, decay: Decay, tol: f64) -> Result<QuadResult> {
    integrate_semi_infinite_with(f, a, EndpointHint::LogSingularity, decay, tol, DEFAULT_LEVEL_CAP)
}
