use super::Expected::{Confirmed, Disputed, DivergentProbe};
use super::TolClass::{Slow, Strict};
use super::{Expected, IdentityRecord, Interval, ParamSpec, Quoted, Side, SideFn, TolClass};
use crate::quad::{find_integral, integral_catalog_with};
use crate::series::{power_series_eval, sum_catalog_with};
use crate::specfun::{
    ci, constants, cospi, digamma_real, exp_integral, lambda_digamma, lambda_fn, log_barnes_g, log_gamma, polygamma, si, sinpi, versinpi,
    zeta_family, zeta_int, ConstantsCache, FnEvalResult, ZetaKind,
};
use crate::{Error, Result, Settings};
use std::f64::consts::{LN_2, PI};

type R = Result<FnEvalResult>;

fn q(id: &str, p: &[f64], s: &Settings) -> R {
    let e = find_integral(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
    let r = integral_catalog_with(id, p, e.default_tol, s.quad_level_cap)?;
    Ok(FnEvalResult::new(r.value, r.abs_err))
}

fn sm(id: &str, p: &[f64], s: &Settings) -> R {
    Ok(sum_catalog_with(id, p, s)?.to_eval())
}

fn pw(id: &str, x: f64, s: &Settings) -> R {
    Ok(power_series_eval(id, x, s.max_terms)?.to_eval())
}

fn k(v: f64) -> FnEvalResult {
    FnEvalResult::exact(v)
}

fn c() -> &'static ConstantsCache {
    constants()
}

fn zero() -> R {
    Ok(FnEvalResult::new(0.0, 0.0))
}

/// γ + log 2π
fn gl() -> f64 {
    c().gamma + c().log_2pi
}

fn psi_pair(p: f64) -> R {
    Ok(digamma_real(p / 2.0)? + digamma_real(-p / 2.0)?)
}

/// ψ(1+p) + ψ(1−p) + 2γ
fn psi_sym(p: f64) -> R {
    Ok(digamma_real(1.0 + p)? + digamma_real(1.0 - p)? + k(2.0 * c().gamma))
}

/// Σ_{n≥1} 1/(4n² − p²) = (1 − (pπ/2) cot(pπ/2))/(2p²)
fn inv_4n2(p: f64) -> FnEvalResult {
    let h = p * PI / 2.0;
    k((1.0 - h / h.tan()) / (2.0 * p * p))
}

/// Σ_{n≥1} 1/(4π²n² + p²) = ((p/2) coth(p/2) − 1)/(2p²)
fn inv_4pi2n2(p: f64) -> FnEvalResult {
    let h = p / 2.0;
    k((h / h.tanh() - 1.0) / (2.0 * p * p))
}

/// Right side of the Laplace-transform identity for ∫₀¹ e^{−px} log Γ(x) dx.
fn laplace_rhs(p: f64, s: &Settings) -> R {
    let e = -(-p).exp_m1();
    let lam = lambda_digamma(p.abs() / (2.0 * PI))?;
    let head = (k(gl()) - lam).scale(e / (2.0 * p));
    Ok(head + sm("S-1.8", &[p], s)?.scale(2.0 * e))
}

fn harmonic(n: u32) -> f64 {
    (1..=n).map(|j| 1.0 / j as f64).sum()
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(|j| j as f64).product()
}

fn zeta_odd(s: u32) -> f64 {
    zeta_int(s)
}

/// ∫₀¹ B_{2n+1}(x) cot(πx) dx = (−1)^{n+1} 2 (2n+1)! ζ(2n+1)/(2π)^{2n+1}
fn bern_cot(n: u32) -> f64 {
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    sign * 2.0 * factorial(2 * n + 1) * zeta_odd(2 * n + 1) / (2.0 * PI).powi(2 * n as i32 + 1)
}

/// ∫₀¹ log²Γ(x) dx
fn log2_gamma_integral() -> f64 {
    let c = c();
    let (g, l) = (c.gamma, c.log_2pi);
    g * g / 12.0 + PI * PI / 48.0 + g * l / 6.0 + l * l / 3.0 - (g + l) * c.zeta_prime_2 / (PI * PI) + c.zeta_prime2_2 / (2.0 * PI * PI)
}

/// The same constant with log(2π)/4 where log²(2π)/4 belongs.
fn log2_gamma_variant() -> f64 {
    let c = c();
    let (g, l) = (c.gamma, c.log_2pi);
    l / 4.0 + c.zeta2 / 8.0 + (g + l) * (g + l) / 12.0 - (g + l) * c.zeta_prime_2 / (PI * PI) + c.zeta_prime2_2 / (2.0 * PI * PI)
}

/// γ₁ + ½[ζ(2) + γ²]
fn g1_bracket() -> f64 {
    let c = c();
    c.gamma1 + 0.5 * (c.zeta2 + c.gamma * c.gamma)
}

fn lgg(x: f64) -> R {
    log_barnes_g(x)
}

/// Σ Ci(2nπ)/(4n² − p²) assembled from the catalogued pieces.
fn ci_lattice_sum(p: f64, s: &Settings) -> R {
    Ok(sm("S-3.14", &[p], s)? + inv_4n2(p).scale(gl()) + sm("S-2.1", &[p], s)?)
}

fn q13_rhs(p: f64, s: &Settings, lam_coeff: f64) -> R {
    let c = c();
    let slog = sm("S-1.8", &[p], s)? - inv_4pi2n2(p).scale(gl());
    let lead = k((1.0 / p.exp_m1() - 1.0 / p + 1.0) * (2.0 * PI / p).ln());
    let lam = lambda_digamma(p / (2.0 * PI))?.scale(lam_coeff);
    Ok(lead + slog.scale(2.0 * p) - lam - k((c.gamma + p.ln()) / p))
}

fn q715_rhs(u: f64, s: &Settings) -> R {
    let su = sinpi(u);
    let tail = 2.0 * gl() * (su / 4.0 + (-versinpi(u)) / (2.0 * PI)) - su / 2.0;
    Ok(sm("FS-7.15", &[u], s)?.scale(2.0 / PI) + k(tail))
}

fn q638_rhs(s: &Settings, variant: bool) -> R {
    let c = c();
    let pi2 = PI * PI;
    let head = if variant { -(2.0 + 3.5 * c.zeta3) / pi2 } else { (2.0 - 3.5 * c.zeta3) / pi2 };
    let mut sum = sm("S-6.39", &[], s)?;
    if variant {
        sum = sum - k((0.75f64).ln());
    }
    Ok(k(-2.0 * c.log_a + head + (c.gamma + PI.ln()) / 6.0) - sum.scale(1.0 / (2.0 * pi2)))
}

const fn side(recipe: &'static str, eval: SideFn) -> Side {
    Side { recipe, eval }
}

#[allow(clippy::too_many_arguments)]
const fn rec(
    id: &'static str,
    section: u32,
    anchor: &'static str,
    params: &'static [ParamSpec],
    param_sets: &'static [&'static [f64]],
    lhs: Side,
    rhs: Side,
    tol_class: TolClass,
    expected: Expected,
) -> IdentityRecord {
    IdentityRecord { id, section, anchor, params, param_sets, lhs, rhs, tol_class, expected, quoted: &[], note: "" }
}

const fn quoted(label: &'static str, value: f64) -> Quoted {
    Quoted { label, value }
}

const NONE: &[ParamSpec] = &[];
const ONCE: &[&[f64]] = &[&[]];

const ALL_REAL_NONZERO: &[Interval] = &[Interval::closed(-50.0, -1e-300), Interval::closed(1e-300, 50.0)];
const P_REAL: &[ParamSpec] = &[ParamSpec::real("p", ALL_REAL_NONZERO)];
const P_POS: &[ParamSpec] = &[ParamSpec::real("p", &[Interval::left_open(0.0, 50.0)])];
const P_0_2: &[ParamSpec] = &[ParamSpec::real("p", &[Interval::open(0.0, 2.0)])];
const P_0_1: &[ParamSpec] = &[ParamSpec::real("p", &[Interval::open(0.0, 1.0)])];
const P_0_1_SMALL: &[ParamSpec] = &[ParamSpec::real("p", &[Interval::open(0.0, 1.0)])];
const P_ANY16: &[ParamSpec] = &[ParamSpec::real("p", &[Interval::closed(-16.0, 16.0)])];
const N_1_8: &[ParamSpec] = &[ParamSpec::integer("n", &[Interval::closed(1.0, 8.0)])];
const N_0_8: &[ParamSpec] = &[ParamSpec::integer("n", &[Interval::closed(0.0, 8.0)])];
const N_1_5: &[ParamSpec] = &[ParamSpec::integer("n", &[Interval::closed(1.0, 5.0)])];
const K_1_8: &[ParamSpec] = &[ParamSpec::integer("k", &[Interval::closed(1.0, 8.0)])];
const T_UNIT: &[ParamSpec] = &[ParamSpec::real("t", &[Interval::open(-1.0, 1.0)])];
const X_UNIT: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::open(-1.0, 1.0)])];
const X_0_1: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::open(0.0, 1.0)])];
const FOURIER: &[Interval] = &[Interval::open(1e-3, 1.0 - 1e-3)];
const X_FOURIER: &[ParamSpec] = &[ParamSpec::real("x", FOURIER)];
const U_FOURIER: &[ParamSpec] = &[ParamSpec::real("u", FOURIER)];
const T_FOURIER: &[ParamSpec] = &[ParamSpec::real("t", FOURIER)];
const U_ONE: &[ParamSpec] = &[ParamSpec::real("u", &[Interval::closed(1.0, 1.0)])];
const X_0_PI: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::open(1e-3, PI - 1e-3)])];
const X_HALF: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::open(-0.5, 0.5)])];
const X_POS: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::left_open(0.0, 50.0)])];
const X_LAMBDA: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::closed(-4.0, 4.0)])];
const X_LOG: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::left_open(0.0, 4.0)])];
const X_3_22: &[ParamSpec] = &[ParamSpec::real("x", &[Interval::open(0.0, 1.0)]), ParamSpec::real("u", &[Interval::open(-PI, PI)])];
const X_HALF_LATTICE: &[ParamSpec] = &[ParamSpec { name: "x", domain: &[Interval::left_open(0.0, 1.0)], lattice: 0.5 }];
const X_HALF_LATTICE_WIDE: &[ParamSpec] = &[ParamSpec { name: "x", domain: &[Interval::left_open(0.0, 32.0)], lattice: 0.5 }];
const U_0_1C: &[ParamSpec] = &[ParamSpec::real("u", &[Interval::left_open(0.0, 1.0)])];
const U_0_1: &[ParamSpec] = &[ParamSpec::real("u", &[Interval::open(0.0, 1.0)])];
const U_0_8: &[ParamSpec] = &[ParamSpec::real("u", &[Interval::left_open(0.0, 8.0)])];
const MU_0_1: &[ParamSpec] = &[ParamSpec::real("mu", &[Interval::open(0.0, 1.0)])];
const EPS_PROBE: &[ParamSpec] = &[ParamSpec::real("eps", &[Interval::closed(1e-6, 0.1)])];
const FORM_1_4: &[ParamSpec] = &[ParamSpec::integer("form", &[Interval::closed(1.0, 4.0)])];
const WHICH_1_4: &[ParamSpec] = &[ParamSpec::integer("which", &[Interval::closed(1.0, 4.0)])];
const K_2_3: &[ParamSpec] = &[ParamSpec::integer("k", &[Interval::closed(2.0, 3.0)])];

const SETS_1_8: &[&[f64]] = &[&[-2.0], &[-0.5], &[0.5], &[1.0], &[3.0]];
const SETS_NINT: &[&[f64]] = &[&[1.0], &[2.0], &[3.0], &[5.0], &[8.0]];
const SETS_N123: &[&[f64]] = &[&[1.0], &[2.0], &[3.0]];
const SETS_0_2: &[&[f64]] = &[&[0.05], &[0.5], &[1.0], &[1.5], &[1.95]];
const SETS_0_1: &[&[f64]] = &[&[0.05], &[0.3], &[0.5], &[0.7], &[0.95]];
const SETS_PS: &[&[f64]] = &[&[0.1], &[0.5], &[0.9]];
const SETS_SYM: &[&[f64]] = &[&[-0.95], &[-0.3], &[0.1], &[0.5], &[0.95]];
const SETS_EPS: &[&[f64]] = &[&[1e-2], &[1e-3], &[1e-4]];
const SETS_1234: &[&[f64]] = &[&[1.0], &[2.0], &[3.0], &[4.0]];

pub static IDENTITIES: &[IdentityRecord] = &[
    // 1
    rec(
        "I-1.8", 1,
        "∫₀¹ e^{−px} log Γ(x) dx = (1−e^{−p})/(2p)[γ + log 2π − Λ(p/2π)] + 2(1−e^{−p}) Σ (γ + log 2πn)/(4π²n² + p²)",
        P_REAL, SETS_1_8,
        side("Q-1.1(p)", |p, s| q("Q-1.1", p, s)),
        side("digamma Λ + S-1.8(p)", |p, s| laplace_rhs(p[0], s)),
        Strict, Confirmed,
    ),
    rec(
        "I-1.11", 1,
        "∫₀¹ e^{−px} log x dx = −[γ + log p − Ei(−p)]/p",
        P_POS, &[&[0.5], &[1.0], &[2.0], &[5.0]],
        side("Q-1.11(p)", |p, s| q("Q-1.11", p, s)),
        side("−(γ + log p − Ei(−p))/p", |p, _| {
            let p = p[0];
            Ok((k(c().gamma + p.ln()) - exp_integral(-p)?).scale(-1.0 / p))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-1.12", 1,
        "∫₀¹ e^{−px} ψ(1+x) dx = ½(1−e^{−p})[γ + log 2π − Λ(p/2π)] − [γ + log p − Ei(−p)] + 2p(1−e^{−p}) Σ (γ + log 2πn)/(4π²n² + p²)",
        P_POS, &[&[0.5], &[1.3], &[3.0]],
        side("Q-1.12(p)", |p, s| q("Q-1.12", p, s)),
        side("digamma Λ + Ei + S-1.8(p)", |p, s| {
            let p = p[0];
            let e = -(-p).exp_m1();
            let lam = lambda_digamma(p / (2.0 * PI))?;
            let ei = k(c().gamma + p.ln()) - exp_integral(-p)?;
            Ok((k(gl()) - lam).scale(e / 2.0) - ei + sm("S-1.8", &[p], s)?.scale(2.0 * p * e))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-1.13", 1,
        "∫₀^∞ e^{−px} ψ(1+x) dx = [1/(eᵖ−1) − 1/p + 1] log(2π/p) + 2p Σ log n/(4π²n² + p²) + ¼[ψ(1+ip/2π) + ψ(1−ip/2π)] − (γ + log p)/p",
        P_POS, &[&[1.0], &[2.0]],
        side("Q-1.13(p)", |p, s| q("Q-1.13", p, s)),
        side("closed form, Λ(p/2π)/2", |p, s| q13_rhs(p[0], s, 0.5)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "digamma-pair coefficient 1/(4p) in place of 1/4; holds only at p = 1",
        ..rec(
            "D-1.13-variant", 1,
            "∫₀^∞ e^{−px} ψ(1+x) dx = [1/(eᵖ−1) − 1/p + 1] log(2π/p) + 2p Σ log n/(4π²n² + p²) + (1/4p)[ψ(1+ip/2π) + ψ(1−ip/2π)] − (γ + log p)/p",
            P_POS, &[&[2.0]],
            side("Q-1.13(p)", |p, s| q("Q-1.13", p, s)),
            side("closed form, Λ(p/2π)/(2p)", |p, s| q13_rhs(p[0], s, 0.5 / p[0])),
            Strict, Disputed,
        )
    },
    rec(
        "I-1.17", 1,
        "(2π²/(1−e^{−2πp})) ∫₀¹ e^{−2πpx} log Γ(x) dx = (π/2p) log 2π + (γ + log 2π) Σ 1/(n²+p²) + (π/2p)[γ − Λ(p)] + Σ log n/(n²+p²)",
        &[ParamSpec::real("p", &[Interval::open(0.0, 1.0)])], &[&[0.2], &[0.5]],
        side("Laplace form at 2πp, scaled", |p, s| {
            let p = p[0];
            Ok(laplace_rhs(2.0 * PI * p, s)?.scale(2.0 * PI * PI / -(-2.0 * PI * p).exp_m1()))
        }),
        side("S-1.23(p) + S-1.20(p) + Λ(p)", |p, s| {
            let p = p[0];
            let lam = lambda_digamma(p)?;
            let head = k(PI / (2.0 * p) * c().log_2pi) + (k(c().gamma) - lam).scale(PI / (2.0 * p));
            Ok(head + sm("S-1.23", &[p], s)?.scale(gl()) + sm("S-1.20", &[p], s)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-1.25", 1,
        "πt coth πt = 1 − 2 Σ (−1)ⁿ ζ(2n) t^{2n}",
        T_UNIT, SETS_PS,
        side("πt coth πt", |p, _| {
            let t = p[0];
            Ok(if t == 0.0 { k(1.0) } else { k(PI * t / (PI * t).tanh()) })
        }),
        side("1 − 2·PS-1.25(t)", |p, s| Ok(k(1.0) - pw("PS-1.25", p[0], s)?.scale(2.0))),
        Strict, Confirmed,
    ),
    // 2
    rec(
        "I-2.1", 2,
        "∫₀¹ log Γ(x) cos pπx dx = (γ + log 2π)(1 − cos pπ)/(pπ)² + sin pπ/(4pπ)[ψ(p/2) + ψ(−p/2)] + 2(1 − cos pπ)/π² Σ log n/(4n² − p²)",
        P_0_2, &[&[0.5], &[1.0], &[1.5]],
        side("Q-2.1(p)", |p, s| q("Q-2.1", p, s)),
        side("digamma + S-2.1(p)", |p, s| {
            let p = p[0];
            let (sp, vp) = (sinpi(p), versinpi(p));
            Ok(k(gl() * vp / (p * PI).powi(2))
                + psi_pair(p)?.scale(sp / (4.0 * p * PI))
                + sm("S-2.1", &[p], s)?.scale(2.0 * vp / (PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-2.2", 2,
        "∫₀¹ log Γ(x) sin pπx dx = (γ + log 2π)(pπ − sin pπ)/(pπ)² + (1 − cos pπ)/(4pπ)[ψ(p/2) + ψ(−p/2)] − 2 sin pπ/π² Σ log n/(4n² − p²)",
        P_0_2, &[&[0.5], &[1.0], &[1.5]],
        side("Q-2.2(p)", |p, s| q("Q-2.2", p, s)),
        side("digamma + S-2.1(p)", |p, s| {
            let p = p[0];
            let (sp, vp) = (sinpi(p), versinpi(p));
            Ok(k(gl() * (p * PI - sp) / (p * PI).powi(2)) + psi_pair(p)?.scale(vp / (4.0 * p * PI))
                - sm("S-2.1", &[p], s)?.scale(2.0 * sp / (PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-2.6", 2,
        "(2pπ/(1 − cos pπ)) ∫₀¹ log(sin πx) sin pπx dx = −[2γ + 2 log 2 + ψ(p/2) + ψ(−p/2)]",
        P_0_2, SETS_0_2,
        side("Q-2.6(p)", |p, s| q("Q-2.6", p, s)),
        side("digamma closed form", |p, _| {
            let p = p[0];
            let f = -versinpi(p) / (2.0 * p * PI);
            Ok((psi_pair(p)? + k(2.0 * c().gamma + 2.0 * LN_2)).scale(f))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-2.8", 2,
        "ψ(1+p) + ψ(1−p) + 2γ = −2p² Σ 1/(n(n² − p²))",
        P_0_1, &[&[0.3], &[0.7]],
        side("digamma", |p, _| psi_sym(p[0])),
        side("−2p²·S-2.8(p)", |p, s| Ok(sm("S-2.8", p, s)?.scale(-2.0 * p[0] * p[0]))),
        Strict, Confirmed,
    ),
    rec(
        "I-2.9", 2,
        "(4pπ/sin 2pπ) ∫₀¹ log(2 sin πx) cos 2pπx dx = −[ψ(1+p) + ψ(1−p) + 2γ]",
        P_0_1, SETS_0_1,
        side("Q-2.9(p)", |p, s| q("Q-2.9", p, s)),
        side("digamma closed form", |p, _| {
            let p = p[0];
            Ok(psi_sym(p)?.scale(-sinpi(2.0 * p) / (4.0 * p * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-2.10", 2,
        "(2pπ/sin pπ) ∫₀^{1/2} log(sin πx) cos 2pπx dx = Σ (−1)ⁿ n/(n² − p²)",
        P_0_1, SETS_0_1,
        side("Q-2.10(p)", |p, s| q("Q-2.10", p, s)),
        side("S-2.10(p)·sin pπ/(2pπ)", |p, s| Ok(sm("S-2.10", p, s)?.scale(sinpi(p[0]) / (2.0 * PI * p[0])))),
        Strict, Confirmed,
    ),
    rec(
        "I-2.12", 2,
        "∫₀¹ log(sin πx) sin((2x − 1)pπ) dx = 0",
        P_ANY16, &[&[0.5], &[1.0], &[2.5]],
        side("Q-2.12(p)", |p, s| q("Q-2.12", p, s)),
        side("0", |_, _| zero()),
        Strict, Confirmed,
    ),
    rec(
        "I-2.13", 2,
        "∫₀¹ (2x − 1)^{2n+1} log(sin πx) dx = 0",
        N_0_8, SETS_NINT,
        side("Q-2.13(n)", |p, s| q("Q-2.13", p, s)),
        side("0", |_, _| zero()),
        Strict, Confirmed,
    ),
    // 3
    rec(
        "I-3.6", 3,
        "∫₀¹ log Γ(x) cos pπx dx = (½ log 2π − 1) sin pπ/(pπ) + Si(pπ)/(pπ) + 2(1 − cos pπ)/π² Σ Ci(2nπ)/(4n² − p²) + p sin pπ/π² Σ si(2nπ)/(n(4n² − p²))",
        P_0_2, &[&[0.5], &[1.0], &[1.5]],
        side("Q-3.6(p)", |p, s| q("Q-3.6", p, s)),
        side("Si/Ci lattice sums", |p, s| {
            let p = p[0];
            let (sp, vp) = (sinpi(p), versinpi(p));
            let head = k((c().log_2pi / 2.0 - 1.0) * sp / (p * PI)) + si(p * PI)?.scale(1.0 / (p * PI));
            Ok(head + ci_lattice_sum(p, s)?.scale(2.0 * vp / (PI * PI)) + sm("S-3.8", &[p], s)?.scale(p * sp / (PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-3.7", 3,
        "∫₀¹ log Γ(x) sin pπx dx = (½ log 2π − 1)(1 − cos pπ)/(pπ) + [γ + log pπ − Ci(pπ)]/(pπ) − 2 sin pπ/π² Σ Ci(2nπ)/(4n² − p²) + p(1 − cos pπ)/π² Σ si(2nπ)/(n(4n² − p²))",
        P_0_2, &[&[0.5], &[1.0], &[1.5]],
        side("Q-3.7(p)", |p, s| q("Q-3.7", p, s)),
        side("Si/Ci lattice sums", |p, s| {
            let p = p[0];
            let (sp, vp) = (sinpi(p), versinpi(p));
            let head = k((c().log_2pi / 2.0 - 1.0) * vp / (p * PI))
                + (k(c().gamma + (p * PI).ln()) - ci(p * PI)?).scale(1.0 / (p * PI));
            Ok(head - ci_lattice_sum(p, s)?.scale(2.0 * sp / (PI * PI)) + sm("S-3.8", &[p], s)?.scale(p * vp / (PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-3.8", 3,
        "(2p²/π) Σ si(2nπ)/(n(4n² − p²)) = 2 − Si(pπ) sin pπ/(1 − cos pπ) + Ci(pπ) − log pπ + ½[ψ(p/2) + ψ(−p/2)]",
        P_0_2, SETS_0_2,
        side("(2p²/π)·S-3.8(p)", |p, s| Ok(sm("S-3.8", p, s)?.scale(2.0 * p[0] * p[0] / PI))),
        side("Si, Ci, digamma", |p, _| {
            let p = p[0];
            let (sp, vp) = (sinpi(p), versinpi(p));
            Ok(k(2.0 - (p * PI).ln()) - si(p * PI)?.scale(sp / vp) + ci(p * PI)? + psi_pair(p)?.scale(0.5))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-3.11", 3,
        "(2/π) Σ si(2nπ)/(n(4n² − 1)) = 3 + Ci(π) − γ − log 4π",
        NONE, ONCE,
        side("(2/π)·S-3.8(1)", |_, s| Ok(sm("S-3.8", &[1.0], s)?.scale(2.0 / PI))),
        side("3 + Ci(π) − γ − log 4π", |_, _| Ok(ci(PI)? + k(3.0 - c().gamma - (4.0 * PI).ln()))),
        Strict, Confirmed,
    ),
    rec(
        "I-3.13", 3,
        "∫₀¹ log Γ(x) sin πx dx = (1/π)[log(π/2) + 1]",
        NONE, ONCE,
        side("Q-3.13", |_, s| q("Q-3.13", &[], s)),
        side("(log(π/2) + 1)/π", |_, _| Ok(k(((PI / 2.0).ln() + 1.0) / PI))),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "final step marked uncertain where it is stated",
        ..rec(
            "I-3.14", 3,
            "Σ [Ci(2nπ) − γ − log 2πn]/(4n² − p²) = −(π/4p)[Si(pπ) + (Ci(pπ) − γ − log pπ) sin pπ/(1 − cos pπ)]",
            P_0_2, SETS_0_2,
            side("S-3.14(p)", |p, s| sm("S-3.14", p, s)),
            side("Si, Ci closed form", |p, _| {
                let p = p[0];
                let (sp, vp) = (sinpi(p), versinpi(p));
                let inner = si(p * PI)? + (ci(p * PI)? - k(c().gamma + (p * PI).ln())).scale(sp / vp);
                Ok(inner.scale(-PI / (4.0 * p)))
            }),
            Strict, Disputed,
        )
    },
    rec(
        "I-3.15", 3,
        "Σ (γ + log 2πn)/(4n² − 1) = (π/4) Si(π) + Σ Ci(2nπ)/(4n² − 1)",
        NONE, ONCE,
        side("S-3.16-log(1)", |_, s| sm("S-3.16-log", &[1.0], s)),
        side("(π/4) Si(π) + S-3.16-ci(1)", |_, s| Ok(si(PI)?.scale(PI / 4.0) + sm("S-3.16-ci", &[1.0], s)?)),
        Strict, Confirmed,
    ),
    rec(
        "I-3.16", 3,
        "Σ (γ + log 2πnx)/(4n² − 1) = (π/4) Si(πx) + Σ Ci(2nπx)/(4n² − 1)",
        X_HALF_LATTICE, &[&[0.5], &[1.0]],
        side("S-3.16-log(x)", |p, s| sm("S-3.16-log", p, s)),
        side("(π/4) Si(πx) + S-3.16-ci(x)", |p, s| Ok(si(PI * p[0])?.scale(PI / 4.0) + sm("S-3.16-ci", p, s)?)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "general-x form checked outside (0, 1]",
        ..rec(
            "D-3.16-variant", 3,
            "Σ (γ + log 2πnx)/(4n² − 1) = (π/4) Si(πx) + Σ Ci(2nπx)/(4n² − 1), x = 3/2",
            X_HALF_LATTICE_WIDE, &[&[1.5]],
            side("S-3.16-log(x)", |p, s| sm("S-3.16-log", p, s)),
            side("(π/4) Si(πx) + S-3.16-ci(x)", |p, s| Ok(si(PI * p[0])?.scale(PI / 4.0) + sm("S-3.16-ci", p, s)?)),
            Strict, Disputed,
        )
    },
    rec(
        "I-3.19", 3,
        "sin x = 2/π − (4/π) Σ cos 2nx/(4n² − 1), 0 ≤ x ≤ π",
        X_0_PI, &[&[0.3], &[1.0], &[2.0]],
        side("sin x", |p, _| Ok(k(p[0].sin()))),
        side("2/π − (4/π)·FS-3.19(x)", |p, s| Ok(k(2.0 / PI) - sm("FS-3.19", p, s)?.scale(4.0 / PI))),
        Strict, Confirmed,
    ),
    rec(
        "I-3.22", 3,
        "π cos ux/sin πx = 1/x + 2x Σ (−1)^{n+1} cos nu/(n² − x²)",
        X_3_22, &[&[0.3, 0.7], &[0.5, 0.5], &[0.7, -1.0]],
        side("π cos ux/sin πx", |p, _| Ok(k(PI * (p[1] * p[0]).cos() / sinpi(p[0])))),
        side("1/x + 2x·FS-3.22(x, u)", |p, s| Ok(k(1.0 / p[0]) + sm("FS-3.22", p, s)?.scale(2.0 * p[0]))),
        Strict, Confirmed,
    ),
    rec(
        "I-3.24", 3,
        "π/sin πx = 1/x + 2x Σ (−1)^{n+1}/(n² − x²)",
        X_0_1, &[&[0.3], &[0.5], &[0.7]],
        side("π/sin πx", |p, _| Ok(k(PI / sinpi(p[0])))),
        side("1/x − 2x·S-8.7(x)", |p, s| Ok(k(1.0 / p[0]) - sm("S-8.7", p, s)?.scale(2.0 * p[0]))),
        Strict, Confirmed,
    ),
    // 4
    rec(
        "I-4.1", 4,
        "∫₀¹ x log Γ(x) dx = ¼ log 2π − (γ + log 2π)/12 + ζ′(2)/(2π²)",
        NONE, ONCE,
        side("Q-4.1", |_, s| q("Q-4.1", &[], s)),
        side("constants", |_, _| Ok(k(c().log_2pi / 4.0 - gl() / 12.0 + c().zeta_prime_2 / (2.0 * PI * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.2", 4,
        "∫₀¹ log Γ(x) sin 2pπx dx = (1 − cos 2pπ)/(8pπ)[ψ(1+p) + ψ(1−p) + 2 log 2π + 2γ] − sin 2pπ/(2π²) Σ (γ + log 2πn)/(n² − p²)",
        P_0_1_SMALL, SETS_0_1,
        side("Q-2.2(2p)", |p, s| q("Q-2.2", &[2.0 * p[0]], s)),
        side("digamma + S-4.2(p)", |p, s| {
            let p = p[0];
            let (s2, v2) = (sinpi(2.0 * p), versinpi(2.0 * p));
            Ok((psi_sym(p)? + k(2.0 * c().log_2pi)).scale(v2 / (8.0 * p * PI)) - sm("S-4.2", &[p], s)?.scale(s2 / (2.0 * PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.3", 4,
        "2π ∫₀¹ x log Γ(x) cos 2pπx dx = (1 − cos 2pπ)/(8pπ)[ψ′(1+p) − ψ′(1−p)] + (2pπ sin 2pπ − (1 − cos 2pπ))/(8p²π)[ψ(1+p) + ψ(1−p) + 2 log 2π + 2γ] − (cos 2pπ/π) Σ (γ + log 2πn)/(n² − p²) − (p sin 2pπ/π²) Σ (γ + log 2πn)/(n² − p²)²",
        P_0_1_SMALL, SETS_0_1,
        side("2π·Q-4.3(p)", |p, s| Ok(q("Q-4.3", p, s)?.scale(2.0 * PI))),
        side("polygamma + S-4.2(p) + S-4.3(p)", |p, s| {
            let p = p[0];
            let (s2, c2, v2) = (sinpi(2.0 * p), cospi(2.0 * p), versinpi(2.0 * p));
            let tri = polygamma(1, 1.0 + p)? - polygamma(1, 1.0 - p)?;
            let di = psi_sym(p)? + k(2.0 * c().log_2pi);
            Ok(tri.scale(v2 / (8.0 * p * PI))
                + di.scale((2.0 * p * PI * s2 - v2) / (8.0 * p * p * PI))
                - sm("S-4.2", &[p], s)?.scale(c2 / PI)
                - sm("S-4.3", &[p], s)?.scale(p * s2 / (PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.4", 4,
        "2 ∫₀¹ x log Γ(x) cos 2nπx dx = 1/(4n) − (γ + log 2π)/(π²n²) − log n/(4π²n²) − Tₙ/π², Tₙ = Σ_{m≠n} log m/(m² − n²)",
        N_1_8, SETS_NINT,
        side("2·Q-4.4(n)", |p, s| Ok(q("Q-4.4", p, s)?.scale(2.0))),
        side("closed form + S-4.4-Tn(n)", |p, s| {
            let n = p[0];
            let pi2 = PI * PI;
            Ok(k(1.0 / (4.0 * n) - gl() / (pi2 * n * n) - n.ln() / (4.0 * pi2 * n * n)) - sm("S-4.4-Tn", p, s)?.scale(1.0 / pi2))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.6", 4,
        "2 ∫₀¹ x log Γ(x) cos 2πx dx = ¼ − (γ + log 2π)/π² − (1/π²) Σ_{m≥2} log m/(m² − 1)",
        NONE, ONCE,
        side("2·Q-6.18", |_, s| Ok(q("Q-6.18", &[], s)?.scale(2.0))),
        side("¼ − (γ + log 2π)/π² − S-6.18/π²", |_, s| Ok(k(0.25 - gl() / (PI * PI)) - sm("S-6.18", &[], s)?.scale(1.0 / (PI * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.8", 4,
        "∫₀¹ x log Γ(x) sin 2nπx dx = (1/4π)[(γ + log n − Hₙ)/n + 1/n²]",
        N_1_8, SETS_NINT,
        side("Q-4.8(n)", |p, s| q("Q-4.8", p, s)),
        side("harmonic closed form", |p, _| {
            let n = p[0];
            Ok(k(((c().gamma + n.ln() - harmonic(n as u32)) / n + 1.0 / (n * n)) / (4.0 * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.11", 4,
        "∫₀¹ x² log Γ(x) dx = (log 2π)/12 − γ/12 + ζ(3)/(4π²) + ζ′(2)/(2π²)",
        NONE, ONCE,
        side("Q-4.11", |_, s| q("Q-4.11", &[], s)),
        side("constants", |_, _| {
            let c = c();
            Ok(k(c.log_2pi / 12.0 - c.gamma / 12.0 + c.zeta3 / (4.0 * PI * PI) + c.zeta_prime_2 / (2.0 * PI * PI)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.12.7", 4,
        "∫₀¹ B_{2n+1}(x) cot πx dx = (−1)^{n+1} 2(2n+1)! ζ(2n+1)/(2π)^{2n+1}",
        N_1_5, SETS_N123,
        side("Q-4.12.7(n)", |p, s| q("Q-4.12.7", p, s)),
        side("zeta closed form", |p, _| Ok(k(bern_cot(p[0] as u32)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.12.8", 4,
        "∫₀¹ B_{2n}(x) log sin πx dx = (−1)ⁿ (2n)! ζ(2n+1)/(2π)^{2n}",
        N_1_5, SETS_N123,
        side("Q-4.12.8(n)", |p, s| q("Q-4.12.8", p, s)),
        side("zeta closed form", |p, _| {
            let n = p[0] as u32;
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            Ok(k(sign * factorial(2 * n) * zeta_odd(2 * n + 1) / (2.0 * PI).powi(2 * n as i32)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.12.10", 4,
        "∫₀¹ B_{2n}(x) log Γ(x) dx = π/(2(2n+1)) ∫₀¹ B_{2n+1}(x) cot πx dx",
        N_1_5, SETS_N123,
        side("Q-4.12.10(n)", |p, s| q("Q-4.12.10", p, s)),
        side("zeta closed form", |p, _| {
            let n = p[0] as u32;
            Ok(k(PI / (2.0 * (2 * n + 1) as f64) * bern_cot(n)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.16", 4,
        "log G(x) = a₀ + Σ [aₙ cos 2nπx + bₙ sin 2nπx], aₙ = (½ log n − γ − log 2π − 1)/(2π²n²) − 1/(4n) − Tₙ/π²",
        X_FOURIER, &[&[0.25], &[0.5], &[0.75]],
        side("log G(x)", |p, _| lgg(p[0])),
        side("FS-4.16(x)", |p, s| sm("FS-4.16", p, s)),
        Slow, Confirmed,
    ),
    IdentityRecord {
        note: "aₙ carries −Tₙ/n² in place of −Tₙ/π²",
        ..rec(
            "D-4.16-variant", 4,
            "log G(x) = a₀/2 + Σ (aₙ cos 2πnx + bₙ sin 2πnx), aₙ ∋ −Tₙ/n²",
            X_FOURIER, &[&[0.5]],
            side("log G(x)", |p, _| lgg(p[0])),
            side("FS-4.16-variant(x)", |p, s| sm("FS-4.16-variant", p, s)),
            Slow, Disputed,
        )
    },
    rec(
        "I-4.17", 4,
        "∫₀ᵘ log Γ(x) dx = (u/2) log 2π + u(1 − u)/2 + u log Γ(u) − log G(1+u)",
        U_0_1C, &[&[0.25], &[0.5], &[1.0]],
        side("Q-4.17(u)", |p, s| q("Q-4.17", p, s)),
        side("log Γ, log G", |p, _| {
            let u = p[0];
            Ok(k(u / 2.0 * c().log_2pi + u * (1.0 - u) / 2.0) + log_gamma(u)?.scale(u) - lgg(1.0 + u)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.24", 4,
        "∫₀¹ x log Γ(x) cot πx dx = 2 Σ ∫₀¹ x log Γ(x) sin 2nπx dx = (1/2π)[Σ (γ + log n − Hₙ)/n + ζ(2)]",
        NONE, ONCE,
        side("Q-4.31", |_, s| q("Q-4.31", &[], s)),
        side("(S-4.31.1 + ζ(2))/(2π)", |_, s| Ok((sm("S-4.31.1", &[], s)? + k(c().zeta2)).scale(1.0 / (2.0 * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.25", 4,
        "∫₀¹ x log x sin 2nπx dx = −Si(2nπ)/(4π²n²)",
        N_1_8, SETS_N123,
        side("Q-4.25(n)", |p, s| q("Q-4.25", p, s)),
        side("−Si(2nπ)/(4π²n²)", |p, _| Ok(si(2.0 * p[0] * PI)?.scale(-1.0 / (4.0 * PI * PI * p[0] * p[0])))),
        Strict, Confirmed,
    ),
    IdentityRecord {
        quoted: &[quoted("integral", -0.121552), quoted("(1/2π²) Σ Si(2nπ)/n²", 0.121155), quoted("Σ Si(2nπ)/n²", 2.3915)],
        note: "numerical values of the two sides were reported to differ",
        ..rec(
            "D-4.26", 4,
            "∫₀¹ x log x cot πx dx = −(1/2π²) Σ Si(2nπ)/n²",
            NONE, ONCE,
            side("Q-4.26-lhs", |_, s| q("Q-4.26-lhs", &[], s)),
            side("−S-4.26/(2π²)", |_, s| Ok(sm("S-4.26", &[], s)?.scale(-1.0 / (2.0 * PI * PI)))),
            Strict, Disputed,
        )
    },
    IdentityRecord {
        quoted: &[quoted("Σ ζ(2n)/(2n+1)² + (1/4π) Σ Si(2nπ)/n²", 0.498133)],
        note: "the sum was reported as 0.498133 rather than ½",
        ..rec(
            "D-4.27", 4,
            "Σ ζ(2n)/(2n+1)² + (1/4π) Σ Si(2nπ)/n² = ½",
            NONE, ONCE,
            side("S-4.27 + S-4.26/(4π)", |_, s| Ok(sm("S-4.27", &[], s)? + sm("S-4.26", &[], s)?.scale(1.0 / (4.0 * PI)))),
            side("½", |_, _| Ok(k(0.5))),
            Strict, Disputed,
        )
    },
    IdentityRecord {
        quoted: &[quoted("integral", 1.07051), quoted("right side", 1.0737)],
        note: "numerical values of the two sides were reported to differ",
        ..rec(
            "D-4.28", 4,
            "∫₀¹ log x log sin πx dx = log 2 + (1/2π) Σ Si(2nπ)/n²",
            NONE, ONCE,
            side("Q-4.28-lhs", |_, s| q("Q-4.28-lhs", &[], s)),
            side("log 2 + S-4.26/(2π)", |_, s| Ok(k(LN_2) + sm("S-4.26", &[], s)?.scale(1.0 / (2.0 * PI)))),
            Strict, Disputed,
        )
    },
    IdentityRecord {
        quoted: &[quoted("integral", 2.83509), quoted("Σ Si(nπ)/n²", 2.82726)],
        note: "numerical values of the two sides were reported to differ",
        ..rec(
            "D-4.29", 4,
            "∫₀^π log x log[2 sin(x/2)] dx = Σ Si(nπ)/n²",
            NONE, ONCE,
            side("Q-4.29-lhs", |_, s| q("Q-4.29-lhs", &[], s)),
            side("S-4.29-aux", |_, s| sm("S-4.29-aux", &[], s)),
            Strict, Disputed,
        )
    },
    IdentityRecord {
        note: "stated alongside the disputed log-sine integrals",
        ..rec(
            "D-4.30", 4,
            "∫₀^π log x log cot(x/2) dx = −2 Σ Si((2n−1)π)/(2n−1)²",
            NONE, ONCE,
            side("Q-4.30-lhs", |_, s| q("Q-4.30-lhs", &[], s)),
            side("−2·S-4.30-aux", |_, s| Ok(sm("S-4.30-aux", &[], s)?.scale(-2.0))),
            Strict, Disputed,
        )
    },
    rec(
        "I-4.31", 4,
        "∫₀¹ x log Γ(x) cot πx dx = (1/2π)[γ₁ + ½(ζ(2) + γ²)]",
        NONE, ONCE,
        side("Q-4.31", |_, s| q("Q-4.31", &[], s)),
        side("(γ₁ + ½(ζ(2) + γ²))/(2π)", |_, _| Ok(k(g1_bracket() / (2.0 * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.31.1", 4,
        "Σ (γ + log n − Hₙ)/n = γ₁ − ½[ζ(2) − γ²]",
        NONE, ONCE,
        side("S-4.31.1", |_, s| sm("S-4.31.1", &[], s)),
        side("γ₁ − ½(ζ(2) − γ²)", |_, _| {
            let c = c();
            Ok(k(c.gamma1 - 0.5 * (c.zeta2 - c.gamma * c.gamma)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-4.32", 4,
        "Σ Hₙ[log(1 + 1/n) − 1/n] = −[γ₁ + ½(ζ(2) + γ²)]",
        NONE, ONCE,
        side("S-4.32", |_, s| sm("S-4.32", &[], s)),
        side("−(γ₁ + ½(ζ(2) + γ²))", |_, _| Ok(k(-g1_bracket()))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.32.1", 4,
        "Σ [(γ + log n)/n − Hₙ log(1 + 1/n)] = 2γ₁ + γ²",
        NONE, ONCE,
        side("S-4.32.1", |_, s| sm("S-4.32.1", &[], s)),
        side("2γ₁ + γ²", |_, _| Ok(k(2.0 * c().gamma1 + c().gamma * c().gamma))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.33", 4,
        "∫₀¹ log G(1+x) cot πx dx = (1/2π)[γ₁ + ½γ²]",
        NONE, ONCE,
        side("Q-4.33", |_, s| q("Q-4.33", &[], s)),
        side("(γ₁ + ½γ²)/(2π)", |_, _| Ok(k((c().gamma1 + 0.5 * c().gamma * c().gamma) / (2.0 * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.34", 4,
        "∫₀¹ [log G(1+x) − x log Γ(x)] cot πx dx = −π/24",
        NONE, ONCE,
        side("Q-4.34", |_, s| q("Q-4.34", &[], s)),
        side("−π/24", |_, _| Ok(k(-PI / 24.0))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.35", 4,
        "∫₀¹ log Γ(1+x) cot πx dx = Σ Ci(2nπ)/(nπ)",
        NONE, ONCE,
        side("Q-4.35", |_, s| q("Q-4.35", &[], s)),
        side("S-4.35", |_, s| sm("S-4.35", &[], s)),
        Strict, Confirmed,
    ),
    rec(
        "I-4.36", 4,
        "∫₀¹ x log Γ(x) ψ(x) dx = −½ ∫₀¹ log²Γ(x) dx",
        NONE, ONCE,
        side("Q-4.36-xpsi", |_, s| q("Q-4.36-xpsi", &[], s)),
        side("−½ ∫log²Γ closed form", |_, _| Ok(k(-0.5 * log2_gamma_integral()))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.36.1", 4,
        "∫₀¹ log²Γ(x) dx = γ²/12 + π²/48 + γ log 2π/6 + log²(2π)/3 − (γ + log 2π) ζ′(2)/π² + ζ″(2)/(2π²)",
        NONE, ONCE,
        side("Q-4.36", |_, s| q("Q-4.36", &[], s)),
        side("constants", |_, _| Ok(k(log2_gamma_integral()))),
        Strict, Confirmed,
    ),
    rec(
        "I-4.37", 4,
        "∫₀¹ x log Γ(x) ψ(1−x) dx = ½[γ₁ + ½(ζ(2) + γ²)] − ½ ∫₀¹ log²Γ(x) dx",
        NONE, ONCE,
        side("Q-4.37", |_, s| q("Q-4.37", &[], s)),
        side("constants", |_, _| Ok(k(0.5 * g1_bracket() - 0.5 * log2_gamma_integral()))),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "∫log²Γ constant uses ¼ log 2π where ¼ log²(2π) belongs",
        ..rec(
            "D-4.37-variant", 4,
            "∫₀¹ x log Γ(x) ψ(1−x) dx, ∫₀¹ log²Γ(x) dx ∋ ¼ log 2π",
            NONE, ONCE,
            side("Q-4.37", |_, s| q("Q-4.37", &[], s)),
            side("closed form with ¼ log 2π", |_, _| Ok(k(0.5 * g1_bracket() - 0.5 * log2_gamma_variant()))),
            Strict, Disputed,
        )
    },
    rec(
        "P-logGammacot", 4,
        "F(ε) = ∫_ε^{1−ε} log Γ(x) cot πx dx, F(ε) vs F(ε/10)",
        EPS_PROBE, SETS_EPS,
        side("Q-trunc-loggamma-cot(ε)", |p, s| q("Q-trunc-loggamma-cot", p, s)),
        side("Q-trunc-loggamma-cot(ε/10)", |p, s| q("Q-trunc-loggamma-cot", &[p[0] / 10.0], s)),
        Strict, DivergentProbe,
    ),
    rec(
        "P-logxcot", 4,
        "F(ε) = ∫_ε^{1−ε} log x cot πx dx, F(ε) vs F(ε/10)",
        EPS_PROBE, SETS_EPS,
        side("Q-trunc-logx-cot(ε)", |p, s| q("Q-trunc-logx-cot", p, s)),
        side("Q-trunc-logx-cot(ε/10)", |p, s| q("Q-trunc-logx-cot", &[p[0] / 10.0], s)),
        Strict, DivergentProbe,
    ),
    // 5
    rec(
        "I-5.1", 5,
        "Λ(x) = −½[ψ(1+ix) + ψ(1−ix)] = γ + Σ (−1)ⁿ ζ(2n+1) x^{2n}",
        X_UNIT, SETS_PS,
        side("complex digamma", |p, _| lambda_digamma(p[0])),
        side("PS-5.1(x)", |p, s| pw("PS-5.1", p[0], s)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.4", 5,
        "∫₀^∞ [sin xt/(t(eᵗ − 1)) − x/(t eᵗ)] dt = −Im log Γ(1+ix)",
        X_UNIT, SETS_PS,
        side("Q-5.4(x)", |p, s| q("Q-5.4", p, s)),
        side("γx − PS-5.41-im(x)", |p, s| Ok(k(c().gamma * p[0]) - pw("PS-5.41-im", p[0], s)?)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.5", 5,
        "∫₀^∞ [cos xt/(eᵗ − 1) − 1/(t eᵗ)] dt = Λ(x)",
        X_LAMBDA, SETS_PS,
        side("Q-5.5(x)", |p, s| q("Q-5.5", p, s)),
        side("Λ(x)", |p, _| lambda_fn(p[0])),
        Strict, Confirmed,
    ),
    rec(
        "I-5.7", 5,
        "∫₀^∞ [1/(eᵗ − 1) − 1/t] cos xt dt = log x + Λ(x)",
        X_LOG, &[&[0.5], &[1.0], &[2.0]],
        side("Q-5.7(x)", |p, s| q("Q-5.7", p, s)),
        side("log x + Λ(x)", |p, _| Ok(k(p[0].ln()) + lambda_fn(p[0])?)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.13", 5,
        "Σ [n/(n² − ¼) − log(1 + 1/n)] = −1 + γ + log 4",
        NONE, ONCE,
        side("S-5.13(½)", |_, s| sm("S-5.13", &[0.5], s)),
        side("−1 + γ + log 4", |_, _| Ok(k(-1.0 + c().gamma + 4f64.ln()))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.17", 5,
        "Σ ζ(2n+1)/(n+1) x^{2n+2} = −(1 + γ)x² − log G(1+x) − log G(1−x)",
        X_UNIT, SETS_PS,
        side("PS-5.17(x)", |p, s| pw("PS-5.17", p[0], s)),
        side("log G closed form", |p, _| {
            let x = p[0];
            Ok(k(-(1.0 + c().gamma) * x * x) - lgg(1.0 + x)? - lgg(1.0 - x)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.18", 5,
        "Σ [n log(1 − 1/(4n²)) + ¼ log(1 + 1/n)] = 3ζ′(−1) + ¼ + (1/12) log 2",
        NONE, ONCE,
        side("S-5.18", |_, s| sm("S-5.18", &[], s)),
        side("3ζ′(−1) + ¼ + (log 2)/12", |_, _| Ok(zeta_family(ZetaKind::ZetaPrimeNeg1, -1.0, 1.0)?.scale(3.0) + k(0.25 + LN_2 / 12.0))),
        Strict, Confirmed,
    ),
    IdentityRecord {
        quoted: &[quoted("series", -0.187878)],
        note: "series value was quoted as −0.187878",
        ..rec(
            "D-5.18", 5,
            "Σ [n log(1 − 1/(4n²)) + ¼ log(1 + 1/n)] = 3ζ′(−1) + ¼ + (1/12) log 2",
            NONE, ONCE,
            side("S-5.18", |_, s| sm("S-5.18", &[], s)),
            side("3ζ′(−1) + ¼ + (log 2)/12", |_, _| Ok(zeta_family(ZetaKind::ZetaPrimeNeg1, -1.0, 1.0)?.scale(3.0) + k(0.25 + LN_2 / 12.0))),
            Strict, Disputed,
        )
    },
    rec(
        "I-5.20", 5,
        "∫₀ˣ πt cot πt dt = x log 2π + log G(1−x) − log G(1+x)",
        X_0_1, &[&[0.1], &[0.25], &[0.5]],
        side("Q-5.20(x)", |p, s| q("Q-5.20", p, s)),
        side("log G closed form", |p, _| {
            let x = p[0];
            Ok(k(x * c().log_2pi) + lgg(1.0 - x)? - lgg(1.0 + x)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.24", 5,
        "(x + ½) log 2π + log G(½ − x) − log G(3/2 + x) = ½[log G(1 − 2x) − log G(1 + 2x)] − [log G(1 − x) − log G(1 + x)] + ½ log(2 cos πx)",
        X_HALF, &[&[0.1], &[0.3]],
        side("Q-5.20(x + ½)", |p, s| q("Q-5.20", &[p[0] + 0.5], s)),
        side("log G closed form", |p, _| {
            let x = p[0];
            let a = (lgg(1.0 - 2.0 * x)? - lgg(1.0 + 2.0 * x)?).scale(0.5);
            Ok(a - (lgg(1.0 - x)? - lgg(1.0 + x)?) + k(0.5 * (2.0 * cospi(x)).ln()))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.24.4", 5,
        "2 Σ x/(x² + 4π²n²) = 1/(eˣ − 1) − 1/x + ½",
        X_POS, &[&[0.3], &[1.0], &[3.0]],
        side("2·S-5.24.4(x)", |p, s| Ok(sm("S-5.24.4", p, s)?.scale(2.0))),
        side("1/(eˣ − 1) − 1/x + ½", |p, _| Ok(k(1.0 / p[0].exp_m1() - 1.0 / p[0] + 0.5))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.32", 5,
        "Σ ζ(2n+1)/(2n+1) x^{2n+1} = ½ log(πx/sin πx) − γx − log Γ(1+x)",
        X_UNIT, SETS_PS,
        side("PS-5.32(x)", |p, s| pw("PS-5.32", p[0], s)),
        side("log Γ closed form", |p, _| {
            let x = p[0];
            Ok(k(0.5 * (PI * x / sinpi(x)).ln() - c().gamma * x) - log_gamma(1.0 + x)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.34", 5,
        "∫₀^∞ [sinh xt/(t(eᵗ − 1)) − x/(t eᵗ)] dt = γx + Σ ζ(2n+1)/(2n+1) x^{2n+1}",
        X_UNIT, SETS_PS,
        side("Q-5.34(x)", |p, s| q("Q-5.34", p, s)),
        side("γx + PS-5.32(x)", |p, s| Ok(k(c().gamma * p[0]) + pw("PS-5.32", p[0], s)?)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.35", 5,
        "∫₀^∞ [sinh xt/(t(eᵗ − 1)) − x/(t eᵗ)] dt = ½[log Γ(1−x) − log Γ(1+x)]",
        X_UNIT, SETS_SYM,
        side("Q-5.35(x)", |p, s| q("Q-5.35", p, s)),
        side("log Γ closed form", |p, _| Ok((log_gamma(1.0 - p[0])? - log_gamma(1.0 + p[0])?).scale(0.5))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.36", 5,
        "∫₀^∞ [cosh xt/(eᵗ − 1) − 1/(t eᵗ)] dt = −½[ψ(1+x) + ψ(1−x)]",
        X_UNIT, SETS_SYM,
        side("Q-5.36(x)", |p, s| q("Q-5.36", p, s)),
        side("digamma closed form", |p, _| Ok((digamma_real(1.0 + p[0])? + digamma_real(1.0 - p[0])?).scale(-0.5))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.44.4", 5,
        "Σ [(1 + n) log(1 + 1/n) − 1 − 1/(2n)] = 1 − ½(γ + log 2π)",
        NONE, ONCE,
        side("S-5.44.4", |_, s| sm("S-5.44.4", &[], s)),
        side("1 − ½(γ + log 2π)", |_, _| Ok(k(1.0 - 0.5 * gl()))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.44.5", 5,
        "Σ [(½ + n) log(1 + 1/n) − 1] = 1 − ½ log 2π",
        NONE, ONCE,
        side("S-5.44.5", |_, s| sm("S-5.44.5", &[], s)),
        side("1 − ½ log 2π", |_, _| Ok(k(1.0 - 0.5 * c().log_2pi))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.45", 5,
        "∫₀¹ (ψ(1+x) + γ)/x dx = Σ log(n+1)/(n(n+1)) = Σ (−1)^{n+1} ζ(n+1)/n = −Σ_{n≥2} ζ′(n) = Σ log(1 + 1/n)/n",
        FORM_1_4, SETS_1234,
        side("Q-5.45-int", |_, s| q("Q-5.45-int", &[], s)),
        side("S-5.45(form)", |p, s| sm("S-5.45", p, s)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.45.2", 5,
        "∫₀¹ (ψ(1+x) + γ)/x dx = ∫₀¹ (1 − x) log(1 − x)/(x log x) dx",
        NONE, ONCE,
        side("Q-5.45-int", |_, s| q("Q-5.45-int", &[], s)),
        side("Q-5.45.2", |_, s| q("Q-5.45.2", &[], s)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.46.2", 5,
        "Σ [ζ(2n+1) − 1] = ¼",
        NONE, ONCE,
        side("S-5.46.2", |_, s| sm("S-5.46.2", &[], s)),
        side("¼", |_, _| Ok(k(0.25))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.48", 5,
        "Σ [ζ(2n+1) − 1] x^{2n+2}/(n+1) = −γx² − log G(1+x) − log G(1−x) + log(1 − x²)",
        X_UNIT, SETS_PS,
        side("PS-5.48(x)", |p, s| pw("PS-5.48", p[0], s)),
        side("log G closed form", |p, _| {
            let x = p[0];
            Ok(k(-c().gamma * x * x + (-x * x).ln_1p()) - lgg(1.0 + x)? - lgg(1.0 - x)?)
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.52", 5,
        "∫₀ᵘ (ψ(1+x) + γ)/x dx = Σ (1/n) log((n + u)/n)",
        U_0_1C, &[&[0.25], &[0.5], &[1.0]],
        side("Q-5.52(u)", |p, s| q("Q-5.52", p, s)),
        side("S-5.52(u)", |p, s| sm("S-5.52", p, s)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.53", 5,
        "∫₀ᵘ (1/x)(1/x − π cot πx) dx = Σ ζ(2n+1)/n u^{2n} + 2 Σ (1/n) log((n + u)/n)",
        U_0_1, &[&[0.25], &[0.5], &[0.9]],
        side("Q-5.53(u)", |p, s| q("Q-5.53", p, s)),
        side("PS-5.53(u) + 2·S-5.52(u)", |p, s| Ok(pw("PS-5.53", p[0], s)? + sm("S-5.52", p, s)?.scale(2.0))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.54", 5,
        "∫₀ᵘ (1/x)(1/x − π cot πx) dx = Σ ζ(2n)/n u^{2n−1} + Σ ζ(2n)/(n(2n−1)) u^{2n−1}",
        U_0_1, &[&[0.25], &[0.5], &[0.9]],
        side("Q-5.53(u)", |p, s| q("Q-5.53", p, s)),
        side("PS-5.54(u)", |p, s| pw("PS-5.54", p[0], s)),
        Strict, Confirmed,
    ),
    rec(
        "I-5.55", 5,
        "2 ∫₀ᵘ (ψ(1+x) + γ)/x dx = Σ ζ(2n)/n u^{2n−1} + Σ ζ(2n)/(n(2n−1)) u^{2n−1} − Σ ζ(2n+1)/n u^{2n}",
        U_0_1, &[&[0.25], &[0.5], &[0.9]],
        side("2·Q-5.52(u)", |p, s| Ok(q("Q-5.52", p, s)?.scale(2.0))),
        side("PS-5.54(u) − PS-5.53(u)", |p, s| Ok(pw("PS-5.54", p[0], s)? - pw("PS-5.53", p[0], s)?)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "the constant 1 − log 2 from the partial-fraction route does not reproduce the integral",
        ..rec(
            "D-5.55", 5,
            "∫₀¹ (ψ(1+x) + γ)/x dx = Σ_{n≥2} (1/n) log(1 + 1/n) + 1 − log 2",
            NONE, ONCE,
            side("Q-5.45-int", |_, s| q("Q-5.45-int", &[], s)),
            side("S-5.45(4) − log 2 + 1 − log 2", |_, s| Ok(sm("S-5.45", &[4.0], s)? + k(1.0 - 2.0 * LN_2))),
            Strict, Disputed,
        )
    },
    rec(
        "I-5.56", 5,
        "Σ_{j≥2} [j log(1 − 1/j) + 1 + 1/(2j)] = ½[γ + log 2π − 3]",
        NONE, ONCE,
        side("S-5.56", |_, s| sm("S-5.56", &[], s)),
        side("½(γ + log 2π − 3)", |_, _| Ok(k(0.5 * (gl() - 3.0)))),
        Strict, Confirmed,
    ),
    rec(
        "I-5.57", 5,
        "Σ_{j≥2} j/(j² − 1)² = 5/16; Σ 1/(j(j² − 1)) = ¼; Σ [j log(1 − 1/j²) + 1/j] = γ − log 2; Σ [j log(1 − 1/j²) + log(1 + 1/j)] = 1 − 2 log 2",
        WHICH_1_4, SETS_1234,
        side("S-5.57-aux(which)", |p, s| sm("S-5.57-aux", p, s)),
        side("closed forms", |p, _| {
            Ok(k(match p[0] as u32 {
                1 => 5.0 / 16.0,
                2 => 0.25,
                3 => c().gamma - LN_2,
                _ => 1.0 - 2.0 * LN_2,
            }))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-5.58.1", 5,
        "Σ [j log(1 + 1/j) − 1 + 1/(2j)] = ½[γ − log 2π] + 1",
        NONE, ONCE,
        side("S-5.58.1", |_, s| sm("S-5.58.1", &[], s)),
        side("½(γ − log 2π) + 1", |_, _| Ok(k(0.5 * (c().gamma - c().log_2pi) + 1.0))),
        Strict, Confirmed,
    ),
    // 6
    rec(
        "I-6.2", 6,
        "−Σ_{n≥2} log(1 − 1/n²) cos 2nπx = log 2 + (π/2) sin 2πx + (1 − cos 2πx)[log π + γ + ψ(x)]",
        X_FOURIER, &[&[0.3], &[0.7]],
        side("FS-6.2(x)", |p, s| sm("FS-6.2", p, s)),
        side("digamma closed form", |p, _| {
            let x = p[0];
            let v2 = versinpi(2.0 * x);
            Ok(k(LN_2 + PI / 2.0 * sinpi(2.0 * x) + v2 * (PI.ln() + c().gamma)) + digamma_real(x)?.scale(v2))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.3", 6,
        "Σ_{n≥2} log(1 − 1/n²) = −log 2",
        NONE, ONCE,
        side("S-6.3", |_, s| sm("S-6.3", &[], s)),
        side("−log 2", |_, _| Ok(k(-LN_2))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.4", 6,
        "Σ_{n≥2} (−1)^{n+1} log(1 − 1/n²) = 2 log π − 3 log 2",
        NONE, ONCE,
        side("S-6.4", |_, s| sm("S-6.4", &[], s)),
        side("2 log π − 3 log 2", |_, _| Ok(k(2.0 * PI.ln() - 3.0 * LN_2))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.5", 6,
        "Σ (−1)^{n+1} log(1 + 1/n) = log(π/2)",
        NONE, ONCE,
        side("S-6.5", |_, s| sm("S-6.5", &[], s)),
        side("log(π/2)", |_, _| Ok(k((PI / 2.0).ln()))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.6", 6,
        "Σ_{n≥2} (−1)^{n+1} log(1 − 1/n) = log(π/2)",
        NONE, ONCE,
        side("S-6.6", |_, s| sm("S-6.6", &[], s)),
        side("log(π/2)", |_, _| Ok(k((PI / 2.0).ln()))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.7", 6,
        "∫₀¹ (y − 1)/((1 + y) log y) dy = log(π/2)",
        NONE, ONCE,
        side("Q-6.7", |_, s| q("Q-6.7", &[], s)),
        side("log(π/2)", |_, _| Ok(k((PI / 2.0).ln()))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.7.1", 6,
        "∫₀¹ (1 − cos 2πx) ψ(1 − x) dx = −(γ + log 2π)",
        NONE, ONCE,
        side("Q-6.7.1", |_, s| q("Q-6.7.1", &[], s)),
        side("−(γ + log 2π)", |_, _| Ok(k(-gl()))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.7.2", 6,
        "∫₀¹ x(1 − x)(1 − cos 2πx) ψ(x) dx = (1/2π²) Σ_{n≥2} log(1 − 1/n²)/n² − (γ + log 2π)/6 − (γ + log π)/(2π²)",
        NONE, ONCE,
        side("Q-6.7.2", |_, s| q("Q-6.7.2", &[], s)),
        side("S-6.7.2/(2π²) + constants", |_, s| {
            let pi2 = PI * PI;
            Ok(sm("S-6.7.2", &[], s)?.scale(1.0 / (2.0 * pi2)) - k(gl() / 6.0 + (c().gamma + PI.ln()) / (2.0 * pi2)))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.8", 6,
        "∫₀¹ log Γ(x) sin 2πx dx = (γ + log 2π)/(2π)",
        NONE, ONCE,
        side("Q-6.8", |_, s| q("Q-6.8", &[], s)),
        side("(γ + log 2π)/(2π)", |_, _| Ok(k(gl() / (2.0 * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.9", 6,
        "∫₀¹ log Γ(x) sin 2kπx dx = (γ + log 2πk)/(2πk)",
        K_1_8, SETS_NINT,
        side("Q-6.9(k)", |p, s| q("Q-6.9", p, s)),
        side("(γ + log 2πk)/(2πk)", |p, _| Ok(k((gl() + p[0].ln()) / (2.0 * PI * p[0])))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.10", 6,
        "∫₀ᵘ ψ(1+x) cos²πx dx = log Γ(1+u) + (1/4π) Σ_{n≥2} log(1 − 1/n²) sin 2nπu/n + (u/2) log 2 + (1 − cos 2πu)/8 + ½(γ + log π)(u − sin 2πu/(2π)) − ½[log 2πu + γ − Ci(2πu)]",
        U_FOURIER, &[&[0.25], &[0.5], &[0.8]],
        side("Q-6.10(u)", |p, s| q("Q-6.10", p, s)),
        side("log Γ, Ci + FS-6.10(u)", |p, s| {
            let u = p[0];
            let g = c().gamma;
            let tw = 2.0 * PI * u;
            let consts = u * LN_2 / 2.0 + versinpi(2.0 * u) / 8.0 + 0.5 * (g + PI.ln()) * (u - sinpi(2.0 * u) / (2.0 * PI)) - 0.5 * (tw.ln() + g);
            Ok(log_gamma(1.0 + u)? + sm("FS-6.10", p, s)?.scale(1.0 / (4.0 * PI)) + k(consts) + ci(tw)?.scale(0.5))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.14", 6,
        "∫₀^{1/2} ψ(1+x) cos²πx dx = ¼[log π − γ + 2 Ci(π) − 3 log 2 + 1]",
        NONE, ONCE,
        side("Q-6.14", |_, s| q("Q-6.14", &[], s)),
        side("Ci closed form", |_, _| Ok((ci(PI)?.scale(2.0) + k(PI.ln() - c().gamma - 3.0 * LN_2 + 1.0)).scale(0.25))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.14.1", 6,
        "∫₀¹ ψ(x) sin²πx dx = −½(γ + log 2π)",
        NONE, ONCE,
        side("Q-6.14.1", |_, s| q("Q-6.14.1", &[], s)),
        side("−½(γ + log 2π)", |_, _| Ok(k(-0.5 * gl()))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.14.2", 6,
        "∫₀^{1/2} ψ(x) sin²πx dx = −¼[1 + γ + log 2π]",
        NONE, ONCE,
        side("Q-6.14.2", |_, s| q("Q-6.14.2", &[], s)),
        side("−¼(1 + γ + log 2π)", |_, _| Ok(k(-0.25 * (1.0 + gl())))),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "constant −¼[2 + γ + log π] in place of −¼[1 + γ + log 2π]",
        ..rec(
            "D-6.14.2-variant", 6,
            "∫₀^{1/2} ψ(x) sin²πx dx = −¼[2 + γ + log π]",
            NONE, ONCE,
            side("Q-6.14.2", |_, s| q("Q-6.14.2", &[], s)),
            side("−¼(2 + γ + log π)", |_, _| Ok(k(-0.25 * (2.0 + c().gamma + PI.ln())))),
            Strict, Disputed,
        )
    },
    rec(
        "I-6.15", 6,
        "∫₀ᵘ sin²πx/x dx = ½[γ + log 2πu − Ci(2πu)]",
        U_0_8, &[&[0.3], &[0.7]],
        side("Q-6.15(u)", |p, s| q("Q-6.15", p, s)),
        side("Ci closed form", |p, _| {
            let u = p[0];
            Ok((k(c().gamma + (2.0 * PI * u).ln()) - ci(2.0 * PI * u)?).scale(0.5))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.16", 6,
        "∫₀¹ x log Γ(x) sin 2πx dx = γ/(4π)",
        NONE, ONCE,
        side("Q-6.16", |_, s| q("Q-6.16", &[], s)),
        side("γ/(4π)", |_, _| Ok(k(c().gamma / (4.0 * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.17", 6,
        "∫₀¹ log Γ(x) cos 2kπx dx = 1/(4k)",
        K_1_8, SETS_NINT,
        side("Q-6.17(k)", |p, s| q("Q-6.17", p, s)),
        side("1/(4k)", |p, _| Ok(k(0.25 / p[0]))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.18", 6,
        "∫₀¹ x log Γ(x) cos 2πx dx = ⅛ − (γ + log 2π)/(2π²) − (1/2π²) Σ_{n≥2} log n/(n² − 1)",
        NONE, ONCE,
        side("Q-6.18", |_, s| q("Q-6.18", &[], s)),
        side("⅛ − (γ + log 2π)/(2π²) − S-6.18/(2π²)", |_, s| {
            let d = 2.0 * PI * PI;
            Ok(k(0.125 - gl() / d) - sm("S-6.18", &[], s)?.scale(1.0 / d))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.19", 6,
        "Σ_{n≥2} ψ(n + ½) log(1 − 1/n²) = [γ + 2 log 2 − 2] log 2 − 4 Σ log n/(4n² − 1)",
        NONE, ONCE,
        side("S-6.23", |_, s| sm("S-6.23", &[], s)),
        side("constants − 4·S-7.12b", |_, s| Ok(k((c().gamma + 2.0 * LN_2 - 2.0) * LN_2) - sm("S-7.12b", &[], s)?.scale(4.0))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.22", 6,
        "∫₀¹ ψ(x) sin πx dx = −(2/π)[log 2π + γ + 2 Σ log n/(4n² − 1)]",
        NONE, ONCE,
        side("Q-6.22", |_, s| q("Q-6.22", &[], s)),
        side("−(2/π)(γ + log 2π + 2·S-7.12b)", |_, s| Ok((k(gl()) + sm("S-7.12b", &[], s)?.scale(2.0)).scale(-2.0 / PI))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.24", 6,
        "∫₀¹ x(1 − x) cos πx cot πx dx = (7ζ(3) − 4)/π³",
        NONE, ONCE,
        side("Q-6.24", |_, s| q("Q-6.24", &[], s)),
        side("(7ζ(3) − 4)/π³", |_, _| Ok(k((7.0 * c().zeta3 - 4.0) / PI.powi(3)))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.24.1", 6,
        "Σ n/(4n² − 1)² = ⅛; Σ n/(4n² − 1)³ = (7ζ(3) − 6)/64",
        K_2_3, &[&[2.0], &[3.0]],
        side("S-6.24-aux(k)", |p, s| sm("S-6.24-aux", p, s)),
        side("closed forms", |p, _| Ok(k(if p[0] == 2.0 { 0.125 } else { (7.0 * c().zeta3 - 6.0) / 64.0 }))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.28", 6,
        "ψ′(1+x) − ψ′(1−x) = −4x Σ n/(n² − x²)²",
        X_0_1, &[&[0.3], &[0.6]],
        side("trigamma", |p, _| Ok(polygamma(1, 1.0 + p[0])? - polygamma(1, 1.0 - p[0])?)),
        side("−4x·S-6.28(x)", |p, s| Ok(sm("S-6.28", p, s)?.scale(-4.0 * p[0]))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.33", 6,
        "Σ (−1)ⁿ n/(4n² − 1)³ = [24G + ζ(2, 5/4) − 32 − π²]/512",
        NONE, ONCE,
        side("S-6.33", |_, s| sm("S-6.33", &[], s)),
        side("Catalan + Hurwitz ζ", |_, _| {
            Ok((zeta_family(ZetaKind::Hurwitz, 2.0, 1.25)? + k(24.0 * c().catalan - 32.0 - PI * PI)).scale(1.0 / 512.0))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.34", 6,
        "∫₀¹ ψ(x) x(1 − x) cos πx dx = (1/π²)[2 − (7/2)ζ(3)]",
        NONE, ONCE,
        side("Q-6.34", |_, s| q("Q-6.34", &[], s)),
        side("(2 − 3.5ζ(3))/π²", |_, _| Ok(k((2.0 - 3.5 * c().zeta3) / (PI * PI)))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.37", 6,
        "∫₀¹ x(1 − x) cos πx cot πx dx = (2/π³)[(7/2)ζ(3) − 2]",
        NONE, ONCE,
        side("Q-6.37", |_, s| q("Q-6.37", &[], s)),
        side("(2/π³)(3.5ζ(3) − 2)", |_, _| Ok(k(2.0 / PI.powi(3) * (3.5 * c().zeta3 - 2.0)))),
        Strict, Confirmed,
    ),
    rec(
        "I-6.38", 6,
        "∫₀¹ x(1 − x) cos πx ψ(x/2) dx = −2 log A + (1/π²)[2 − (7/2)ζ(3)] + (γ + log π)/6 − (1/2π²) Σ_{n≥1} log(1 − 1/(4n²))/n²",
        NONE, ONCE,
        side("Q-6.38", |_, s| q("Q-6.38", &[], s)),
        side("constants + S-6.39", |_, s| q638_rhs(s, false)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "form with −(1/π²)[2 + (7/2)ζ(3)] and the sum from n = 2",
        ..rec(
            "D-6.38-variant", 6,
            "∫₀¹ x(1 − x) cos πx ψ(x/2) dx = −2 log A − (1/π²)[2 + (7/2)ζ(3)] + (γ + log π)/6 − (1/2π²) Σ_{n≥2} log(1 − 1/(4n²))/n²",
            NONE, ONCE,
            side("Q-6.38", |_, s| q("Q-6.38", &[], s)),
            side("constants + S-6.39 from n = 2", |_, s| q638_rhs(s, true)),
            Strict, Disputed,
        )
    },
    rec(
        "I-6.39", 6,
        "∫₀¹ x(1 − x)(1 − cos πx) ψ(x/2) dx = (1/2π²) Σ_{n≥1} log(1 − 1/(4n²))/n² − (γ + log 2π)/6 − 2/π²",
        NONE, ONCE,
        side("Q-6.39", |_, s| q("Q-6.39", &[], s)),
        side("S-6.39/(2π²) + constants", |_, s| {
            let pi2 = PI * PI;
            Ok(sm("S-6.39", &[], s)?.scale(1.0 / (2.0 * pi2)) - k(gl() / 6.0 + 2.0 / pi2))
        }),
        Strict, Confirmed,
    ),
    rec(
        "I-6.40", 6,
        "∫₀¹ x(1 − x) ψ(x/2) dx = −2 log A − (7/2)ζ(3)/π² − (log 2)/6",
        NONE, ONCE,
        side("Q-6.40", |_, s| q("Q-6.40", &[], s)),
        side("constants", |_, _| Ok(k(-2.0 * c().log_a - 3.5 * c().zeta3 / (PI * PI) - LN_2 / 6.0))),
        Strict, Confirmed,
    ),
    // 7
    rec(
        "I-7.1", 7,
        "ψ(x) sin πx + (π/2) cos πx + (γ + log 2π) sin πx = −Σ sin((2n+1)πx) log(1 + 1/n)",
        X_FOURIER, &[&[0.3], &[0.7]],
        side("digamma", |p, _| {
            let x = p[0];
            Ok(digamma_real(x)?.scale(sinpi(x)) + k(PI / 2.0 * cospi(x) + gl() * sinpi(x)))
        }),
        side("−FS-7.1(x)", |p, s| Ok(-sm("FS-7.1", p, s)?)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        quoted: &[
            quoted("Σ (−1)ⁿ log(1 + 1/n)/(2n + 1)", -0.176012),
            quoted("4 Σ (−1)ⁿ n log n/(4n² − 1)", 0.176012),
            quoted("combined series", 0.0132252),
        ],
        note: "the combined series was reported with a non-vanishing real part",
        ..rec(
            "D-7.11", 7,
            "Σ (−1)ⁿ log(1 + 1/n)/(2n + 1) = −4 Σ (−1)ⁿ n log n/(4n² − 1)",
            NONE, ONCE,
            side("S-7.11", |_, s| sm("S-7.11", &[], s)),
            side("−4·S-7.11b", |_, s| Ok(sm("S-7.11b", &[], s)?.scale(-4.0))),
            Strict, Disputed,
        )
    },
    rec(
        "I-7.12", 7,
        "Σ log(1 + 1/n)/(2n + 1) = 2 Σ log n/(4n² − 1)",
        NONE, ONCE,
        side("S-7.12", |_, s| sm("S-7.12", &[], s)),
        side("2·S-7.12b", |_, s| Ok(sm("S-7.12b", &[], s)?.scale(2.0))),
        Strict, Confirmed,
    ),
    rec(
        "I-7.13", 7,
        "∫₀¹ ψ(x) sin²πx dx = −½[γ + log 2π]",
        NONE, ONCE,
        side("Q-7.13", |_, s| q("Q-7.13", &[], s)),
        side("−½(γ + log 2π)", |_, _| Ok(k(-0.5 * gl()))),
        Strict, Confirmed,
    ),
    rec(
        "I-7.15", 7,
        "∫₀ᵘ ψ(x) sin πx dx = (2/π) Σ [2n sin 2nπu sin πu + cos 2nπu (cos πu − 1)] log n/(4n² − 1) + 2(γ + log 2π)[¼ sin πu + (cos πu − 1)/(2π)] − ½ sin πu, u = 1",
        U_ONE, &[&[1.0]],
        side("Q-7.15(u)", |p, s| q("Q-7.15", p, s)),
        side("FS-7.15(u) closed form", |p, s| q715_rhs(p[0], s)),
        Strict, Confirmed,
    ),
    IdentityRecord {
        note: "termwise integration of a divergent Fourier series; holds only at u = 1",
        ..rec(
            "D-7.15-variant", 7,
            "∫₀ᵘ ψ(x) sin πx dx = FS-7.15(u), u ∈ {¼, ½}",
            U_0_1C, &[&[0.25], &[0.5]],
            side("Q-7.15(u)", |p, s| q("Q-7.15", p, s)),
            side("FS-7.15(u) closed form", |p, s| q715_rhs(p[0], s)),
            Strict, Disputed,
        )
    },
    IdentityRecord {
        note: "termwise integration of a divergent Fourier series",
        ..rec(
            "D-7.17-variant", 7,
            "∫₀^{1/2} ψ(x) sin πx dx = −(2/π) Σ (−1)ⁿ log n/(4n² − 1) + (γ + log 2π)(½ − 1/π) − ½",
            NONE, ONCE,
            side("Q-7.17", |_, s| q("Q-7.17", &[], s)),
            side("−(2/π)·S-7.17 + constants", |_, s| {
                Ok(sm("S-7.17", &[], s)?.scale(-2.0 / PI) + k(gl() * (0.5 - 1.0 / PI) - 0.5))
            }),
            Strict, Disputed,
        )
    },
    // 8
    rec(
        "I-8.7", 8,
        "π/sin μπ = 1/μ − 2μ Σ (−1)ⁿ/(n² − μ²)",
        MU_0_1, &[&[0.3], &[0.7]],
        side("π/sin μπ", |p, _| Ok(k(PI / sinpi(p[0])))),
        side("1/μ − 2μ·S-8.7(μ)", |p, s| Ok(k(1.0 / p[0]) - sm("S-8.7", p, s)?.scale(2.0 * p[0]))),
        Strict, Confirmed,
    ),
    rec(
        "I-8.11", 8,
        "Σ 1/(4n² − 1) = ½",
        NONE, ONCE,
        side("S-8.11", |_, s| sm("S-8.11", &[], s)),
        side("½", |_, _| Ok(k(0.5))),
        Strict, Confirmed,
    ),
    rec(
        "I-8.12", 8,
        "Σ [sin πt cos 2πnt − (−1)ⁿ − 2n cos πt sin 2πnt]/(4n² − 1) = (sin πt − 1)/2",
        T_FOURIER, &[&[0.3]],
        side("FS-8.12(t)", |p, s| sm("FS-8.12", p, s)),
        side("(sin πt − 1)/2", |p, _| Ok(k((sinpi(p[0]) - 1.0) / 2.0))),
        Strict, Confirmed,
    ),
    rec(
        "I-8.13", 8,
        "sin πt = 2/π − (4/π) Σ cos 2πnt/(4n² − 1)",
        T_FOURIER, &[&[0.3]],
        side("sin πt", |p, _| Ok(k(sinpi(p[0])))),
        side("2/π − (4/π)·FS-8.13(t)", |p, s| Ok(k(2.0 / PI) - sm("FS-8.13", p, s)?.scale(4.0 / PI))),
        Strict, Confirmed,
    ),
    rec(
        "I-8.14", 8,
        "Σ n sin 2πnt/(4n² − 1) = (π/8) cos πt",
        T_FOURIER, &[&[0.3]],
        side("FS-8.14(t)", |p, s| sm("FS-8.14", p, s)),
        side("(π/8) cos πt", |p, _| Ok(k(PI / 8.0 * cospi(p[0])))),
        Strict, Confirmed,
    ),
    rec(
        "I-8.15", 8,
        "1 = 2/π − (4/π) Σ (−1)ⁿ/(4n² − 1)",
        NONE, ONCE,
        side("1", |_, _| Ok(k(1.0))),
        side("2/π − (4/π)·S-8.15", |_, s| Ok(k(2.0 / PI) - sm("S-8.15", &[], s)?.scale(4.0 / PI))),
        Strict, Confirmed,
    ),
];
