//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.

use gammaverify::cli;
use gammaverify::quad::{integrate, Hints};
use gammaverify::registry::{Registry, SideValue, Status, Verdict};
use gammaverify::series::sum_catalog;
use gammaverify::specfun::{ci, constants, digamma_real, lambda_digamma, lambda_series, log_gamma};
use gammaverify::Settings;
use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Known<'a> = (&'a str, &'a dyn Fn(f64) -> f64, f64, f64, Hints, f64);

fn reg() -> &'static Registry {
    static REG: std::sync::OnceLock<Registry> = std::sync::OnceLock::new();
    REG.get_or_init(Registry::builtin)
}

fn verify(id: &str, params: Option<&[f64]>) -> Result<Verdict, String> {
    reg().verify(id, params, None, &Settings::default()).map_err(|e| format!("{id}: {e}"))
}

fn sides(v: &Verdict) -> Result<(SideValue, SideValue), String> {
    match (v.lhs, v.rhs) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ => Err(format!("{}: a route failed ({})", v.id, v.note.clone().unwrap_or_default())),
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn to_6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn c1() -> Outcome {
    let (l, r) = sides(&verify("I-4.31", None)?)?;
    ensure(to_6(l.value) == 0.145824 && to_6(r.value) == 0.145824, || format!("lhs {} rhs {} ≠ 0.145824", l.value, r.value))?;
    let d = (l.value - r.value).abs();
    ensure(d <= 1e-7, || format!("|lhs − rhs| = {d:.3e}"))?;
    Ok(format!("lhs {:.12} rhs {:.12} |Δ| {d:.1e}", l.value, r.value))
}

fn within(id: &str, tol: f64) -> Outcome {
    let v = verify(id, None)?;
    let (l, r) = sides(&v)?;
    let d = (l.value - r.value).abs();
    ensure(d <= tol, || format!("{id}: |lhs − rhs| = {d:.3e} > {tol:e}"))?;
    Ok(format!("{id} {:.12} |Δ| {d:.1e}", l.value))
}

fn c2() -> Outcome {
    let out = within("I-6.16", 1e-9)?;
    let v = verify("I-6.16", None)?;
    let want = constants().gamma / (4.0 * PI);
    let d = (v.lhs.unwrap().value - want).abs();
    ensure(d <= 1e-9, || format!("quadrature vs γ/(4π): {d:.3e}"))?;
    Ok(out)
}

fn c3() -> Outcome {
    let out = within("I-3.13", 1e-9)?;
    let want = ((PI / 2.0).ln() + 1.0) / PI;
    let d = (verify("I-3.13", None)?.lhs.unwrap().value - want).abs();
    ensure(d <= 1e-9, || format!("quadrature vs (1/π)[log(π/2) + 1]: {d:.3e}"))?;
    Ok(out)
}

fn c4() -> Outcome {
    let (l, r) = sides(&verify("I-4.33", None)?)?;
    let c = constants();
    let closed = (c.gamma1 + 0.5 * c.gamma * c.gamma) / (2.0 * PI);
    for (name, x) in [("quadrature", l.value), ("rhs", r.value), ("(1/2π)[γ₁ + ½γ²]", closed)] {
        ensure((x - 0.0149245).abs() < 5e-7, || format!("{name} = {x} does not round to 0.0149245"))?;
    }
    Ok(format!("lhs {:.12} rhs {:.12}", l.value, r.value))
}

fn c5() -> Outcome {
    let (l, _) = sides(&verify("I-6.14", None)?)?;
    let d = (l.value + 0.09114787).abs();
    ensure(d <= 1e-7, || format!("quadrature {} vs −0.09114787: {d:.3e}", l.value))?;
    let c = constants();
    let closed = 0.25 * (PI.ln() - c.gamma + 2.0 * ci(PI).map_err(|e| e.to_string())?.value - 3.0 * 2f64.ln() + 1.0);
    let d2 = (l.value - closed).abs();
    ensure(d2 <= 1e-9, || format!("quadrature vs closed form: {d2:.3e}"))?;
    within("I-6.14", 1e-9)?;
    Ok(format!("{:.12} |Δ quoted| {d:.1e} |Δ closed| {d2:.1e}", l.value))
}

fn c6() -> Outcome {
    let z3 = constants().zeta3;
    let a = within("I-6.34", 1e-8)?;
    let b = within("I-6.24", 1e-8)?;
    let d34 = (verify("I-6.34", None)?.lhs.unwrap().value - (2.0 - 3.5 * z3) / (PI * PI)).abs();
    let d24 = (verify("I-6.24", None)?.lhs.unwrap().value - (7.0 * z3 - 4.0) / PI.powi(3)).abs();
    ensure(d34 <= 1e-8 && d24 <= 1e-8, || format!("closed forms: I-6.34 {d34:.3e}, I-6.24 {d24:.3e}"))?;
    Ok(format!("{a}; {b}"))
}

fn c7() -> Outcome {
    let mut worst: f64 = 0.0;
    for p in [-2.0, -0.5, 0.5, 1.0, 3.0] {
        let v = verify("I-1.8", Some(&[p]))?;
        let (l, r) = sides(&v)?;
        let d = (l.value - r.value).abs();
        ensure(d <= 1e-8, || format!("p = {p}: |lhs − rhs| = {d:.3e}"))?;
        worst = worst.max(d);
    }
    Ok(format!("5 points, max |Δ| {worst:.1e}"))
}

fn c8() -> Outcome {
    let c = constants();
    let cases = [
        ("S-6.3", -(2f64.ln())),
        ("S-6.6", (PI / 2.0).ln()),
        ("S-5.46.2", 0.25),
        ("S-5.56", 0.5 * (c.gamma + c.log_2pi - 3.0)),
        ("S-5.58.1", 0.5 * (c.gamma - c.log_2pi) + 1.0),
    ];
    let mut worst: f64 = 0.0;
    for (id, want) in cases {
        let r = sum_catalog(id, &[]).map_err(|e| format!("{id}: {e}"))?;
        let d = (r.value - want).abs();
        ensure(d <= 1e-9, || format!("{id}: {} vs {want}, |Δ| {d:.3e}", r.value))?;
        worst = worst.max(d);
    }
    Ok(format!("5 series, max |Δ| {worst:.1e}"))
}

fn precise(v: &Verdict) -> Result<(SideValue, SideValue), String> {
    let (l, r) = sides(v)?;
    for (name, s) in [("lhs", l), ("rhs", r)] {
        ensure(s.abs_err < 1e-8, || format!("{} {name}: error estimate {:.2e}", v.id, s.abs_err))?;
        ensure(s.abs_err <= 5e-9 * s.value.abs(), || format!("{} {name}: fewer than 8 significant digits", v.id))?;
    }
    Ok((l, r))
}

fn c9() -> Outcome {
    let mut notes = Vec::new();
    for id in ["D-4.26", "D-4.27", "D-5.18", "D-7.11"] {
        let v = reg().adjudicate(id, None, &Settings::default()).map_err(|e| format!("{id}: {e}"))?;
        let (l, r) = precise(&v)?;
        notes.push(format!("{id} {}", v.status.name()));
        if id == "D-5.18" {
            let (series, closed) = (l.value, r.value);
            ensure((closed + 0.1885012).abs() < 5e-8, || format!("D-5.18 closed form {closed}"))?;
            ensure((series - closed).abs() < 1e-9, || format!("D-5.18 series {series} vs closed {closed}"))?;
            ensure((series + 0.187878).abs() > 1e-4, || "D-5.18 series does not separate from −0.187878".into())?;
        }
        if id == "D-7.11" {
            for x in [l.value, r.value] {
                ensure(to_6(x.abs()) == 0.176012, || format!("D-7.11 side {x} ≠ ±0.176012"))?;
            }
        }
    }
    Ok(notes.join(", "))
}

fn grids() -> Result<(), String> {
    let e = |r: gammaverify::Result<gammaverify::specfun::FnEvalResult>| r.map_err(|e| e.to_string());
    for i in 1..60 {
        let x = -7.3 + 0.25 * i as f64;
        if (x - x.round()).abs() < 1e-9 || x <= 0.0 && (x - x.round()).abs() < 1e-6 {
            continue;
        }
        let a = e(digamma_real(x + 1.0))?;
        let b = e(digamma_real(x))?;
        let d = (a.value - b.value - 1.0 / x).abs();
        ensure(d <= 1e-12 * (1.0 + b.value.abs()), || format!("ψ recurrence at {x}: {d:.2e}"))?;
        if x > 0.0 {
            let g1 = e(log_gamma(x + 1.0))?;
            let g0 = e(log_gamma(x))?;
            let d = (g1.value - g0.value - x.ln()).abs();
            ensure(d <= 1e-12 * (1.0 + g0.value.abs()), || format!("log Γ recurrence at {x}: {d:.2e}"))?;
        }
    }
    for i in 1..40 {
        let x = i as f64 / 40.0;
        let d = (e(digamma_real(1.0 - x))?.value - e(digamma_real(x))?.value - PI / (PI * x).tan()).abs();
        ensure(d <= 1e-11 * (1.0 + 1.0 / x + 1.0 / (1.0 - x)), || format!("ψ reflection at {x}: {d:.2e}"))?;
    }
    Ok(())
}

fn lambda_routes() -> Result<(), String> {
    for i in 0..=40 {
        let v = i as f64 * 0.125;
        let a = lambda_digamma(v).map_err(|e| e.to_string())?;
        let b = lambda_series(v).map_err(|e| e.to_string())?;
        let d = (a.value - b.value).abs();
        ensure(d <= 1e-10, || format!("Λ({v}) routes differ by {d:.2e}"))?;
    }
    Ok(())
}

fn quadrature_honesty() -> Result<(), String> {
    let c = constants();
    let known: [Known; 5] = [
        ("∫ log Γ", &|x| log_gamma(x).map(|r| r.value).unwrap_or(f64::NAN), 0.0, 1.0, Hints::LOG_BOTH, 0.5 * c.log_2pi),
        ("∫ log x", &|x: f64| x.ln(), 0.0, 1.0, Hints::LOG_BOTH, -1.0),
        ("∫ x^{-1/2}", &|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, Hints::LOG_BOTH, 2.0),
        ("∫ log sin πx", &|x: f64| (PI * x).sin().ln(), 0.0, 1.0, Hints::LOG_BOTH, -(2f64.ln())),
        ("∫ eˣ cos x", &|x: f64| x.exp() * x.cos(), 0.0, 2.0, Hints::REGULAR, 0.5 * (2f64.exp() * (2f64.cos() + 2f64.sin()) - 1.0)),
    ];
    for (name, f, a, b, hints, exact) in known {
        let r = integrate(f, a, b, hints, 1e-10).map_err(|e| format!("{name}: {e}"))?;
        let err = (r.value - exact).abs();
        ensure(err <= 2.0 * r.abs_err + 4.0 * f64::EPSILON * exact.abs(), || {
            format!("{name}: true error {err:.2e} vs reported {:.2e}", r.abs_err)
        })?;
    }
    Ok(())
}

fn probes() -> Result<String, String> {
    let mut gaps = Vec::new();
    for id in ["P-logGammacot", "P-logxcot"] {
        let mut f = Vec::new();
        for eps in [1e-2, 1e-3] {
            let v = verify(id, Some(&[eps]))?;
            let (l, r) = sides(&v)?;
            ensure(v.status == Status::Refuted, || format!("{id} at ε = {eps} is {}", v.status.name()))?;
            if f.is_empty() {
                f.push(l.value);
            }
            f.push(r.value);
        }
        let (d1, d2) = ((f[1] - f[0]).abs(), (f[2] - f[1]).abs());
        ensure(d1 > 0.1 && d2 > 0.1 && d2 > 0.5 * d1, || format!("{id}: gaps {d1:.3} then {d2:.3} look convergent"))?;
        gaps.push(format!("{id} gaps {d1:.2}, {d2:.2}"));
    }
    Ok(gaps.join("; "))
}

fn c10() -> Outcome {
    grids()?;
    lambda_routes()?;
    quadrature_honesty()?;
    let p = probes()?;
    Ok(format!("grids, Λ routes, quadrature honesty ok; {p}"))
}

fn c11() -> Outcome {
    let path = std::env::temp_dir().join(format!("gammaverify-acceptance-{}.json", std::process::id()));
    let start = Instant::now();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(["gammaverify", "verify", "--all", "--no-timing", "--json", path.to_str().unwrap()], reg(), &mut out, &mut err);
    let secs = start.elapsed().as_secs_f64();
    ensure(code == 0, || format!("exit {code}: {}", String::from_utf8_lossy(&err)))?;
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&path);
    let n = doc["verdicts"].as_array().map_or(0, |v| v.len());
    ensure(n >= 60, || format!("only {n} verdicts"))?;
    ensure(secs < 300.0, || format!("took {secs:.0} s"))?;
    Ok(format!("{n} verdicts, exit 0, {secs:.1} s"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("I-4.31 quadrature and γ₁ closed form = 0.145824", c1),
        ("I-6.16 = γ/(4π) within 1e-9", c2),
        ("I-3.13 = (1/π)[log(π/2) + 1] within 1e-9", c3),
        ("I-4.33 = 0.0149245", c4),
        ("I-6.14 = −0.09114787 and closed form", c5),
        ("I-6.34 and I-6.24 within 1e-8", c6),
        ("I-1.8 at p ∈ {−2, −0.5, 0.5, 1, 3}", c7),
        ("series closed forms within 1e-9", c8),
        ("disputed adjudication precision", c9),
        ("property suites and divergence probes", c10),
        ("verify --all gate", c11),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
