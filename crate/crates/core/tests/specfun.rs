use gammaverify::specfun::*;
use gammaverify::Error;
use proptest::prelude::*;
use std::f64::consts::PI;

fn close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got:.17e}, want {want:.17e}, diff {:.3e} > {tol:.1e}", (got - want).abs());
}

// Independent oracle for log Γ(1+x): Σ [x log(1+1/n) − log(1+x/n)] to 10⁶ terms
// with its leading tail (x² − x)/(2N).
fn log_gamma_product_oracle(x: f64) -> f64 {
    let n_max = 1_000_000u32;
    let mut s = NeumaierSum::new();
    for n in 1..=n_max {
        let n = n as f64;
        s.add(x * (1.0 / n).ln_1p() - (x / n).ln_1p());
    }
    s.value() + (x * x - x) / (2.0 * n_max as f64)
}

#[test]
fn log_gamma_values() {
    close(log_gamma(1.0).unwrap().value, 0.0, 0.0);
    close(log_gamma(0.5).unwrap().value, 0.5 * PI.ln(), 1e-14);
    close(log_gamma(1.5).unwrap().value, -0.12078223763524522, 1e-14);
    close(log_gamma(0.1).unwrap().value, 2.252712651734206, 1e-14);
    close(log_gamma(30.5).unwrap().value, 72.95347118416941, 1e-12);
    close(log_gamma(1e-8).unwrap().value, 18.420_680_738_180_21, 1e-13);
    close(log_gamma(1.5).unwrap().value, log_gamma_product_oracle(0.5), 1e-11);
}

#[test]
fn log_gamma_matches_product_route() {
    for &x in &[0.25, 0.5, 0.9, 1.7] {
        let oracle = log_gamma_product_oracle(x) - x.ln();
        let r = log_gamma(x).unwrap();
        close(r.value, oracle, 1e-11);
        assert!(r.abs_err <= 1e-13 * r.value.abs().max(1.0));
    }
}

#[test]
fn log_gamma_errors() {
    assert!(matches!(log_gamma(0.0), Err(Error::Domain(_))));
    assert!(matches!(log_gamma(-1.5), Err(Error::Domain(_))));
    assert!(matches!(log_gamma(f64::NAN), Err(Error::NonFinite(_))));
    assert!(matches!(log_gamma(1e308), Err(Error::Overflow(_))));
}

#[test]
fn digamma_values() {
    let g = constants().gamma;
    let r = digamma(Cplx::new(0.5, 0.0)).unwrap();
    close(r.value.re, -g - 2.0 * 2f64.ln(), 1e-15);
    assert_eq!(r.value.im, 0.0);
    close(digamma_real(2.0).unwrap().value, 1.0 - g, 1e-15);
    let z = digamma(Cplx::new(1.0, 1.0)).unwrap().value;
    close(z.im, 0.5 * PI / PI.tanh() - 0.5, 1e-14);
    close(z.re, 0.094_650_320_622_476_98, 1e-14);
    let w = digamma(Cplx::new(3.0, 4.0)).unwrap().value;
    close(w.re, 1.550_359_817_333_411, 1e-14);
    close(w.im, 1.0105022091860445, 1e-14);
    close(digamma_real(0.1).unwrap().value, -10.423754940411076, 1e-13);
    close(digamma_real(-2.5).unwrap().value, 1.103_156_640_645_243, 1e-13);
    assert!(matches!(digamma_real(0.0), Err(Error::Pole(_))));
    assert!(matches!(digamma(Cplx::new(-3.0, 0.0)), Err(Error::Pole(_))));
}

#[test]
fn polygamma_values() {
    let c = constants();
    close(polygamma(1, 0.25).unwrap().value, PI * PI + 8.0 * c.catalan, 1e-12);
    close(polygamma(2, 0.5).unwrap().value, -14.0 * c.zeta3, 1e-12);
    close(polygamma(1, 1.0).unwrap().value, PI * PI / 6.0, 1e-14);
    close(polygamma(1, 3.3).unwrap().value, 0.353_501_541_841_061_8, 1e-14);
    close(polygamma(2, 0.7).unwrap().value, -6.434992874190924, 1e-12);
    assert!(matches!(polygamma(3, 1.0), Err(Error::UnsupportedOrder(3))));
    assert!(matches!(polygamma(1, 0.0), Err(Error::Domain(_))));
}

#[test]
fn constants_values() {
    let c = constants();
    close(c.gamma, 0.5772156649015329, 3e-16);
    close(c.gamma1, -0.07281584548367672, 1e-14);
    close(c.zeta3, 1.2020569031595943, 1e-15);
    close(c.zeta_prime_2, -0.9375482543158438, 1e-14);
    close(c.zeta_prime2_2, 1.989280234298901, 1e-13);
    close(c.zeta_prime_neg1, -0.16542114370045093, 1e-14);
    close(c.log_a, 0.24875447703378426, 1e-14);
    close(c.catalan, 0.915965594177219, 1e-15);
    assert_eq!(c.log_a, 1.0 / 12.0 - c.zeta_prime_neg1);
    let rel = (1.0 - c.gamma - c.log_2pi) / 12.0 + c.zeta_prime_2 / (2.0 * PI * PI);
    close(c.zeta_prime_neg1, rel, 1e-12);
}

// γ₁ from the limit with N = 10⁵ and two Euler–Maclaurin corrections.
#[test]
fn stieltjes_against_limit_oracle() {
    let n = 100_000u32;
    let mut s = NeumaierSum::new();
    for k in 2..=n {
        let k = k as f64;
        s.add(k.ln() / k);
    }
    let nf = n as f64;
    let l = nf.ln();
    let oracle = s.value() - 0.5 * l * l - 0.5 * l / nf + (l - 1.0) / (12.0 * nf * nf);
    let r = stieltjes_gamma1();
    close(r.value, oracle, 1e-12);
    assert!(r.abs_err <= 1e-10);
    close(r.value, -0.0728158455, 1e-10);
}

#[test]
fn lambda_values() {
    let c = constants();
    close(lambda_fn(0.0).unwrap().value, c.gamma, 1e-15);
    let h = 1e-3;
    let d1 = (lambda_fn(h).unwrap().value - lambda_fn(-h).unwrap().value) / (2.0 * h);
    close(d1, 0.0, 1e-12);
    let d2 = (lambda_fn(h).unwrap().value - 2.0 * lambda_fn(0.0).unwrap().value + lambda_fn(-h).unwrap().value) / (h * h);
    close(d2, -2.0 * c.zeta3, 1e-5);
    close(lambda_fn(0.7).unwrap().value, 0.157_336_125_737_213, 1e-13);
}

#[test]
fn lambda_two_routes_agree_on_grid() {
    for i in 0..=60 {
        let v = 3.0 * i as f64 / 60.0;
        let a = lambda_digamma(v).unwrap();
        let b = lambda_series(v).unwrap();
        assert!((a.value - b.value).abs() <= a.abs_err + b.abs_err, "v = {v}: {} vs {}", a.value, b.value);
    }
}

#[test]
fn sici_values() {
    close(si(0.0).unwrap().value, 0.0, 0.0);
    close(ci(PI).unwrap().value, 0.073667912046425, 1e-14);
    let (s1, c1) = sici(1.0).unwrap();
    close(s1.value, 0.946083070367183, 1e-15);
    close(c1.value, 0.33740392290096813, 4e-15);
    let (s10, c10) = sici(10.0).unwrap();
    close(s10.value, 1.658_347_594_218_874, 1e-14);
    close(c10.value, -0.045_456_433_004_455_37, 1e-14);
    let (s39, c39) = sici(3.9).unwrap();
    close(s39.value, 1.7765013604478055, 1e-14);
    close(c39.value, -0.12349934920781513, 1e-14);
    close(ci(0.01).unwrap().value, -4.027979520982392, 1e-14);
    // asymptotic oracle: si(x) ≈ −cos x / x
    let x = 1000.0;
    let s = si(x).unwrap().value;
    close(s, PI / 2.0, 1.1e-3);
    close(s - PI / 2.0, -x.cos() / x - x.sin() / (x * x), 1e-8);
    close(s, 1.5702331219687712, 1e-13);
    assert!(matches!(sici(0.0), Err(Error::LogSingularity(_))));
    for x in [0.3, 2.0, 5.0, 40.0] {
        let (s, c) = sici(x).unwrap();
        assert!(s.abs_err <= 1e-12 && c.abs_err <= 1e-12);
    }
}

#[test]
fn sici_derivatives() {
    let h = 1e-5;
    for x in [0.5, 1.0, 2.0, 5.0, 10.0] {
        let ds = (si(x + h).unwrap().value - si(x - h).unwrap().value) / (2.0 * h);
        let dc = (ci(x + h).unwrap().value - ci(x - h).unwrap().value) / (2.0 * h);
        close(ds, x.sin() / x, 1e-6);
        close(dc, x.cos() / x, 1e-6);
    }
}

#[test]
fn lattice_asymptotics_match_kernel() {
    for n in [50.0, 200.0] {
        let x = 2.0 * PI * n;
        close(si_lattice_asymptotic(x, 1.0).value, si(x).unwrap().value - PI / 2.0, 1e-13);
        close(ci_lattice_asymptotic(x, 1.0).value, ci(x).unwrap().value, 1e-13);
        let y = PI * (2.0 * n + 1.0);
        close(si_lattice_asymptotic(y, -1.0).value, si(y).unwrap().value - PI / 2.0, 1e-13);
        close(ci_lattice_asymptotic(y, -1.0).value, ci(y).unwrap().value, 1e-13);
    }
}

#[test]
fn exp_integral_values() {
    let g = constants().gamma;
    let x = 1e-8;
    close(exp_integral(-x).unwrap().value - x.ln(), g, 1e-7);
    // 30-term alternating series oracle at x = 1
    let mut s = 0.0;
    let mut t = 1.0;
    for n in 1..=30 {
        t *= -1.0 / n as f64;
        s += t / n as f64;
    }
    close(exp_integral(-1.0).unwrap().value, g + s, 1e-14);
    close(exp_integral(-1.0).unwrap().value, -0.21938393439552027, 4e-15);
    close(exp_integral(-0.3).unwrap().value, -0.9056766516758467, 4e-15);
    close(exp_integral(-5.0).unwrap().value, -0.0011482955912753258, 1e-17);
    close(exp_integral(-30.0).unwrap().value, -3.0215520106888125e-15, 1e-28);
    assert!(matches!(exp_integral(0.0), Err(Error::Domain(_))));
}

#[test]
fn zeta_values() {
    close(zeta_family(ZetaKind::Zeta, 2.0, 0.0).unwrap().value, PI * PI / 6.0, 1e-15);
    close(zeta_family(ZetaKind::ZetaPrimeNeg1, 0.0, 0.0).unwrap().value, -0.165421143700, 1e-12);
    let z3 = zeta_family(ZetaKind::Zeta, 3.0, 0.0).unwrap().value;
    close(zeta_family(ZetaKind::Hurwitz, 3.0, 0.5).unwrap().value, 7.0 * z3, 1e-13);
    close(zeta_family(ZetaKind::Zeta, 1.5, 0.0).unwrap().value, 2.612375348685488, 1e-13);
    close(zeta_family(ZetaKind::Hurwitz, 5.0, 2.5).unwrap().value, 0.013073166646113807, 1e-16);
    close(zeta_family(ZetaKind::ZetaPrime2At2, 0.0, 0.0).unwrap().value, 1.989280234298901, 1e-13);
    assert!(matches!(zeta_family(ZetaKind::Zeta, 1.0, 0.0), Err(Error::Domain(_))));
    assert!(matches!(zeta_family(ZetaKind::Hurwitz, 2.0, 0.0), Err(Error::Domain(_))));
    close(zeta_int(40), 1.0 + 2f64.powi(-40) + 3f64.powi(-40), 1e-16);
}

#[test]
fn barnes_values() {
    let c = constants();
    close(log_barnes_g(1.0).unwrap().value, 0.0, 0.0);
    let half = 2f64.ln() / 24.0 - PI.ln() / 4.0 + 1.5 * c.zeta_prime_neg1;
    close(log_barnes_g(0.5).unwrap().value, half, 1e-12);
    close(log_barnes_g(0.5).unwrap().value, -0.5054330544896954, 1e-12);
    let d = log_barnes_g(0.75).unwrap().value - log_barnes_g(1.25).unwrap().value;
    close(d, c.catalan / (2.0 * PI) - 2f64.ln() / 8.0 - PI.ln() / 4.0, 1e-10);
    close(log_barnes_g(0.25).unwrap().value, -1.2250059061942701, 1e-12);
    close(log_barnes_g(1.3).unwrap().value, 0.06750236449486568, 1e-12);
    close(log_barnes_g(3.7).unwrap().value, 0.3852902057046429, 1e-12);
    close(log_barnes_g(2.0).unwrap().value, 0.0, 1e-15);
    assert!(matches!(log_barnes_g(4.5), Err(Error::Domain(_))));
}

#[test]
fn barnes_functional_equation() {
    for i in 0..=35 {
        let x = 0.25 + 1.75 * i as f64 / 35.0;
        let lhs = log_barnes_g(1.0 + x).unwrap().value - log_barnes_g(x).unwrap().value;
        close(lhs, log_gamma(x).unwrap().value, 1e-10);
    }
}

#[test]
fn clausen_values() {
    close(clausen_cl2(0.0).unwrap().value, 0.0, 0.0);
    close(clausen_cl2(PI).unwrap().value, 0.0, 1e-15);
    // paired alternating odd series for Catalan
    let mut s = NeumaierSum::new();
    for k in 0..200_000u32 {
        let k = k as f64;
        s.add(1.0 / ((4.0 * k + 1.0) * (4.0 * k + 1.0)) - 1.0 / ((4.0 * k + 3.0) * (4.0 * k + 3.0)));
    }
    close(clausen_cl2(PI / 2.0).unwrap().value, s.value(), 1e-11);
    close(clausen_cl2(1.0).unwrap().value, 1.0139591323607685, 1e-14);
    close(clausen_cl2(3.0).unwrap().value, 0.09802620939130142, 1e-14);
    close(clausen_cl2(-2.0).unwrap().value, -0.7271460508632792, 1e-14);
    close(clausen_cl2(10.0).unwrap().value, -0.3907164760868021, 1e-13);
}

#[test]
fn bernoulli_values() {
    close(bernoulli_poly(1, 0.3).unwrap().value, -0.2, 1e-16);
    close(bernoulli_poly(3, 0.5).unwrap().value, 0.0, 1e-16);
    close(bernoulli_poly(5, 0.3).unwrap().value, -0.02282, 1e-16);
    close(bernoulli_poly(12, 0.7).unwrap().value, 0.07824673840744695, 1e-15);
    assert!(matches!(bernoulli_poly(13, 0.5), Err(Error::UnsupportedOrder(13))));
}

#[test]
fn bernoulli_against_truncated_fourier() {
    // B_{2n}(x) = (−1)^{n+1} 2 (2n)! Σ cos 2kπx / (2πk)^{2n}
    let kmax = 10_000u32;
    for n in 1..=4u32 {
        let fact: f64 = (1..=2 * n).map(|i| i as f64).product();
        let mut tail = NeumaierSum::new();
        for k in kmax + 1..=40 * kmax {
            tail.add((k as f64).powi(-2 * n as i32));
        }
        let tail = tail.value() + (40.0 * kmax as f64).powi(1 - 2 * n as i32) / (2 * n - 1) as f64;
        let bound = 4.0 * fact / (2.0 * PI).powi(2 * n as i32) * tail;
        let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
        for x in [0.1, 0.25, 0.5] {
            let mut s = NeumaierSum::new();
            for k in 1..=kmax {
                let k = k as f64;
                s.add((2.0 * PI * k * x).cos() / (2.0 * PI * k).powi(2 * n as i32));
            }
            let fourier = sign * 2.0 * fact * s.value();
            close(fourier, bernoulli_poly(2 * n, x).unwrap().value, bound.max(1e-15));
        }
    }
    // spot value quoted for B₂(1/4)
    close(bernoulli_poly(2, 0.25).unwrap().value, -1.0 / 48.0, 1e-16);
}

proptest! {
    #[test]
    fn digamma_recurrence(i in 0u32..48) {
        let x = 0.5 + 0.2 * i as f64;
        let d = digamma_real(x + 1.0).unwrap().value - digamma_real(x).unwrap().value - 1.0 / x;
        prop_assert!(d.abs() <= 1e-12);
    }

    #[test]
    fn digamma_reflection(i in 1u32..98) {
        let x = i as f64 / 98.0;
        let d = digamma_real(1.0 - x).unwrap().value - digamma_real(x).unwrap().value - PI / (PI * x).tan();
        prop_assert!(d.abs() <= 1e-11, "x = {x}, d = {d}");
    }

    #[test]
    fn log_gamma_reflection(i in 1u32..98) {
        let x = i as f64 / 98.0;
        let d = log_gamma(x).unwrap().value + log_gamma(1.0 - x).unwrap().value - PI.ln() + (PI * x).sin().ln();
        prop_assert!(d.abs() <= 1e-12, "x = {x}, d = {d}");
    }

    #[test]
    fn digamma_real_input_gives_real_output(x in 0.01f64..50.0) {
        prop_assert_eq!(digamma(Cplx::new(x, 0.0)).unwrap().value.im, 0.0);
    }

    #[test]
    fn digamma_conjugate_symmetry(re in 0.1f64..5.0, im in 0.1f64..20.0) {
        let a = digamma(Cplx::new(re, im)).unwrap().value;
        let b = digamma(Cplx::new(re, -im)).unwrap().value;
        prop_assert!((a - b.conj()).norm() <= 1e-14 * a.norm().max(1.0));
    }

    #[test]
    fn clausen_is_odd_and_periodic(t in -10.0f64..10.0) {
        let a = clausen_cl2(t).unwrap().value;
        let b = clausen_cl2(-t).unwrap().value;
        let c = clausen_cl2(t + 2.0 * PI).unwrap().value;
        prop_assert!((a + b).abs() <= 1e-13);
        prop_assert!((a - c).abs() <= 1e-12);
    }
}

#[test]
fn digamma_grids_exhaustive() {
    for i in 0..48 {
        let x = 0.5 + 0.2 * i as f64;
        let d = digamma_real(x + 1.0).unwrap().value - digamma_real(x).unwrap().value - 1.0 / x;
        assert!(d.abs() <= 1e-12, "recurrence at {x}: {d}");
    }
    for i in 1..98 {
        let x = i as f64 / 98.0;
        let d = digamma_real(1.0 - x).unwrap().value - digamma_real(x).unwrap().value - PI / (PI * x).tan();
        assert!(d.abs() <= 1e-11, "reflection at {x}: {d}");
        let e = log_gamma(x).unwrap().value + log_gamma(1.0 - x).unwrap().value - PI.ln() + (PI * x).sin().ln();
        assert!(e.abs() <= 1e-12, "log-gamma reflection at {x}: {e}");
    }
}
