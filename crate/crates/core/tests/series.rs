use gammaverify::series::*;
use gammaverify::{Error, Settings};
use proptest::prelude::*;
use std::f64::consts::{LN_2, PI};
use std::sync::Arc;

fn close(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "got {got:.17e}, want {want:.17e}, diff {:.3e} > {tol:.1e}", (got - want).abs());
}

// Reference values from independent high-precision summation, frozen here.
const CATALOG_ORACLE: &[(&str, &[f64], f64)] = &[
    ("FS-3.19", &[0.5], 0.12346006249442651),
    ("FS-3.22", &[0.5, 0.5], 1.0439281460180574),
    ("FS-4.16", &[0.5], -0.5054330544896953),
    ("FS-4.16-variant", &[0.5], 0.2919104872706123),
    ("FS-6.10", &[0.5], 0.0),
    ("FS-6.2", &[0.5], 0.2100182300189644),
    ("FS-7.1", &[0.5], -0.4515827052894549),
    ("FS-7.15", &[0.5], -0.02758203058369007),
    ("FS-8.12", &[0.3], -0.0954915028125263),
    ("FS-8.13", &[0.3], -0.13540046153940746),
    ("FS-8.14", &[0.3], 0.2308227288113071),
    ("S-1.20", &[0.5], 0.9210809203500263),
    ("S-1.23", &[0.5], 1.4253771499192955),
    ("S-1.8", &[0.5], 0.12394939109703763),
    ("S-2.1", &[0.5], 0.23547653287270168),
    ("S-2.10", &[0.5], -1.0),
    ("S-2.8", &[0.5], 1.5451774444795625),
    ("S-3.14", &[0.5], -1.278572367263972),
    ("S-3.16-ci", &[0.5], 0.023285579888932605),
    ("S-3.16-log", &[0.5], 1.0998796692121722),
    ("S-3.8", &[0.5], -0.043991273219210605),
    ("S-4.2", &[0.5], 5.785813037968579),
    ("S-4.26", &[], 2.39933343078027),
    ("S-4.27", &[], 0.30906711218284205),
    ("S-4.29-aux", &[], 2.835091887353209),
    ("S-4.3", &[0.5], 4.591196644723847),
    ("S-4.30-aux", &[], 2.2352585296581413),
    ("S-4.31.1", &[], -0.7286939170039306),
    ("S-4.32", &[], -0.9162401498442958),
    ("S-4.32.1", &[], 0.18754623284036523),
    ("S-4.35", &[], -0.008769420580110241),
    ("S-4.4-Tn", &[1.0], 1.0231387264279392),
    ("S-5.13", &[0.5], 0.9635100260214234),
    ("S-5.18", &[], -0.18850116605469067),
    ("S-5.24.4", &[0.5], 0.02074704126839914),
    ("S-5.44.4", &[], -0.20754636565543919),
    ("S-5.44.5", &[], 0.08106146679532726),
    ("S-5.45", &[1.0], 1.2577468869443695),
    ("S-5.46.2", &[], 0.25),
    ("S-5.49", &[], -0.22393085952708464),
    ("S-5.52", &[0.5], 0.7056185648588775),
    ("S-5.56", &[], -0.29245363434456084),
    ("S-5.57-aux", &[1.0], 0.3125),
    ("S-5.58.1", &[], 0.3696692992460937),
    ("S-6.18", &[], 1.0231387264279392),
    ("S-6.23", &[], -0.9809204979287782),
    ("S-6.24-aux", &[2.0], 0.125),
    ("S-6.28", &[0.5], 2.0),
    ("S-6.3", &[], -std::f64::consts::LN_2),
    ("S-6.33", &[], -0.03650215036392381),
    ("S-6.39", &[], -0.30882710975848343),
    ("S-6.4", &[], 0.2100182300189644),
    ("S-6.5", &[], 0.4515827052894549),
    ("S-6.6", &[], 0.4515827052894549),
    ("S-6.7.2", &[], -0.09266474976763327),
    ("S-7.11", &[], -0.176011999819407),
    ("S-7.11b", &[], 0.04400299995485175),
    ("S-7.12", &[], 0.4778137876734111),
    ("S-7.12b", &[], 0.23890689383670555),
    ("S-7.17", &[], 0.02758203058369007),
    ("S-8.11", &[], 0.5),
    ("S-8.15", &[], -0.28539816339744833),
    ("S-8.7", &[0.3], -0.9164812401959997),
];

const POWER_ORACLE: &[(&str, f64, f64)] = &[
    ("PS-1.25", 0.1, -0.01634211574650869),
    ("PS-1.25", 0.5, -0.3563442874798239),
    ("PS-1.25", 0.9, -0.9236487197929925),
    ("PS-5.1", 0.1, 0.5652977902171986),
    ("PS-5.1", 0.5, 0.32888635722945936),
    ("PS-5.1", 0.9, -0.013452015376503318),
    ("PS-5.17", 0.1, 6.045102882457922e-05),
    ("PS-5.17", 0.5, 0.044197249829307464),
    ("PS-5.17", 0.9, 0.9246243311070614),
    ("PS-5.30", 0.1, 0.012125280277531235),
    ("PS-5.30", 0.5, 0.38629436111989063),
    ("PS-5.30", 0.9, 4.456569724721977),
    ("PS-5.32", 0.1, 0.0004027740071380617),
    ("PS-5.32", 0.5, 0.057965757829206224),
    ("PS-5.32", 0.9, 0.6263543654172652),
    ("PS-5.41-re", 0.1, -0.008197780565405956),
    ("PS-5.41-re", 0.5, -0.19094549918677936),
    ("PS-5.41-re", 0.9, -0.5457051286049766),
    ("PS-5.41-im", 0.1, 0.00039862607343356876),
    ("PS-5.41-im", 0.5, 0.044549533545338665),
    ("PS-5.41-im", 0.9, 0.2124197227689284),
    ("PS-5.48", 0.1, 1.0115175323138025e-05),
    ("PS-5.48", 0.5, 0.006515177377526536),
    ("PS-5.48", 0.9, 0.07389312428541038),
    ("PS-5.53", 0.1, 0.012072754060977901),
    ("PS-5.53", 0.5, 0.33939583952728924),
    ("PS-5.53", 0.9, 1.8382480890945705),
    ("PS-5.54", 0.1, 0.3297124604765692),
    ("PS-5.54", 0.5, 1.7506329692450444),
    ("PS-5.54", 0.9, 4.150085522597279),
];

#[test]
fn catalog_matches_frozen_oracle() {
    for &(id, params, want) in CATALOG_ORACLE {
        let r = sum_catalog(id, params).unwrap_or_else(|e| panic!("{id}: {e}"));
        let diff = (r.value - want).abs();
        assert!(
            diff <= 1e-13 + 2.0 * r.abs_err,
            "{id}: got {:.17e}, want {want:.17e}, diff {diff:.2e}, reported {:.2e}",
            r.value,
            r.abs_err
        );
        assert!(r.abs_err <= 1e-10, "{id}: reported error {:.2e}", r.abs_err);
    }
}

#[test]
fn every_catalog_entry_has_an_oracle() {
    let ids: Vec<&str> = CATALOG_ORACLE.iter().map(|t| t.0).collect();
    for id in series_ids() {
        assert!(ids.contains(&id), "{id} has no frozen value");
    }
}

#[test]
fn power_series_match_closed_forms() {
    for &(id, x, want) in POWER_ORACLE {
        let r = power_series_eval(id, x, 10_000).unwrap();
        let diff = (r.value - want).abs();
        assert!(diff <= 2e-15 + 2.0 * r.abs_err, "{id} at {x}: diff {diff:.2e}, reported {:.2e}", r.abs_err);
    }
    for id in power_series_ids() {
        assert!(POWER_ORACLE.iter().any(|t| t.0 == id), "{id} has no frozen value");
    }
}

#[test]
fn power_series_need_unit_disc() {
    assert!(matches!(power_series_eval("PS-5.30", 1.0, 100), Err(Error::Domain(_))));
    assert!(matches!(power_series_eval("PS-5.30", f64::NAN, 100), Err(Error::Domain(_))));
    assert!(matches!(power_series_eval("PS-nope", 0.5, 100), Err(Error::UnknownId(_))));
}

#[test]
fn euler_maclaurin_tail() {
    let f = |n: f64| 1.0 / (n * n);
    let spec = SeriesSpec { term: &f, n0: 1, tail_model: TailModel::EulerMaclaurin(2), max_terms: 20 };
    let r = sum_series(&spec).unwrap();
    assert!(r.abs_err < 1e-9 && r.abs_err >= (r.value - PI * PI / 6.0).abs(), "{r:?}");
    assert_eq!(r.method, "euler_maclaurin(2)");
    let spec = SeriesSpec { max_terms: 200, ..spec };
    close(sum_series(&spec).unwrap().value, PI * PI / 6.0, 1e-14);

    // a log-weighted term: Σ log n/n² = −ζ′(2)
    let g = |n: f64| n.ln() / (n * n);
    let spec = SeriesSpec { term: &g, n0: 1, tail_model: TailModel::EulerMaclaurin(2), max_terms: 200 };
    close(sum_series(&spec).unwrap().value, 0.937_548_254_315_843_8, 1e-13);
}

#[test]
fn alternating_tail() {
    let f = |n: f64| if (n as u64) % 2 == 1 { 1.0 / n } else { -1.0 / n };
    let spec = SeriesSpec { term: &f, n0: 1, tail_model: TailModel::Alternating, max_terms: 39 };
    let r = sum_series(&spec).unwrap();
    close(r.value, LN_2, 1e-14);
    assert_eq!(r.method, "alternating");
}

#[test]
fn oscillatory_tail_matches_polylog() {
    // Σ_{n≥50} e^{in}/n²
    let t = oscillatory_tail(&|n: f64| 1.0 / (n * n), 1.0, 50, 0.0).unwrap();
    close(t.value.re, 3.055_189_196_342_952e-4, t.abs_err);
    close(t.value.im, 2.953_357_340_957_999e-4, t.abs_err);
    assert!(t.abs_err < 1e-13);
    // θ = π is the alternating case: Σ_{n≥40} (−1)^{n+1}/n
    let alt = oscillatory_tail(&|n: f64| 1.0 / n, PI, 40, PI).unwrap();
    close(alt.value.re, -0.012_656_201_232_748_765, alt.abs_err);
    assert!(matches!(oscillatory_tail(&|n: f64| 1.0 / n, 1e-5, 10, 0.0), Err(Error::Domain(_))));
}

#[test]
fn supplied_tail_is_used() {
    // Σ 1/(n(n+1)) telescopes; the tail from N is 1/N
    let f = |n: f64| 1.0 / (n * (n + 1.0));
    let tail: TailFn = Arc::new(|n| Ok(gammaverify::specfun::FnEvalResult::new(1.0 / n as f64, 0.0)));
    let spec = SeriesSpec { term: &f, n0: 1, tail_model: TailModel::AsymptoticSubtraction(tail), max_terms: 10 };
    close(sum_series(&spec).unwrap().value, 1.0, 1e-15);
}

#[test]
fn no_tail_reports_next_term() {
    let f = |n: f64| 0.5f64.powf(n);
    let spec = SeriesSpec { term: &f, n0: 1, tail_model: TailModel::None, max_terms: 60 };
    let r = sum_series(&spec).unwrap();
    close(r.value, 1.0, 1e-15);
    assert!(r.abs_err >= 0.5f64.powi(61));
}

#[test]
fn non_finite_term_is_an_error() {
    let f = |n: f64| 1.0 / (n - 3.0);
    let spec = SeriesSpec { term: &f, n0: 1, tail_model: TailModel::None, max_terms: 10 };
    assert!(matches!(sum_series(&spec), Err(Error::NonFinite(_))));
}

#[test]
fn log_sum_t_n() {
    close(t_n(1, 0).unwrap().0, 1.023_138_726_427_939_3, 1e-14);
    close(t_n(2, 0).unwrap().0, 0.920_491_724_805_952_1, 1e-14);
    close(t_n(5, 0).unwrap().0, 0.452_768_836_962_73, 1e-14);
    close(t_n(20, 0).unwrap().0, 0.121_694_851_173_237_33, 1e-14);
}

#[test]
fn variant_fourier_coefficient_differs_only_in_a_n() {
    for n in [1u64, 3, 10] {
        let (a, b, _) = log_g_fourier_coeffs(n, false).unwrap();
        let (ap, bp, _) = log_g_fourier_coeffs(n, true).unwrap();
        assert_eq!(b, bp);
        let tn = t_n(n, 10 * n + 100).unwrap().0;
        let nf = n as f64;
        close(ap - a, tn / (PI * PI) - tn / (nf * nf), 1e-15);
    }
}

#[test]
fn taylor_routes_agree_with_direct_sums() {
    // Σ 1/(n²+u²) = (πu coth πu − 1)/(2u²)
    for u in [0.1, 0.3, 0.7] {
        let r = sum_catalog("S-1.23", &[u]).unwrap();
        close(r.value, (PI * u / (PI * u).tanh() - 1.0) / (2.0 * u * u), 1e-13);
    }
}

#[test]
fn alternating_and_em_routes_for_ci_lattice() {
    // 2x odd uses the sign pattern of cos(nπ), 2x even the smooth route
    for x in [0.5, 1.0, 1.5, 2.0] {
        let r = sum_catalog("S-3.16-ci", &[x]).unwrap();
        assert!(r.value.is_finite() && r.abs_err < 1e-12, "x = {x}: {r:?}");
    }
    assert!(matches!(sum_catalog("S-3.16-ci", &[0.3]), Err(Error::ParamDomain { .. })));
}

#[test]
fn larger_budget_gives_same_value() {
    let big = Settings::default().quadrupled();
    for id in ["S-6.18", "S-4.32", "S-7.11", "FS-8.14"] {
        let params: &[f64] = if id == "FS-8.14" { &[0.3] } else { &[] };
        let a = sum_catalog(id, params).unwrap();
        let b = sum_catalog_with(id, params, &big).unwrap();
        close(a.value, b.value, a.abs_err + b.abs_err);
    }
}

#[test]
fn catalog_rejects_bad_parameters() {
    assert!(matches!(sum_catalog("S-2.10", &[1.0]), Err(Error::ParamDomain { .. })));
    assert!(matches!(sum_catalog("S-2.10", &[]), Err(Error::ParamDomain { .. })));
    assert!(matches!(sum_catalog("FS-4.16", &[0.0]), Err(Error::ParamDomain { .. })));
    assert!(matches!(sum_catalog("S-nope", &[]), Err(Error::UnknownId(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coth_power_series(t in 0.01f64..0.95) {
        let r = power_series_eval("PS-1.25", t, 10_000).unwrap();
        let want = (1.0 - PI * t / (PI * t).tanh()) / 2.0;
        prop_assert!((r.value - want).abs() <= 1e-14 + 2.0 * r.abs_err);
    }

    #[test]
    fn sine_fourier_series(x in 0.05f64..3.09) {
        // sin x = 2/π − (4/π) Σ cos 2nx/(4n²−1)
        let r = sum_catalog("FS-3.19", &[x]).unwrap();
        prop_assert!((2.0 / PI - 4.0 / PI * r.value - x.sin()).abs() <= 4.0 / PI * r.abs_err + 1e-15);
    }

    #[test]
    fn digamma_reflection_sum(p in 0.05f64..0.95) {
        // ψ(1+p) + ψ(1−p) + 2γ = −2p² Σ 1/(n(n²−p²))
        use gammaverify::specfun::{constants, digamma_real};
        let r = sum_catalog("S-2.8", &[p]).unwrap();
        let lhs = digamma_real(1.0 + p).unwrap().value + digamma_real(1.0 - p).unwrap().value + 2.0 * constants().gamma;
        prop_assert!((lhs + 2.0 * p * p * r.value).abs() <= 1e-13);
    }
}
