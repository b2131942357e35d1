use gammaverify::registry::{
    adjudicate_dispute, list_identities, run_suite, verify_identity, Expected, Filter, IdentityRecord, Registry, Selection, Side, Status,
    SuiteOptions, TolClass, Verdict,
};
use gammaverify::specfun::FnEvalResult;
use gammaverify::{Error, Settings};

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

fn lhs(v: &Verdict) -> f64 {
    v.lhs.expect("lhs value").value
}

#[test]
fn catalog_size_and_order() {
    let all = list_identities(&Filter::default());
    assert!(all.len() >= 60, "only {} identities", all.len());
    let ids: Vec<&str> = all.iter().map(|r| r.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len(), "duplicate ids");
}

#[test]
fn section_filter() {
    let six = list_identities(&Filter { section: Some(6), expected: None });
    for id in ["I-6.16", "I-6.24", "I-6.34", "I-6.38"] {
        assert!(six.iter().any(|r| r.id == id), "{id} missing from section 6");
    }
    assert!(six.iter().all(|r| r.section == 6));
}

#[test]
fn disputed_filter() {
    let d = list_identities(&Filter { section: None, expected: Some(Expected::Disputed) });
    for id in ["D-4.26", "D-4.27", "D-4.28", "D-4.29", "D-4.30", "D-5.18", "D-5.55"] {
        assert!(d.iter().any(|r| r.id == id), "{id} missing from the disputed list");
    }
    assert!(d.iter().all(|r| r.expected == Expected::Disputed));
}

#[test]
fn every_default_param_set_is_in_domain() {
    for r in list_identities(&Filter::default()) {
        assert!(!r.param_sets.is_empty(), "{} has no parameter sets", r.id);
        for p in r.param_sets {
            r.check_params(p).unwrap_or_else(|e| panic!("{}: {e}", r.id));
        }
    }
}

// Values from 30-digit reference evaluations.
const ORACLES: &[(&str, &[f64], f64)] = &[
    ("I-4.31", &[], 0.14582414890697856),
    ("I-4.33", &[], 0.01492445500740384),
    ("I-6.14", &[], -0.091_147_874_159_779_42),
    ("I-6.16", &[], 0.045933363149576995),
    ("I-3.13", &[], 0.462_053_125_707_045_3),
    ("I-6.34", &[], -0.22363603153283025),
    ("I-6.24", &[], 0.14237111948761964),
    ("I-1.8", &[-2.0], 1.6058433475937937),
    ("I-1.8", &[-0.5], 1.0363640630810717),
    ("I-1.8", &[0.5], 0.8236677194589164),
    ("I-1.8", &[1.0], 0.745_414_375_713_792_8),
    ("I-1.8", &[3.0], 0.539_447_753_134_005_2),
    ("I-6.3", &[], -std::f64::consts::LN_2),
    ("I-6.6", &[], 0.451_582_705_289_454_9),
    ("I-5.46.2", &[], 0.25),
    ("I-5.56", &[], -0.29245363434456083),
    ("I-5.58.1", &[], 0.369_669_299_246_093_7),
    ("I-4.36.1", &[], 1.866_317_083_793_562),
    ("I-4.16", &[0.5], -0.505_433_054_489_695_3),
    ("D-5.18", &[], -0.18850116605469068),
    ("D-7.11", &[], -0.176_011_999_819_407),
    ("D-4.26", &[], -0.12155165157964404),
    ("D-4.28", &[], 1.0750129561942612),
    ("D-4.29", &[], 2.835_091_887_353_209),
];

#[test]
fn frozen_reference_values() {
    for &(id, p, want) in ORACLES {
        let v = verify_identity(id, Some(p), None).unwrap();
        let got = lhs(&v);
        let err = v.lhs.unwrap().abs_err.max(1e-13 * want.abs().max(1.0));
        assert!(close(got, want, 2.0 * err + 1e-14), "{id}{p:?}: {got} vs {want}");
        if v.expected_status == Expected::Confirmed {
            assert_eq!(v.status, Status::Confirmed, "{id}{p:?}");
        }
    }
}

#[test]
fn full_suite_has_no_failures() {
    let r = run_suite(&Selection::All, &SuiteOptions::default()).unwrap();
    assert!(r.verdicts.len() >= 60);
    let bad: Vec<String> = r
        .verdicts
        .iter()
        .filter(|v| v.expected_status == Expected::Confirmed && v.status != Status::Confirmed)
        .map(|v| format!("{} {} {:?}", v.label(), v.status, v.note))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(!r.has_failures());
    assert_eq!(r.summary.counts.total(), r.verdicts.len());
}

fn strip_timing(mut vs: Vec<Verdict>) -> Vec<Verdict> {
    for v in &mut vs {
        v.wall_time = 0.0;
    }
    vs
}

#[test]
fn deterministic_across_runs_and_thread_counts() {
    let sel = Selection::Section(4);
    let one = SuiteOptions { parallelism: Some(1), ..Default::default() };
    let many = SuiteOptions { parallelism: Some(4), ..Default::default() };
    let a = strip_timing(run_suite(&sel, &one).unwrap().verdicts);
    let b = strip_timing(run_suite(&sel, &many).unwrap().verdicts);
    let c = strip_timing(run_suite(&sel, &SuiteOptions::default()).unwrap().verdicts);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

fn rank(s: Status) -> u8 {
    match s {
        Status::Confirmed => 0,
        Status::Inconclusive => 1,
        Status::Refuted => 2,
    }
}

#[test]
fn looser_tolerance_never_worsens_a_verdict() {
    let reg = Registry::builtin();
    let s = Settings::default();
    for r in reg.records() {
        for p in r.param_sets {
            let ranks: Vec<u8> = TolClass::ALL.iter().map(|t| rank(reg.verify(r.id, Some(p), Some(*t), &s).unwrap().status)).collect();
            // ALL runs strict, standard, slow
            assert!(ranks.windows(2).all(|w| w[1] <= w[0]), "{} {p:?}: {ranks:?}", r.id);
        }
    }
}

#[test]
fn swapping_routes_keeps_the_verdict() {
    let reg = Registry::builtin();
    let swapped = Registry::from_records(reg.records().iter().map(IdentityRecord::swapped).collect());
    let a = strip_timing(reg.run_suite(&Selection::All, &SuiteOptions::default()).unwrap().verdicts);
    let b = strip_timing(swapped.run_suite(&Selection::All, &SuiteOptions::default()).unwrap().verdicts);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.status, y.status, "{}", x.label());
        assert_eq!(x.residual, y.residual, "{}", x.label());
        assert_eq!(x.budget, y.budget, "{}", x.label());
        assert_eq!(x.lhs, y.rhs);
    }
}

#[test]
fn parametric_identities_hold_near_domain_edges() {
    let reg = Registry::builtin();
    let s = Settings::default();
    let mut checked = 0;
    for r in reg.records() {
        if r.expected != Expected::Confirmed || r.params.len() != 1 || r.params[0].lattice != 0.0 {
            continue;
        }
        for iv in r.params[0].domain {
            let width = (iv.hi - iv.lo).min(1.0);
            if width <= 0.0 {
                continue;
            }
            for (edge, dir) in [(iv.lo, 1.0), (iv.hi, -1.0)] {
                for d in [1e-1, 3e-2, 1e-2, 3e-3, 1e-3] {
                    let x = edge + dir * d * width;
                    let v = reg.verify(r.id, Some(&[x]), None, &s).unwrap();
                    assert_eq!(v.status, Status::Confirmed, "{} at {x}: {:?} {:?}", r.id, v.residual, v.note);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked >= 200, "only {checked} boundary points");
}

#[test]
fn out_of_domain_params_are_rejected() {
    let e = verify_identity("I-2.9", Some(&[1.5]), None).unwrap_err();
    assert!(matches!(e, Error::ParamDomain { .. }), "{e:?}");
    let e = verify_identity("I-4.31", Some(&[1.0]), None).unwrap_err();
    assert!(matches!(e, Error::ParamDomain { .. }), "{e:?}");
    let e = verify_identity("I-3.16", Some(&[0.7]), None).unwrap_err();
    assert!(matches!(e, Error::ParamDomain { .. }), "lattice: {e:?}");
}

#[test]
fn unknown_ids_suggest_near_matches() {
    let reg = Registry::builtin();
    assert!(matches!(reg.get("I-4.311"), Err(Error::UnknownId(_))));
    let near = reg.near_matches("I-4.311");
    assert!(near.contains(&"I-4.31"), "{near:?}");
    let e = reg.run_suite(&Selection::Ids(vec!["nope".into()]), &SuiteOptions::default()).unwrap_err();
    assert!(matches!(e, Error::UnknownId(_)));
}

#[test]
fn empty_selection_is_an_error() {
    let reg = Registry::builtin();
    assert_eq!(reg.run_suite(&Selection::Ids(vec![]), &SuiteOptions::default()).unwrap_err(), Error::EmptySelection);
    assert_eq!(reg.run_suite(&Selection::Section(99), &SuiteOptions::default()).unwrap_err(), Error::EmptySelection);
}

#[test]
fn adjudication_only_for_disputed_records() {
    assert!(matches!(adjudicate_dispute("I-4.31"), Err(Error::Misuse(_))));
    assert!(matches!(adjudicate_dispute("P-logxcot"), Err(Error::Misuse(_))));
}

#[test]
fn adjudication_reports_convergence() {
    for id in ["D-4.26", "D-4.27", "D-5.18", "D-7.11"] {
        let v = adjudicate_dispute(id).unwrap();
        assert_eq!(v.tol_class, TolClass::Strict);
        let d = v.diagnostics.as_ref().expect("diagnostics");
        for route in [&d.lhs, &d.rhs] {
            let shift = route.shift.expect("both evaluations succeed");
            assert!(shift < 1e-8, "{id} {}: shift {shift}", route.recipe);
        }
        assert!(v.lhs.unwrap().abs_err < 1e-8 && v.rhs.unwrap().abs_err < 1e-8, "{id}");
    }
    let v = adjudicate_dispute("D-7.11").unwrap();
    assert!(close(lhs(&v), -0.176012, 5e-7));
}

#[test]
fn disputed_never_counts_as_failure() {
    let r = run_suite(&Selection::Ids(vec!["D-6.38-variant".into(), "D-1.13-variant".into()]), &SuiteOptions::default()).unwrap();
    assert!(r.verdicts.iter().all(|v| v.status == Status::Refuted));
    assert!(!r.has_failures());
}

#[test]
fn divergent_probes_are_not_cauchy() {
    let reg = Registry::builtin();
    let s = Settings::default();
    for id in ["P-logGammacot", "P-logxcot"] {
        let r = reg.get(id).unwrap();
        let gaps: Vec<f64> = r.param_sets.iter().map(|p| reg.verify(id, Some(p), None, &s).unwrap().residual.unwrap()).collect();
        // ε → ε/10 moves the truncated integral by a roughly fixed log 10 / π step
        for g in &gaps {
            assert!(*g > 1.0, "{id}: {gaps:?}");
        }
        assert!(gaps.windows(2).all(|w| w[1] >= w[0]), "{id}: {gaps:?}");
    }
}

fn wrong_rhs(_: &[f64], _: &Settings) -> gammaverify::Result<FnEvalResult> {
    Ok(FnEvalResult::exact(0.2))
}

#[test]
fn injected_wrong_rhs_is_a_failure() {
    let mut rec = Registry::builtin().get("I-4.31").unwrap().clone();
    rec.rhs = Side { recipe: "0.2", eval: wrong_rhs };
    let reg = Registry::from_records(vec![rec]);
    let r = reg.run_suite(&Selection::All, &SuiteOptions::default()).unwrap();
    assert_eq!(r.verdicts[0].status, Status::Refuted);
    assert!(r.has_failures());
    assert_eq!(r.summary.failures, vec!["I-4.31".to_string()]);
}

#[test]
fn route_failure_is_inconclusive_with_note() {
    fn broken(_: &[f64], _: &Settings) -> gammaverify::Result<FnEvalResult> {
        Err(Error::NonFinite("test".into()))
    }
    let mut rec = Registry::builtin().get("I-6.16").unwrap().clone();
    rec.lhs = Side { recipe: "broken", eval: broken };
    let reg = Registry::from_records(vec![rec]);
    let v = reg.verify("I-6.16", None, None, &Settings::default()).unwrap();
    assert_eq!(v.status, Status::Inconclusive);
    assert!(v.note.unwrap().contains("lhs route failed"));
    assert!(v.residual.is_none());
}

#[test]
fn status_thresholds() {
    assert_eq!(Status::classify(1e-9, 1e-9), Status::Confirmed);
    assert_eq!(Status::classify(2e-9, 1e-9), Status::Inconclusive);
    assert_eq!(Status::classify(1e-7, 1e-9), Status::Inconclusive);
    assert_eq!(Status::classify(1.01e-7, 1e-9), Status::Refuted);
}
