use gammaverify::cli::{run, EXIT_OK, EXIT_REFUTED, EXIT_USAGE};
use gammaverify::registry::{Registry, Side};
use gammaverify::specfun::FnEvalResult;
use gammaverify::Settings;
use std::path::PathBuf;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn cli_with(registry: &Registry, args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gammaverify").chain(args.iter().copied());
    let code = run(argv, registry, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn cli(args: &[&str]) -> Run {
    cli_with(&Registry::builtin(), args)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gammaverify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn rows_with(out: &str, status: &str) -> usize {
    out.lines().filter(|l| l.split_whitespace().any(|w| w == status)).count()
}

#[test]
fn verify_single_id() {
    let r = cli(&["verify", "--ids", "I-6.16"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(r.out.lines().filter(|l| l.starts_with("I-6.16")).count(), 1);
    assert!(r.out.contains("CONFIRMED"));
}

#[test]
fn verify_comma_separated_ids() {
    let r = cli(&["verify", "--ids", "I-6.16,I-3.13", "--no-timing"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("2 verdicts: 2 CONFIRMED"));
}

#[test]
fn unknown_id_suggests_near_matches() {
    let r = cli(&["verify", "--ids", "NO-SUCH"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("NO-SUCH"));
    let r = cli(&["verify", "--ids", "I-4.311"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("did you mean") && r.err.contains("I-4.31"), "{}", r.err);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(cli(&["verify"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--all", "--section", "4"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--all", "--parallelism", "0"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--all", "--tol-class", "loose"]).code, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(cli(&["verify", "--section", "99"]).code, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

fn wrong_rhs(_: &[f64], _: &Settings) -> gammaverify::Result<FnEvalResult> {
    Ok(FnEvalResult::exact(0.2))
}

#[test]
fn refuted_expected_confirmed_exits_2() {
    let mut rec = Registry::builtin().get("I-4.31").unwrap().clone();
    rec.rhs = Side { recipe: "0.2", eval: wrong_rhs };
    let reg = Registry::from_records(vec![rec]);
    let r = cli_with(&reg, &["verify", "--ids", "I-4.31"]);
    assert_eq!(r.code, EXIT_REFUTED);
    assert!(r.out.contains("REFUTED"));
    assert!(r.out.contains("refuted expected-CONFIRMED: I-4.31"));
}

#[test]
fn disputed_refutations_do_not_change_the_exit_code() {
    let r = cli(&["verify", "--ids", "D-6.38-variant,D-5.55", "--no-timing"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(rows_with(&r.out, "REFUTED"), 2);
}

#[test]
fn reports_are_byte_identical_without_timing() {
    let mut docs = Vec::new();
    for i in 0..2 {
        let json = scratch(&format!("s4-{i}.json"));
        let md = scratch(&format!("s4-{i}.md"));
        let r = cli(&[
            "verify",
            "--section",
            "4",
            "--no-timing",
            "--parallelism",
            "2",
            "--json",
            json.to_str().unwrap(),
            "--md",
            md.to_str().unwrap(),
        ]);
        assert_eq!(r.code, EXIT_OK);
        docs.push((r.out, std::fs::read(&json).unwrap(), std::fs::read(&md).unwrap()));
    }
    assert_eq!(docs[0], docs[1]);
}

#[test]
fn json_report_shape() {
    let path = scratch("shape.json");
    let r = cli(&["verify", "--ids", "I-1.8,D-5.18", "--no-timing", "--json", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], "1.0");
    assert_eq!(v["config"]["tol_class"], "per-identity");
    assert_eq!(v["config"]["parallelism"], 1);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert!(verdicts.len() >= 2);
    for vd in verdicts {
        for key in ["id", "params", "lhs", "rhs", "residual", "budget", "status", "expected_status", "tol_class"] {
            assert!(vd.get(key).is_some(), "missing {key}");
        }
        assert!(vd.get("wall_time").is_none());
    }
    assert_eq!(v["summary"]["total"], verdicts.len());
    assert!(v["summary"]["failures"].as_array().unwrap().is_empty());
    assert!(v.get("total_wall_time").is_none());
}

#[test]
fn json_numbers_have_at_most_15_significant_digits() {
    let path = scratch("digits.json");
    cli(&["verify", "--ids", "I-4.31,I-6.14", "--no-timing", "--json", path.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let x = v["verdicts"][0]["lhs"]["value"].as_f64().unwrap();
    assert_eq!(format!("{x:.14e}").parse::<f64>().unwrap(), x);
}

#[test]
fn markdown_has_sections_and_dispute_appendix() {
    let path = scratch("report.md");
    let r = cli(&["verify", "--ids", "I-4.31,D-5.18,I-6.16", "--no-timing", "--md", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("## Section 4"));
    assert!(md.contains("## Section 6"));
    let appendix = md.split("## Appendix").nth(1).expect("appendix");
    assert!(appendix.contains("D-5.18"));
    assert!(appendix.contains("-0.187878"));
    assert!(appendix.contains("-0.188501166054"));
}

#[test]
fn eval_examples() {
    let r = cli(&["eval", "fn", "lambda", "0"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("lambda 0 = 0.57721566490153"), "{}", r.out);

    let r = cli(&["eval", "integral", "Q-6.14"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("Q-6.14 = -0.09114787415977"), "{}", r.out);

    let r = cli(&["eval", "series", "S-6.3"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("S-6.3 = -0.69314718055994"), "{}", r.out);
}

#[test]
fn eval_with_parameters() {
    let r = cli(&["eval", "fn", "hurwitz-zeta", "2", "1"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("= 1.64493406684823"), "{}", r.out);
    let r = cli(&["eval", "fn", "digamma", "-0.5"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.contains("= 0.03648997397857"), "{}", r.out);
    assert_eq!(cli(&["eval", "fn", "zeta"]).code, EXIT_USAGE);
    assert_eq!(cli(&["eval", "fn", "no-such-fn", "1"]).code, EXIT_USAGE);
    assert_eq!(cli(&["eval", "integral", "Q-0.0"]).code, EXIT_USAGE);
}

#[test]
fn sweep_examples() {
    let r = cli(&["sweep", "I-2.6", "--param", "p", "--from", "0.1", "--to", "0.9", "--steps", "5", "--no-timing"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(rows_with(&r.out, "CONFIRMED"), 5);

    let r = cli(&["sweep", "I-5.35", "--param", "x", "--from", "0.1", "--to", "0.9", "--steps", "9", "--no-timing"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(rows_with(&r.out, "CONFIRMED"), 9);

    let r = cli(&["sweep", "I-6.16", "--param", "x", "--from", "0.1", "--to", "0.9", "--steps", "5"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn sweep_argument_errors() {
    let base = ["sweep", "I-2.6", "--param", "p"];
    let with = |extra: &[&str]| {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        cli(&args).code
    };
    assert_eq!(with(&["--from", "0.9", "--to", "0.1", "--steps", "5"]), EXIT_USAGE);
    assert_eq!(with(&["--from", "0.1", "--to", "0.9", "--steps", "1"]), EXIT_USAGE);
    assert_eq!(with(&["--from", "0.1", "--to", "7", "--steps", "3"]), EXIT_USAGE);
    let r = cli(&["sweep", "I-2.6", "--param", "q", "--from", "0.1", "--to", "0.9", "--steps", "3"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn sweep_json_is_deterministic() {
    let mut bodies = Vec::new();
    for i in 0..2 {
        let p = scratch(&format!("sweep-{i}.json"));
        let r = cli(&[
            "sweep",
            "I-2.6",
            "--param",
            "p",
            "--from",
            "0.1",
            "--to",
            "0.9",
            "--steps",
            "5",
            "--no-timing",
            "--parallelism",
            "3",
            "--json",
            p.to_str().unwrap(),
        ]);
        assert_eq!(r.code, EXIT_OK);
        bodies.push(std::fs::read(&p).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let v: serde_json::Value = serde_json::from_slice(&bodies[0]).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn list_filters() {
    let all = cli(&["list"]);
    assert_eq!(all.code, EXIT_OK);
    let total = Registry::builtin().records().len();
    assert!(all.out.ends_with(&format!("{total} identities\n")));
    let disputed = cli(&["list", "--expected", "DISPUTED"]);
    let rows: Vec<&str> = disputed.out.lines().filter(|l| !l.ends_with("identities")).collect();
    assert!(disputed.out.ends_with(&format!("{} identities\n", rows.len())));
    assert!(rows.iter().all(|l| l.contains("DISPUTED")));
    assert!(rows.iter().any(|l| l.starts_with("D-5.18 ")));
    let s6 = cli(&["list", "--section", "6"]);
    assert!(s6.out.lines().filter(|l| l.contains('-')).all(|l| l.split_whitespace().nth(1) == Some("6") || l.ends_with("identities")));
}
