use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use ci_lefschetz::poly::hessian_determinant;
use ci_lefschetz::{parse_polynomial, Polynomial, Rational, Side, VariableAlphabet};
use serde_json::Value;
use tempfile::NamedTempFile;

const FERMAT_222: &str =
    r#"{"variables": ["x1", "x2", "x3"], "generators": ["x1^2", "x2^2", "x3^2"]}"#;
const RANDOM_223: &str = r#"{"variables": ["a", "b", "c"], "generators": ["a^2 - 3*b*c + 2*c^2", "b^2 + a*c", "c^3 - a^2*b + 4*a*b*c"]}"#;

fn instance(json: &str) -> NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], path: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ci-lefschetz"));
    cmd.args(args);
    if let Some(p) = path {
        cmd.arg(p);
    }
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

fn alphabet(names: &[&str], side: Side) -> Arc<VariableAlphabet> {
    Arc::new(VariableAlphabet::new(names.iter().map(|s| s.to_string()), side).unwrap())
}

fn reparse(text: &str, alpha: &Arc<VariableAlphabet>) -> Polynomial {
    let p = parse_polynomial(text, alpha).unwrap();
    assert_eq!(p.to_string(), text);
    p
}

#[test]
fn analyze_fermat_quadrics() {
    let f = instance(FERMAT_222);
    let out = run(&["analyze", "--format", "json"], Some(f.path()));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["algebra"]["socle_degree"], 3);
    assert_eq!(
        v["algebra"]["hilbert_function"],
        serde_json::json!([1, 3, 3, 1])
    );
    assert_eq!(v["associated_form"], "3/4*y1*y2*y3");
    assert_eq!(v["agree"], true);
    assert_eq!(v["duality"]["macaulay_duality"], true);
    assert_eq!(v["slp"]["mode"], "exact");
    assert!(v["slp"]["failure_probability_bound"].is_null());
    assert!(v["timings"]["total_ms"].is_number());

    let text = stdout(&run(&["analyze"], Some(f.path())));
    assert!(text.contains("associated form A_f = 3/4*y1*y2*y3"));
    assert!(text.contains("agree: true"));
}

#[test]
fn exact_slp_prints_the_determinant() {
    let f = instance(FERMAT_222);
    let out = run(&["slp", "--exact"], Some(f.path()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "SLP holds; certificate det = -2*t1*t2*t3\n");
}

#[test]
fn probabilistic_hessian_carries_a_checkable_witness() {
    let f = instance(FERMAT_222);
    let args = [
        "hessian",
        "--mode",
        "probabilistic",
        "--trials",
        "5",
        "--bound",
        "100",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let out = run(&args, Some(f.path()));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["hessian"]["nonzero"], true);
    assert_eq!(v["hessian"]["witness"]["kind"], "point");
    let y = alphabet(&["y1", "y2", "y3"], Side::R);
    let form = reparse(v["associated_form"].as_str().unwrap(), &y);
    let point: Vec<Rational> = v["hessian"]["witness"]["point"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    let value: Rational = v["hessian"]["witness"]["value"]
        .as_str()
        .unwrap()
        .parse()
        .unwrap();
    assert_eq!(hessian_determinant(&form).eval(&point), value);
}

#[test]
fn reports_are_deterministic() {
    let f = instance(RANDOM_223);
    for cmd in ["analyze", "slp", "hessian"] {
        let args = [cmd, "--seed", "5", "--format", "json"];
        let a = without_timings(json(&run(&args, Some(f.path()))));
        let b = without_timings(json(&run(&args, Some(f.path()))));
        assert_eq!(a, b, "{cmd}");
    }
    let sweep = |jobs: &str| {
        let out = run(
            &[
                "sweep",
                "--degrees",
                "2,2,2",
                "--count",
                "6",
                "--seed",
                "11",
                "--jobs",
                jobs,
                "--format",
                "json",
            ],
            None,
        );
        assert_eq!(out.status.code(), Some(0));
        without_timings(json(&out))
    };
    assert_eq!(sweep("1"), sweep("4"));
    let text = |_: ()| {
        stdout(&run(
            &["sweep", "--degrees", "2,2,3", "--count", "2", "--seed", "3"],
            None,
        ))
    };
    assert_eq!(text(()), text(()));
}

#[test]
fn json_polynomials_round_trip() {
    let f = instance(RANDOM_223);
    let v = json(&run(&["analyze", "--format", "json"], Some(f.path())));
    let s = alphabet(&["a", "b", "c"], Side::S);
    let y = alphabet(&["y1", "y2", "y3"], Side::R);
    let t = alphabet(&["t1", "t2", "t3"], Side::Parameters);
    for key in ["generators", "groebner_basis"] {
        for p in v["algebra"][key].as_array().unwrap() {
            reparse(p.as_str().unwrap(), &s);
        }
    }
    reparse(v["algebra"]["jacobian"].as_str().unwrap(), &s);
    let form = reparse(v["associated_form"].as_str().unwrap(), &y);
    let det = reparse(v["slp"]["certificate"]["value"].as_str().unwrap(), &t);
    let hess = reparse(v["hessian"]["witness"]["value"].as_str().unwrap(), &y);
    assert_eq!(hess, hessian_determinant(&form));
    assert_eq!(det.is_zero(), hess.is_zero());
    assert_eq!(
        v["algebra"]["hilbert_function"],
        serde_json::json!([1, 3, 4, 3, 1])
    );
}

#[test]
fn milnor_commands() {
    let cubic = instance(r#"{"variables": ["x1", "x2", "x3"], "f": "x1^3 + x2^3 + x3^3"}"#);
    let out = run(&["milnor", "--format", "json"], Some(cubic.path()));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["algebra"]["socle_degree"], 3);
    assert_eq!(v["expected_socle_degree"], 3);
    assert_eq!(v["agree"], true);

    let hesse =
        instance(r#"{"variables": ["x1", "x2", "x3"], "f": "x1^3 + x2^3 + x3^3 - 3*x1*x2*x3"}"#);
    let out = run(&["milnor"], Some(hesse.path()));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("SingularHypersurface"));
    let out = run(&["analyze"], Some(hesse.path()));
    assert_eq!(out.status.code(), Some(1));

    let ci = instance(FERMAT_222);
    assert_eq!(run(&["milnor"], Some(ci.path())).status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_one() {
    let bad = instance(
        r#"{"variables": ["x1", "x2", "x3"], "generators": ["x1^2", "x2^2 + x3", "x3^2"]}"#,
    );
    let out = run(&["analyze"], Some(bad.path()));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("NotHomogeneous: generator 2"));

    let both =
        instance(r#"{"variables": ["x1", "x2"], "generators": ["x1^2", "x2^2"], "f": "x1^3"}"#);
    assert_eq!(run(&["analyze"], Some(both.path())).status.code(), Some(1));

    let syntax = instance(r#"{"variables": ["x1", "x2"], "generators": ["x1^2", "2x2^2"]}"#);
    let out = run(&["analyze"], Some(syntax.path()));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("generator 2"));

    let singular =
        instance(r#"{"variables": ["x1", "x2", "x3"], "generators": ["x1^2", "x1*x2", "x3^2"]}"#);
    assert_eq!(
        run(&["analyze"], Some(singular.path())).status.code(),
        Some(1)
    );

    assert_eq!(
        run(&["analyze", "/nonexistent/instance.json"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["sweep", "--degrees", "2,2,2", "--count", "2"], None)
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));

    let five = instance(
        r#"{"variables": ["x1","x2","x3","x4","x5"], "generators": ["x1^2","x2^2","x3^2","x4^2","x5^2"]}"#,
    );
    let out = run(&["slp", "--exact"], Some(five.path()));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("TooManyVariables"));
}

#[test]
fn empty_sweep_succeeds() {
    let out = run(
        &[
            "sweep",
            "--degrees",
            "2,2,2",
            "--count",
            "0",
            "--seed",
            "42",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 0);
    assert_eq!(v["anomalies"], 0);
    assert_eq!(v["instances"], serde_json::json!([]));
}

#[test]
fn order_flag_does_not_change_the_associated_form() {
    let f = instance(RANDOM_223);
    let lex = json(&run(
        &["associated-form", "--order", "lex", "--format", "json"],
        Some(f.path()),
    ));
    let grevlex = json(&run(
        &["associated-form", "--format", "json"],
        Some(f.path()),
    ));
    assert_eq!(lex["algebra"]["order"], "lex");
    assert_eq!(lex["associated_form"], grevlex["associated_form"]);
    assert_ne!(
        lex["algebra"]["groebner_basis"],
        grevlex["algebra"]["groebner_basis"]
    );
}

#[test]
fn bundled_instances_honor_the_exit_code_contract() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances");
    let expected = [
        ("fermat222.json", 0),
        ("fermat223.json", 0),
        ("fermat_cubic.json", 0),
        ("hesse_cubic.json", 1),
        ("not_homogeneous.json", 1),
    ];
    for (name, code) in expected {
        let out = run(&["analyze"], Some(&dir.join(name)));
        assert_eq!(out.status.code(), Some(code), "{name}: {}", stderr(&out));
    }
}
