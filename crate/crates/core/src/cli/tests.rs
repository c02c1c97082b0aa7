use super::*;
use serde_json::Value;

const EDGE: &str = "\
# the 4-cycle
ring R = GF(32003)[x1, x2, x3, x4];
ideal I_square = (x1*x2, x2*x3, x3*x4, x1*x4);
task analytic_spread I_square;
task height I_square;
task mu I_square;
";

fn run(src: &str) -> Report {
    run_source(src, &RunOptions::default()).unwrap()
}

fn value(r: &Report, k: usize) -> &Value {
    r.tasks[k].value.as_ref().unwrap()
}

#[test]
fn parses_the_edge_session() {
    let s = parse_session(EDGE).unwrap();
    assert_eq!(s.ring.as_ref().unwrap().nvars(), 4);
    assert_eq!(s.ideal("I_square").unwrap().gens().len(), 4);
    assert_eq!(s.tasks.len(), 3);
    let r = run(EDGE);
    assert_eq!(value(&r, 0), &Value::from(3));
    assert_eq!(value(&r, 1), &serde_json::json!({ "Finite": 2 }));
    assert_eq!(value(&r, 2), &Value::from(4));
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn empty_sessions() {
    let r = run("ring R = GF(7)[x];");
    assert!(r.tasks.is_empty());
    let text = String::from_utf8(emit_report(&r, Format::Json)).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["tasks"], serde_json::json!([]));
    assert!(text.trim_start().starts_with("{\n  \"version\""));
    assert_eq!(run("").tasks.len(), 0);
}

#[test]
fn parse_errors_carry_positions() {
    let e = parse_session("ring R = GF(32003)[x, y];\ntask rank E;").unwrap_err();
    assert_eq!((e.line, e.column), (2, 11));
    assert!(e.message.contains("`E`"), "{e}");

    let e = parse_session("ring R = GF(32003)[x, y];\nideal I = (x + , y);").unwrap_err();
    assert_eq!(e.line, 2);
    assert!(e.column > 12, "{e}");

    let e = parse_session("ring R = GF(32003)[x, y];\nideal I = (x, y);\nmodule E = ideal I;\ntask core E;").unwrap_err();
    assert!(e.message.contains("seed"), "{e}");

    let e = parse_session("ring R = GF(32003)[x, y];\nideal I = (x, y^2);\nmodule E = ideal I;\ntask analytic_spread E;")
        .unwrap_err();
    assert!(e.message.contains("common degree"), "{e}");

    let e = parse_session("ring R = GF(32003)[x];\nideal I = (x);\nideal I = (x^2);").unwrap_err();
    assert!(e.message.contains("already declared"));
    assert!(parse_session("ring R = GF(32003)[x];\nfrobnicate;").is_err());
    assert!(parse_session("ring R = GF(32003)[x];\ntask rank").is_err());
}

const SQUARE: &str = "\
ring R = GF(32003)[x, y];
ideal m2 = (x^2, x*y, y^2);
module E_msq = ideal m2;
module F = free 1 twist 2;
module E_plus = sum(E_msq, F);
submodule U = span(E_msq; [1, 0, 0], [0, 0, 1]);
task core E_msq --samples 8 --seed 42;
task reduction_number E_msq U;
task reduction_number E_msq U --max-degree 0;
task colon U;
task verify_balanced E_msq --reductions 4 --seed 7;
task verify_pd1_core E_plus --reductions 3 --seed 1;
task fitting E_plus --index 3;
";

#[test]
fn square_session() {
    let r = run(SQUARE);
    assert_eq!(r.tasks.len(), 7);
    let core = value(&r, 0);
    assert_eq!(core["seed"], 42);
    assert_eq!(core["samples"], 8);
    assert_eq!(core["mu"], 4);
    assert_eq!(value(&r, 1)["reduction_number"], serde_json::json!({ "kind": "exact", "value": 1 }));
    assert_eq!(r.tasks[2].status, Status::Inconclusive);
    assert_eq!(value(&r, 2)["max_degree"], 0);
    assert_eq!(value(&r, 3)["generators"], serde_json::json!(["x", "y"]));
    assert_eq!(value(&r, 4)["status"], "balanced");
    assert_eq!(value(&r, 5)["status"], "verified");
    assert_eq!(value(&r, 6)["generators"], serde_json::json!(["x", "y"]));
    assert_eq!(r.exit_code(), 2);
}

#[test]
fn reports_are_deterministic() {
    let a = emit_report(&run(SQUARE).without_timings(), Format::Json);
    let b = emit_report(&run(SQUARE).without_timings(), Format::Json);
    assert_eq!(a, b);
    let text = String::from_utf8(emit_report(&run(SQUARE), Format::Text)).unwrap();
    assert!(text.contains("core E_msq -> ok"));
}

#[test]
fn characteristic_override_changes_the_hash() {
    let a = run(EDGE);
    let b = run_source(EDGE, &RunOptions { characteristic: Some(101), ..Default::default() }).unwrap();
    assert_ne!(a.session_hash, b.session_hash);
    assert_eq!(b.tasks[0].value, a.tasks[0].value);
}

#[test]
fn negative_control_fails_its_hypotheses() {
    let src = "\
ring R = GF(32003)[x1, x2, x3, x4];
ideal I = (x1*x2, x2*x3, x3*x4, x1*x4);
module F = free 1 twist 2;
module Iplus = ideal I;
module E = sum(Iplus, F);
task check_ext_vanishing E;
task verify_balanced E --reductions 3 --seed 5;
";
    let r = run(src);
    assert_eq!(value(&r, 0)["verdict"]["verdict"], "fail");
    assert_eq!(r.tasks[1].status, Status::FailedHypothesis);
    assert_eq!(r.exit_code(), 3);
}

#[test]
fn per_task_errors_do_not_stop_the_run() {
    let src = "\
ring R = GF(32003)[x, y];
ideal I = (x, y);
ideal J = (x^2, y^2);
module E = ideal J;
module G = ideal I;
submodule V = span(G; [1, 0]);
task is_reduction E V;
task height I;
";
    let r = run(src);
    assert_eq!(r.tasks[0].status, Status::Error);
    assert_eq!(r.tasks[1].status, Status::Ok);
    assert_eq!(r.exit_code(), 4);
}
