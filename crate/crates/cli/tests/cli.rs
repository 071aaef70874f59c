mod common;

use common::{cli, run_with, scratch};
use solgroup_cli::{EXIT_BUDGET, EXIT_INPUT, EXIT_OK};

#[test]
fn mh_pipes_into_rank() {
    let mh = cli(&["mh", "A7"]);
    assert_eq!(mh.code, EXIT_OK);
    assert!(mh.err.contains("group=A7 order=2520 rows=140 cols=105"), "{}", mh.err);
    let rank = run_with(&["rank", "-"], &mh.out);
    assert_eq!(rank.code, EXIT_OK, "{}", rank.err);
    assert_eq!(rank.out.trim(), "rows=140 cols=105 rank=105");
}

#[test]
fn output_flag_moves_summary_to_stdout() {
    let path = scratch("a5.sys");
    let r = cli(&["mh", "A5", "-o", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("group=A5"));
    let text = std::fs::read_to_string(&path).unwrap();
    let null = cli(&["nullspace", path.to_str().unwrap()]);
    assert_eq!(null.code, EXIT_OK);
    assert!(text.lines().next().unwrap().split_whitespace().count() == 2);
    assert!(!null.out.is_empty());
}

#[test]
fn kneser_summary() {
    let r = cli(&["kneser", "7", "2"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.err.trim(), "n=21 regular=10 srg=21,10,3,6");
    assert!(r.out.trim_start().starts_with('{'));
}

#[test]
fn aut_on_single_vertex_and_petersen() {
    let one = r#"{"vertices":[{"id":0,"color":[0,0]}],"edges":[]}"#;
    let r = run_with(&["aut", "-"], one);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert_eq!(r.out.trim(), "order=1 rigid=true generators=0 nodes=1");

    let petersen = cli(&["kneser", "5", "2"]).out;
    let r = run_with(&["aut", "-", "--budget", "100000"], &petersen);
    assert!(r.out.starts_with("order=120 rigid=false"), "{}", r.out);
    let b = run_with(&["aut", "-", "--brute"], &petersen);
    assert!(b.out.starts_with("order=120"), "{}", b.out);
    let p = run_with(&["aut", "-", "--parallel", "--budget", "100000"], &petersen);
    assert_eq!(p.out, r.out);
}

#[test]
fn dimacs_round_trip_with_sidecar() {
    let (g, c) = (scratch("k52.dimacs"), scratch("k52.colors"));
    let r = cli(&["kneser", "5", "2", "--format", "dimacs", "-o", g.to_str().unwrap(), "--colors-out", c.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let a = cli(&["aut", g.to_str().unwrap(), "--colors", c.to_str().unwrap(), "--budget", "100000"]);
    assert!(a.out.starts_with("order=120"), "{} {}", a.out, a.err);
}

#[test]
fn decolor_accepts_a_system_file() {
    let sys = scratch("one.sys");
    std::fs::write(&sys, "1 3\n111\n").unwrap();
    let trace = scratch("one.trace.json");
    let r = cli(&["decolor", sys.to_str().unwrap(), "--trace", trace.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.err.starts_with("n=28 "), "{}", r.err);
    assert!(std::fs::read_to_string(trace).unwrap().contains("gadget"));
    let a = run_with(&["aut", "-"], &r.out);
    assert_eq!(a.code, EXIT_OK, "{}", a.err);
}

#[test]
fn buildgraph_refine_and_paths() {
    let sys = scratch("two.sys");
    std::fs::write(&sys, "2 3\n110\n011\nb 10\n").unwrap();
    let g = cli(&["buildgraph", sys.to_str().unwrap(), "--homogenize"]);
    assert_eq!(g.code, EXIT_OK, "{}", g.err);
    assert!(g.err.starts_with("kind=g "));
    let h = cli(&["buildgraph", sys.to_str().unwrap(), "--ghat"]);
    assert!(h.err.starts_with("kind=ghat "), "{}", h.err);
    let r = run_with(&["refine", "-"], &g.out);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.err.contains("classes="));
    let p = run_with(&["paths", "-"], &g.out);
    assert_eq!(p.code, EXIT_OK, "{}", p.err);
    let hom = cli(&["homogenize", sys.to_str().unwrap()]);
    assert!(hom.out.starts_with("3 5"), "{}", hom.out);
}

#[test]
fn frucht_is_verified() {
    let r = cli(&["frucht", "S3"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.err.contains("aut_order=6 verified=true"), "{}", r.err);
}

#[test]
fn verify_a7_prints_both_routes() {
    let r = cli(&["verify-a7"]);
    assert_eq!(r.code, EXIT_OK);
    let lines: Vec<&str> = r.out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("rank_route rows=140 cols=105 rank=105 nullity=0"));
    assert!(lines[1].contains("contradictions=105"));
    assert!(lines[2].ends_with("agree=true"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(cli(&["rank", "/nonexistent/file"]).code, EXIT_INPUT);
    assert_eq!(run_with(&["rank", "-"], "2 2\n1x\n00\n").code, EXIT_INPUT);
    assert_eq!(cli(&["mh", "Q8x"]).code, EXIT_INPUT);
    assert_eq!(cli(&["kneser", "3", "4"]).code, EXIT_INPUT);
    assert_eq!(cli(&["bogus"]).code, EXIT_INPUT);
    assert_eq!(cli(&["--help"]).code, EXIT_OK);
}

#[test]
fn budget_exhaustion_exits_3() {
    let petersen = cli(&["kneser", "5", "2"]).out;
    let r = run_with(&["aut", "-", "--budget", "2"], &petersen);
    assert_eq!(r.code, EXIT_BUDGET, "{}", r.err);
    let big = cli(&["kneser", "6", "2"]).out;
    assert_eq!(run_with(&["aut", "-", "--brute"], &big).code, EXIT_INPUT);
}
