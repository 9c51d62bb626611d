use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcol"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--out", "json"]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_kneser_coloring_is_all_rich() {
    let v = json(&[
        "classify",
        "--graph",
        &data("petersen.s6"),
        "--coloring",
        &data("kneser.col"),
    ]);
    assert_eq!(v["rich"], 15);
    assert_eq!(v["abnormal"], 0);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn classify_q3_base_coloring() {
    let v = json(&[
        "classify",
        "--catalog",
        "q3",
        "--coloring",
        &data("q3-two-abnormal.col"),
    ]);
    assert_eq!(v["abnormal_edges"], serde_json::json!([1, 3]));
}

#[test]
fn scan_eight_vertices() {
    let o = run(&["scan", "--n", "8", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# graphs: 5\n"), "{text}");
    assert!(text.contains("# single_abnormal: 0\n"), "{text}");
    assert!(text.ends_with("# verdict: pass\n"));
}

#[test]
fn scan_output_does_not_depend_on_jobs() {
    let a = run(&["scan", "--n", "10", "--jobs", "1"]);
    let b = run(&["scan", "--n", "10", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn demo_cyclic2_meets_bound() {
    let o = run(&[
        "demo",
        "--variant",
        "cyclic2",
        "--graph",
        &data("petersen.s6"),
        "--t",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"], 9);
    assert_eq!(v["pass"], true);
    assert_eq!(v["nV_H"], 20);
    assert!(v["abnormal_final"].as_u64().unwrap() <= 9);
}

#[test]
fn demo_every_variant() {
    for (variant, bound) in [
        ("disjoint", 0),
        ("cyclic1", 5),
        ("vertex_replacement", 7),
        ("cyclic2", 9),
    ] {
        let v = json(&["demo", "--variant", variant, "--catalog", "petersen", "--t", "3"]);
        assert_eq!(v["bound"], bound);
        assert_eq!(v["pass"], true, "{variant}");
    }
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["solve", "--graph", &data("petersen.s6"), "--out", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_save_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let col = dir.path().join("p.col");
    let v = json(&["solve", "--catalog", "petersen", "--save", col.to_str().unwrap()]);
    assert_eq!(v["min_abnormal"], 0);
    assert_eq!(v["status"], "optimal");
    let c = json(&["classify", "--catalog", "petersen", "--coloring", col.to_str().unwrap()]);
    assert_eq!(c["abnormal"], 0);
}

#[test]
fn chi_n_of_petersen_and_k4() {
    assert_eq!(json(&["chi-n", "--catalog", "petersen"])["chi_n"], 5);
    assert_eq!(json(&["chi-n", "--catalog", "k4"])["chi_n"], 3);
}

#[test]
fn jaeger_map_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("p.map");
    let g = data("petersen.s6");
    let v = json(&[
        "jaeger",
        "--graph",
        &g,
        "--coloring",
        &data("kneser.col"),
        "--map-out",
        map.to_str().unwrap(),
    ]);
    assert_eq!(v["round_trip"], true);
    assert_eq!(v["h_coloring"], true);
    let back = json(&["jaeger", "--graph", &g, "--map", map.to_str().unwrap()]);
    assert_eq!(back["pullback_normal"], true);
}

#[test]
fn jaeger_rejects_non_star_map() {
    let dir = tempfile::tempdir().unwrap();
    let map = dir.path().join("bad.map");
    let text: String = (0..15).map(|e| format!("{e} 0\n")).collect();
    std::fs::write(&map, text).unwrap();
    let o = run(&["jaeger", "--catalog", "petersen", "--map", map.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("# h_coloring: false"));
}

#[test]
fn construct_cyclic2_writes_a_cyclically_4_connected_graph() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("h.s6");
    let v = json(&[
        "construct",
        "--graph",
        &data("petersen.s6"),
        "--variant",
        "cyclic2",
        "--edge",
        "0",
        "--edge2",
        "6",
        "--t",
        "3",
        "--emit",
        "sparse6",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(v["n"], 30);
    assert_eq!(v["cyclically_4_edge_connected"], true);
    let written = std::fs::read_to_string(&out).unwrap();
    assert!(written.starts_with(':'));
    assert_eq!(
        json(&["solve", "--graph", out.to_str().unwrap(), "--budget", "0", "--first"])["min_abnormal"],
        0
    );
}

#[test]
fn construct_k4_gadget_adds_one_abnormal_edge() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    let c = dir.path().join("g.col");
    let v = json(&[
        "construct",
        "--catalog",
        "q3",
        "--variant",
        "k4_gadget",
        "--coloring",
        &data("q3-two-abnormal.col"),
        "--edge",
        "1",
        "--output",
        g.to_str().unwrap(),
        "--coloring-out",
        c.to_str().unwrap(),
    ]);
    assert_eq!(v["abnormal_after"], 3);
    let check = json(&[
        "classify",
        "--graph",
        g.to_str().unwrap(),
        "--coloring",
        c.to_str().unwrap(),
    ]);
    assert_eq!(check["abnormal"], 3);
}

#[test]
fn question31_finds_no_counterexample() {
    let v = json(&["question31", "--n", "8"]);
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("p.svg");
    let v = json(&[
        "plot",
        "--catalog",
        "q3",
        "--coloring",
        &data("q3-two-abnormal.col"),
        "--output",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(v["abnormal"], 2);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<svg"));
    assert_eq!(text.matches("stroke-dasharray").count(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["solve"]).status.code(), Some(1));
    assert_eq!(run(&["solve", "--graph", "/nonexistent/graph"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--n", "7"]).status.code(), Some(1));
    assert_eq!(
        run(&["demo", "--variant", "nope", "--catalog", "k4", "--t", "2"])
            .status
            .code(),
        Some(1)
    );

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.col");
    let kneser = std::fs::read_to_string(data("kneser.col")).unwrap();
    // edge 1 takes the color of edge 0, which shares vertex 4 with it
    std::fs::write(&bad, kneser.replace("\n1 4\n", "\n1 5\n")).unwrap();
    let o = run(&[
        "classify",
        "--graph",
        &data("petersen.s6"),
        "--coloring",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("# verdict: fail\n"));
}
