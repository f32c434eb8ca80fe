use std::process::{Command, Output};

fn icg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bound_for_forest_of_degree_four() {
    let o = icg(&["bound", "--delta", "4", "--arboricity", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12\n");
}

#[test]
fn bound_with_degeneracy_bounds() {
    let o = icg(&["bound", "--delta", "20", "--arboricity", "1", "--andres"]);
    let text = stdout(&o);
    assert!(text.starts_with("36\n"));
    assert!(text.contains("andres general (k=1): 42"));
}

#[test]
fn exact_on_single_edge() {
    let o = icg(&["exact", "--family", "path", "--params", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimal k = 2"));
}

#[test]
fn exact_with_explicit_range() {
    let o = icg(&["exact", "--family", "star", "--params", "2", "--k-range", "2..4"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("k=")).count(), 3);
}

#[test]
fn invalid_input_exits_with_two() {
    assert_eq!(icg(&["bound", "--delta", "1", "--arboricity", "2"]).status.code(), Some(2));
    assert_eq!(icg(&["play", "--family", "nope"]).status.code(), Some(2));
    assert_eq!(icg(&["play", "--graph", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(icg(&["exact", "--family", "path", "--params", "2", "--k-range", "x"]).status.code(), Some(2));
    assert_eq!(icg(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn play_from_a_graph_file_with_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k13.txt");
    std::fs::write(&path, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let o = icg(&["play", "--graph", path.to_str().unwrap(), "--theorem-bound", "--bob", "random", "--seed", "3", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let transcript = moves_and_outcome(&stdout(&o));
    assert_eq!(transcript.0, 6);
    assert!(transcript.1.contains("\"alice_wins\""));
}

fn moves_and_outcome(text: &str) -> (usize, String) {
    let moves = text.lines().filter(|l| l.contains("\"type\":\"move\"")).count();
    (moves, text.lines().find(|l| l.contains("\"type\":\"outcome\"")).unwrap_or_default().to_string())
}

#[test]
fn play_summary_reports_monitors() {
    let o = icg(&["play", "--family", "random_tree", "--params", "15,5", "--bob", "minimax"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.starts_with("alice wins after 28 moves"), "{text}");
    assert!(text.contains("invariant violations: 0"));
}

#[test]
fn decompose_and_chi() {
    let o = icg(&["decompose", "--family", "wheel", "--params", "5", "--json"]);
    let dec: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(dec["forest_count"], 2);
    let o = icg(&["chi-i", "--family", "cycle", "--params", "6"]);
    assert_eq!(stdout(&o), "chi_i = 3\n");
}

#[test]
fn verify_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("forests.toml");
    std::fs::write(
        &config,
        "name = \"forests\"\nseed = 1\nrepetitions = 3\n\n[[families]]\nfamily = \"random_tree\"\nn = 12\nmax_degree = 4\n\n[output]\ndir = \"out\"\n",
    )
    .unwrap();
    let o = icg(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("forests: 9 games"));
    for f in ["games.csv", "summary.csv", "improvement.csv", "invariants.csv", "invariants.json"] {
        assert!(dir.path().join("out").join(f).is_file(), "{f}");
    }
}

#[test]
fn verify_with_edgeless_family_succeeds_empty() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("empty.toml");
    std::fs::write(&config, "name = \"empty\"\nseed = 1\n\n[[families]]\nfamily = \"path\"\nn = 1\n").unwrap();
    let out = dir.path().join("reports");
    let o = icg(&["verify", "--config", config.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("empty: 0 games"));
    assert!(out.join("games.csv").is_file());
}
