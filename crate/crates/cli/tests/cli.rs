use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn tutte(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tutte")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const K3: &str = "V 3\n0 1\n1 2\n0 2\n";

#[test]
fn every_method_on_k3() {
    let f = graph_file(K3);
    let path = f.path().to_str().unwrap();
    for method in ["whitney", "delcon", "forest", "dfs", "bernardi"] {
        let o = tutte(&["tutte", path, "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert_eq!(stdout(&o), "x^2 + x + y\n", "{method}");
    }
    for method in ["gt", "decision", "orientation"] {
        let o = tutte(&["tutte", path, "--method", method]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert_eq!(
            stdout(&o),
            "x^2 + 2*x*w + w^2 + x + w + y + z\nT(x+w, y+z) check: OK\n",
            "{method}"
        );
    }
}

#[test]
fn crapo_reports_partition() {
    let f = graph_file(K3);
    let o = tutte(&["crapo", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with('[')).count(), 3);
    assert!(out.ends_with("PARTITION OK\n"));
}

#[test]
fn verify_all_exit_codes() {
    let looped = graph_file("V 1\n0 0\n");
    let o = tutte(&["verify-all", looped.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("ALL OK\n"));

    // a labelling for which no edge order fixes the DFS pairing
    let paw = graph_file("V 4\n0 1\n0 2\n0 3\n1 2\n");
    let o = tutte(&["verify-all", paw.path().to_str().unwrap(), "--vertex-order", "3,2,1,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL dfs expansion"));
}

#[test]
fn input_errors_exit_two() {
    let bad = graph_file("V 2\n0 1\n0 5\n");
    let o = tutte(&["tutte", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let o = tutte(&["tutte", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(2));
    let loop_graph = graph_file("V 1\n0 0\n");
    let o = tutte(&["tutte", loop_graph.path().to_str().unwrap(), "--method", "bernardi"]);
    assert_eq!(o.status.code(), Some(2));
    let big = graph_file(&format!("V 2\n{}", "0 1\n".repeat(21)));
    let o = tutte(&["tutte", big.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("20"));
}

#[test]
fn structural_commands() {
    let f = graph_file(K3);
    let path = f.path().to_str().unwrap();
    let o = tutte(&["bipartition", path]);
    assert_eq!(
        stdout(&o),
        "{e0,e1} -> {}\n{e0,e2} -> {}\n{e1,e2} -> {e0,e1,e2}\n"
    );
    let o = tutte(&["convolution", path]);
    assert_eq!(stdout(&o), "x^2 + x + y\nCONVOLUTION OK\n");
    let o = tutte(&["orders", path]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("lattice: yes").count(), 3);
    let o = tutte(&["complexes", path, "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["independence"]["h_polynomial"], "x^2 + x + 1");
    assert_eq!(v["nbc"]["f_vector"], serde_json::json!([1, 3, 2]));
}

#[test]
fn options_reach_the_expansions() {
    let k4 = graph_file("V 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let path = k4.path().to_str().unwrap();
    let expected = stdout(&tutte(&["tutte", path]));
    let mut rotation = NamedTempFile::new().unwrap();
    rotation
        .write_all(b"0: (2,0) (0,0) (1,0)\nroot 3 2\n")
        .unwrap();
    let o = tutte(&["tutte", path, "--method", "bernardi", "--rotation", rotation.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), expected);
    let o = tutte(&["tutte", path, "--method", "decision", "--seed", "11"]);
    assert!(stdout(&o).ends_with("check: OK\n"));
    let o = tutte(&["tutte", path, "--method", "orientation", "--flip", "0,5"]);
    assert!(stdout(&o).ends_with("check: OK\n"));
    let o = tutte(&["tutte", path, "--method", "dfs", "--vertex-order", "3,1,0,2"]);
    assert_eq!(stdout(&o), expected);
    let o = tutte(&["tutte", path, "--method", "dfs", "--vertex-order", "0,0,1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corpus_round_trips_through_the_parser() {
    let o = tutte(&["corpus", "--max-vertices", "3", "--max-edges", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let f = graph_file(&stdout(&o));
    let o = tutte(&["tutte", f.path().to_str().unwrap(), "--method", "delcon", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let count = stdout(&o).lines().count();
    assert!(count > 10, "{count}");
    let o = tutte(&["corpus", "--max-vertices", "4", "--max-edges", "6", "--simple"]);
    assert_eq!(stdout(&o).matches('V').count(), 10);
}

#[test]
fn several_graphs_in_one_file() {
    let f = graph_file("# two graphs\nV 2\n0 1\n\nV 1\n0 0\n");
    let o = tutte(&["tutte", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o), "# graph 0\nx\n# graph 1\ny\n");
}
