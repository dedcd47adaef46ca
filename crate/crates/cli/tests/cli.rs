use bkcolor_core::graph::families::*;
use bkcolor_core::{emit_graph6, Graph};
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bkcolor(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bkcolor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn k10_minus_edge() -> Graph {
    complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 1, 2])
}

#[test]
fn classify_flags_and_errors() {
    let input = format!("{}\n{}\nnot graph6\n", emit_graph6(&cycle(5)), emit_graph6(&cycle(7)));
    let out = bkcolor(&["classify"], &input);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!((lines[0]["h_free"].as_bool(), lines[0]["r_free"].as_bool()), (Some(true), Some(true)));
    assert_eq!((lines[1]["h_free"].as_bool(), lines[1]["r_free"].as_bool()), (Some(false), Some(false)));
    assert!(lines[1]["h_witness"].is_array() && lines[1]["r_witness"].is_array());
    assert_eq!(lines[2]["line"], 3);
    assert_eq!(bkcolor(&["classify", "--strict"], &input).status.code(), Some(2));
}

#[test]
fn edge_list_input() {
    let out = bkcolor(&["classify"], "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    assert_eq!(json_lines(&out)[0]["graph6"], emit_graph6(&cycle(5)));
}

#[test]
fn color_counts() {
    let cases =
        [(complete(10), 10), (k10_minus_edge(), 9), (complete_multipartite(&[1, 1, 1, 1, 1, 1, 1, 2, 2]), 9)];
    let input: String = cases.iter().map(|(g, _)| emit_graph6(g) + "\n").collect();
    let out = bkcolor(&["color", "--class", "h"], &input);
    assert_eq!(out.status.code(), Some(0));
    for (line, (_, want)) in json_lines(&out).iter().zip(&cases) {
        assert_eq!(line["colors_used"].as_u64(), Some(*want));
    }
}

#[test]
fn oracle_values() {
    let input =
        [cycle(5), petersen(), complete(10)].iter().map(|g| emit_graph6(g) + "\n").collect::<String>();
    let out = bkcolor(&["oracle", "--what", "both"], &input);
    let got: Vec<_> = json_lines(&out).iter().map(|l| (l["chi"].as_u64(), l["omega"].as_u64())).collect();
    assert_eq!(got, [(Some(3), Some(2)), (Some(3), Some(2)), (Some(10), Some(10))]);
}

fn verify(graph: &Graph, trace: &str, dir: &Path) -> Output {
    let path = dir.join("trace.txt");
    std::fs::write(&path, trace).unwrap();
    bkcolor(&["verify", &emit_graph6(graph), "--trace", path.to_str().unwrap()], "")
}

#[test]
fn verify_traces() {
    let dir = tempfile::tempdir().unwrap();
    let template = dir.path().join("k10-{}.trace");
    let k10 = complete(10);
    let out = bkcolor(&["color", "--trace", template.to_str().unwrap()], &(emit_graph6(&k10) + "\n"));
    assert_eq!(out.status.code(), Some(0));
    let trace = std::fs::read_to_string(dir.path().join("k10-0.trace")).unwrap();

    let pass = verify(&k10, &trace, dir.path());
    assert_eq!(pass.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&pass.stdout).starts_with("PASS colors=10"));

    // give vertex 9 the color of vertex 0
    let first = trace.lines().find(|l| l.starts_with("assign 0 ")).unwrap();
    let color0 = first.split_whitespace().nth(2).unwrap();
    let tampered: String = trace
        .lines()
        .map(|l| if l.starts_with("assign 9 ") { format!("assign 9 {color0}\n") } else { format!("{l}\n") })
        .collect();
    let fail = verify(&k10, &tampered, dir.path());
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8_lossy(&fail.stdout);
    assert!(text.starts_with("FAIL") && text.contains("edge 0-9"), "{text}");

    let empty = verify(&cycle(5), "", dir.path());
    assert_eq!(empty.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&empty.stdout).contains("uncolored"));

    let malformed = verify(&k10, "schema BASE\nassign 0\n", dir.path());
    assert_eq!(malformed.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("line 2"));
}

#[test]
fn verify_coloring_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.col");
    std::fs::write(&path, "1 2 1 2 3\n").unwrap();
    let c5 = emit_graph6(&cycle(5));
    let p = path.to_str().unwrap();
    assert_eq!(bkcolor(&["verify", &c5, "--coloring", p, "--budget", "3"], "").status.code(), Some(0));
    // the default budget max(ω, Δ−1) = 2 is below χ(C5)
    assert_eq!(bkcolor(&["verify", &c5, "--coloring", p], "").status.code(), Some(1));
}

#[test]
fn hunt_skips_low_degree() {
    let out = bkcolor(&["hunt"], &(emit_graph6(&cycle(5)) + "\n"));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["verdict"], "SKIPPED_DELTA");
    assert!(String::from_utf8_lossy(&out.stderr).contains("SKIPPED_DELTA 1"));
}

fn generated(class: &str, count: &str) -> String {
    let out = bkcolor(&["gen", "--class", class, "--count", count, "--seed", "11"], "");
    assert_eq!(out.status.code(), Some(0));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_is_deterministic() {
    assert_eq!(generated("r", "20"), generated("r", "20"));
    assert_eq!(generated("r", "20").lines().count(), 20);
}

#[test]
fn hunt_output_independent_of_jobs() {
    let input = generated("h", "300") + &generated("r", "300");
    let one = bkcolor(&["hunt", "--jobs", "1"], &input);
    let many = bkcolor(&["hunt", "--jobs", "6"], &input);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(one.stderr, many.stderr);
    let lines = json_lines(&one);
    assert_eq!(lines.len(), 600);
    assert!(lines.iter().enumerate().all(|(i, l)| l["index"] == i && l["verdict"] == "BOUND_MET"));
}

#[test]
fn hunt_resume_completes_a_cut_run() {
    let dir = tempfile::tempdir().unwrap();
    let input = generated("h", "200") + "bad line\n" + &generated("r", "100");
    let full = bkcolor(&["hunt"], &input);
    let out = dir.path().join("hunt.jsonl");
    // keep 120 whole lines and half of the next
    let text = String::from_utf8(full.stdout.clone()).unwrap();
    let cut: usize = text.lines().take(120).map(|l| l.len() + 1).sum::<usize>() + 20;
    std::fs::write(&out, &text[..cut]).unwrap();
    let resumed = bkcolor(&["hunt", "--out", out.to_str().unwrap(), "--resume"], &input);
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), text);
    assert!(String::from_utf8_lossy(&resumed.stderr).contains("graphs 180"));
    assert_eq!(bkcolor(&["hunt", "--strict"], &input).status.code(), Some(2));
}

#[test]
fn enumerate_small_orders() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| {
            String::from_utf8(bkcolor(&["enumerate", &n.to_string()], "").stdout).unwrap().lines().count()
        })
        .collect();
    assert_eq!(counts, [1, 2, 4, 11, 34]);
    let connected = bkcolor(&["enumerate", "5", "--connected"], "");
    assert_eq!(String::from_utf8_lossy(&connected.stdout).lines().count(), 21);
}
