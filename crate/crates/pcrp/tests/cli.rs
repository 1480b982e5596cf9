use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pcrp(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcrp")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const CHAIN: &str = "pcrp 1\nn 5 s 0 t 4\na 0 1\na 1 2\na 2 3\na 3 4\np 1 3\n";
const THREE_BRANCHES: &str = "pcrp 1\nn 5 s 0 t 4\na 0 1\na 0 2\na 0 3\na 1 4\na 2 4\na 3 4\n";
const DIAMOND_BAD_PAIR: &str = "pcrp 1\nn 4 s 0 t 3\na 0 1\na 0 2\na 1 3\na 2 3\np 1 2\n";

fn with_file(name: &str, text: &str) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join(name), text).unwrap();
    dir
}

#[test]
fn chain_needs_one_path() {
    let dir = with_file("chain.pcrp", CHAIN);
    let out = pcrp(dir.path(), &["solve", "chain.pcrp"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("stage 1pcrp\nk 1\n"), "{text}");
}

#[test]
fn three_branches_need_three_paths() {
    let dir = with_file("b.pcrp", THREE_BRANCHES);
    for extra in [&[][..], &["--exact"][..]] {
        let mut args = vec!["solve", "b.pcrp", "-o", "b.sol"];
        args.extend_from_slice(extra);
        let out = pcrp(dir.path(), &args);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        let stage = if extra.is_empty() { "stage greedy" } else { "stage exact" };
        assert!(text.contains(stage) && text.contains("\nk 3\n"), "{text}");
        let verify = pcrp(dir.path(), &["verify", "b.pcrp", "b.sol"]);
        assert_eq!(verify.status.code(), Some(0));
        assert!(stdout(&verify).starts_with("valid true\n"));
    }
}

#[test]
fn uncoverable_pair_exits_two() {
    let dir = with_file("d.pcrp", DIAMOND_BAD_PAIR);
    let out = pcrp(dir.path(), &["solve", "d.pcrp"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("reason uncoverable pair (1,2)\n"));
    let json = pcrp(dir.path(), &["--json", "solve", "d.pcrp"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["reason"], "uncoverable pair (1,2)");
}

#[test]
fn malformed_input_exits_one_with_line_number() {
    let dir = with_file("bad.pcrp", "pcrp 1\nn 3 s 0 t 2\na 0 9\n");
    let out = pcrp(dir.path(), &["solve", "bad.pcrp"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let out = pcrp(dir.path(), &["stats", "missing.pcrp"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn invalid_solution_exits_two() {
    let dir = with_file("b.pcrp", THREE_BRANCHES);
    fs::write(dir.path().join("b.sol"), "k 1\n0 1 4\n").unwrap();
    let out = pcrp(dir.path(), &["verify", "b.pcrp", "b.sol"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("uncovered_vertices 2 3\n"));
    let out = pcrp(dir.path(), &["verify", "--mode", "pairs-only", "b.pcrp", "b.sol"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn maxrpsp_dp_and_brute_agree() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..10 {
        let seed = seed.to_string();
        let gen = pcrp(dir.path(), &["--seed", &seed, "gen", "random", "-n", "12", "--pairs", "6", "-o", "r.pcrp"]);
        assert_eq!(gen.status.code(), Some(0));
        let optimum = |args: &[&str]| -> String {
            let text = stdout(&pcrp(dir.path(), args));
            text.lines().find_map(|l| l.strip_prefix("optimum ")).unwrap().to_string()
        };
        assert_eq!(optimum(&["maxrpsp", "r.pcrp"]), optimum(&["maxrpsp", "--brute", "r.pcrp"]));
    }
}

#[test]
fn witness_is_reported_and_written() {
    let dir = with_file("chain.pcrp", CHAIN);
    let out = pcrp(dir.path(), &["maxrpsp", "chain.pcrp", "--emit-witness", "-o", "w.sol"]);
    let text = stdout(&out);
    assert!(text.contains("optimum 1\n") && text.contains("witness 0 1 2 3 4\n") && text.contains("covered 1 3\n"));
    assert_eq!(fs::read_to_string(dir.path().join("w.sol")).unwrap(), "k 1\n0 1 2 3 4\n");
    let verify = pcrp(dir.path(), &["verify", "--mode", "pairs-only", "chain.pcrp", "w.sol"]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn stats_report() {
    let dir = tempfile::tempdir().unwrap();
    pcrp(dir.path(), &["gen", "serial-blocks", "-n", "30", "-p", "2", "-o", "sb.pcrp"]);
    let text = stdout(&pcrp(dir.path(), &["stats", "sb.pcrp"]));
    assert!(text.contains("vertices 30\n") && text.contains("p 2\n"), "{text}");
    assert!(text.contains("degree_histogram 2 12\n") && text.contains("alternated 12\n"), "{text}");
}

#[test]
fn reductions_from_graph_files() {
    let dir = with_file("k4.graph", "graph 4\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n");
    pcrp(dir.path(), &["gen", "from-3col", "--graph", "k4.graph", "-o", "k4.pcrp"]);
    assert!(fs::read_to_string(dir.path().join("k4.pcrp.map")).unwrap().starts_with("pcrp-map 1\nkind 3col\n"));
    let text = stdout(&pcrp(dir.path(), &["solve", "--exact", "--kmax", "3", "k4.pcrp"]));
    // K4 is not 3-colourable, so no 3-path cover exists
    let k: usize = text.lines().find_map(|l| l.strip_prefix("k ")).unwrap().parse().unwrap();
    assert!(k > 3, "{text}");

    pcrp(dir.path(), &["gen", "from-clique", "--graph", "k4.graph", "--h", "4", "-o", "c.pcrp", "--map", "c.map"]);
    assert!(fs::read_to_string(dir.path().join("c.map")).unwrap().contains("kind clique\n"));
    assert!(stdout(&pcrp(dir.path(), &["maxrpsp", "c.pcrp"])).contains("optimum 6\n"));
}

#[test]
fn cyclic_input_is_collapsed() {
    let dir = with_file("cyc.pcrp", "pcrp 1\nn 4 s 0 t 3\na 0 1\na 1 2\na 2 1\na 2 3\n");
    let text = stdout(&pcrp(dir.path(), &["solve", "cyc.pcrp"]));
    assert!(text.contains("collapsed true\n") && text.contains("paths 0 1 2\n"), "{text}");
}

#[test]
fn timing_only_on_request() {
    let dir = with_file("chain.pcrp", CHAIN);
    assert!(!stdout(&pcrp(dir.path(), &["solve", "chain.pcrp"])).contains("time_ms"));
    assert!(stdout(&pcrp(dir.path(), &["--timing", "solve", "chain.pcrp"])).contains("time_ms"));
}
