use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rainbow-match"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn complement_pair_has_no_matching() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "f.chf");
    assert_eq!(code(&run(&["gen", "complement-pair", "--k", "2", "--out", &f])), 0);
    assert_eq!(code(&run(&["solve", "--family", &f])), 1);
    assert_eq!(code(&run(&["solve", "--family", &f, "--oracle"])), 1);
    assert_eq!(code(&run(&["check", "rainbow", &f])), 0);
}

#[test]
fn cover_is_rainbow() {
    let dir = tempfile::tempdir().unwrap();
    let c = path(dir.path(), "c.chg");
    assert_eq!(code(&run(&["gen", "cover", "--n", "10", "--k", "3", "--s", "2", "--out", &c])), 0);
    let out = run(&["check", "rainbow", &c]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&run(&["check", "proper", &c])), 0);
    // C(10,3) - C(9,3) = 120 - 84 edges, all through vertex 0.
    assert!(fs::read_to_string(&c).unwrap().lines().any(|l| l == "10 3 36"));
    let nu = run(&["nu", "--input", &c]);
    assert_eq!((code(&nu), stdout(&nu).trim()), (0, "1"));
}

#[test]
fn missing_input_is_exit_two() {
    assert_eq!(code(&run(&["solve", "--family", "/nonexistent/missing.chf"])), 2);
    assert_eq!(code(&run(&["prove", "--family", "/nonexistent/missing.chf"])), 2);
    assert_eq!(code(&run(&["nu", "--input", "/nonexistent/h.chg"])), 2);
    assert_eq!(code(&run(&["solve", "--bogus"])), 2);
}

#[test]
fn check_reports_improper_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let h = path(dir.path(), "h.chg");
    fs::write(&h, "3 2 2\n0 1 4\n1 2 4\n").unwrap();
    let out = run(&["check", "proper", &h]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("not properly colored"));
    assert_eq!(code(&run(&["check", "rainbow", &h])), 1);
    fs::write(&h, "3 2 1\n0 x 4\n").unwrap();
    assert_eq!(code(&run(&["check", "proper", &h])), 2);
}

#[test]
fn random_family_solve_and_prove() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "r.chf");
    let args = ["gen", "random", "--n", "24", "--k", "2", "--m", "24", "--members", "2", "--seed", "31", "--coloring", "greedy-proper", "--out", &f];
    assert_eq!(code(&run(&args)), 0);
    let text = fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("# random n=24 k=2 m=24 coloring=greedy_proper seed=31"));

    let w = path(dir.path(), "w.txt");
    assert_eq!(code(&run(&["solve", "--family", &f, "--out", &w])), 0);
    let witness = fs::read_to_string(&w).unwrap();
    assert!(witness.starts_with("picks 2\n"));

    let t = path(dir.path(), "t.log");
    let out = run(&["prove", "--family", &f, "--trace", &t]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("picks 2\n"));
    let log = fs::read_to_string(&t).unwrap();
    assert!(log.lines().next().unwrap().starts_with("0 "));

    // Regenerating with the same seed is byte-identical.
    let g = path(dir.path(), "g.chf");
    let mut again = args.to_vec();
    *again.last_mut().unwrap() = &g;
    assert_eq!(code(&run(&again)), 0);
    assert_eq!(fs::read_to_string(&g).unwrap(), text);
}

#[test]
fn prove_rejects_unmet_hypotheses() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "f.chf");
    assert_eq!(code(&run(&["gen", "complement-pair", "--k", "2", "--out", &f])), 0);
    let out = run(&["prove", "--family", &f]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("precondition"));
}

#[test]
fn json_round_trip_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let j = path(dir.path(), "p.json");
    assert_eq!(code(&run(&["gen", "complement-pair", "--k", "3", "--out", &j])), 0);
    assert!(fs::read_to_string(&j).unwrap().trim_start().starts_with('{'));
    assert_eq!(code(&run(&["solve", "--family", &j])), 1);
}

#[test]
fn oracle_cap_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "f.chf");
    assert_eq!(code(&run(&["gen", "complement-pair", "--k", "3", "--out", &f])), 0);
    let out = bin().args(["solve", "--family", &f, "--oracle"]).env("RAINBOW_MATCH_BRUTE_CAP", "100").output().unwrap();
    assert_eq!(code(&out), 2);
    let out = bin().args(["verify", "counterexample", "--k", "3"]).env("RAINBOW_MATCH_BRUTE_CAP", "100").output().unwrap();
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_subcommands() {
    let out = run(&["verify", "counterexample", "--k", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("found=false"));
    let out = run(&["verify", "tightness", "--n", "24", "--k", "2", "--s", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("edges=23 threshold=23 found=false"));
    assert_eq!(code(&run(&["verify", "tightness", "--n", "3", "--k", "2", "--s", "2"])), 2);

    let dir = tempfile::tempdir().unwrap();
    let cfg = path(dir.path(), "sweep.toml");
    fs::write(
        &cfg,
        "grid = [[24, 2, 2], [12, 2, 1]]\ntrials = 4\ncoloring_mode = \"rainbow\"\nseed = 3\nengine = \"both\"\n",
    )
    .unwrap();
    let csv = path(dir.path(), "r.csv");
    let json = path(dir.path(), "r.json");
    let out = run(&["verify", "sweep", "--config", &cfg, "--out", &csv, "--json", &json]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let table = fs::read_to_string(&csv).unwrap();
    let mut lines = table.lines();
    assert_eq!(lines.next(), Some("n,k,s,seed,engine,edges,found,valid,elapsed_ms"));
    assert_eq!(lines.count(), 2 * 4 * 2);
    assert!(fs::read_to_string(&json).unwrap().contains("\"summary\""));

    fs::write(&cfg, "grid = [[24, 2, 2]]\ntrials = 0\ncoloring_mode = \"rainbow\"\nseed = 3\nengine = \"both\"\n").unwrap();
    assert_eq!(code(&run(&["verify", "sweep", "--config", &cfg, "--out", &csv])), 2);
}
