use std::path::Path;
use std::process::{Command, Output};

use balcover_core::coverage::{brute_force_mc, CoverageInstance, Solution};
use balcover_core::generators::random_coverage;
use balcover_core::rng::stream_rng;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balcover")).args(args).current_dir(dir).output().expect("binary runs")
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = run(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn divide_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "triangulated-grid", "--width", "30", "--height", "20", "--out", "g.txt"]);
    for (mode, rule) in [("rf", "closed"), ("uniform", "uniform")] {
        ok(d, &["divide", "--graph", "g.txt", "--r", "16", "--mode", mode, "--out", "d.txt"]);
        let rep = ok(d, &["verify", "--graph", "g.txt", "--division", "d.txt", "--rule", rule, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(rep.trim()).unwrap();
        assert_eq!(v["valid"], true, "{rep}");
    }
    ok(d, &["generate", "grid", "--width", "40", "--height", "40", "--coloring", "random", "--weights", "1,9", "--seed", "2", "--out", "c.txt"]);
    ok(d, &["divide", "--graph", "c.txt", "--r", "16", "--mode", "two-color", "--q", "2", "--out", "tc.txt"]);
    ok(d, &["verify", "--graph", "c.txt", "--division", "tc.txt", "--rule", "any"]);
}

#[test]
fn error_categories_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "grid", "--width", "10", "--height", "10", "--out", "g.txt"]);

    let window = run(d, &["divide", "--graph", "g.txt", "--r", "4", "--mode", "uniform"]);
    assert_eq!(code(&window), 3);
    assert!(stderr(&window).starts_with("error[window]"), "{}", stderr(&window));

    let limit = run(d, &["divide", "--graph", "g.txt", "--r", "30", "--oracle", "exhaustive"]);
    assert_eq!(code(&limit), 4);
    assert!(stderr(&limit).starts_with("error[size-limit]"));

    std::fs::write(d.join("bad.txt"), "not a graph\n").unwrap();
    let parse = run(d, &["divide", "--graph", "bad.txt", "--r", "16"]);
    assert_eq!(code(&parse), 1);
    assert!(stderr(&parse).starts_with("error[parse]"));

    let missing = run(d, &["divide", "--graph", "nope.txt", "--r", "16"]);
    assert_eq!(code(&missing), 1);
    assert!(stderr(&missing).starts_with("error[io]"));

    ok(d, &["generate", "mc-random", "--seed", "4", "--out", "i.json"]);
    std::fs::write(d.join("s.json"), r#"{"chosen":[0,1,2,3],"coverage":0}"#).unwrap();
    let invariant = run(d, &["verify", "--instance", "i.json", "--solution", "s.json"]);
    assert_eq!(code(&invariant), 2);
}

#[test]
fn solve_exact_and_verify_agree() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "mc-random", "--universe", "20", "--sets", "12", "--k", "3", "--seed", "8", "--out", "i.json"]);
    ok(d, &["exact", "--instance", "i.json", "--out", "opt.json"]);
    ok(d, &["solve", "--instance", "i.json", "--b", "12", "--out", "sat.json"]);
    let opt = Solution::from_json(&std::fs::read_to_string(d.join("opt.json")).unwrap()).unwrap();
    let sat = Solution::from_json(&std::fs::read_to_string(d.join("sat.json")).unwrap()).unwrap();
    assert_eq!(opt.coverage, sat.coverage);

    let report = ok(d, &["solve", "--instance", "i.json", "--b", "2", "--init", "empty", "--out", "s.json", "--trace", "t.txt"]);
    let swaps: usize = report.lines().find_map(|l| l.strip_prefix("swaps ")).unwrap().parse().unwrap();
    assert_eq!(std::fs::read_to_string(d.join("t.txt")).unwrap().lines().count(), swaps);
    ok(d, &["verify", "--instance", "i.json", "--solution", "s.json", "--b", "2"]);
}

#[test]
fn balance_modes_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let mut two = String::from("# a b\n24 2\n");
    for i in 0..24 {
        two += &format!("{}/4 {}/4\n", i % 3, 4 - i % 3);
    }
    std::fs::write(d.join("two.txt"), two).unwrap();
    ok(d, &["balance", "--vectors", "two.txt", "--q", "3", "--out", "p.txt"]);
    ok(d, &["verify", "--vectors", "two.txt", "--partition", "p.txt", "--q", "3"]);

    let mut three = String::from("20 3\n");
    for i in 0..20 {
        three += &format!("{} 0.{} 1/{}\n", i % 2, i % 10, 1 + i % 4);
    }
    std::fs::write(d.join("three.txt"), three).unwrap();
    ok(d, &["balance", "--vectors", "three.txt", "--mode", "steinitz", "--k", "4", "--out", "ps.txt"]);
    ok(d, &["verify", "--vectors", "three.txt", "--partition", "ps.txt"]);

    // a forged certificate is caught by the recomputation
    let text = std::fs::read_to_string(d.join("ps.txt")).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    *lines.last_mut().unwrap() = "99/7";
    std::fs::write(d.join("bad.txt"), lines.join("\n") + "\n").unwrap();
    assert_eq!(code(&run(d, &["verify", "--vectors", "three.txt", "--partition", "bad.txt"])), 2);
}

#[test]
fn bench_rows_match_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = run(d, &["bench", "--seed", "11", "--out", "bench.csv"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let summary = String::from_utf8(out.stdout).unwrap();
    for method in ["greedy", "local-1", "local-2", "local-3"] {
        assert!(summary.lines().any(|l| l.starts_with(method)), "{summary}");
    }

    let mut rdr = csv::Reader::from_path(d.join("bench.csv")).unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 200);
    let mut optima = vec![None; 50];
    for row in &rows {
        let id: usize = row[0].parse().unwrap();
        let opt = *optima[id].get_or_insert_with(|| {
            let inst: CoverageInstance = random_coverage(24, 14, 4, 0.25, &mut stream_rng(11, id as u64));
            brute_force_mc(&inst).unwrap().coverage
        });
        assert_eq!(row[3].parse::<usize>().unwrap(), opt, "instance {id}");
        let coverage: usize = row[2].parse().unwrap();
        assert!(coverage <= opt);
        if row[1].starts_with("local") {
            assert!(2 * coverage >= opt);
        }
    }
}

#[test]
fn replay_finds_swap_that_solve_realises() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(d, &["generate", "mvc-instance", "--width", "12", "--height", "12", "--k", "20", "--seed", "1", "--out", "i.json", "--graph-out", "g.txt"]);
    let inst = CoverageInstance::from_json(&std::fs::read_to_string(d.join("i.json")).unwrap()).unwrap();
    // A crowds the top rows, O spreads over the interior
    let a = Solution::new(&inst, (0..20).collect()).unwrap();
    let o = Solution::new(&inst, (3..11).step_by(2).flat_map(|r| (2..11).step_by(2).map(move |c| r * 12 + c)).collect()).unwrap();
    std::fs::write(d.join("a.json"), a.to_json()).unwrap();
    std::fs::write(d.join("o.json"), o.to_json()).unwrap();

    let text = ok(d, &["replay", "--instance", "i.json", "--graph", "g.txt", "--a", "a.json", "--o", "o.json", "--b", "8", "--r", "8", "--q", "1"]);
    let swap = text.lines().find(|l| l.starts_with("profitable_swap")).expect("profitable swap reported");
    let gain: i64 = swap.split_whitespace().skip_while(|w| *w != "gain").nth(1).unwrap().parse().unwrap();
    assert!(gain > 0);

    let json = ok(d, &["replay", "--instance", "i.json", "--graph", "g.txt", "--a", "a.json", "--o", "o.json", "--b", "8", "--r", "8", "--q", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert!(v.is_object());

    ok(d, &["solve", "--instance", "i.json", "--b", "8", "--start", "a.json", "--work-limit", "2000000", "--trace", "t.txt"]);
    let total: i64 = std::fs::read_to_string(d.join("t.txt"))
        .unwrap()
        .lines()
        .map(|l| l.rsplit(' ').next().unwrap().parse::<i64>().unwrap())
        .sum();
    assert!(total >= gain, "solve gained {total}, replay swap {gain}");
}
