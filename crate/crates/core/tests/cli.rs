use std::fs;
use std::path::Path;
use std::process::Command;

use mutvis::families::random_block_graph;
use mutvis::format::{CertificateFile, EdgeListFile};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn mutvis(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let r = mutvis(dir, args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn header(dir: &Path, file: &str) -> String {
    let text = fs::read_to_string(dir.join(file)).unwrap();
    text.lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .to_string()
}

#[test]
fn gen_writes_headers() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "7", "--out", "c7.el"],
    );
    assert_eq!(header(d, "c7.el"), "7 7");
    let out = ok(
        d,
        &[
            "gen",
            "--family",
            "subdivided-star",
            "--legs",
            "3",
            "--subdivisions",
            "3",
            "--out",
            "t.el",
        ],
    );
    assert!(out.contains("n=13 m=12"));
    assert_eq!(header(d, "t.el"), "13 12");

    fs::write(
        d.join("recipe.txt"),
        "# C4\nstart\ntrue-twin 0\nfalse-twin 0\nfalse-twin 1\n",
    )
    .unwrap();
    ok(
        d,
        &[
            "gen",
            "--family",
            "cograph",
            "--recipe",
            "recipe.txt",
            "--out",
            "c4.el",
        ],
    );
    let g = EdgeListFile::parse(&fs::read_to_string(d.join("c4.el")).unwrap())
        .unwrap()
        .graph;
    assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);

    assert_eq!(mutvis(d, &["gen", "--family", "cycle", "--n", "2"]).code, 2);
    assert_eq!(mutvis(d, &["gen", "--family", "nonsense"]).code, 2);
}

#[test]
fn gen_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let a = ok(
        d,
        &[
            "gen",
            "--family",
            "random-block",
            "--n",
            "7",
            "--seed",
            "11",
        ],
    );
    let b = ok(
        d,
        &[
            "gen",
            "--family",
            "random-block",
            "--n",
            "7",
            "--seed",
            "11",
        ],
    );
    assert_eq!(a, b);
    let parsed = EdgeListFile::parse(&a).unwrap().graph;
    assert_eq!(parsed, random_block_graph(7, 11).unwrap());
}

#[test]
fn product_files() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "path", "--n", "3", "--out", "p3.el"],
    );
    ok(
        d,
        &["gen", "--family", "path", "--n", "2", "--out", "p2.el"],
    );
    ok(
        d,
        &["gen", "--family", "complete", "--n", "2", "--out", "k2.el"],
    );
    let out = ok(d, &["product", "--factors", "p3.el,p2.el", "--out", "p.el"]);
    assert!(out.contains("n=6 m=11"));
    assert!(out.contains("row-major"));
    ok(
        d,
        &["product", "--factors", "k2.el", "k2.el", "--out", "k4.el"],
    );
    assert_eq!(header(d, "k4.el"), "4 6");
    ok(
        d,
        &[
            "product",
            "--factors",
            "p3.el,p2.el,k2.el",
            "--out",
            "three.el",
        ],
    );
    assert!(header(d, "three.el").starts_with("12 "));
    assert_eq!(mutvis(d, &["product", "--factors", "p3.el"]).code, 2);
}

#[test]
fn mu_and_check() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "6", "--out", "c6.el"],
    );
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "5", "--out", "c5.el"],
    );
    ok(
        d,
        &["gen", "--family", "path", "--n", "2", "--out", "p2.el"],
    );
    ok(
        d,
        &["gen", "--family", "complete", "--n", "1", "--out", "k1.el"],
    );
    ok(
        d,
        &["product", "--factors", "c5.el,p2.el", "--out", "prism.el"],
    );

    let out = ok(
        d,
        &[
            "mu", "--graph", "c6.el", "--kind", "tmv", "--out", "c6.json",
        ],
    );
    assert!(out.starts_with("value=0 nodes="), "{out}");
    assert!(out.contains(" time="));
    ok(d, &["check", "--cert", "c6.json"]);

    let out = ok(
        d,
        &[
            "mu",
            "--graph",
            "prism.el",
            "--kind",
            "mv",
            "--threads",
            "3",
            "--out",
            "prism.json",
        ],
    );
    assert!(out.starts_with("value=6 "));
    let cert =
        CertificateFile::from_json(&fs::read_to_string(d.join("prism.json")).unwrap()).unwrap();
    assert_eq!(cert.size, 6);
    assert_eq!(cert.product_tuples.as_ref().unwrap().len(), 6);
    assert_eq!(cert.solver.threads, Some(3));
    ok(d, &["check", "--graph", "prism.el", "--cert", "prism.json"]);

    assert!(ok(d, &["mu", "--graph", "k1.el"]).starts_with("value=1 "));
    assert!(ok(d, &["mu", "--graph", "c5.el", "--method", "brute"]).starts_with("value=3 "));

    // a claimed tmv singleton in C5 fails, the empty set passes
    fs::write(
        d.join("bad.json"),
        r#"{"graph":{"file":"c5.el"},"kind":"tmv","set":[0],"size":1,"verified":true}"#,
    )
    .unwrap();
    assert_eq!(mutvis(d, &["check", "--cert", "bad.json"]).code, 1);
    fs::write(
        d.join("empty.json"),
        r#"{"graph":{"file":"c5.el"},"kind":"tmv","set":[],"size":0,"verified":false}"#,
    )
    .unwrap();
    assert_eq!(mutvis(d, &["check", "--cert", "empty.json"]).code, 0);
    fs::write(
        d.join("range.json"),
        r#"{"graph":{"file":"c5.el"},"kind":"mv","set":[9],"size":1,"verified":true}"#,
    )
    .unwrap();
    assert_eq!(mutvis(d, &["check", "--cert", "range.json"]).code, 2);
    fs::write(d.join("junk.json"), "not json").unwrap();
    assert_eq!(mutvis(d, &["check", "--cert", "junk.json"]).code, 2);
}

#[test]
fn budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "path", "--n", "6", "--out", "p6.el"],
    );
    ok(
        d,
        &["product", "--factors", "p6.el,p6.el", "--out", "grid.el"],
    );
    let r = mutvis(
        d,
        &[
            "mu",
            "--graph",
            "grid.el",
            "--node-budget",
            "50",
            "--out",
            "partial.json",
        ],
    );
    assert_eq!(r.code, 3);
    assert!(r.stdout.contains("exact=false"));
    let cert =
        CertificateFile::from_json(&fs::read_to_string(d.join("partial.json")).unwrap()).unwrap();
    assert_eq!(cert.solver.exact, Some(false));
    assert!(cert.verified);
    ok(d, &["check", "--cert", "partial.json"]);
}

#[test]
fn disconnected_graph_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(d.join("two.el"), "# two isolated vertices\n2 0\n").unwrap();
    let r = mutvis(d, &["mu", "--graph", "two.el"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("disconnected"));
    fs::write(d.join("broken.el"), "3 2\n0 1\n").unwrap();
    assert_eq!(mutvis(d, &["mu", "--graph", "broken.el"]).code, 2);
}

#[test]
fn constructions_verify() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "path", "--n", "3", "--out", "p3.el"],
    );
    ok(
        d,
        &["gen", "--family", "path", "--n", "5", "--out", "p5.el"],
    );
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "9", "--out", "c9.el"],
    );
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "4", "--out", "c4.el"],
    );
    ok(
        d,
        &[
            "gen",
            "--family",
            "random-block",
            "--n",
            "8",
            "--seed",
            "3",
            "--out",
            "block.el",
        ],
    );
    ok(
        d,
        &[
            "gen", "--family", "star", "--leaves", "3", "--out", "star.el",
        ],
    );

    let cases: &[(&[&str], &str)] = &[
        (&["--theorem", "thm4.4", "--dims", "5,6"], "size=18"),
        (&["--theorem", "thm5.1", "--graph", "c9.el"], "size=9"),
        (
            &["--theorem", "cor4.5", "--factors", "p3.el,p3.el"],
            "size=8",
        ),
        (
            &["--theorem", "cor4.5", "--factors", "star.el,p3.el"],
            "size=11",
        ),
        (
            &["--theorem", "thm4.1", "--factors", "p3.el,p5.el"],
            "size=12",
        ),
        (
            &[
                "--theorem",
                "thm4.1",
                "--factors",
                "p3.el,p5.el",
                "--sets",
                "0;0,4",
            ],
            "size=9",
        ),
        (
            &["--theorem", "cor4.2", "--factors", "p3.el,p3.el,p3.el"],
            "size=26",
        ),
        (
            &["--theorem", "thm4.6", "--factors", "c9.el,p3.el"],
            "size=6",
        ),
        (
            &["--theorem", "thm5.4", "--graph", "block.el"],
            "verified=true",
        ),
        (
            &["--theorem", "blockmu", "--graph", "block.el"],
            "verified=true",
        ),
    ];
    for (i, (args, want)) in cases.iter().enumerate() {
        let cert = format!("c{i}.json");
        let mut full = vec!["construct"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--out", &cert]);
        let out = ok(d, &full);
        assert!(out.contains(want), "{args:?}: {out}");
        ok(d, &["check", "--cert", &cert]);
    }

    let r = mutvis(d, &["construct", "--theorem", "thm5.4", "--graph", "c4.el"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a block graph"));
    let r = mutvis(
        d,
        &[
            "construct",
            "--theorem",
            "cor4.5",
            "--factors",
            "c4.el,p3.el",
        ],
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("universal vertex"));
    let r = mutvis(
        d,
        &[
            "construct",
            "--theorem",
            "thm4.1",
            "--factors",
            "p3.el,p5.el",
            "--sets",
            "0,1;0,4",
        ],
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("not a feasible tmv set"));
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        d,
        &["gen", "--family", "cycle", "--n", "5", "--out", "c5.el"],
    );
    let dot = ok(d, &["export", "--graph", "c5.el", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 5);
    assert_eq!(dot.matches(" -- ").count(), 5);

    ok(d, &["mu", "--graph", "c5.el", "--out", "c5.json"]);
    let dot = ok(d, &["export", "--graph", "c5.el", "--highlight", "c5.json"]);
    assert_eq!(dot.matches("highlight=true").count(), 3);

    ok(
        d,
        &["gen", "--family", "path", "--n", "2", "--out", "p2.el"],
    );
    ok(
        d,
        &["product", "--factors", "c5.el,p2.el", "--out", "prism.el"],
    );
    let dot = ok(d, &["export", "--graph", "prism.el"]);
    assert!(dot.contains("label=\"(4,1)\""));
}

#[test]
fn tables() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = ok(
        d,
        &["table", "--experiment", "cycle-prism", "--format", "csv"],
    );
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "n,formula,solver,match");
    assert_eq!(
        &rows[1..],
        [
            "3,6,6,true",
            "4,6,6,true",
            "5,6,6,true",
            "6,7,7,true",
            "7,7,7,true",
            "8,8,8,true"
        ]
    );

    let out = ok(d, &["table", "--experiment", "grid-2d", "--format", "csv"]);
    assert_eq!(
        out.lines().skip(1).filter(|l| l.ends_with(",true")).count(),
        9
    );

    let out = ok(d, &["table", "--experiment", "grid-3d"]);
    assert!(out.contains("3x3x3"));

    for experiment in ["block-prism", "cograph-audit", "cactus-audit"] {
        let out = ok(
            d,
            &[
                "table",
                "--experiment",
                experiment,
                "--count",
                "8",
                "--format",
                "csv",
            ],
        );
        assert_eq!(out.lines().count(), 9, "{experiment}");
        assert!(
            out.lines().skip(1).all(|l| l.ends_with(",true")),
            "{experiment}: {out}"
        );
    }

    let out = ok(
        d,
        &[
            "table",
            "--experiment",
            "prism-open-question",
            "--count",
            "6",
            "--format",
            "csv",
        ],
    );
    assert!(out.lines().skip(1).all(|l| l.ends_with(",true")));
    assert_eq!(mutvis(d, &["table", "--experiment", "nope"]).code, 2);
}
