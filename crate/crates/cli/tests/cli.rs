use std::process::Command;

use latmat::{reducts_via_hyperplanes, Error, GeometricLattice, TransversalMatroid};
use latmat_cli::*;

const EXAMPLE3: &str = include_str!("data/three_blocks.json");
const EXAMPLE1: &str = include_str!("data/uncovered.json");
const TABLE1: &str = include_str!("data/weather.csv");

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn lattice_text_for_three_block_covering() {
    let out = cmd_lattice(EXAMPLE3, LatticeOptions::default());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.is_empty());
    assert!(out.stdout.contains("flats: 12\n"));
    assert!(out.stdout.contains("atoms: {1} {2} {3} {4,5}\n"));
    assert!(out
        .stdout
        .contains("coatoms: {1,2} {1,3} {1,4,5} {2,3} {2,4,5} {3,4,5}\n"));
    assert!(!out.stdout.contains("covering statements"));
}

#[test]
fn lattice_for_single_block() {
    let out = cmd_lattice(
        r#"{"universe": ["a"], "blocks": [["a"]]}"#,
        LatticeOptions::default(),
    );
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("flats: 2\n"));
    assert!(out.stdout.contains("  height 0: ∅\n  height 1: {a}\n"));
}

#[test]
fn lattice_warns_for_non_covering() {
    let out = cmd_lattice(EXAMPLE1, LatticeOptions::default());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("warning: not a covering"));
    for k in 1..=4 {
        let line = out
            .stdout
            .lines()
            .find(|l| l.starts_with(&format!("  ({k})")))
            .unwrap();
        assert!(line.ends_with(": false"), "{line}");
    }
}

#[test]
fn lattice_json_round_trips() {
    let out = cmd_lattice(
        EXAMPLE3,
        LatticeOptions {
            json: true,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_OK);
    let doc: LatticeJson = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&doc).unwrap() + "\n",
        out.stdout
    );
    assert_eq!(doc.flats.len(), 12);
    assert_eq!(doc.rank, 3);
    assert_eq!(doc.atoms.len(), 4);
    assert_eq!(doc.coatoms.len(), 6);
    assert_eq!(doc.flats[doc.top].members.len(), 5);
    assert!(doc.flats[doc.bottom].members.is_empty());
    assert!(doc.theorem.is_covering && doc.theorem.singleton_closures_are_atoms);

    let family = parse_covering(EXAMPLE3).unwrap();
    let lattice = GeometricLattice::build(&TransversalMatroid::new(family));
    assert_eq!(lattice_json(&lattice).unwrap(), doc);
    let edges: usize = doc.flats.iter().map(|f| f.covers.len()).sum();
    assert_eq!(edges, lattice.cover_count());
}

#[test]
fn lattice_dot() {
    let out = cmd_lattice(
        EXAMPLE3,
        LatticeOptions {
            dot: true,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("digraph lattice {"));
    assert_eq!(out.stdout.matches("[label=").count(), 12);
    assert_eq!(out.stdout.matches(" -> ").count(), 22);
}

#[test]
fn reducts_for_three_block_covering() {
    let out = cmd_reducts(EXAMPLE3, ReductsOptions::default());
    assert_eq!(out.code, EXIT_OK);
    let tail: Vec<&str> = out
        .stdout
        .lines()
        .skip_while(|l| !l.starts_with("reducts"))
        .collect();
    assert_eq!(
        tail,
        [
            "reducts (7):",
            "  {1,2,3}",
            "  {1,2,4}",
            "  {1,2,5}",
            "  {1,3,4}",
            "  {1,3,5}",
            "  {2,3,4}",
            "  {2,3,5}"
        ]
    );
}

#[test]
fn reducts_for_two_singletons() {
    let out = cmd_reducts(
        r#"{"universe": ["p", "q"], "blocks": [["p"], ["q"]]}"#,
        ReductsOptions {
            json: true,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_OK);
    let doc: ReductsJson = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.reducts, vec![vec!["p".to_string(), "q".to_string()]]);
}

#[test]
fn reducts_json_matches_library_on_generated_files() {
    // Small deterministic generator so the test needs no RNG dependency.
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..30 {
        let n = (next() % 6 + 1) as usize;
        let m = (next() % 4 + 1) as usize;
        let blocks: Vec<Vec<usize>> = (0..m)
            .map(|_| {
                let mask = next() % ((1 << n) - 1) + 1;
                (0..n).filter(|i| mask >> i & 1 == 1).collect()
            })
            .collect();
        let text = serde_json::json!({ "universe": (0..n).collect::<Vec<_>>(), "blocks": blocks })
            .to_string();
        let out = cmd_reducts(
            &text,
            ReductsOptions {
                json: true,
                ..Default::default()
            },
        );
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        let doc: ReductsJson = serde_json::from_str(&out.stdout).unwrap();
        let back = serde_json::to_string_pretty(&doc).unwrap() + "\n";
        assert_eq!(back, out.stdout);

        let matroid = TransversalMatroid::new(parse_covering(&text).unwrap());
        let lib: Vec<Vec<String>> = reducts_via_hyperplanes(&matroid)
            .unwrap()
            .as_slice()
            .iter()
            .map(|&r| {
                matroid
                    .ground()
                    .names_of(r)
                    .iter()
                    .map(|s| s.to_string())
                    .collect()
            })
            .collect();
        assert_eq!(doc.reducts, lib);
    }
}

#[test]
fn infosys_for_weather_table() {
    let out = cmd_infosys(TABLE1, &InfosysOptions::default());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("U/R_a2 = {{x1,x4}, {x2}, {x3}}\n"));
    assert!(out.stdout.contains("A/R0 = {{a1,a3}, {a2}}\n"));
    assert!(out.stdout.contains("condition: holds\n"));
    assert!(out
        .stdout
        .ends_with("reducts (one attribute per R0 block):\n  {a1,a2}\n  {a2,a3}\n"));

    let forced = cmd_infosys(
        TABLE1,
        &InfosysOptions {
            force_brute: true,
            json: true,
            ..Default::default()
        },
    );
    let doc: InfosysJson = serde_json::from_str(&forced.stdout).unwrap();
    assert_eq!(doc.method, "brute-force");
    assert!(doc.condition);
    assert_eq!(doc.reducts, [["a1", "a2"], ["a2", "a3"]]);
    assert_eq!(doc.r0_blocks, vec![vec!["a1", "a3"], vec!["a2"]]);
}

#[test]
fn infosys_one_attribute() {
    let out = cmd_infosys("obj,colour\np,red\nq,blue\n", &InfosysOptions::default());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with(":\n  {colour}\n"));
}

#[test]
fn infosys_condition_failure_falls_back() {
    let table = "U,p,q,r\nx1,0,0,0\nx2,0,1,1\nx3,1,0,2\nx4,1,1,3\n";
    let out = cmd_infosys(table, &InfosysOptions::default());
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("condition: fails\n"));
    assert!(out.stdout.contains("note: the condition fails"));
    assert!(out
        .stdout
        .ends_with("reducts (exhaustive scan):\n  {r}\n  {p,q}\n"));
}

#[test]
fn infosys_decision_column_is_excluded() {
    let table = "U,a1,a2,a3,play\nx1,sunny,hot,high,no\nx2,rain,mild,normal,yes\nx3,rain,cool,normal,yes\nx4,rain,hot,normal,no\n";
    let out = cmd_infosys(
        table,
        &InfosysOptions {
            decision: Some("play".into()),
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(
        out.stdout,
        cmd_infosys(TABLE1, &InfosysOptions::default()).stdout
    );
    let missing = cmd_infosys(
        TABLE1,
        &InfosysOptions {
            decision: Some("nope".into()),
            ..Default::default()
        },
    );
    assert_eq!(missing.code, EXIT_PARSE);
}

#[test]
fn parse_errors_exit_2() {
    let out = cmd_lattice(
        "{\"universe\": [1, 2],\n \"blocks\": [[1,]]}",
        LatticeOptions::default(),
    );
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("line 2, column"), "{}", out.stderr);

    let out = cmd_lattice(
        r#"{"universe": [1], "blocks": [[2]]}"#,
        LatticeOptions::default(),
    );
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("`2`"));

    let out = cmd_reducts(
        r#"{"universe": [1], "blocks": [[]]}"#,
        ReductsOptions::default(),
    );
    assert_eq!(out.code, EXIT_PARSE);

    let ragged = cmd_infosys("U,a,b\nx1,1,2\nx2,1\n", &InfosysOptions::default());
    assert_eq!(ragged.code, EXIT_PARSE);
    assert!(ragged.stderr.contains("line 3"), "{}", ragged.stderr);

    let empty = cmd_infosys("U,a,b\nx1,1,2\nx2,1,\n", &InfosysOptions::default());
    assert_eq!(empty.code, EXIT_PARSE);
    assert!(
        empty.stderr.contains("line 3, column 3"),
        "{}",
        empty.stderr
    );
}

#[test]
fn capacity_guards_exit_4() {
    let out = cmd_infosys(
        TABLE1,
        &InfosysOptions {
            max_attrs: 2,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_CAPACITY);
    assert!(out.stderr.contains("limit is 2"));
    let out = cmd_lattice(
        EXAMPLE3,
        LatticeOptions {
            max_elems: 4,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_CAPACITY);
    let out = cmd_reducts(
        EXAMPLE3,
        ReductsOptions {
            max_elems: 4,
            ..Default::default()
        },
    );
    assert_eq!(out.code, EXIT_CAPACITY);
}

#[test]
fn degenerate_errors_exit_3() {
    assert_eq!(
        exit_code(&Error::Degenerate("rank 0".into())),
        EXIT_DEGENERATE
    );
    assert_eq!(exit_code(&Error::NoHittingSet), EXIT_DEGENERATE);
}

#[test]
fn outputs_are_deterministic() {
    for opts in [
        LatticeOptions::default(),
        LatticeOptions {
            json: true,
            ..Default::default()
        },
        LatticeOptions {
            dot: true,
            ..Default::default()
        },
    ] {
        assert_eq!(cmd_lattice(EXAMPLE3, opts), cmd_lattice(EXAMPLE3, opts));
    }
    let opts = InfosysOptions {
        json: true,
        ..Default::default()
    };
    assert_eq!(cmd_infosys(TABLE1, &opts), cmd_infosys(TABLE1, &opts));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_latmat");
    let run = |args: &[&str]| Command::new(bin).args(args).output().unwrap();

    let out = run(&["reducts", &data("three_blocks.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("reducts (7):"));

    let out = run(&["lattice", "--dot", &data("three_blocks.json")]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["infosys", "--max-attrs", "1", &data("weather.csv")]);
    assert_eq!(out.status.code(), Some(4));

    let out = run(&["lattice", &data("missing.json")]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["lattice", &data("uncovered.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("warning:"));
}
