use std::path::PathBuf;
use std::process::{Command, Output};

fn sep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sep"))
        .args(args)
        .env_remove("SEP_MAX_N")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const EXAMPLE: &str = "5 7;0 1;1 2;2 3;3 4;4 0;1 3;2 4";

#[test]
fn count_example_graph() {
    for method in ["oracle", "decomposition"] {
        let o = sep(&["count", "--edges", EXAMPLE, "--method", method]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "22\n");
    }
    let o = sep(&["count", "--edges", EXAMPLE, "--method", "formula"]);
    assert_eq!(o.status.code(), Some(1));
    let o = sep(&["count", "--edges", EXAMPLE, "--method", "domination"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn count_k4_every_method() {
    for method in ["oracle", "decomposition", "domination", "formula"] {
        let o = sep(&["count", "--graph6", "C~", "--method", method]);
        assert_eq!(stdout(&o), "14\n", "{method}");
    }
}

#[test]
fn count_from_files() {
    let edges = scratch(
        "example.txt",
        "# example\n5 7\n0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n2 4\n",
    );
    let o = sep(&["count", "--file", edges.to_str().unwrap()]);
    assert_eq!(stdout(&o), "22\n");
    let g6 = scratch("pair.g6", ">>graph6<<A_\nC~\n");
    let o = sep(&["count", "--file", g6.to_str().unwrap()]);
    assert_eq!(stdout(&o), "2\n14\n");
}

#[test]
fn facet_table_mirrors_decomposition() {
    let o = sep(&["facets", "--edges", EXAMPLE, "--subgraphs"]);
    let text = stdout(&o);
    assert!(text.contains("facets 22\n"));
    assert!(text.ends_with("subgraphs 7 total 22\n"));
    let quotients: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| l.split('\t').nth(3).unwrap())
        .collect();
    assert_eq!(quotients.iter().filter(|q| **q == "K_{2,2}").count(), 1);
    assert_eq!(quotients.iter().filter(|q| **q == "K_{1,2}").count(), 2);
    assert_eq!(quotients.iter().filter(|q| **q == "K_{1,1}").count(), 4);
}

#[test]
fn build_and_bounds() {
    assert_eq!(stdout(&sep(&["build", "--suspension", "A_"])), "Bw\n");
    assert_eq!(stdout(&sep(&["build", "--join", "A?", "A?"])), "C]\n");
    assert_eq!(
        stdout(&sep(&["build", "--one-sum", "Bw", "0", "Bw", "0"])),
        "D{c\n"
    );
    assert_eq!(
        stdout(&sep(&["bounds", "--n", "5"])),
        "n=5 parity=odd lower=10 upper=36\n"
    );
    assert_eq!(sep(&["bounds", "--n", "2"]).status.code(), Some(1));
}

#[test]
fn verify_small_orders() {
    let o = sep(&["verify", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("n=4 graphs_checked=6 violations=0"));
    let again = sep(&["verify", "--n", "4", "--jobs", "2"]);
    assert_eq!(stdout(&again), stdout(&o));
    let json = std::env::temp_dir().join(format!("sep-cli-{}-r.json", std::process::id()));
    let o = sep(&[
        "verify",
        "--n",
        "5",
        "--identities",
        "--json",
        json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("identities n_max=5"));
    let report = std::fs::read_to_string(&json).unwrap();
    assert!(report.contains("\"graphs_checked\": 21"));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(sep(&["count", "--graph6", "B?"]).status.code(), Some(1));
    assert_eq!(sep(&["count", "--graph6", "C~~"]).status.code(), Some(1));
    assert_eq!(sep(&["count"]).status.code(), Some(1));
    assert_eq!(
        sep(&["count", "--graph6", "C~", "--edges", "2 1;0 1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sep(&["verify", "--n", "8"]).status.code(), Some(1));
    assert_eq!(sep(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sep(&["--help"]).status.code(), Some(0));
    let mixed = scratch("mixed.g6", "C~\nC?\n");
    let o = sep(&["verify", "--graph6-file", mixed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("input_error C? graph is disconnected"));
}

#[test]
fn generate_counts() {
    for (n, expected) in [(3, 2), (4, 6), (5, 21)] {
        let o = sep(&["generate", "--n", &n.to_string(), "--graph6"]);
        assert_eq!(stdout(&o).lines().count(), expected);
    }
    let o = sep(&["generate", "--n", "3"]);
    assert_eq!(stdout(&o), "3 2;0 2;1 2\n3 3;0 1;0 2;1 2\n");
}
