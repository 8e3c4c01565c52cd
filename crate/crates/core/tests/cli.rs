use std::process::{Command, Output};

fn fibcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibcat"))
        .args(args)
        .env_remove("FIBCAT_FACTORIAL_CAP")
        .env_remove("FIBCAT_NODE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_prints_tsv_and_exits_zero() {
    let o = fibcat(&["count", "--class", "PELL", "--n", "6", "--method", "eco"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n\teco\n0\t1\n1\t1\n2\t2\n3\t5\n4\t12\n5\t29\n6\t70\n");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| fibcat(args).status.code();
    assert_eq!(code(&["count", "--class", "FIB"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["count", "--class", "FIB", "--basis", "123", "--n", "3"]), Some(2));
    assert_eq!(code(&["count", "--basis", "1234567890", "--n", "3"]), Some(2));
    assert_eq!(code(&["count", "--class", "WHAT", "--n", "3"]), Some(3));
    assert_eq!(code(&["count", "--class", "CAT1", "--k", "1", "--n", "3"]), Some(4));
    assert_eq!(code(&["count", "--class", "FIB", "--n", "11", "--method", "brute"]), Some(5));
    assert_eq!(code(&["count", "--class", "CATALAN", "--n", "90", "--method", "gf"]), Some(7));
}

#[test]
fn cap_environment_variables() {
    let o = Command::new(env!("CARGO_BIN_EXE_fibcat"))
        .args(["count", "--class", "FIB", "--n", "6", "--method", "brute"])
        .env("FIBCAT_FACTORIAL_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("factorial cap"));

    let o = Command::new(env!("CARGO_BIN_EXE_fibcat"))
        .args(["count", "--class", "CATALAN", "--n", "9"])
        .env("FIBCAT_NODE_CAP", "1000")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn verify_examples() {
    let o = fibcat(&["verify", "--class", "GFIB", "--k", "4", "--n", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("n\teco\tbrute\trule\tmatrix\tgf\tlabels\tagree\n"));

    let series = |args: &[&str]| -> Vec<String> {
        stdout(&fibcat(args)).lines().skip(1).map(|l| l.split('\t').nth(1).unwrap().to_string()).collect()
    };
    let evf1 = series(&["verify", "--class", "EVF1", "--k", "3", "--n", "8"]);
    let direct = series(&["verify", "--class", "DIRECT", "--k", "3", "--n", "8"]);
    assert_eq!(evf1, direct);
    let cat1 = series(&["verify", "--class", "CAT1", "--k", "3", "--n", "8"]);
    assert_eq!(cat1.join(","), "1,1,2,5,13,34,89,233,610");
}

#[test]
fn verify_above_factorial_cap_skips_brute_force() {
    let o = fibcat(&["verify", "--class", "FIB", "--n", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("n\teco\trule"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("brute force skipped"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let args = ["table", "--k-max", "4"];
    let a = fibcat(&args);
    let b = fibcat(&args);
    assert_eq!(a.stdout, b.stdout);

    let path = std::env::temp_dir().join(format!("fibcat-table-{}.csv", std::process::id()));
    let o = fibcat(&["table", "--k-max", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.starts_with("id,k,basis,sequence,terms\n"));
    assert!(written.contains("GFIB,3,\"123,213,1432\",k-generalized Fibonacci,\"1,1,2,4,7,13,24,44\"\n"));
}

#[test]
fn show_rule_prints_matrix_window() {
    let o = fibcat(&["show-rule", "--class", "CATALAN", "--matrix", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("rscat\n"));
    assert!(text.contains("# matrix truncated to 4x4, exact to n = 3\n"));
}
