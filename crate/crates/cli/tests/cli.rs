use std::process::{Command, Output};

fn census(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_census"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cubic_row() {
    let o = census("census cubic --trace 6");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(
        lines.next().unwrap(),
        "command,params,count,main_term,error_bound_approx,lower_approx,upper_approx,within_bound"
    );
    assert_eq!(lines.next().unwrap(), "census cubic,trace=6;variant=strict,16,81/5,432.000000,,,true");
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed_ms="));
}

#[test]
fn attainable_row() {
    let o = census("attainable --n 3 --trace 6");
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("attainable,n=3;trace=6,39,"));
}

#[test]
fn json_mirrors_csv() {
    let o = census("disc bounded --a 3 --b 1 --d 100 --format json");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v[0];
    assert_eq!(row["count"], "3");
    assert_eq!(row["params"]["d"], "100");
    assert_eq!(row["within_bound"], false);
    assert!(row["main_term"].is_null());
}

#[test]
fn exit_codes() {
    assert_eq!(census("census cubic --trace 10001").status.code(), Some(1));
    assert_eq!(census("census cubic --trace 6 --bogus").status.code(), Some(1));
    assert_eq!(census("frobnicate").status.code(), Some(1));
    assert_eq!(census("disc bounded --a 3 --b 1 --d 100 --check").status.code(), Some(2));
    assert_eq!(census("disc bounded --a 10 --b 5 --d 1000 --check").status.code(), Some(0));
    assert_eq!(census("attainable --n 3 --trace 6 --bseq 1/2").status.code(), Some(1));
    assert_eq!(census("--help").status.code(), Some(0));
}

#[test]
fn negative_arguments_parse() {
    let o = census("disc almostprime --h 10 --a 0 --b -1");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(",21,"));
}

#[test]
fn sieve_range_is_inclusive() {
    let o = census("sieve quad --a 1 --b 0 --c -2 --x 1 --y 10000 --z 7");
    assert!(stdout(&o).lines().nth(1).unwrap().contains(",9419,"));
}

#[test]
fn worker_count_does_not_change_output() {
    for cmd in ["census cubic --trace 40", "disc squarefree --trace 12", "census robinson --n 4 --trace 7"] {
        let one = census(&format!("{cmd} --workers 1"));
        for w in [2, 8] {
            assert_eq!(one.stdout, census(&format!("{cmd} --workers {w}")).stdout, "{cmd}");
        }
    }
}

#[test]
fn verify_suite_rows() {
    let o = census("verify --suite maclaurin");
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.starts_with("verify,criterion=")));
    assert!(rows[0].ends_with("true"));
    assert_eq!(census("verify --suite maclaurin --check").status.code(), Some(2));
}
