use std::process::{Command, Output};

fn deltashell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltashell"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> &str {
    std::str::from_utf8(&out.stdout).unwrap()
}

#[test]
fn critical_at_unit_radius() {
    let out = deltashell(&["critical", "--rho", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "rho,branch,a_crit\n1.00000000000,0,2.15879893034\n");
}

#[test]
fn zero_coupling_is_unbound() {
    let out = deltashell(&["solve", "--rho", "1", "--coupling", "0"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "rho,coupling,kappa,status,energy\n1.00000000000,0.00000000000,-1,UNBOUND,\n"
    );
}

#[test]
fn negative_kappa_and_epsilon_accepted() {
    let out = deltashell(&["solve", "--rho", "2", "--coupling", "1.5", "--kappa", "-2"]);
    assert!(out.status.success(), "{:?}", out);
    let out = deltashell(&["compare", "--rho", "1", "--epsilon", "-0.5"]);
    assert!(out.status.success(), "{:?}", out);
}

#[test]
fn compare_row() {
    let out = deltashell(&["compare", "--rho", "1", "--epsilon", "0"]);
    let text = stdout(&out);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[2], "6.18575353022");
    assert_eq!(row[3], "3.36703652557");
    assert!(row[4].parse::<f64>().unwrap().abs() > 1e-3);
}

#[test]
fn sweep_is_byte_identical_across_runs() {
    let args = ["sweep", "--rho", "0.5,1,2,10", "--steps", "41"];
    let a = deltashell(&args);
    let b = deltashell(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 4 * 41);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let out = deltashell(&["sweep", "--rho", "1", "--steps", "5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&deltashell(&["sweep", "--rho", "1", "--steps", "5"])));
}

#[test]
fn csv_round_trips_through_parse() {
    let out = deltashell(&[
        "sweep",
        "--rho",
        "1",
        "--coupling-min",
        "1",
        "--coupling-max",
        "2",
        "--steps",
        "11",
    ]);
    for line in stdout(&out).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 4);
        assert_eq!(f[2], "BOUND");
        let eps: f64 = f[3].parse().unwrap();
        assert!((-1.0..1.0).contains(&eps));
        let again = deltashell(&["solve", "--rho", f[0], "--coupling", f[1]]);
        let energy = stdout(&again)
            .lines()
            .nth(1)
            .unwrap()
            .rsplit(',')
            .next()
            .unwrap()
            .to_owned();
        assert_eq!(energy, f[3]);
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["solve", "--rho", "abc", "--coupling", "1"],
        vec!["solve", "--rho", "1", "--coupling", "1", "--bogus"],
        vec!["sweep", "--rho", "1", "--steps", "1"],
        vec!["sweep", "--rho", "1", "--coupling-min", "2", "--coupling-max", "1"],
        vec!["frobnicate"],
    ] {
        let out = deltashell(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn domain_errors_exit_three() {
    let out = deltashell(&["critical", "--rho", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DEGENERATE_SHELL"));
    let out = deltashell(&["solve", "--rho", "1", "--coupling", "1", "--kappa", "0"]);
    assert_eq!(out.status.code(), Some(3));
}
