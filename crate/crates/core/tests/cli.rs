use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sumfree(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sumfree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sumfree");
    if let Some(input) = stdin {
        child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    }
    child.wait_with_output().expect("wait for sumfree")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const A0: &str = "(8/177,4/59)|(28/177,14/59)|(2/3,1)";

#[test]
fn construct_then_measure_round_trips() {
    let o = sumfree(&["construct", "a0"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), A0);
    let o = sumfree(&["measure", "-"], Some(&stdout(&o)));
    assert_eq!(stdout(&o).trim(), "77/177");
}

#[test]
fn every_family_member_verifies() {
    for i in 1..=7 {
        let name = format!("a{i}");
        let set = stdout(&sumfree(&["construct", &name], None));
        let o = sumfree(&["verify", "--k", "3", set.trim()], None);
        assert_eq!(o.status.code(), Some(0), "{name}: {set}");
    }
}

#[test]
fn verify_reports_witness_and_exit_one() {
    let o = sumfree(&["--format", "records", "verify", "-k", "3", "(0,1)"], None);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "verdict\tk=3\tnot_sum_free\t1/2\t1/2\t1/3");
}

#[test]
fn parse_error_has_position_and_exit_two() {
    let o = sumfree(&["measure", "(0,1)|[2,x]"], None);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("byte 9"), "{err}");
}

#[test]
fn set_from_file() {
    let dir = std::env::temp_dir().join(format!("sumfree-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a0.txt");
    std::fs::write(&path, A0).unwrap();
    let arg = format!("@{}", path.display());
    let o = sumfree(&["extremal", &arg], None);
    assert!(o.status.success());
    assert!(stdout(&o).contains("containers: 1,2,3,4,5,6,7"), "{}", stdout(&o));
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn trace_records_are_exact() {
    let o = sumfree(&["--format", "records", "trace", A0], None);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("value\ta\t8/177"));
    assert!(out.contains("value\tr\t14/59"));
    assert!(out.contains("value\tb\t4/59"));
    assert!(out.contains("value\tbound\t77/177"));
    for line in out.lines().filter(|l| l.starts_with("check\t")) {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), 6, "{line}");
        assert_eq!(fields[5], "pass", "{line}");
    }
}

#[test]
fn lemmas_require_unit_sup_unless_rescaled() {
    let set = "(4/9,2/3)";
    assert_eq!(sumfree(&["lemmas", set], None).status.code(), Some(2));
    assert_eq!(sumfree(&["lemmas", "--rescale", set], None).status.code(), Some(0));
}

#[test]
fn discrete_and_density() {
    let o = sumfree(&["discrete", "max", "-n", "23", "-k", "3", "--all"], None);
    let out = stdout(&o);
    assert!(out.contains("max_size        12"));
    assert!(out.contains("extremal_count  1"));
    assert!(out.contains("{1,3,5,7,9,11,13,15,17,19,21,23}"));
    let o = sumfree(&["--format", "records", "density", "-k", "4", "-n", "10"], None);
    assert!(stdout(&o).contains("value\tcg_density\t63/110"));
    assert_eq!(sumfree(&["discrete", "max", "-n", "90", "-k", "3"], None).status.code(), Some(2));
}

#[test]
fn gen_is_seed_deterministic_and_sum_free() {
    let a = stdout(&sumfree(&["gen", "--seed", "42"], None));
    let b = stdout(&sumfree(&["gen", "--seed", "42"], None));
    assert_eq!(a, b);
    assert_eq!(sumfree(&["verify", "-k", "3", a.trim()], None).status.code(), Some(0));
}
