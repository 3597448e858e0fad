use std::process::{Command, Output};

fn hgrot(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hgrot")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_prints_the_expansion_last() {
    let o = hgrot(&["expand", "--shape", "2,2/1", "--vars", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("(t1) s(2) + (1 + t1*w2 + t1*w1) s(2,1)"), "{last}");
    assert!(last.ends_with("(w1*w2^2 + t1*w1^2*w2^2) s(2,2,2)"), "{last}");
}

#[test]
fn empty_shape_expands_to_one() {
    let o = hgrot(&["expand", "--shape", "0", "--vars", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().last(), Some("1"));
}

#[test]
fn crystal_dot_has_every_filling() {
    let o = hgrot(&["--format", "dot", "crystal", "--shape", "2,2/1", "--vars", "3"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("digraph"));
    let nodes = out.lines().filter(|l| l.contains("label=") && !l.contains("->")).count();
    assert_eq!(nodes, 71);
}

#[test]
fn newton_reports_lattice_points() {
    let o = hgrot(&["newton", "--shape", "4,2,1", "--vars", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("lattice points: 14"), "{out}");
    assert!(out.contains("SNP: true"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "expand", "--shape", "3,2/1", "--vars", "3"];
    assert_eq!(hgrot(&args).stdout, hgrot(&args).stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(hgrot(&["expand", "--shape", "2,3", "--vars", "2"]).status.code(), Some(2));
    assert_eq!(hgrot(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_suite_passes() {
    let o = hgrot(&["verify", "tables", "--max-cells", "4", "--max-n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
