use std::process::{Command, Output as ProcOutput};

use localsys_cli::Output;

fn run(args: &[&str]) -> ProcOutput {
    Command::new(env!("CARGO_BIN_EXE_localsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Output {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid json")
}

#[test]
fn orbit_counts() {
    for (group, n) in [("G2", 5), ("A1", 2), ("E6", 21), ("F4", 16), ("D4", 12)] {
        let Output::Orbits(l) = json(&["orbits", group]) else {
            panic!()
        };
        assert_eq!(l.orbits.len(), n, "{group}");
    }
    let text = stdout(&["orbits", "E6"]);
    let line = text.lines().find(|l| l.contains("D4(a1) ")).unwrap();
    assert!(line.contains("0 0 2 0 0 / 0"), "{line}");
}

#[test]
fn e6_standard_representation() {
    let Output::Lift(r) = json(&["lift", "E6", "D4(a1)", "w2"]) else {
        panic!()
    };
    assert!(r.descends);
    let cv = r.character.unwrap();
    let values: Vec<_> = cv.classes.iter().map(|c| c.value()).collect();
    assert_eq!(values, [Some(2), Some(-1), Some(0)]);
    assert!(r.identified.unwrap().starts_with("standard"));
}

#[test]
fn f4_sign_like_character() {
    let Output::Lift(r) = json(&["lift", "F4", "F4(a3)", "w2"]) else {
        panic!()
    };
    let cv = r.character.unwrap();
    let values: Vec<_> = cv.classes.iter().map(|c| c.value().unwrap()).collect();
    assert_eq!(values, [1, 1, -1, 1, -1]);
    let by_name = |n: &str| cv.trace_of(n).unwrap().trace.to_string();
    assert_eq!(by_name("A3+~A1"), "-1");
    assert_eq!(by_name("C3(a1)+A1"), "-1");
    assert_eq!(by_name("B4(a1)"), "1");
}

#[test]
fn non_descending_weight_is_not_an_error() {
    let Output::Lift(r) = json(&["lift", "E6", "D4(a1)", "w1+w6"]) else {
        panic!()
    };
    assert!(!r.descends);
    assert!(r.character.is_none());
}

#[test]
fn classical_and_type_a() {
    let Output::Classical(c) = json(&["classical", "5,3"]) else {
        panic!()
    };
    assert_eq!(c.group, "D4");
    assert_eq!(c.lifts.len(), 1 << c.basis.b_tilde.len());
    assert_eq!(c.spin.reps.len(), 2);

    let Output::TypeA(a) = json(&["classical", "--type-a", "4,2"]) else {
        panic!()
    };
    assert_eq!((a.group.as_str(), a.d, a.q), ("A5", 2, 3));
    assert_eq!(a.weights[1], vec![0, 0, 1, 0, 0]);
}

#[test]
fn minimal_lift_is_short() {
    let Output::MinimalLift(m) = json(&["minimal-lift", "E8", "E8(a3)", "w4"]) else {
        panic!()
    };
    assert_eq!(m.found, vec![1, 0, 0, -1, 0, 1, 0, 0]);
    assert_eq!(m.norm.to_string(), "2");
}

#[test]
fn verify_passes() {
    let out = run(&["verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failures"));
}

#[test]
fn json_round_trip() {
    for args in [
        vec!["orbits", "G2"],
        vec!["lift", "G2", "G2(a1)", "w2"],
        vec!["classical", "--epsilon", "1", "4,2"],
        vec!["tables", "G2"],
        vec!["report", "F4"],
    ] {
        let value = json(&args);
        let again: Output = serde_json::from_str(&serde_json::to_string(&value).unwrap()).unwrap();
        assert_eq!(value, again);
    }
}

#[test]
fn csv_has_header() {
    let text = stdout(&["--format", "csv", "lift", "E6", "D4(a1)", "w2"]);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(reader.headers().unwrap().get(4), Some("class"));
    assert_eq!(reader.records().count(), 3);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["orbits", "X9"],
        vec!["orbits", "A0"],
        vec!["lift", "E6", "Z7", "w1"],
        vec!["lift", "E6", "D4(a1)", "w9"],
        vec!["classical", "4,1"],
        vec!["classical", "--epsilon", "1", "3"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}
