use localsys::goldens::{self, golden_rows, parse_goldens, GroupType};

#[test]
fn every_golden_row_verifies() {
    let report = goldens::verify_all();
    let failures: Vec<_> = report
        .rows
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.row.to_line())
        .collect();
    assert!(failures.is_empty(), "{failures:#?}");
    assert!(report.examples.iter().all(|e| e.passed));
}

#[test]
fn full_tables_have_every_class() {
    for (group, table, reps, classes) in [("F4", GroupType::S4, 4, 5), ("E8", GroupType::S5, 6, 7)] {
        let rows: Vec<_> = goldens::tables(group.parse().unwrap())
            .into_iter()
            .filter(|r| r.row.group_type == table)
            .collect();
        assert_eq!(rows.len(), reps, "{group}");
        for r in rows {
            assert!(r.passed, "{}", r.detail);
            assert_eq!(r.computed.unwrap().classes.len(), classes);
        }
    }
}

#[test]
fn file_round_trips_through_records() {
    let rows = golden_rows();
    let text: String = rows.iter().map(|r| r.to_line() + "\n").collect();
    assert_eq!(parse_goldens(&text).unwrap(), rows);
}
