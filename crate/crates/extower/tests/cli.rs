use std::process::{Command, Output};

use extower::exact::GaussRat;
use extower::lie::LieAlgebraData;

fn extower(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extower"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_f4_passes_with_killing_check() {
    let o = extower(&["verify", "--suite", "f4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS  killing_f4_constants"));
}

#[test]
fn verify_roots_json_reports_f4_type() {
    let o = extower(&["verify", "--suite", "roots", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    let f4 = checks
        .iter()
        .find(|c| c["id"] == "e8r_dynkin_is_F4")
        .unwrap();
    assert_eq!(f4["status"], "pass");
    assert_eq!(
        v["totals"]["total"].as_u64().unwrap() as usize,
        checks.len()
    );
    assert_eq!(v["totals"]["failed"], 0);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        extower(&["verify", "--suite", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(
        extower(&["roots", "--algebra", "g2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        extower(&["table", "--algebra", "e9r"]).status.code(),
        Some(2)
    );
    assert_eq!(extower(&[]).status.code(), Some(2));
}

#[test]
fn roots_text_summaries() {
    let o = extower(&["roots", "--algebra", "e7r"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("18 roots, type C3"));
    assert!(stdout(&extower(&["roots", "--algebra", "f4r"])).contains("2 roots, type A1"));
    assert!(stdout(&extower(&["roots", "--algebra", "e6r"])).contains("6 roots, type A2"));
}

#[test]
fn roots_json_for_e8() {
    let o = extower(&["roots", "--algebra", "e8r", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 48);
    assert_eq!(v["type"], "F4");
    assert_eq!(roots.iter().filter(|r| r["positive"] == true).count(), 24);
    assert_eq!(roots[0]["values"].as_array().unwrap().len(), 4);
    assert_eq!(roots[0]["vector"].as_array().unwrap().len(), 52);
}

#[test]
fn export_round_trips_e8() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8r.json");
    let o = extower(&[
        "export",
        "--algebra",
        "e8r",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let back: LieAlgebraData = serde_json::from_str(&text).unwrap();
    let orig = extower::algebras::Algebra::E8r.data();
    assert_eq!(back.basis.len(), 52);
    assert_eq!(&back, orig);
    let unit = |k: usize| {
        let mut v = vec![GaussRat::zero(); 52];
        v[k] = GaussRat::one();
        v
    };
    for i in 0..52 {
        for j in 0..52 {
            assert_eq!(
                back.bracket(&unit(i), &unit(j)),
                orig.bracket(&unit(i), &unit(j))
            );
        }
    }
}

#[test]
fn export_f4_follows_the_cycle_rule() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f4r.json");
    assert_eq!(
        extower(&[
            "export",
            "--algebra",
            "f4r",
            "--out",
            path.to_str().unwrap()
        ])
        .status
        .code(),
        Some(0)
    );
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 3);
    let constants = v["constants"].as_array().unwrap();
    assert_eq!(constants.len(), 6);
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let c = constants.iter().find(|c| c[0] == i && c[1] == j).unwrap();
        assert_eq!(c[2], k);
        assert_eq!(c[3]["re"], "-1/2");
        assert_eq!(c[3]["im"], "0/1");
    }
}

#[test]
fn export_to_unwritable_path_exits_one() {
    let o = extower(&[
        "export",
        "--algebra",
        "f4r",
        "--out",
        "/nonexistent-dir/sub/out.json",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_f4_and_e6() {
    let f4 = stdout(&extower(&["table", "--algebra", "f4r"]));
    let rows: Vec<Vec<String>> = f4
        .lines()
        .map(|l| l.split('|').map(|c| c.trim().to_string()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[1][2], "-1/2 A3");
    for (k, row) in rows.iter().enumerate().skip(1) {
        assert_eq!(row[k], "0");
    }
    let e6 = stdout(&extower(&["table", "--algebra", "e6r"]));
    let rows: Vec<Vec<String>> = e6
        .lines()
        .map(|l| l.split('|').map(|c| c.trim().to_string()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    let r = rows.iter().position(|r| r[0] == "T(E1-E2)").unwrap();
    let c = rows[0].iter().position(|h| h == "A1").unwrap();
    assert_eq!(rows[r][c], "-1/2 T(F1)");
}
