//! CLI behavior: exit codes, parse errors with locations, empty documents.

use std::process::Command;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_twoact")
}

fn fixtures(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn exit_codes_distinguish_outcomes() {
    // all checks pass
    let ok = Command::new(exe())
        .args(["validate", "--fixtures", &fixtures("standard.fix")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    // a verification failure
    let bad = Command::new(exe())
        .args(["validate", "--fixtures", &fixtures("bad_s3.fix")])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let report = String::from_utf8(bad.stdout).unwrap();
    assert!(report.contains("interchange"));
    // a parse error
    let dir = std::env::temp_dir();
    let path = dir.join("twoact-cli-broken.fix");
    std::fs::write(&path, "[group X]\ntable\n0 zzz\n").unwrap();
    let parse = Command::new(exe())
        .args(["validate", "--fixtures", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(parse.status.code(), Some(2));
    let err = String::from_utf8(parse.stderr).unwrap();
    assert!(err.contains("line 3"), "parse errors carry a location: {err}");
}

#[test]
fn empty_document_gives_an_empty_passing_report() {
    let dir = std::env::temp_dir();
    let path = dir.join("twoact-cli-empty.fix");
    std::fs::write(&path, "# nothing here\n").unwrap();
    let out = Command::new(exe())
        .args(["validate", "--fixtures", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("\"total\": 0"));
}

#[test]
fn nonsheaf_fixture_fails_sheaf_check_with_witnesses() {
    let out = Command::new(exe())
        .args([
            "sheaf-check",
            "--fixtures",
            &fixtures("nonsheaf.fix"),
            "--presheaf",
            "NS",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("not an isomorphism"));
    assert!(report.contains("not injective on objects"));
}

#[test]
fn bounds_overrides_are_enforced() {
    let out = Command::new(exe())
        .args([
            "equivalence",
            "--fixtures",
            &fixtures("standard.fix"),
            "--group",
            "DZ3",
            "--bounds",
            "max_group_order=2",
        ])
        .output()
        .unwrap();
    // the build is rejected by the bound, reported as a failing check
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("bound"));
}

#[test]
fn sheaf_check_passes_on_derived_presheaves() {
    for presheaf in ["PHI_REG", "Y_DZ2_0", "Y_DZ2_1"] {
        let out = Command::new(exe())
            .args([
                "sheaf-check",
                "--fixtures",
                &fixtures("standard.fix"),
                "--presheaf",
                presheaf,
            ])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{presheaf}");
    }
}

#[test]
fn timed_reports_carry_timings() {
    let out = Command::new(exe())
        .args([
            "validate",
            "--fixtures",
            &fixtures("standard.fix"),
            "--timings",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("\"timing_ms\": "));
    assert!(!report.contains("\"timing_ms\": null"));
}
