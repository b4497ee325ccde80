//! One-entry-point run of the full verification for every bundled 2-group,
//! with the bundled non-sheaf riding along on the discrete Z/2 fixture.

use twoact_core::check::{all_pass, failures};
use twoact_core::equivalence::verify_main_theorem;
use twoact_core::fixtures;
use twoact_core::orbit::build_orbit_2cat;
use twoact_core::Bounds;

#[test]
fn full_verification_passes_on_every_bundled_two_group() {
    let b = Bounds::default();
    for fg in fixtures::standard_set() {
        let checks = verify_main_theorem(&fg.group, &fg.actions, &[], &b, false);
        assert!(
            all_pass(&checks),
            "{} failed: {:?}",
            fg.name,
            failures(&checks)
        );
        assert!(checks.len() > 20, "{} produced suspiciously few checks", fg.name);
    }
}

#[test]
fn full_verification_flags_the_nonsheaf_and_nothing_else() {
    let b = Bounds::default();
    let fg = fixtures::standard_set().remove(1); // D(Z2)
    let orbit = build_orbit_2cat(&fg.group, &b).unwrap();
    let ns = fixtures::nonsheaf_presheaf(&orbit);
    let checks =
        verify_main_theorem(&fg.group, &fg.actions, &[("nonsheaf".into(), ns)], &b, false);
    let failed = failures(&checks);
    // exactly the sheaf-condition check on the extra presheaf fails; the
    // unit check records a passing detection
    assert_eq!(failed.len(), 1, "{failed:?}");
    assert_eq!(failed[0].name, "extra-2-sheaf-nonsheaf");
    assert!(checks
        .iter()
        .any(|c| c.name == "unit-detects-nonsheaf-nonsheaf" && c.pass));
}
