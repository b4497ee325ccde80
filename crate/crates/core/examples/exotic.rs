fn main() {
    let b = twoact_core::Bounds::default();
    let tg = twoact_core::fixtures::xm_neg_z3_z2();
    let orbit = twoact_core::orbit::build_orbit_2cat(&tg, &b).unwrap();
    println!("XM_NEG orbit: {} objects", orbit.n_objects());
    for c in twoact_core::sheaf::topology_axioms_check(&orbit) {
        println!("  {} [{}]: {} {:?}", c.name, c.anchor, c.pass, c.witness);
    }
    // counit on the translation action
    let x = twoact_core::action::GAction::translation(tg.clone());
    let t0 = std::time::Instant::now();
    match twoact_core::equivalence::phi(&orbit, &x, &b) {
        Ok(p) => {
            let ps = twoact_core::equivalence::psi(&orbit, &p.presheaf).unwrap();
            match twoact_core::equivalence::counit(&orbit, &x, &p, &ps) {
                Ok(_) => println!("counit: ok ({:?})", t0.elapsed()),
                Err(e) => println!("counit: ERR {e}"),
            }
            match twoact_core::equivalence::counit_equivariance_identity(&orbit, &x, &p) {
                Ok((checked, skipped)) => println!("identity sweep: checked {checked}, skipped {skipped}"),
                Err(e) => println!("identity sweep: ERR {e}"),
            }
            match twoact_core::sheaf::is_2sheaf(&orbit, &p.presheaf, &b) {
                Ok((ok, w)) => println!("phi 2-sheaf: {ok} {w:?}"),
                Err(e) => println!("phi 2-sheaf: ERR {e}"),
            }
        }
        Err(e) => println!("phi: ERR {e}"),
    }
    // and D(V4)
    let v4 = twoact_core::grp::FiniteGroup::cyclic(2).direct_product(&twoact_core::grp::FiniteGroup::cyclic(2));
    let dv4 = twoact_core::twogroup::TwoGroup::discrete(&v4);
    let orbit = twoact_core::orbit::build_orbit_2cat(&dv4, &b).unwrap();
    println!("D(V4) orbit: {} objects", orbit.n_objects());
    for c in twoact_core::sheaf::topology_axioms_check(&orbit) {
        println!("  {} [{}]: {} {:?}", c.name, c.anchor, c.pass, c.witness);
    }
}
