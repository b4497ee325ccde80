//! Bundled structures used by the test and acceptance suites and shipped as
//! text fixtures for the CLI.
//!
//! The standard set of 2-groups: the trivial 2-group, the discrete 2-groups
//! on Z/2 and Z/3, the one-object 2-group on Z/2, and the 2-group of the
//! identity crossed module on Z/2.  A further crossed-module fixture with a
//! nonabelian arrow group (trivial boundary Z/3 → Z/2 with the negation
//! action) exercises the conjugation-sensitive code paths; its sub-2-group
//! lattice is not a chain.

use crate::action::GAction;
use crate::catkit::{Arrow, FinCat};
use crate::grp::{FiniteGroup, GroupHom};
use crate::twogroup::{from_crossed_module, CrossedModule, TwoGroup};

/// Arrow index of `m : x → y` in the absorb space.
pub const ABSORB_ARROW_M: usize = 2;
/// Arrow index of `s : y → y` in the absorb space.
pub const ABSORB_ARROW_S: usize = 3;

/// The 2-group of the identity crossed module on Z/2 (trivial action forced
/// by the Peiffer identity); its arrow group is the Klein four-group.
pub fn xm_id_z2() -> TwoGroup {
    let z2 = FiniteGroup::cyclic(2);
    let xm = CrossedModule::validate(
        z2.clone(),
        z2,
        GroupHom { map: vec![0, 1] },
        vec![0, 1, 0, 1],
    )
    .expect("identity crossed module on Z/2");
    from_crossed_module(&xm).expect("2-group of the identity crossed module")
}

/// Trivial boundary Z/3 → Z/2 with the negation action: a valid crossed
/// module whose 2-group has arrow group S₃.
pub fn xm_neg_z3_z2() -> TwoGroup {
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let xm = CrossedModule::validate(
        z2,
        z3,
        GroupHom { map: vec![0, 0, 0] },
        vec![0, 1, 2, 0, 2, 1],
    )
    .expect("negation crossed module");
    from_crossed_module(&xm).expect("2-group of the negation crossed module")
}

/// The five standard 2-group fixtures, in a stable order.
pub fn bundled_two_groups() -> Vec<(String, TwoGroup)> {
    vec![
        ("T".into(), TwoGroup::trivial()),
        ("D(Z2)".into(), TwoGroup::discrete(&FiniteGroup::cyclic(2))),
        ("D(Z3)".into(), TwoGroup::discrete(&FiniteGroup::cyclic(3))),
        (
            "ONE(Z2)".into(),
            TwoGroup::one_object(&FiniteGroup::cyclic(2)).expect("one-object 2-group on Z/2"),
        ),
        ("XM(id,Z2)".into(), xm_id_z2()),
    ]
}

/// The absorb space: objects `x, y`; arrows `1_x, 1_y, m : x → y, s : y → y`
/// with `s∘s = 1_y` and `s∘m = m`.
pub fn absorb_space() -> FinCat {
    FinCat::from_comp_fn(
        2,
        vec![
            Arrow { dom: 0, cod: 0 },
            Arrow { dom: 1, cod: 1 },
            Arrow { dom: 0, cod: 1 },
            Arrow { dom: 1, cod: 1 },
        ],
        vec![0, 1],
        |g, f| match (g, f) {
            (0, 0) => Some(0),
            (1, 1) => Some(1),
            (2, 0) | (1, 2) => Some(2),
            (3, 1) | (1, 3) => Some(3),
            (3, 3) => Some(1),
            (3, 2) => Some(2),
            _ => None,
        },
    )
    .expect("absorb space is a category")
}

/// ONE(Z/2) acting on the absorb space: the generator fixes `1_x` and `m`
/// and swaps `1_y ↔ s`.  The arrow `m` absorbs the action even though its
/// codomain identity does not.
pub fn absorb_action() -> GAction {
    let tg = TwoGroup::one_object(&FiniteGroup::cyclic(2)).expect("ONE(Z2)");
    let space = absorb_space();
    let obj_act = vec![0, 1];
    let arr_act = vec![
        0, 0, // 1_x
        1, 3, // 1_y
        2, 2, // m
        3, 1, // s
    ];
    GAction::validate(tg, space, obj_act, arr_act).expect("absorb action is valid")
}

/// Discrete 2-group on Z/2 acting on three discrete objects by swapping the
/// first two.
pub fn swap3_action() -> GAction {
    let tg = TwoGroup::discrete(&FiniteGroup::cyclic(2));
    let space = FinCat::discrete(3);
    let obj_act = vec![0, 1, 1, 0, 2, 2];
    let arr_act = obj_act.clone();
    GAction::validate(tg, space, obj_act, arr_act).expect("swap action is valid")
}

/// Per-2-group bundles of named actions.
pub struct GroupFixture {
    pub name: String,
    pub group: TwoGroup,
    pub actions: Vec<(String, GAction)>,
}

pub fn standard_set() -> Vec<GroupFixture> {
    bundled_two_groups()
        .into_iter()
        .map(|(name, group)| {
            let mut actions: Vec<(String, GAction)> = Vec::new();
            match name.as_str() {
                "T" => {
                    actions.push((
                        "triv-pt".into(),
                        GAction::trivial(group.clone(), FinCat::terminal()),
                    ));
                    actions.push((
                        "triv-disc2".into(),
                        GAction::trivial(group.clone(), FinCat::discrete(2)),
                    ));
                }
                "D(Z2)" => {
                    actions.push(("regular".into(), GAction::translation(group.clone())));
                    actions.push(("swap3".into(), swap3_action()));
                    actions.push((
                        "triv-arrow".into(),
                        GAction::trivial(group.clone(), FinCat::walking_arrow()),
                    ));
                }
                "D(Z3)" => {
                    actions.push(("regular".into(), GAction::translation(group.clone())));
                    actions.push((
                        "triv-pt".into(),
                        GAction::trivial(group.clone(), FinCat::terminal()),
                    ));
                }
                "ONE(Z2)" => {
                    actions.push(("absorb".into(), absorb_action()));
                    actions.push((
                        "triv-pt".into(),
                        GAction::trivial(group.clone(), FinCat::terminal()),
                    ));
                }
                "XM(id,Z2)" => {
                    actions.push(("regular".into(), GAction::translation(group.clone())));
                    actions.push((
                        "triv-pt".into(),
                        GAction::trivial(group.clone(), FinCat::terminal()),
                    ));
                }
                _ => unreachable!(),
            }
            GroupFixture { name, group, actions }
        })
        .collect()
}

/// A presheaf on the orbit 2-category of D(Z/2) that is not a 2-sheaf:
/// terminal at the bottom object, two discrete objects at the top, so the
/// restriction along the covering projection collapses two objects to one.
pub fn nonsheaf_presheaf(orbit: &crate::orbit::OrbitTwoCat) -> crate::sheaf::Presheaf2 {
    use crate::catkit::NatTrans;
    let n = orbit.n_objects();
    assert_eq!(n, 2, "non-sheaf fixture lives on the orbit 2-category of D(Z/2)");
    let values = vec![FinCat::terminal(), FinCat::discrete(2)];
    let mut mor = Vec::with_capacity(n * n);
    let mut cell = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let hom = &orbit.homs[a * n + b];
            let mors: Vec<crate::catkit::Functor> = (0..hom.cat.n_objects)
                .map(|_| {
                    if a == 1 && b == 1 {
                        crate::catkit::Functor::identity(&values[1])
                    } else {
                        // unique functor into the terminal, or collapse
                        crate::catkit::Functor {
                            obj: vec![0; values[b].n_objects],
                            arr: vec![0; values[b].n_arrows()],
                        }
                    }
                })
                .collect();
            let cells: Vec<NatTrans> = (0..hom.cat.n_arrows())
                .map(|t| {
                    let src = hom.cat.dom(t);
                    NatTrans::identity(&values[b], &values[a], &mors[src])
                })
                .collect();
            mor.push(mors);
            cell.push(cells);
        }
    }
    crate::sheaf::Presheaf2 { values, mor, cell }
}

/// All bundled actions, flattened, names qualified by the group.
pub fn bundled_actions() -> Vec<(String, GAction)> {
    standard_set()
        .into_iter()
        .flat_map(|f| {
            let gname = f.name;
            f.actions
                .into_iter()
                .map(move |(aname, a)| (format!("{gname}/{aname}"), a))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_bundled_structures_build() {
        assert_eq!(bundled_two_groups().len(), 5);
        assert_eq!(standard_set().iter().map(|f| f.actions.len()).sum::<usize>(), 11);
        xm_neg_z3_z2();
    }

    #[test]
    fn absorb_action_has_the_advertised_shape() {
        let a = absorb_action();
        assert_eq!(a.act_arr(ABSORB_ARROW_M, 1), ABSORB_ARROW_M);
        assert_eq!(a.act_arr(ABSORB_ARROW_S, 1), a.space.id(1));
        assert_eq!(a.act_id_arr(1, 1), ABSORB_ARROW_S);
    }
}
