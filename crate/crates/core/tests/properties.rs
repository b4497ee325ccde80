//! Property tests over pools of fixture structures.
//!
//! Random generation of valid categories and 2-groups is not practical, so
//! the strategies sample indices into deterministic pools (bundled 2-groups,
//! their sub-2-groups, permutation groups of small degree) and the
//! properties quantify over the sampled data.

use proptest::prelude::*;

use twoact_core::catkit::{
    enumerate_functors, enumerate_nat_trans, horizontal_compose, is_iso_of_categories,
    vertical_compose, FinCat, Functor,
};
use twoact_core::fixtures;
use twoact_core::grp::{
    conjugate_subgroup, enumerate_subgroups, generated_subgroup, FiniteGroup,
};
use twoact_core::twogroup::{conjugate_sub_two_group, enumerate_sub_two_groups};
use twoact_core::Bounds;

const B: usize = 1_000_000;

fn small_groups() -> Vec<FiniteGroup> {
    vec![
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2),
        FiniteGroup::cyclic(3),
        FiniteGroup::cyclic(4),
        FiniteGroup::cyclic(6),
        FiniteGroup::symmetric(3),
        FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
    ]
}

fn small_cats() -> Vec<FinCat> {
    vec![
        FinCat::terminal(),
        FinCat::discrete(2),
        FinCat::discrete(3),
        FinCat::walking_arrow(),
        fixtures::absorb_space(),
    ]
}

proptest! {
    #[test]
    fn conjugation_preserves_subgroup_order_and_membership(
        gi in 0usize..7,
        seed in any::<u64>(),
    ) {
        let g = &small_groups()[gi];
        let subs = enumerate_subgroups(g);
        let u = &subs[(seed as usize) % subs.len()];
        let a = (seed as usize / subs.len()) % g.order();
        let c = conjugate_subgroup(g, u, a);
        prop_assert_eq!(c.len(), u.len());
        prop_assert!(subs.contains(&c));
        prop_assert_eq!(&conjugate_subgroup(g, &c, g.inv(a)), u);
    }

    #[test]
    fn generated_subgroups_contain_their_generators(
        gi in 0usize..7,
        gens in proptest::collection::vec(any::<usize>(), 0..3),
    ) {
        let g = &small_groups()[gi];
        let gens: Vec<usize> = gens.into_iter().map(|x| x % g.order()).collect();
        let sub = generated_subgroup(g, &gens);
        prop_assert!(sub.contains(0));
        for x in gens {
            prop_assert!(sub.contains(x));
        }
        // a generated subgroup appears in the complete enumeration
        prop_assert!(enumerate_subgroups(g).contains(&sub));
    }

    #[test]
    fn horizontal_composition_is_associative_and_unital(
        ci in 0usize..5,
        di in 0usize..5,
        ei in 0usize..5,
        seed in any::<u64>(),
    ) {
        let cats = small_cats();
        let (c, d, e) = (&cats[ci], &cats[di], &cats[ei]);
        let fs = enumerate_functors(c, d, B).unwrap();
        let gs = enumerate_functors(d, e, B).unwrap();
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let f = &fs[(seed as usize) % fs.len()];
        let h = &gs[(seed as usize / 7) % gs.len()];
        let alphas = enumerate_nat_trans(c, d, f, f, B).unwrap();
        let betas = enumerate_nat_trans(d, e, h, h, B).unwrap();
        let alpha = &alphas[(seed as usize / 11) % alphas.len()];
        let beta = &betas[(seed as usize / 13) % betas.len()];
        // unit law: composing with the identity transformation of the
        // identity functor on e
        let ide = Functor::identity(e);
        let id_t = twoact_core::catkit::NatTrans::identity(e, e, &ide);
        let hf = twoact_core::catkit::compose_functors(h, f);
        let whiskered = horizontal_compose(c, d, e, f, f, h, h, alpha, beta).unwrap();
        let with_unit =
            horizontal_compose(c, e, e, &hf, &hf, &ide, &ide, &whiskered, &id_t).unwrap();
        prop_assert_eq!(&with_unit, &whiskered);
        // interchange with vertical composition
        let aa = vertical_compose(d, alpha, alpha).unwrap();
        let bb = vertical_compose(e, beta, beta).unwrap();
        let lhs = horizontal_compose(c, d, e, f, f, h, h, &aa, &bb).unwrap();
        let rhs = vertical_compose(e, &whiskered, &whiskered).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn functor_enumeration_matches_raw_counting(
        ci in 0usize..4,
        di in 0usize..4,
    ) {
        let cats = small_cats();
        let (c, d) = (&cats[ci], &cats[di]);
        let fast = enumerate_functors(c, d, B).unwrap();
        // oracle: every object/arrow table combination, validated
        let mut count = 0usize;
        let obj_total = d.n_objects.pow(c.n_objects as u32);
        for code in 0..obj_total {
            let mut rest = code;
            let obj: Vec<usize> = (0..c.n_objects)
                .map(|_| {
                    let v = rest % d.n_objects;
                    rest /= d.n_objects;
                    v
                })
                .collect();
            let arr_choices: Vec<Vec<usize>> = (0..c.n_arrows())
                .map(|m| d.arrows_between(obj[c.dom(m)], obj[c.cod(m)]))
                .collect();
            if arr_choices.iter().any(|ch| ch.is_empty()) {
                continue;
            }
            // mixed-radix sweep over all arrow assignments
            let mut idx = vec![0usize; c.n_arrows()];
            loop {
                let arr: Vec<usize> =
                    idx.iter().zip(&arr_choices).map(|(&i, ch)| ch[i]).collect();
                if (Functor { obj: obj.clone(), arr }).validate(c, d).is_ok() {
                    count += 1;
                }
                let mut k = 0;
                while k < idx.len() {
                    idx[k] += 1;
                    if idx[k] < arr_choices[k].len() {
                        break;
                    }
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
            }
        }
        prop_assert_eq!(fast.len(), count);
    }

    #[test]
    fn sub_two_group_conjugates_stay_enumerated(
        ti in 0usize..5,
        seed in any::<u64>(),
    ) {
        let (_, tg) = fixtures::bundled_two_groups().remove(ti);
        let subs = enumerate_sub_two_groups(&tg, &Bounds::default()).unwrap();
        let u = &subs[(seed as usize) % subs.len()];
        let a = (seed as usize / subs.len()) % tg.g0.order();
        let c = conjugate_sub_two_group(&tg, u, a);
        prop_assert!(subs.contains(&c));
        prop_assert_eq!(&conjugate_sub_two_group(&tg, &c, tg.g0.inv(a)), u);
    }

    #[test]
    fn isomorphism_check_is_symmetric(
        ci in 0usize..5,
        seed in any::<u64>(),
    ) {
        let cats = small_cats();
        let c = &cats[ci];
        let endos = enumerate_functors(c, c, B).unwrap();
        let f = &endos[(seed as usize) % endos.len()];
        if let Some(inv) = is_iso_of_categories(c, c, f) {
            let back = is_iso_of_categories(c, c, &inv).expect("inverse is again an iso");
            prop_assert_eq!(&back, f);
        }
    }

    #[test]
    fn action_axioms_on_sampled_pairs(
        ai in 0usize..11,
        seed in any::<u64>(),
    ) {
        let (_, x) = fixtures::bundled_actions().remove(ai);
        let s = seed as usize;
        let n0 = x.group.g0.order();
        let n1 = x.group.g1.order();
        if x.space.n_objects > 0 {
            let ob = s % x.space.n_objects;
            let a = (s / 7) % n0;
            let b2 = (s / 11) % n0;
            prop_assert_eq!(
                x.act_obj(x.act_obj(ob, a), b2),
                x.act_obj(ob, x.group.g0.mul(a, b2))
            );
        }
        if x.space.n_arrows() > 0 {
            let m = s % x.space.n_arrows();
            let g = (s / 7) % n1;
            let h = (s / 11) % n1;
            prop_assert_eq!(
                x.act_arr(x.act_arr(m, g), h),
                x.act_arr(m, x.group.g1.mul(g, h))
            );
        }
    }
}
