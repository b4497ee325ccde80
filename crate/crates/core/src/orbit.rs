//! Coset categories and the orbit 2-category of a 2-group.
//!
//! For a sub-2-group `𝒰 ⊆ 𝒢`, the coset category `𝒢/𝒰` has right cosets
//! `𝒰₀A` as objects and `𝒰₁g` as arrows; the 2-group acts on it by
//! tensoring representatives.  All well-definedness claims (endpoints,
//! identities, composition, the action) are re-verified over every
//! representative rather than assumed.
//!
//! The orbit 2-category has one object per sub-2-group.  A morphism
//! `𝒢/𝒰 → 𝒢/𝒱` is represented by an object `A ∈ 𝒢₀` with `𝒰 ⊆ A⁻¹𝒱A`,
//! realized as the coset functor `𝒰₀X ↦ 𝒱₀(A⊗X)`; representatives inducing
//! the same functor form the coset `𝒱₀A`, which is how morphisms are stored.
//! A 2-cell is similarly the coset `𝒱₁g` of an arrow `g` of `𝒢` whose
//! conjugation condition (`X ∈ 𝒰₀` implies `g ⊗ 1_X ⊗ g⁻¹ ∈ 𝒱₁`) makes the
//! component family `𝒱₁(g ⊗ 1_X)` a well-defined transformation.
//! Composition of morphisms is the tensor, vertical composition of 2-cells
//! is composition in `𝒢`, horizontal composition is the tensor; every
//! operation is recomputed over all representatives.
//!
//! Realization embeds the orbit 2-category into the 2-category of actions;
//! the embedding is validated functor by functor, 2-cell by 2-cell.

use std::collections::BTreeSet;

use crate::action::{check_action_2cell, is_equivariant, GAction};
use crate::bounds::Bounds;
use crate::catkit::{self, Arrow, CompTable, FinCat, Functor, NatTrans, TwoCat};
use crate::check::Check;
use crate::error::{Error, Result};
use crate::twogroup::{SubTwoGroup, SubTwoGroupPoset, TwoGroup};

/// A coset category `𝒢/𝒰` with its right `𝒢`-action.
#[derive(Debug, Clone)]
pub struct CosetCategory {
    pub sub: SubTwoGroup,
    pub action: GAction,
    /// Coset index of each element of `G0`.
    pub obj_of: Vec<usize>,
    /// Coset index of each element of `G1`.
    pub arr_of: Vec<usize>,
    /// Canonical representative per object coset.
    pub obj_rep: Vec<usize>,
    /// Canonical representative per arrow coset.
    pub arr_rep: Vec<usize>,
}

impl CosetCategory {
    /// The identity coset `𝒰₀I` as an object index.
    pub fn id_coset(&self) -> usize {
        self.obj_of[0]
    }

    pub fn obj_members(&self, k: usize) -> Vec<usize> {
        self.obj_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == k)
            .map(|(e, _)| e)
            .collect()
    }

    pub fn arr_members(&self, k: usize) -> Vec<usize> {
        self.arr_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == k)
            .map(|(e, _)| e)
            .collect()
    }
}

fn partition_cosets(
    n: usize,
    members: &[usize],
    mul: impl Fn(usize, usize) -> usize,
) -> (Vec<usize>, Vec<usize>) {
    // right cosets U·g; canonical representative is the minimum
    let mut of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if of[g] != usize::MAX {
            continue;
        }
        let coset: BTreeSet<usize> = members.iter().map(|&u| mul(u, g)).collect();
        let rep = *coset.iter().next().expect("nonempty coset");
        if of[rep] == usize::MAX {
            let k = reps.len();
            reps.push(rep);
            for &m in &coset {
                of[m] = k;
            }
        }
    }
    (of, reps)
}

pub fn coset_category(tg: &TwoGroup, u: &SubTwoGroup) -> Result<CosetCategory> {
    let (obj_of, obj_rep) =
        partition_cosets(tg.g0.order(), &u.u0.members, |a, b| tg.g0.mul(a, b));
    let (arr_of, arr_rep) =
        partition_cosets(tg.g1.order(), &u.u1.members, |a, b| tg.g1.mul(a, b));
    let n_obj = obj_rep.len();
    let n_arr = arr_rep.len();
    // endpoints, verified over all representatives of each arrow coset
    let mut arrows = Vec::with_capacity(n_arr);
    for k in 0..n_arr {
        let members: Vec<usize> =
            (0..tg.g1.order()).filter(|&g| arr_of[g] == k).collect();
        let dom = obj_of[tg.arrow_dom(members[0])];
        let cod = obj_of[tg.arrow_cod(members[0])];
        for &g in &members[1..] {
            if obj_of[tg.arrow_dom(g)] != dom || obj_of[tg.arrow_cod(g)] != cod {
                return Err(Error::WellDefinednessViolation(format!(
                    "endpoints of arrow coset {k} depend on the representative"
                )));
            }
        }
        arrows.push(Arrow { dom, cod });
    }
    // identities, verified over all object representatives
    let mut identity = vec![usize::MAX; n_obj];
    for a in tg.g0.elements() {
        let k = obj_of[a];
        let cand = arr_of[tg.id_arrow(a)];
        if identity[k] == usize::MAX {
            identity[k] = cand;
        } else if identity[k] != cand {
            return Err(Error::WellDefinednessViolation(format!(
                "identity of object coset {k} depends on the representative"
            )));
        }
    }
    // composition: coset of the composition of adjusted representatives,
    // verified over every representative pair
    let mut comp = vec![None; n_arr * n_arr];
    for k2 in 0..n_arr {
        for k1 in 0..n_arr {
            if arrows[k1].cod != arrows[k2].dom {
                continue;
            }
            let mut result: Option<usize> = None;
            for &g in &(0..tg.g1.order()).filter(|&g| arr_of[g] == k1).collect::<Vec<_>>() {
                for &h in
                    &(0..tg.g1.order()).filter(|&h| arr_of[h] == k2).collect::<Vec<_>>()
                {
                    // adjust h into a representative composable with g
                    let shift = tg.g0.mul(tg.arrow_cod(g), tg.g0.inv(tg.arrow_dom(h)));
                    if !u.u0.contains(shift) {
                        return Err(Error::WellDefinednessViolation(format!(
                            "no composable representative for cosets ({k2}, {k1})"
                        )));
                    }
                    let h2 = tg.g1.mul(tg.id_arrow(shift), h);
                    let c = tg.comp_arr(h2, g).ok_or_else(|| {
                        Error::WellDefinednessViolation(format!(
                            "adjusted representatives of ({k2}, {k1}) not composable"
                        ))
                    })?;
                    match result {
                        None => result = Some(arr_of[c]),
                        Some(r) if r == arr_of[c] => {}
                        Some(_) => {
                            return Err(Error::WellDefinednessViolation(format!(
                                "composition of cosets ({k2}, {k1}) depends on representatives"
                            )))
                        }
                    }
                }
            }
            comp[k2 * n_arr + k1] = result;
        }
    }
    let space = FinCat::new(n_obj, arrows, identity, comp)?;
    // the action by tensoring representatives, verified over all members
    let n0 = tg.g0.order();
    let n1 = tg.g1.order();
    let mut obj_act = vec![usize::MAX; n_obj * n0];
    for x in tg.g0.elements() {
        for b in tg.g0.elements() {
            let slot = obj_of[x] * n0 + b;
            let target = obj_of[tg.g0.mul(x, b)];
            if obj_act[slot] == usize::MAX {
                obj_act[slot] = target;
            } else if obj_act[slot] != target {
                return Err(Error::WellDefinednessViolation(format!(
                    "object action at coset of {x} by {b} depends on the representative"
                )));
            }
        }
    }
    let mut arr_act = vec![usize::MAX; n_arr * n1];
    for g in tg.g1.elements() {
        for h in tg.g1.elements() {
            let slot = arr_of[g] * n1 + h;
            let target = arr_of[tg.g1.mul(g, h)];
            if arr_act[slot] == usize::MAX {
                arr_act[slot] = target;
            } else if arr_act[slot] != target {
                return Err(Error::WellDefinednessViolation(format!(
                    "arrow action at coset of {g} by {h} depends on the representative"
                )));
            }
        }
    }
    let action = GAction::validate(tg.clone(), space, obj_act, arr_act)?;
    Ok(CosetCategory { sub: u.clone(), action, obj_of, arr_of, obj_rep, arr_rep })
}

/// Morphism condition `𝒰 ⊆ A⁻¹𝒱A`, computed both as the containment and as
/// well-definedness of the induced coset maps; the two characterizations are
/// compared and must agree.
pub fn is_orbit_morphism(tg: &TwoGroup, u: &SubTwoGroup, v: &SubTwoGroup, a: usize) -> bool {
    let conj = crate::twogroup::conjugate_sub_two_group(tg, v, a);
    let containment = u.leq(&conj);
    // direct well-definedness of 𝒰₀X ↦ 𝒱₀(A⊗X): representatives m⊗X and X
    // must land in the same 𝒱₀-coset, i.e. A⊗m⊗A⁻¹ ∈ 𝒱₀
    let mut well_defined = true;
    'objects: for x in tg.g0.elements() {
        for &m in &u.u0.members {
            let i1 = tg.g0.mul(a, x);
            let i2 = tg.g0.mul(a, tg.g0.mul(m, x));
            if !v.u0.contains(tg.g0.mul(i2, tg.g0.inv(i1))) {
                well_defined = false;
                break 'objects;
            }
        }
    }
    if well_defined {
        'arrows: for g in tg.g1.elements() {
            for &m in &u.u1.members {
                let i1 = tg.g1.mul(tg.id_arrow(a), g);
                let i2 = tg.g1.mul(tg.id_arrow(a), tg.g1.mul(m, g));
                if !v.u1.contains(tg.g1.mul(i2, tg.g1.inv(i1))) {
                    well_defined = false;
                    break 'arrows;
                }
            }
        }
    }
    assert_eq!(
        containment, well_defined,
        "containment and coset-map characterizations must agree"
    );
    containment
}

/// 2-cell condition for `g : A ⇒ B` between orbit morphisms `𝒰 → 𝒱`:
/// `X ∈ 𝒰₀` implies `g ⊗ 1_X ⊗ g⁻¹ ∈ 𝒱₁`, endpoints valid.
pub fn is_orbit_2cell(tg: &TwoGroup, u: &SubTwoGroup, v: &SubTwoGroup, g: usize) -> bool {
    let a = tg.arrow_dom(g);
    let b = tg.arrow_cod(g);
    if !is_orbit_morphism(tg, u, v, a) || !is_orbit_morphism(tg, u, v, b) {
        return false;
    }
    u.u0.members.iter().all(|&x| {
        let c = tg.g1.mul(tg.g1.mul(g, tg.id_arrow(x)), tg.g1.inv(g));
        v.u1.contains(c)
    })
}

/// One hom-category of the orbit 2-category: objects are morphism cosets
/// `𝒱₀A`, arrows are 2-cell cosets `𝒱₁g`, both stored by canonical
/// representative.
#[derive(Debug, Clone)]
pub struct OrbitHom {
    pub cat: FinCat,
    /// Canonical representative element per hom object.
    pub obj_elem: Vec<usize>,
    /// Canonical representative element per hom arrow.
    pub arr_elem: Vec<usize>,
}

impl OrbitHom {
    /// Index of the morphism coset containing `a`, given the codomain
    /// sub-2-group for canonicalization.
    pub fn obj_index(&self, tg: &TwoGroup, v: &SubTwoGroup, a: usize) -> Option<usize> {
        let rep = v.u0.members.iter().map(|&m| tg.g0.mul(m, a)).min().unwrap();
        self.obj_elem.iter().position(|&e| e == rep)
    }

    pub fn arr_index(&self, tg: &TwoGroup, v: &SubTwoGroup, g: usize) -> Option<usize> {
        let rep = v.u1.members.iter().map(|&m| tg.g1.mul(m, g)).min().unwrap();
        self.arr_elem.iter().position(|&e| e == rep)
    }
}

/// The orbit 2-category: one object per sub-2-group, hom-categories of
/// morphism and 2-cell cosets, composition by the tensor.
#[derive(Debug, Clone)]
pub struct OrbitTwoCat {
    pub group: TwoGroup,
    pub poset: SubTwoGroupPoset,
    pub cosets: Vec<CosetCategory>,
    /// Hom per ordered pair, index `a * n + b`.
    pub homs: Vec<OrbitHom>,
}

impl OrbitTwoCat {
    pub fn n_objects(&self) -> usize {
        self.poset.len()
    }

    pub fn hom(&self, a: usize, b: usize) -> &OrbitHom {
        &self.homs[a * self.n_objects() + b]
    }

    /// Index of the identity morphism coset in `hom(a, a)`.
    pub fn id_morphism(&self, a: usize) -> usize {
        self.hom(a, a)
            .obj_index(&self.group, &self.poset.subs[a], 0)
            .expect("identity morphism present")
    }
}

pub fn build_orbit_2cat(tg: &TwoGroup, bounds: &Bounds) -> Result<OrbitTwoCat> {
    let poset = SubTwoGroupPoset::build(tg, bounds)?;
    let cosets: Vec<CosetCategory> =
        poset.subs.iter().map(|u| coset_category(tg, u)).collect::<Result<_>>()?;
    let n = poset.len();
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            homs.push(build_hom(tg, &poset.subs[a], &poset.subs[b])?);
        }
    }
    Ok(OrbitTwoCat { group: tg.clone(), poset, cosets, homs })
}

fn build_hom(tg: &TwoGroup, u: &SubTwoGroup, v: &SubTwoGroup) -> Result<OrbitHom> {
    // morphism cosets 𝒱₀A over valid A; validity must agree across each coset
    let mut obj_elem = Vec::new();
    for a in tg.g0.elements() {
        let rep = v.u0.members.iter().map(|&m| tg.g0.mul(m, a)).min().unwrap();
        let valid = is_orbit_morphism(tg, u, v, a);
        if valid != is_orbit_morphism(tg, u, v, rep) {
            return Err(Error::WellDefinednessViolation(format!(
                "morphism validity differs across the coset of {a}"
            )));
        }
        if valid && rep == a {
            obj_elem.push(a);
        }
    }
    let mut obj_of_elem = vec![usize::MAX; tg.g0.order()];
    for a in tg.g0.elements() {
        let rep = v.u0.members.iter().map(|&m| tg.g0.mul(m, a)).min().unwrap();
        if let Some(k) = obj_elem.iter().position(|&e| e == rep) {
            obj_of_elem[a] = k;
        }
    }
    // 2-cell cosets 𝒱₁g over valid g
    let mut arr_elem = Vec::new();
    let mut arrows = Vec::new();
    for g in tg.g1.elements() {
        let rep = v.u1.members.iter().map(|&m| tg.g1.mul(m, g)).min().unwrap();
        if is_orbit_2cell(tg, u, v, g) {
            if rep == g {
                // endpoints: cosets of d0(g), d1(g); verify representative
                // independence of the endpoints across the 2-cell coset
                let dom = obj_of_elem[tg.arrow_dom(g)];
                let cod = obj_of_elem[tg.arrow_cod(g)];
                if dom == usize::MAX || cod == usize::MAX {
                    return Err(Error::WellDefinednessViolation(format!(
                        "2-cell {g} has an endpoint that is not a valid morphism"
                    )));
                }
                for &m in &v.u1.members {
                    let g2 = tg.g1.mul(m, g);
                    if obj_of_elem[tg.arrow_dom(g2)] != dom
                        || obj_of_elem[tg.arrow_cod(g2)] != cod
                    {
                        return Err(Error::WellDefinednessViolation(format!(
                            "endpoints of 2-cell coset of {g} depend on the representative"
                        )));
                    }
                }
                arr_elem.push(g);
                arrows.push(Arrow { dom, cod });
            }
        } else if is_orbit_2cell(tg, u, v, rep) {
            return Err(Error::WellDefinednessViolation(format!(
                "2-cell validity differs across the coset of {g}"
            )));
        }
    }
    let arr_of_elem = |g: usize| -> Option<usize> {
        let rep = v.u1.members.iter().map(|&m| tg.g1.mul(m, g)).min().unwrap();
        arr_elem.iter().position(|&e| e == rep)
    };
    // identities: coset of i(A), verified across object representatives
    let mut identity = vec![usize::MAX; obj_elem.len()];
    for a in tg.g0.elements() {
        let Some(k) = (obj_of_elem[a] != usize::MAX).then_some(obj_of_elem[a]) else {
            continue;
        };
        let cell = arr_of_elem(tg.id_arrow(a)).ok_or_else(|| {
            Error::WellDefinednessViolation(format!("identity 2-cell of {a} missing"))
        })?;
        if identity[k] == usize::MAX {
            identity[k] = cell;
        } else if identity[k] != cell {
            return Err(Error::WellDefinednessViolation(format!(
                "identity 2-cell of morphism coset {k} depends on the representative"
            )));
        }
    }
    // vertical composition: composition in 𝒢 of adjusted representatives,
    // verified over all representative pairs
    let n_arr = arr_elem.len();
    let mut comp = vec![None; n_arr * n_arr];
    for k2 in 0..n_arr {
        for k1 in 0..n_arr {
            if arrows[k1].cod != arrows[k2].dom {
                continue;
            }
            let mut result: Option<usize> = None;
            for &m1 in &v.u1.members {
                let g = tg.g1.mul(m1, arr_elem[k1]);
                for &m2 in &v.u1.members {
                    let h = tg.g1.mul(m2, arr_elem[k2]);
                    let shift = tg.g0.mul(tg.arrow_cod(g), tg.g0.inv(tg.arrow_dom(h)));
                    if !v.u0.contains(shift) {
                        return Err(Error::WellDefinednessViolation(format!(
                            "no composable representatives for 2-cells ({k2}, {k1})"
                        )));
                    }
                    let h2 = tg.g1.mul(tg.id_arrow(shift), h);
                    let c = tg.comp_arr(h2, g).ok_or_else(|| {
                        Error::WellDefinednessViolation(
                            "adjusted 2-cell representatives not composable".into(),
                        )
                    })?;
                    let target = arr_of_elem(c).ok_or_else(|| {
                        Error::WellDefinednessViolation(
                            "vertical composite leaves the 2-cell set".into(),
                        )
                    })?;
                    match result {
                        None => result = Some(target),
                        Some(r) if r == target => {}
                        Some(_) => {
                            return Err(Error::WellDefinednessViolation(format!(
                                "vertical composition of ({k2}, {k1}) depends on representatives"
                            )))
                        }
                    }
                }
            }
            comp[k2 * n_arr + k1] = result;
        }
    }
    let cat = FinCat::new(obj_elem.len(), arrows, identity, comp)?;
    Ok(OrbitHom { cat, obj_elem, arr_elem })
}

/// Realizes a morphism coset as an equivariant functor between coset
/// categories, verified over all representatives.
pub fn realize_orbit_morphism(
    tg: &TwoGroup,
    cu: &CosetCategory,
    cv: &CosetCategory,
    a: usize,
) -> Result<Functor> {
    if !is_orbit_morphism(tg, &cu.sub, &cv.sub, a) {
        return Err(Error::InvalidMorphism(format!("element {a} is not a morphism here")));
    }
    let mut obj = vec![usize::MAX; cu.obj_rep.len()];
    for x in tg.g0.elements() {
        let k = cu.obj_of[x];
        let target = cv.obj_of[tg.g0.mul(a, x)];
        if obj[k] == usize::MAX {
            obj[k] = target;
        } else if obj[k] != target {
            return Err(Error::WellDefinednessViolation(format!(
                "realized object map at coset {k} depends on the representative"
            )));
        }
    }
    let mut arr = vec![usize::MAX; cu.arr_rep.len()];
    for g in tg.g1.elements() {
        let k = cu.arr_of[g];
        let target = cv.arr_of[tg.g1.mul(tg.id_arrow(a), g)];
        if arr[k] == usize::MAX {
            arr[k] = target;
        } else if arr[k] != target {
            return Err(Error::WellDefinednessViolation(format!(
                "realized arrow map at coset {k} depends on the representative"
            )));
        }
    }
    let f = Functor { obj, arr };
    f.validate(&cu.action.space, &cv.action.space)?;
    is_equivariant(&cu.action, &cv.action, &f)?;
    Ok(f)
}

/// Realizes a 2-cell coset as a transformation with components
/// `𝒱₁(g ⊗ 1_X)`, verified natural and compatible.
pub fn realize_orbit_2cell(
    tg: &TwoGroup,
    cu: &CosetCategory,
    cv: &CosetCategory,
    g: usize,
) -> Result<NatTrans> {
    if !is_orbit_2cell(tg, &cu.sub, &cv.sub, g) {
        return Err(Error::InvalidMorphism(format!("element {g} is not a 2-cell here")));
    }
    let mut comps = vec![usize::MAX; cu.obj_rep.len()];
    for x in tg.g0.elements() {
        let k = cu.obj_of[x];
        let target = cv.arr_of[tg.g1.mul(g, tg.id_arrow(x))];
        if comps[k] == usize::MAX {
            comps[k] = target;
        } else if comps[k] != target {
            return Err(Error::WellDefinednessViolation(format!(
                "realized 2-cell component at coset {k} depends on the representative"
            )));
        }
    }
    let t = NatTrans { comps };
    let h = realize_orbit_morphism(tg, cu, cv, tg.arrow_dom(g))?;
    let k = realize_orbit_morphism(tg, cu, cv, tg.arrow_cod(g))?;
    t.validate(&cu.action.space, &cv.action.space, &h, &k)?;
    check_action_2cell(&cu.action, &cv.action, &h, &k, &t)?;
    Ok(t)
}

/// Packs the orbit 2-category into the generic 2-category tables.
pub fn to_two_cat(o: &OrbitTwoCat) -> Result<TwoCat> {
    let tg = &o.group;
    let n = o.n_objects();
    let homs: Vec<FinCat> = o.homs.iter().map(|h| h.cat.clone()).collect();
    let ids: Vec<usize> = (0..n).map(|a| o.id_morphism(a)).collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let hab = o.hom(a, b);
                let hbc = o.hom(b, c);
                let hac = o.hom(a, c);
                let vc = &o.poset.subs[c];
                let mut obj = vec![0; hbc.obj_elem.len() * hab.obj_elem.len()];
                for (k2, &g) in hbc.obj_elem.iter().enumerate() {
                    for (k1, &f) in hab.obj_elem.iter().enumerate() {
                        obj[k2 * hab.obj_elem.len() + k1] = hac
                            .obj_index(tg, vc, tg.g0.mul(g, f))
                            .ok_or_else(|| {
                                Error::AxiomViolation(format!(
                                    "composite morphism of ({g}, {f}) missing in hom({a},{c})"
                                ))
                            })?;
                    }
                }
                let mut arr = vec![0; hbc.arr_elem.len() * hab.arr_elem.len()];
                for (t2, &g) in hbc.arr_elem.iter().enumerate() {
                    for (t1, &f) in hab.arr_elem.iter().enumerate() {
                        arr[t2 * hab.arr_elem.len() + t1] = hac
                            .arr_index(tg, vc, tg.g1.mul(g, f))
                            .ok_or_else(|| {
                                Error::AxiomViolation(format!(
                                    "horizontal composite of ({g}, {f}) missing in hom({a},{c})"
                                ))
                            })?;
                    }
                }
                comp.push(CompTable { obj, arr });
            }
        }
    }
    Ok(TwoCat { n_objects: n, homs, ids, comp })
}

/// Right Ore condition on the underlying 1-category: every cospan completes
/// to a commuting square.  Returns a witness span per cospan.
pub fn right_ore_check(o: &OrbitTwoCat) -> (bool, Option<String>) {
    let tg = &o.group;
    let n = o.n_objects();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let hac = o.hom(a, c);
                let hbc = o.hom(b, c);
                for (fi, &f) in hac.obj_elem.iter().enumerate() {
                    for (gi, &g) in hbc.obj_elem.iter().enumerate() {
                        let mut found = false;
                        'search: for d in 0..n {
                            let hda = o.hom(d, a);
                            let hdb = o.hom(d, b);
                            for &p in &hda.obj_elem {
                                for &q in &hdb.obj_elem {
                                    let left = tg.g0.mul(f, p);
                                    let right = tg.g0.mul(g, q);
                                    if hac
                                        .obj_index(tg, &o.poset.subs[c], left)
                                        .is_some()
                                        && o.hom(d, c)
                                            .obj_index(tg, &o.poset.subs[c], left)
                                            == o.hom(d, c).obj_index(
                                                tg,
                                                &o.poset.subs[c],
                                                right,
                                            )
                                        && o.hom(d, c)
                                            .obj_index(tg, &o.poset.subs[c], left)
                                            .is_some()
                                    {
                                        found = true;
                                        break 'search;
                                    }
                                }
                            }
                        }
                        if !found {
                            return (
                                false,
                                Some(format!(
                                    "cospan ({a} →{fi} {c} ←{gi} {b}) has no completing span"
                                )),
                            );
                        }
                    }
                }
            }
        }
    }
    (true, None)
}

/// Full validation sweep for a built orbit 2-category: the generic
/// 2-category axioms, equivariance of every realized morphism, compatibility
/// of every realized 2-cell, and functoriality of realization.
pub fn validate_orbit_2cat(o: &OrbitTwoCat) -> Result<()> {
    let two_cat = to_two_cat(o)?;
    catkit::validate_two_cat(&two_cat)?;
    let tg = &o.group;
    let n = o.n_objects();
    for a in 0..n {
        for b in 0..n {
            let hom = o.hom(a, b);
            let cu = &o.cosets[a];
            let cv = &o.cosets[b];
            let morphs: Vec<Functor> = hom
                .obj_elem
                .iter()
                .map(|&e| realize_orbit_morphism(tg, cu, cv, e))
                .collect::<Result<_>>()?;
            let cells: Vec<NatTrans> = hom
                .arr_elem
                .iter()
                .map(|&e| realize_orbit_2cell(tg, cu, cv, e))
                .collect::<Result<_>>()?;
            // realization preserves vertical composition of 2-cells
            for t2 in 0..hom.cat.n_arrows() {
                for t1 in 0..hom.cat.n_arrows() {
                    let Some(tc) = hom.cat.compose(t2, t1) else { continue };
                    let composed =
                        catkit::vertical_compose(&cv.action.space, &cells[t2], &cells[t1])?;
                    if composed != cells[tc] {
                        return Err(Error::AxiomViolation(format!(
                            "realization breaks vertical composition at 2-cells ({t2}, {t1}) of hom({a},{b})"
                        )));
                    }
                }
            }
            // realization is functorial on 1-cells and preserves horizontal
            // composition of 2-cells
            for c in 0..n {
                let hbc = o.hom(b, c);
                let cw = &o.cosets[c];
                for &g in &hbc.obj_elem {
                    let rg = realize_orbit_morphism(tg, cv, cw, g)?;
                    for (fi, &f) in hom.obj_elem.iter().enumerate() {
                        let composite = catkit::compose_functors(&rg, &morphs[fi]);
                        let direct =
                            realize_orbit_morphism(tg, cu, cw, tg.g0.mul(g, f))?;
                        if composite != direct {
                            return Err(Error::AxiomViolation(format!(
                                "realization breaks composition at ({g}, {f})"
                            )));
                        }
                    }
                }
                for &e2 in &hbc.arr_elem {
                    let r2 = realize_orbit_2cell(tg, cv, cw, e2)?;
                    let a2 = realize_orbit_morphism(tg, cv, cw, tg.arrow_dom(e2))?;
                    let b2 = realize_orbit_morphism(tg, cv, cw, tg.arrow_cod(e2))?;
                    for (t1, &e1) in hom.arr_elem.iter().enumerate() {
                        let ra = realize_orbit_morphism(tg, cu, cv, tg.arrow_dom(e1))?;
                        let rb = realize_orbit_morphism(tg, cu, cv, tg.arrow_cod(e1))?;
                        let whiskered = catkit::horizontal_compose(
                            &cu.action.space,
                            &cv.action.space,
                            &cw.action.space,
                            &ra,
                            &rb,
                            &a2,
                            &b2,
                            &cells[t1],
                            &r2,
                        )?;
                        let direct =
                            realize_orbit_2cell(tg, cu, cw, tg.g1.mul(e2, e1))?;
                        if whiskered != direct {
                            return Err(Error::AxiomViolation(format!(
                                "realization breaks horizontal composition at 2-cells ({e2}, {e1})"
                            )));
                        }
                    }
                }
            }
            // identity morphisms realize to identity functors
            if a == b {
                let id = o.id_morphism(a);
                if morphs[id] != Functor::identity(&cu.action.space) {
                    return Err(Error::AxiomViolation(format!(
                        "identity morphism at object {a} does not realize to the identity"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Verification entry point for the CLI: builds, validates, reports.
pub fn orbit_report(tg: &TwoGroup, bounds: &Bounds) -> (Option<OrbitTwoCat>, Vec<Check>) {
    let mut checks = Vec::new();
    let o = match build_orbit_2cat(tg, bounds) {
        Ok(o) => o,
        Err(e) => {
            checks.push(Check::fail("orbit-build", "orbit-2-category", e.to_string()));
            return (None, checks);
        }
    };
    checks.push(Check::pass("orbit-build", "orbit-2-category"));
    checks.push(Check::from_result("orbit-axioms", "2-category-axioms", &validate_orbit_2cat(&o)));
    let (ore, witness) = right_ore_check(&o);
    checks.push(if ore {
        Check::pass("orbit-right-ore", "ore-condition")
    } else {
        Check::fail("orbit-right-ore", "ore-condition", witness.unwrap_or_default())
    });
    (Some(o), checks)
}
