//! Strict 2-groups as category objects in groups.
//!
//! A 2-group is a pair of finite groups `G0` (objects) and `G1` (arrows)
//! with homomorphisms `d0, d1 : G1 → G0` (domain and codomain),
//! `i : G0 → G1` (identity arrows), and a partial composition on arrows
//! defined exactly on composable pairs.  The tensor is the group law itself:
//! on objects it is multiplication in `G0`, on arrows multiplication in `G1`,
//! and the interchange law `(g ⊗ h)(k ⊗ l) = (g ∘ k) ⊗ (h ∘ l)` ties the two
//! operations together.
//!
//! Composition is stored explicitly and validated rather than derived from
//! the closed formula `g ∘ f = g · i(d1 f)⁻¹ · f`; the formula is checked as
//! a property afterwards so that malformed input cannot hide behind it.
//!
//! Crossed modules — a homomorphism `∂ : H → G` with a `G`-action on `H`
//! satisfying equivariance and the Peiffer identity — are the classical
//! equivalent presentation; converters in both directions live here, with a
//! verified isomorphism for the round trip.  All groups carry the discrete
//! topology, so openness and continuity conditions are vacuous and are not
//! computed.

use std::collections::BTreeSet;

use crate::bounds::Bounds;
use crate::catkit::{Arrow, FinCat};
use crate::error::{Error, Result};
use crate::grp::{
    conjugate_subgroup, enumerate_subgroups, validate_subgroup, FiniteGroup, GroupHom, Subgroup,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoGroup {
    pub g0: FiniteGroup,
    pub g1: FiniteGroup,
    pub d0: GroupHom,
    pub d1: GroupHom,
    pub i: GroupHom,
    comp: Vec<Option<usize>>,
}

impl TwoGroup {
    /// Validates the full category-object structure, including the
    /// interchange law over every composable quadruple.
    pub fn validate(
        g0: FiniteGroup,
        g1: FiniteGroup,
        d0: GroupHom,
        d1: GroupHom,
        i: GroupHom,
        comp: Vec<Option<usize>>,
    ) -> Result<Self> {
        let n1 = g1.order();
        GroupHom::check(&g1, &g0, d0.map.clone())?;
        GroupHom::check(&g1, &g0, d1.map.clone())?;
        GroupHom::check(&g0, &g1, i.map.clone())?;
        for a in g0.elements() {
            if d0.apply(i.apply(a)) != a || d1.apply(i.apply(a)) != a {
                return Err(Error::AxiomViolation(format!(
                    "d∘i is not the identity at object {a}"
                )));
            }
        }
        if comp.len() != n1 * n1 {
            return Err(Error::BadTable("composition table has wrong shape".into()));
        }
        let tg = TwoGroup { g0, g1, d0, d1, i, comp };
        // the underlying data must be a category
        tg.underlying()?;
        // composition as a homomorphism on the group of composable pairs is
        // exactly the interchange law
        for g in tg.g1.elements() {
            for k in tg.g1.elements() {
                let Some(gk) = tg.comp_arr(g, k) else { continue };
                for h in tg.g1.elements() {
                    for l in tg.g1.elements() {
                        let Some(hl) = tg.comp_arr(h, l) else { continue };
                        let lhs = tg
                            .comp_arr(tg.g1.mul(g, h), tg.g1.mul(k, l))
                            .ok_or(Error::InterchangeViolation { g, h, k, l })?;
                        if lhs != tg.g1.mul(gk, hl) {
                            return Err(Error::InterchangeViolation { g, h, k, l });
                        }
                    }
                }
            }
        }
        // closed-formula cross-check: g ∘ f = g · i(d1 f)⁻¹ · f
        for g in tg.g1.elements() {
            for f in tg.g1.elements() {
                if let Some(c) = tg.comp_arr(g, f) {
                    let expect =
                        tg.g1.mul(tg.g1.mul(g, tg.g1.inv(tg.i.apply(tg.d1.apply(f)))), f);
                    if c != expect {
                        return Err(Error::AxiomViolation(format!(
                            "composition at ({g}, {f}) disagrees with the interchange-derived formula"
                        )));
                    }
                }
            }
        }
        Ok(tg)
    }

    /// The underlying finite category: objects are `G0`, arrows are `G1`.
    pub fn underlying(&self) -> Result<FinCat> {
        let arrows = self
            .g1
            .elements()
            .map(|g| Arrow { dom: self.d0.apply(g), cod: self.d1.apply(g) })
            .collect();
        let identity = self.i.map.clone();
        FinCat::new(self.g0.order(), arrows, identity, self.comp.clone())
    }

    pub fn arrow_dom(&self, g: usize) -> usize {
        self.d0.apply(g)
    }

    pub fn arrow_cod(&self, g: usize) -> usize {
        self.d1.apply(g)
    }

    pub fn id_arrow(&self, a: usize) -> usize {
        self.i.apply(a)
    }

    /// `g ∘ f` (f first), defined when `d1(f) = d0(g)`.
    pub fn comp_arr(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.g1.order() + f]
    }

    /// Compositional inverse `1_A ⊗ g⁻¹ ⊗ 1_B` of an arrow `g : A → B`.
    pub fn comp_inverse(&self, g: usize) -> usize {
        let a = self.arrow_dom(g);
        let b = self.arrow_cod(g);
        self.g1
            .mul(self.g1.mul(self.id_arrow(a), self.g1.inv(g)), self.id_arrow(b))
    }

    pub fn trivial() -> Self {
        TwoGroup {
            g0: FiniteGroup::trivial(),
            g1: FiniteGroup::trivial(),
            d0: GroupHom { map: vec![0] },
            d1: GroupHom { map: vec![0] },
            i: GroupHom { map: vec![0] },
            comp: vec![Some(0)],
        }
    }

    /// The discrete 2-group on `g`: only identity arrows.
    pub fn discrete(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut comp = vec![None; n * n];
        for x in 0..n {
            comp[x * n + x] = Some(x);
        }
        let id = GroupHom::identity(g);
        TwoGroup { g0: g.clone(), g1: g.clone(), d0: id.clone(), d1: id.clone(), i: id, comp }
    }

    /// The one-object 2-group on an abelian group `a`: composition is forced
    /// to coincide with the tensor.
    pub fn one_object(a: &FiniteGroup) -> Result<Self> {
        let n = a.order();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = Some(a.mul(g, f));
            }
        }
        TwoGroup::validate(
            FiniteGroup::trivial(),
            a.clone(),
            GroupHom { map: vec![0; n] },
            GroupHom { map: vec![0; n] },
            GroupHom { map: vec![0] },
            comp,
        )
    }
}

/// A crossed module `∂ : H → G` with a left `G`-action on `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedModule {
    pub base: FiniteGroup,
    pub fiber: FiniteGroup,
    pub boundary: GroupHom,
    /// `action[g * |H| + h]` is `g · h`.
    pub action: Vec<usize>,
}

impl CrossedModule {
    pub fn validate(
        base: FiniteGroup,
        fiber: FiniteGroup,
        boundary: GroupHom,
        action: Vec<usize>,
    ) -> Result<Self> {
        GroupHom::check(&fiber, &base, boundary.map.clone())?;
        let (ng, nh) = (base.order(), fiber.order());
        if action.len() != ng * nh {
            return Err(Error::BadTable("crossed module action table shape".into()));
        }
        if action.iter().any(|&v| v >= nh) {
            return Err(Error::BadTable("crossed module action image out of range".into()));
        }
        let act = |g: usize, h: usize| action[g * nh + h];
        for h in fiber.elements() {
            if act(0, h) != h {
                return Err(Error::CrossedModuleViolation(format!(
                    "unit law fails at fiber element {h}"
                )));
            }
        }
        for g in base.elements() {
            for g2 in base.elements() {
                for h in fiber.elements() {
                    if act(base.mul(g, g2), h) != act(g, act(g2, h)) {
                        return Err(Error::CrossedModuleViolation(format!(
                            "action law fails at ({g}, {g2}, {h})"
                        )));
                    }
                }
            }
            for h in fiber.elements() {
                for h2 in fiber.elements() {
                    if act(g, fiber.mul(h, h2)) != fiber.mul(act(g, h), act(g, h2)) {
                        return Err(Error::CrossedModuleViolation(format!(
                            "action of {g} is not an automorphism at ({h}, {h2})"
                        )));
                    }
                }
            }
        }
        // equivariance: ∂(g·h) = g ∂(h) g⁻¹
        for g in base.elements() {
            for h in fiber.elements() {
                let lhs = boundary.apply(act(g, h));
                let rhs = base.mul(base.mul(g, boundary.apply(h)), base.inv(g));
                if lhs != rhs {
                    return Err(Error::CrossedModuleViolation(format!(
                        "equivariance fails at ({g}, {h})"
                    )));
                }
            }
        }
        // Peiffer identity: ∂(h)·h' = h h' h⁻¹
        for h in fiber.elements() {
            for h2 in fiber.elements() {
                let lhs = act(boundary.apply(h), h2);
                let rhs = fiber.mul(fiber.mul(h, h2), fiber.inv(h));
                if lhs != rhs {
                    return Err(Error::CrossedModuleViolation(format!(
                        "Peiffer identity fails at ({h}, {h2})"
                    )));
                }
            }
        }
        Ok(CrossedModule { base, fiber, boundary, action })
    }

    pub fn act(&self, g: usize, h: usize) -> usize {
        self.action[g * self.fiber.order() + h]
    }
}

/// Builds the 2-group of a crossed module: `G1` is the semidirect product
/// `H ⋊ G` with `(h, g)(h', g') = (h · (g·h'), g g')`, `d0(h, g) = g`,
/// `d1(h, g) = ∂h · g`, `i(g) = (e, g)`.
pub fn from_crossed_module(xm: &CrossedModule) -> Result<TwoGroup> {
    let ng = xm.base.order();
    let nh = xm.fiber.order();
    let n1 = nh * ng;
    let ix = |h: usize, g: usize| h * ng + g;
    let mut table = vec![vec![0usize; n1]; n1];
    for h in 0..nh {
        for g in 0..ng {
            for h2 in 0..nh {
                for g2 in 0..ng {
                    table[ix(h, g)][ix(h2, g2)] =
                        ix(xm.fiber.mul(h, xm.act(g, h2)), xm.base.mul(g, g2));
                }
            }
        }
    }
    let g1 = FiniteGroup::validate(&table)?;
    let mut d0 = vec![0; n1];
    let mut d1 = vec![0; n1];
    for h in 0..nh {
        for g in 0..ng {
            d0[ix(h, g)] = g;
            d1[ix(h, g)] = xm.base.mul(xm.boundary.apply(h), g);
        }
    }
    let i = (0..ng).map(|g| ix(0, g)).collect();
    let mut comp = vec![None; n1 * n1];
    for h1 in 0..nh {
        for g in 0..ng {
            let f = ix(h1, g);
            let mid = xm.base.mul(xm.boundary.apply(h1), g);
            for h2 in 0..nh {
                let s = ix(h2, mid);
                comp[s * n1 + f] = Some(ix(xm.fiber.mul(h2, h1), g));
            }
        }
    }
    TwoGroup::validate(
        xm.base.clone(),
        g1,
        GroupHom { map: d0 },
        GroupHom { map: d1 },
        GroupHom { map: i },
        comp,
    )
}

/// Extracts the crossed module of a 2-group: fiber = kernel of `d0`,
/// boundary = `d1` restricted, action by conjugation with identity arrows.
/// Also returns the kernel elements as indices of `G1`.
pub fn to_crossed_module(tg: &TwoGroup) -> Result<(CrossedModule, Vec<usize>)> {
    let kernel: Vec<usize> = tg.g1.elements().filter(|&g| tg.arrow_dom(g) == 0).collect();
    let nh = kernel.len();
    let pos = |g: usize| kernel.binary_search(&g).expect("kernel is closed");
    let mut table = vec![vec![0usize; nh]; nh];
    for (a, &x) in kernel.iter().enumerate() {
        for (b, &y) in kernel.iter().enumerate() {
            table[a][b] = pos(tg.g1.mul(x, y));
        }
    }
    let fiber = FiniteGroup::validate(&table)?;
    let boundary =
        GroupHom::check(&fiber, &tg.g0, kernel.iter().map(|&g| tg.arrow_cod(g)).collect())?;
    let mut action = vec![0usize; tg.g0.order() * nh];
    for g in tg.g0.elements() {
        let ig = tg.id_arrow(g);
        for (b, &h) in kernel.iter().enumerate() {
            action[g * nh + b] = pos(tg.g1.mul(tg.g1.mul(ig, h), tg.g1.inv(ig)));
        }
    }
    let xm = CrossedModule::validate(tg.g0.clone(), fiber, boundary, action)?;
    Ok((xm, kernel))
}

/// An isomorphism of 2-groups: compatible group isomorphisms at both levels.
#[derive(Debug, Clone)]
pub struct TwoGroupIso {
    pub phi0: Vec<usize>,
    pub phi1: Vec<usize>,
}

/// Checks that `(phi0, phi1)` is an isomorphism `a → b` of 2-groups.
pub fn check_two_group_iso(a: &TwoGroup, b: &TwoGroup, iso: &TwoGroupIso) -> Result<()> {
    let h0 = GroupHom::check(&a.g0, &b.g0, iso.phi0.clone())?;
    let h1 = GroupHom::check(&a.g1, &b.g1, iso.phi1.clone())?;
    let bij = |v: &[usize], n: usize| {
        let mut seen = vec![false; n];
        v.len() == n && v.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
    };
    if !bij(&iso.phi0, b.g0.order()) || !bij(&iso.phi1, b.g1.order()) {
        return Err(Error::AxiomViolation("2-group map is not bijective".into()));
    }
    for g in a.g1.elements() {
        if b.arrow_dom(h1.apply(g)) != h0.apply(a.arrow_dom(g))
            || b.arrow_cod(h1.apply(g)) != h0.apply(a.arrow_cod(g))
        {
            return Err(Error::AxiomViolation(format!(
                "2-group map breaks endpoints at arrow {g}"
            )));
        }
    }
    for x in a.g0.elements() {
        if h1.apply(a.id_arrow(x)) != b.id_arrow(h0.apply(x)) {
            return Err(Error::AxiomViolation(format!(
                "2-group map breaks identity arrows at object {x}"
            )));
        }
    }
    for g in a.g1.elements() {
        for f in a.g1.elements() {
            match (a.comp_arr(g, f), b.comp_arr(h1.apply(g), h1.apply(f))) {
                (Some(c), Some(c2)) if h1.apply(c) == c2 => {}
                (None, None) => {}
                _ => {
                    return Err(Error::AxiomViolation(format!(
                        "2-group map breaks composition at ({g}, {f})"
                    )))
                }
            }
        }
    }
    Ok(())
}

/// The canonical round-trip isomorphism
/// `from_crossed_module(to_crossed_module(G)) → G`, `(h, g) ↦ h ⊗ 1_g`.
pub fn round_trip_iso(tg: &TwoGroup) -> Result<(TwoGroup, TwoGroupIso)> {
    let (xm, kernel) = to_crossed_module(tg)?;
    let rebuilt = from_crossed_module(&xm)?;
    let ng = tg.g0.order();
    let mut phi1 = vec![0usize; rebuilt.g1.order()];
    for (hpos, &h) in kernel.iter().enumerate() {
        for g in 0..ng {
            phi1[hpos * ng + g] = tg.g1.mul(h, tg.id_arrow(g));
        }
    }
    let iso = TwoGroupIso { phi0: (0..ng).collect(), phi1 };
    check_two_group_iso(&rebuilt, tg, &iso)?;
    Ok((rebuilt, iso))
}

/// A sub-2-group: subgroups at both levels, closed under the structure maps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubTwoGroup {
    pub u0: Subgroup,
    pub u1: Subgroup,
}

impl SubTwoGroup {
    pub fn validate(tg: &TwoGroup, u0: Vec<usize>, u1: Vec<usize>) -> Result<Self> {
        let u0 = validate_subgroup(&tg.g0, u0)?;
        let u1 = validate_subgroup(&tg.g1, u1)?;
        for &g in &u1.members {
            if !u0.contains(tg.arrow_dom(g)) || !u0.contains(tg.arrow_cod(g)) {
                return Err(Error::NotSubgroup(format!(
                    "arrow {g} has an endpoint outside the object part"
                )));
            }
        }
        for &a in &u0.members {
            if !u1.contains(tg.id_arrow(a)) {
                return Err(Error::NotSubgroup(format!(
                    "identity arrow of object {a} missing from the arrow part"
                )));
            }
        }
        for &g in &u1.members {
            for &f in &u1.members {
                if let Some(c) = tg.comp_arr(g, f) {
                    if !u1.contains(c) {
                        return Err(Error::NotSubgroup(format!(
                            "not closed under composition at ({g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(SubTwoGroup { u0, u1 })
    }

    pub fn is_bottom(&self) -> bool {
        self.u0.len() == 1 && self.u1.len() == 1
    }

    pub fn leq(&self, other: &SubTwoGroup) -> bool {
        self.u0.members.iter().all(|&a| other.u0.contains(a))
            && self.u1.members.iter().all(|&g| other.u1.contains(g))
    }
}

/// All sub-2-groups, sorted by size then lexicographically.
pub fn enumerate_sub_two_groups(tg: &TwoGroup, bounds: &Bounds) -> Result<Vec<SubTwoGroup>> {
    if tg.g0.order() > bounds.max_group_order {
        return Err(Error::SizeBoundExceeded {
            needed: tg.g0.order(),
            bound: bounds.max_group_order,
        });
    }
    if tg.g1.order() > bounds.max_g1_order {
        return Err(Error::SizeBoundExceeded {
            needed: tg.g1.order(),
            bound: bounds.max_g1_order,
        });
    }
    let subs0 = enumerate_subgroups(&tg.g0);
    let subs1 = enumerate_subgroups(&tg.g1);
    let mut out = Vec::new();
    for u0 in &subs0 {
        for u1 in &subs1 {
            if SubTwoGroup::validate(tg, u0.members.clone(), u1.members.clone()).is_ok() {
                out.push(SubTwoGroup { u0: u0.clone(), u1: u1.clone() });
            }
        }
    }
    out.sort_by(|a, b| {
        (a.u0.len(), a.u1.len(), &a.u0.members, &a.u1.members).cmp(&(
            b.u0.len(),
            b.u1.len(),
            &b.u0.members,
            &b.u1.members,
        ))
    });
    Ok(out)
}

/// Conjugate sub-2-group `A⁻¹ 𝒰 A`: objects conjugated by `A` in `G0`,
/// arrows conjugated by `1_A` in `G1`.
pub fn conjugate_sub_two_group(tg: &TwoGroup, u: &SubTwoGroup, a: usize) -> SubTwoGroup {
    let u0 = conjugate_subgroup(&tg.g0, &u.u0, a);
    let u1 = conjugate_subgroup(&tg.g1, &u.u1, tg.id_arrow(a));
    SubTwoGroup::validate(tg, u0.members, u1.members)
        .expect("conjugate of a sub-2-group is a sub-2-group")
}

/// The inclusion poset of all sub-2-groups, with meets by intersection.
#[derive(Debug, Clone)]
pub struct SubTwoGroupPoset {
    pub subs: Vec<SubTwoGroup>,
    leq: Vec<bool>,
}

impl SubTwoGroupPoset {
    pub fn build(tg: &TwoGroup, bounds: &Bounds) -> Result<Self> {
        let subs = enumerate_sub_two_groups(tg, bounds)?;
        let n = subs.len();
        let mut leq = vec![false; n * n];
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                leq[i * n + j] = a.leq(b);
            }
        }
        let poset = SubTwoGroupPoset { subs, leq };
        assert!(poset.subs[0].is_bottom(), "bottom sub-2-group sorts first");
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.subs.len() + j]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn index_of(&self, u: &SubTwoGroup) -> Option<usize> {
        self.subs.iter().position(|s| s == u)
    }

    /// Componentwise intersection, validated, returned as a poset index.
    pub fn meet(&self, tg: &TwoGroup, i: usize, j: usize) -> usize {
        let a = &self.subs[i];
        let b = &self.subs[j];
        let u0: Vec<usize> =
            a.u0.members.iter().copied().filter(|&x| b.u0.contains(x)).collect();
        let u1: Vec<usize> =
            a.u1.members.iter().copied().filter(|&g| b.u1.contains(g)).collect();
        let m = SubTwoGroup::validate(tg, u0, u1)
            .expect("intersection of sub-2-groups is a sub-2-group");
        self.index_of(&m).expect("intersection appears in the enumeration")
    }
}

/// Independent brute-force oracle used by the acceptance suite: scans all
/// subset pairs (not the subgroup lattice) with a directly-written closure
/// predicate.
pub fn sub_two_group_count_oracle(tg: &TwoGroup) -> usize {
    let n0 = tg.g0.order();
    let n1 = tg.g1.order();
    assert!(n0 <= 8 && n1 <= 8, "oracle only for small groups");
    let mut count = 0;
    for m0 in 0u32..(1 << n0) {
        if m0 & 1 == 0 {
            continue;
        }
        let u0: BTreeSet<usize> = (0..n0).filter(|&x| m0 >> x & 1 == 1).collect();
        if !u0.iter().all(|&a| {
            u0.contains(&tg.g0.inv(a)) && u0.iter().all(|&b| u0.contains(&tg.g0.mul(a, b)))
        }) {
            continue;
        }
        'outer: for m1 in 0u32..(1 << n1) {
            if m1 & 1 == 0 {
                continue;
            }
            let u1: BTreeSet<usize> = (0..n1).filter(|&g| m1 >> g & 1 == 1).collect();
            for &g in &u1 {
                if !u1.contains(&tg.g1.inv(g)) {
                    continue 'outer;
                }
                if !u0.contains(&tg.arrow_dom(g)) || !u0.contains(&tg.arrow_cod(g)) {
                    continue 'outer;
                }
                for &h in &u1 {
                    if !u1.contains(&tg.g1.mul(g, h)) {
                        continue 'outer;
                    }
                    if let Some(c) = tg.comp_arr(g, h) {
                        if !u1.contains(&c) {
                            continue 'outer;
                        }
                    }
                }
            }
            if u0.iter().any(|&a| !u1.contains(&tg.id_arrow(a))) {
                continue 'outer;
            }
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn trivial_and_discrete_two_groups_validate() {
        let t = TwoGroup::trivial();
        t.underlying().unwrap();
        let d = TwoGroup::discrete(&FiniteGroup::cyclic(2));
        TwoGroup::validate(
            d.g0.clone(),
            d.g1.clone(),
            d.d0.clone(),
            d.d1.clone(),
            d.i.clone(),
            d.comp.clone(),
        )
        .unwrap();
    }

    #[test]
    fn one_object_s3_candidate_fails_interchange() {
        let s3 = FiniteGroup::symmetric(3);
        let n = s3.order();
        let mut comp = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                comp[g * n + f] = Some(s3.mul(g, f));
            }
        }
        let err = TwoGroup::validate(
            FiniteGroup::trivial(),
            s3.clone(),
            GroupHom { map: vec![0; n] },
            GroupHom { map: vec![0; n] },
            GroupHom { map: vec![0] },
            comp,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InterchangeViolation { .. }), "got {err:?}");
    }

    #[test]
    fn comp_inverse_works_on_all_fixtures() {
        for (_, tg) in fixtures::bundled_two_groups() {
            for g in tg.g1.elements() {
                let ginv = tg.comp_inverse(g);
                let a = tg.arrow_dom(g);
                let b = tg.arrow_cod(g);
                assert_eq!(tg.arrow_dom(ginv), b);
                assert_eq!(tg.arrow_cod(ginv), a);
                assert_eq!(tg.comp_arr(ginv, g), Some(tg.id_arrow(a)));
                assert_eq!(tg.comp_arr(g, ginv), Some(tg.id_arrow(b)));
            }
        }
    }

    #[test]
    fn comp_inverse_in_one_object_group_is_group_inverse() {
        let one = TwoGroup::one_object(&FiniteGroup::cyclic(3)).unwrap();
        for g in one.g1.elements() {
            assert_eq!(one.comp_inverse(g), one.g1.inv(g));
        }
    }

    #[test]
    fn crossed_module_round_trips() {
        for (_, tg) in fixtures::bundled_two_groups() {
            round_trip_iso(&tg).unwrap();
        }
        round_trip_iso(&fixtures::xm_neg_z3_z2()).unwrap();
    }

    #[test]
    fn from_crossed_module_special_cases() {
        // trivial fiber over G gives the discrete 2-group
        let z3 = FiniteGroup::cyclic(3);
        let xm = CrossedModule::validate(
            z3.clone(),
            FiniteGroup::trivial(),
            GroupHom { map: vec![0] },
            vec![0, 0, 0],
        )
        .unwrap();
        let tg = from_crossed_module(&xm).unwrap();
        assert_eq!(tg.g1.order(), 3);
        assert!(tg.g1.elements().all(|g| tg.arrow_dom(g) == tg.arrow_cod(g)));

        // abelian fiber over the trivial base gives the one-object 2-group
        let z2 = FiniteGroup::cyclic(2);
        let xm = CrossedModule::validate(
            FiniteGroup::trivial(),
            z2.clone(),
            GroupHom { map: vec![0, 0] },
            vec![0, 1],
        )
        .unwrap();
        let tg = from_crossed_module(&xm).unwrap();
        assert_eq!(tg.g0.order(), 1);
        assert_eq!(tg.g1.order(), 2);

        // identity boundary on Z/2 with trivial action: |G1| = 4
        let tg = fixtures::xm_id_z2();
        assert_eq!(tg.g1.order(), 4);
    }

    #[test]
    fn sub_two_group_counts() {
        let cases: Vec<(TwoGroup, usize)> = vec![
            (TwoGroup::trivial(), 1),
            (TwoGroup::discrete(&FiniteGroup::cyclic(2)), 2),
            (TwoGroup::one_object(&FiniteGroup::cyclic(2)).unwrap(), 2),
            (fixtures::xm_id_z2(), 3),
        ];
        let b = Bounds::default();
        for (tg, expect) in cases {
            let subs = enumerate_sub_two_groups(&tg, &b).unwrap();
            assert_eq!(subs.len(), expect);
            assert_eq!(sub_two_group_count_oracle(&tg), expect);
        }
    }

    #[test]
    fn conjugation_is_involutive_and_closed() {
        let b = Bounds::default();
        let mut all: Vec<TwoGroup> =
            fixtures::bundled_two_groups().into_iter().map(|(_, tg)| tg).collect();
        all.push(fixtures::xm_neg_z3_z2());
        for tg in all {
            let subs = enumerate_sub_two_groups(&tg, &b).unwrap();
            for u in &subs {
                for a in tg.g0.elements() {
                    let c = conjugate_sub_two_group(&tg, u, a);
                    assert!(subs.contains(&c));
                    assert_eq!(c.u0.len(), u.u0.len());
                    assert_eq!(c.u1.len(), u.u1.len());
                    let back = conjugate_sub_two_group(&tg, &c, tg.g0.inv(a));
                    assert_eq!(&back, u);
                }
            }
        }
    }

    #[test]
    fn poset_has_bottom_top_and_meets() {
        let b = Bounds::default();
        for tg in [fixtures::xm_id_z2(), fixtures::xm_neg_z3_z2()] {
            let poset = SubTwoGroupPoset::build(&tg, &b).unwrap();
            assert!(poset.subs[poset.bottom()].is_bottom());
            let top = &poset.subs[poset.top()];
            assert_eq!(top.u0.len(), tg.g0.order());
            assert_eq!(top.u1.len(), tg.g1.order());
            for i in 0..poset.len() {
                assert!(poset.leq(poset.bottom(), i));
                assert!(poset.leq(i, poset.top()));
                assert_eq!(poset.meet(&tg, poset.top(), i), i);
                for j in 0..poset.len() {
                    // the meet is the greatest lower bound
                    let m = poset.meet(&tg, i, j);
                    assert!(poset.leq(m, i) && poset.leq(m, j));
                    for k in 0..poset.len() {
                        if poset.leq(k, i) && poset.leq(k, j) {
                            assert!(poset.leq(k, m));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn discrete_chain_poset() {
        let b = Bounds::default();
        let d = TwoGroup::discrete(&FiniteGroup::cyclic(2));
        let poset = SubTwoGroupPoset::build(&d, &b).unwrap();
        assert_eq!(poset.len(), 2);
        assert!(poset.leq(0, 1) && !poset.leq(1, 0));
    }
}
