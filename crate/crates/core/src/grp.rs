//! Exact finite group arithmetic over multiplication tables.
//!
//! Elements are dense indices `0..order` with `0` always the identity.
//! Validation is exhaustive — associativity is checked on all triples — and
//! derived structures (subgroups, homomorphisms) are re-verified rather than
//! trusted.
//!
//! Permutation input composes left-to-right: `mul(p, q)` applies `p` first.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};

/// A finite group presented by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table and derives the inverse table.
    pub fn validate(table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadTable("empty table".into()));
        }
        let mut mult = Vec::with_capacity(order * order);
        for row in table {
            if row.len() != order {
                return Err(Error::BadTable(format!(
                    "row of length {} in a table of order {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= order {
                    return Err(Error::BadTable(format!("entry {v} out of range")));
                }
                mult.push(v);
            }
        }
        // 0 must be a two-sided identity.
        for a in 0..order {
            if mult[a] != a {
                return Err(Error::NoIdentity(a));
            }
            if mult[a * order] != a {
                return Err(Error::NoIdentity(a));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let ab_c = mult[mult[a * order + b] * order + c];
                    let a_bc = mult[a * order + mult[b * order + c]];
                    if ab_c != a_bc {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mut inverse = vec![usize::MAX; order];
        for a in 0..order {
            match (0..order).find(|&b| mult[a * order + b] == 0 && mult[b * order + a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::NoInverse(a)),
            }
        }
        Ok(FiniteGroup { order, mult, inverse })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugate of `u` by `a`, namely `a⁻¹ u a`.
    pub fn conj_by(&self, u: usize, a: usize) -> usize {
        self.mul(self.mul(self.inv(a), u), a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order)
            .all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial() -> Self {
        FiniteGroup { order: 1, mult: vec![0], inverse: vec![0] }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                mult.push((a + b) % n);
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        FiniteGroup { order: n, mult, inverse }
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let n = self.order * other.order;
        let ix = |a: usize, b: usize| a * other.order + b;
        let mut mult = vec![0; n * n];
        for a0 in 0..self.order {
            for b0 in 0..other.order {
                for a1 in 0..self.order {
                    for b1 in 0..other.order {
                        mult[ix(a0, b0) * n + ix(a1, b1)] =
                            ix(self.mul(a0, a1), other.mul(b0, b1));
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..self.order {
            for b in 0..other.order {
                inverse[ix(a, b)] = ix(self.inv(a), other.inv(b));
            }
        }
        FiniteGroup { order: n, mult, inverse }
    }

    /// Closes a set of permutations of `0..degree` under left-to-right
    /// composition and returns the group together with the sorted element
    /// permutations (the identity permutation is element `0`).
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>)> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree {
                return Err(Error::BadTable("permutation of wrong degree".into()));
            }
            for &v in g {
                if v >= degree || seen[v] {
                    return Err(Error::BadTable("not a permutation".into()));
                }
                seen[v] = true;
            }
        }
        // compose(p, q) applies p first, then q
        let compose =
            |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&x| q[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::new();
        elems.insert(id.clone());
        for g in gens {
            elems.insert(g.clone());
        }
        loop {
            let mut fresh = Vec::new();
            for p in &elems {
                for q in &elems {
                    let r = compose(p, q);
                    if !elems.contains(&r) {
                        fresh.push(r);
                    }
                }
            }
            if fresh.is_empty() {
                break;
            }
            elems.extend(fresh);
        }
        let perms: Vec<Vec<usize>> = elems.into_iter().collect();
        let index: BTreeMap<&Vec<usize>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        assert_eq!(index[&id], 0, "identity permutation must sort first");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| perms.iter().map(|q| index[&compose(p, q)]).collect())
            .collect();
        Ok((Self::validate(&table)?, perms))
    }

    pub fn symmetric(n: usize) -> Self {
        if n <= 1 {
            return Self::trivial();
        }
        let mut gens = Vec::new();
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(cycle);
        Self::from_permutations(n, &gens).expect("symmetric group closure").0
    }
}

/// A validated group homomorphism, stored as a per-element image table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn check(dom: &FiniteGroup, cod: &FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.order() {
            return Err(Error::BadTable("homomorphism table has wrong length".into()));
        }
        if map.iter().any(|&v| v >= cod.order()) {
            return Err(Error::BadTable("homomorphism image out of range".into()));
        }
        if map[0] != 0 {
            return Err(Error::NotHomomorphic { a: 0, b: 0 });
        }
        for a in dom.elements() {
            for b in dom.elements() {
                if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphic { a, b });
                }
            }
        }
        Ok(GroupHom { map })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom { map: (0..g.order()).collect() }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }
}

/// A subgroup, stored as a sorted member list.  The parent group is passed
/// explicitly to every operation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    pub members: Vec<usize>,
}

impl Subgroup {
    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn validate_subgroup(g: &FiniteGroup, mut members: Vec<usize>) -> Result<Subgroup> {
    members.sort_unstable();
    members.dedup();
    if members.iter().any(|&m| m >= g.order()) {
        return Err(Error::NotSubgroup("member out of range".into()));
    }
    if members.binary_search(&0).is_err() {
        return Err(Error::NotSubgroup("missing identity".into()));
    }
    for &a in &members {
        if members.binary_search(&g.inv(a)).is_err() {
            return Err(Error::NotSubgroup(format!("not closed under inverse at {a}")));
        }
        for &b in &members {
            if members.binary_search(&g.mul(a, b)).is_err() {
                return Err(Error::NotSubgroup(format!(
                    "not closed under multiplication at ({a}, {b})"
                )));
            }
        }
    }
    Ok(Subgroup { members })
}

/// The subgroup generated by `gens`, computed by closure.
pub fn generated_subgroup(g: &FiniteGroup, gens: &[usize]) -> Subgroup {
    let mut set: BTreeSet<usize> = BTreeSet::new();
    set.insert(0);
    set.extend(gens.iter().copied());
    loop {
        let mut fresh = Vec::new();
        for &a in &set {
            let ia = g.inv(a);
            if !set.contains(&ia) {
                fresh.push(ia);
            }
            for &b in &set {
                let ab = g.mul(a, b);
                if !set.contains(&ab) {
                    fresh.push(ab);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        set.extend(fresh);
    }
    Subgroup { members: set.into_iter().collect() }
}

/// All subgroups, complete, sorted by size then lexicographically.
///
/// Works by closing generated subsets rather than scanning the power set, so
/// orders up to two dozen or so stay cheap.
pub fn enumerate_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
    while let Some(h) = frontier.pop() {
        for a in g.elements() {
            if h.binary_search(&a).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(a);
            let sub = generated_subgroup(g, &gens);
            if found.insert(sub.members.clone()) {
                frontier.push(sub.members);
            }
        }
    }
    let mut subs: Vec<Subgroup> = found.into_iter().map(|members| Subgroup { members }).collect();
    subs.sort_by(|a, b| (a.len(), &a.members).cmp(&(b.len(), &b.members)));
    subs
}

/// The conjugate subgroup `{a⁻¹ u a : u ∈ U}`.
pub fn conjugate_subgroup(g: &FiniteGroup, u: &Subgroup, a: usize) -> Subgroup {
    let mut members: Vec<usize> = u.members.iter().map(|&m| g.conj_by(m, a)).collect();
    members.sort_unstable();
    Subgroup { members }
}

/// Validates a candidate map as a homomorphism.
pub fn check_hom(dom: &FiniteGroup, cod: &FiniteGroup, map: Vec<usize>) -> Result<GroupHom> {
    GroupHom::check(dom, cod, map)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: every subset containing 0, kept if closed.
    fn subgroups_by_subsets(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        assert!(n <= 16, "oracle only for small groups");
        let mut out = Vec::new();
        for mask in 0..(1u32 << n) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members.iter().all(|&a| {
                members.contains(&g.inv(a))
                    && members.iter().all(|&b| members.contains(&g.mul(a, b)))
            });
            if closed {
                out.push(members);
            }
        }
        out
    }

    #[test]
    fn trivial_group_is_valid() {
        let g = FiniteGroup::validate(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn z2_table_is_valid() {
        let g = FiniteGroup::validate(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn s3_from_permutations_is_valid_order_6() {
        let (g, perms) = FiniteGroup::from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(perms[0], vec![0, 1, 2]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn invalid_tables_are_rejected_with_witnesses() {
        // row 0 not the identity row
        assert!(matches!(
            FiniteGroup::validate(&[vec![1, 0], vec![0, 1]]),
            Err(Error::NoIdentity(_))
        ));
        // Z/2 with broken associativity cell: 1*1 = 1 makes 1 non-invertible
        assert!(matches!(
            FiniteGroup::validate(&[vec![0, 1], vec![1, 1]]),
            Err(Error::NotAssociative { .. }) | Err(Error::NoInverse(1))
        ));
    }

    #[test]
    fn subgroup_counts_match_subset_oracle() {
        for g in [
            FiniteGroup::trivial(),
            FiniteGroup::cyclic(4),
            FiniteGroup::symmetric(3),
            FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2)),
        ] {
            let fast: Vec<Vec<usize>> =
                enumerate_subgroups(&g).into_iter().map(|s| s.members).collect();
            let mut oracle = subgroups_by_subsets(&g);
            oracle.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
            assert_eq!(fast, oracle);
        }
        assert_eq!(enumerate_subgroups(&FiniteGroup::trivial()).len(), 1);
        assert_eq!(enumerate_subgroups(&FiniteGroup::cyclic(4)).len(), 3);
        assert_eq!(enumerate_subgroups(&FiniteGroup::symmetric(3)).len(), 6);
    }

    #[test]
    fn zp_has_exactly_two_subgroups() {
        for p in [2usize, 3, 5, 7] {
            assert_eq!(enumerate_subgroups(&FiniteGroup::cyclic(p)).len(), 2);
        }
    }

    #[test]
    fn conjugation_fixes_subgroups_in_abelian_parents() {
        let g = FiniteGroup::cyclic(6);
        for u in enumerate_subgroups(&g) {
            for a in g.elements() {
                assert_eq!(conjugate_subgroup(&g, &u, a), u);
            }
        }
    }

    #[test]
    fn s3_conjugation_moves_transposition_subgroup() {
        let (g, perms) = FiniteGroup::from_permutations(
            3,
            &[vec![1, 0, 2], vec![1, 2, 0]],
        )
        .unwrap();
        let find = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let t01 = find(&[1, 0, 2]); // swaps the first two points
        let t12 = find(&[0, 2, 1]); // swaps the last two points
        let c = find(&[1, 2, 0]); // 3-cycle 0→1→2→0
        let u = generated_subgroup(&g, &[t01]);
        let conj = conjugate_subgroup(&g, &u, c);
        assert_eq!(conj, generated_subgroup(&g, &[t12]));
    }

    #[test]
    fn conjugates_stay_in_subgroup_enumeration() {
        let g = FiniteGroup::symmetric(3);
        let subs = enumerate_subgroups(&g);
        for u in &subs {
            for a in g.elements() {
                let c = conjugate_subgroup(&g, u, a);
                assert_eq!(c.len(), u.len());
                assert!(subs.contains(&c));
                let back = conjugate_subgroup(&g, &c, g.inv(a));
                assert_eq!(&back, u);
            }
        }
    }

    #[test]
    fn hom_validation() {
        let z4 = FiniteGroup::cyclic(4);
        let z3 = FiniteGroup::cyclic(3);
        let z2 = FiniteGroup::cyclic(2);
        assert!(check_hom(&z4, &z4, vec![0, 1, 2, 3]).is_ok());
        assert!(check_hom(&z4, &z2, vec![0, 1, 0, 1]).is_ok());
        // no nontrivial hom Z/3 → Z/2: every non-constant map fails
        for m1 in 0..2 {
            for m2 in 0..2 {
                if m1 == 0 && m2 == 0 {
                    continue;
                }
                assert!(check_hom(&z3, &z2, vec![0, m1, m2]).is_err());
            }
        }
    }

    #[test]
    fn validated_subgroups_reject_junk() {
        let z4 = FiniteGroup::cyclic(4);
        assert!(validate_subgroup(&z4, vec![0, 2]).is_ok());
        assert!(validate_subgroup(&z4, vec![0, 1]).is_err());
        assert!(validate_subgroup(&z4, vec![2]).is_err());
    }
}
