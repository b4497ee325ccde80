//! Brute-force enumeration of functors and natural transformations.
//!
//! Enumeration is complete and deterministic (lexicographic in the index
//! tables).  A candidate-count estimate is compared against the configured
//! bound before any search starts.

use super::fincat::FinCat;
use super::functor::{Functor, NatTrans};
use crate::error::{Error, Result};

fn saturating_product(factors: impl Iterator<Item = usize>) -> usize {
    factors.fold(1usize, |acc, f| acc.saturating_mul(f.max(1)))
}

/// All functors `c → d` in lexicographic order of `(obj, arr)` tables.
pub fn enumerate_functors(c: &FinCat, d: &FinCat, bound: usize) -> Result<Vec<Functor>> {
    if c.n_objects == 0 {
        return Ok(vec![Functor { obj: vec![], arr: vec![] }]);
    }
    if d.n_objects == 0 {
        return Ok(vec![]);
    }
    let max_hom = (0..d.n_objects)
        .flat_map(|x| (0..d.n_objects).map(move |y| (x, y)))
        .map(|(x, y)| d.arrows_between(x, y).len())
        .max()
        .unwrap_or(0);
    let non_id: Vec<usize> = (0..c.n_arrows()).filter(|&f| !c.is_identity(f)).collect();
    let estimate = saturating_product(
        std::iter::repeat_n(d.n_objects, c.n_objects)
            .chain(std::iter::repeat_n(max_hom, non_id.len())),
    );
    if estimate > bound {
        return Err(Error::SizeBoundExceeded { needed: estimate, bound });
    }

    let mut out = Vec::new();
    let mut obj = vec![0usize; c.n_objects];
    enumerate_obj_maps(c, d, &non_id, &mut obj, 0, &mut out);
    Ok(out)
}

fn enumerate_obj_maps(
    c: &FinCat,
    d: &FinCat,
    non_id: &[usize],
    obj: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<Functor>,
) {
    if k == c.n_objects {
        let mut arr = vec![usize::MAX; c.n_arrows()];
        for x in 0..c.n_objects {
            arr[c.id(x)] = d.id(obj[x]);
        }
        enumerate_arr_maps(c, d, obj, non_id, &mut arr, 0, out);
        return;
    }
    for y in 0..d.n_objects {
        obj[k] = y;
        enumerate_obj_maps(c, d, non_id, obj, k + 1, out);
    }
}

fn compositions_consistent(c: &FinCat, d: &FinCat, arr: &[usize]) -> bool {
    for g in 0..c.n_arrows() {
        if arr[g] == usize::MAX {
            continue;
        }
        for f in 0..c.n_arrows() {
            if arr[f] == usize::MAX {
                continue;
            }
            if let Some(gf) = c.compose(g, f) {
                if arr[gf] == usize::MAX {
                    continue;
                }
                if d.compose(arr[g], arr[f]) != Some(arr[gf]) {
                    return false;
                }
            }
        }
    }
    true
}

fn enumerate_arr_maps(
    c: &FinCat,
    d: &FinCat,
    obj: &[usize],
    non_id: &[usize],
    arr: &mut Vec<usize>,
    k: usize,
    out: &mut Vec<Functor>,
) {
    if k == non_id.len() {
        out.push(Functor { obj: obj.to_vec(), arr: arr.clone() });
        return;
    }
    let f = non_id[k];
    for cand in d.arrows_between(obj[c.dom(f)], obj[c.cod(f)]) {
        arr[f] = cand;
        if compositions_consistent(c, d, arr) {
            enumerate_arr_maps(c, d, obj, non_id, arr, k + 1, out);
        }
        arr[f] = usize::MAX;
    }
}

/// All natural transformations `f ⇒ g` for parallel functors `c → d`.
pub fn enumerate_nat_trans(
    c: &FinCat,
    d: &FinCat,
    f: &Functor,
    g: &Functor,
    bound: usize,
) -> Result<Vec<NatTrans>> {
    let candidates: Vec<Vec<usize>> = (0..c.n_objects)
        .map(|x| d.arrows_between(f.obj[x], g.obj[x]))
        .collect();
    let estimate = saturating_product(candidates.iter().map(|v| v.len()));
    if estimate > bound {
        return Err(Error::SizeBoundExceeded { needed: estimate, bound });
    }
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; c.n_objects];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        c: &FinCat,
        d: &FinCat,
        f: &Functor,
        g: &Functor,
        candidates: &[Vec<usize>],
        comps: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<NatTrans>,
    ) {
        if k == c.n_objects {
            out.push(NatTrans { comps: comps.clone() });
            return;
        }
        'next: for &cand in &candidates[k] {
            comps[k] = cand;
            // check naturality on arrows with both endpoints assigned
            for m in 0..c.n_arrows() {
                let x = c.dom(m);
                let y = c.cod(m);
                if comps[x] == usize::MAX || comps[y] == usize::MAX {
                    continue;
                }
                if d.compose(g.arr[m], comps[x]) != d.compose(comps[y], f.arr[m]) {
                    comps[k] = usize::MAX;
                    continue 'next;
                }
            }
            rec(c, d, f, g, candidates, comps, k + 1, out);
            comps[k] = usize::MAX;
        }
    }
    rec(c, d, f, g, &candidates, &mut comps, 0, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: usize = 1_000_000;

    #[test]
    fn functors_from_terminal_pick_objects() {
        let t = FinCat::terminal();
        let w = FinCat::walking_arrow();
        assert_eq!(enumerate_functors(&t, &w, B).unwrap().len(), w.n_objects);
    }

    #[test]
    fn walking_arrow_endofunctors() {
        // oracle: every (obj, arr) table pair that passes validation
        let w = FinCat::walking_arrow();
        let mut oracle = 0;
        for o0 in 0..2 {
            for o1 in 0..2 {
                for m in 0..3 {
                    let f = Functor {
                        obj: vec![o0, o1],
                        arr: vec![w.id(o0), w.id(o1), m],
                    };
                    if f.validate(&w, &w).is_ok() {
                        oracle += 1;
                    }
                }
            }
        }
        let found = enumerate_functors(&w, &w, B).unwrap();
        assert_eq!(found.len(), oracle);
        assert_eq!(found.len(), 3);
        for f in &found {
            f.validate(&w, &w).unwrap();
        }
    }

    #[test]
    fn nat_trans_between_identities_on_discrete() {
        let d = FinCat::discrete(3);
        let id = Functor::identity(&d);
        assert_eq!(enumerate_nat_trans(&d, &d, &id, &id, B).unwrap().len(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        let d = FinCat::discrete(4);
        assert!(matches!(
            enumerate_functors(&d, &d, 3),
            Err(Error::SizeBoundExceeded { .. })
        ));
    }

    #[test]
    fn functors_into_empty() {
        let d = FinCat::discrete(2);
        let e = FinCat::empty();
        assert!(enumerate_functors(&d, &e, B).unwrap().is_empty());
        assert_eq!(enumerate_functors(&e, &d, B).unwrap().len(), 1);
    }
}
