//! Functors, natural transformations, and isomorphism checks.

use super::fincat::FinCat;
use crate::error::{Error, Result};

/// A functor as a pair of index tables.  Domain and codomain are supplied to
/// every operation; the tables alone carry no context.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub arr: Vec<usize>,
}

impl Functor {
    pub fn check(dom: &FinCat, cod: &FinCat, obj: Vec<usize>, arr: Vec<usize>) -> Result<Self> {
        let f = Functor { obj, arr };
        f.validate(dom, cod)?;
        Ok(f)
    }

    pub fn validate(&self, dom: &FinCat, cod: &FinCat) -> Result<()> {
        if self.obj.len() != dom.n_objects || self.arr.len() != dom.n_arrows() {
            return Err(Error::AxiomViolation("functor table length mismatch".into()));
        }
        if self.obj.iter().any(|&x| x >= cod.n_objects)
            || self.arr.iter().any(|&f| f >= cod.n_arrows())
        {
            return Err(Error::AxiomViolation("functor image out of range".into()));
        }
        for f in 0..dom.n_arrows() {
            if cod.dom(self.arr[f]) != self.obj[dom.dom(f)]
                || cod.cod(self.arr[f]) != self.obj[dom.cod(f)]
            {
                return Err(Error::AxiomViolation(format!(
                    "functor breaks endpoints at arrow {f}"
                )));
            }
        }
        for x in 0..dom.n_objects {
            if self.arr[dom.id(x)] != cod.id(self.obj[x]) {
                return Err(Error::AxiomViolation(format!(
                    "functor breaks identity at object {x}"
                )));
            }
        }
        for g in 0..dom.n_arrows() {
            for f in 0..dom.n_arrows() {
                if let Some(gf) = dom.compose(g, f) {
                    if cod.compose(self.arr[g], self.arr[f]) != Some(self.arr[gf]) {
                        return Err(Error::AxiomViolation(format!(
                            "functor breaks composition at ({g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(c: &FinCat) -> Self {
        Functor { obj: (0..c.n_objects).collect(), arr: (0..c.n_arrows()).collect() }
    }
}

/// `outer ∘ inner`.
pub fn compose_functors(outer: &Functor, inner: &Functor) -> Functor {
    Functor {
        obj: inner.obj.iter().map(|&x| outer.obj[x]).collect(),
        arr: inner.arr.iter().map(|&f| outer.arr[f]).collect(),
    }
}

/// A natural transformation as a component arrow per domain object.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NatTrans {
    pub comps: Vec<usize>,
}

impl NatTrans {
    pub fn check(
        dom_cat: &FinCat,
        cod_cat: &FinCat,
        f: &Functor,
        g: &Functor,
        comps: Vec<usize>,
    ) -> Result<Self> {
        let t = NatTrans { comps };
        t.validate(dom_cat, cod_cat, f, g)?;
        Ok(t)
    }

    pub fn validate(
        &self,
        dom_cat: &FinCat,
        cod_cat: &FinCat,
        f: &Functor,
        g: &Functor,
    ) -> Result<()> {
        if self.comps.len() != dom_cat.n_objects {
            return Err(Error::AxiomViolation("transformation component count mismatch".into()));
        }
        for (x, &c) in self.comps.iter().enumerate() {
            if c >= cod_cat.n_arrows()
                || cod_cat.dom(c) != f.obj[x]
                || cod_cat.cod(c) != g.obj[x]
            {
                return Err(Error::AxiomViolation(format!(
                    "component at object {x} has wrong endpoints"
                )));
            }
        }
        for m in 0..dom_cat.n_arrows() {
            let x = dom_cat.dom(m);
            let y = dom_cat.cod(m);
            let left = cod_cat.compose(g.arr[m], self.comps[x]);
            let right = cod_cat.compose(self.comps[y], f.arr[m]);
            if left.is_none() || left != right {
                return Err(Error::AxiomViolation(format!(
                    "naturality square fails at arrow {m}"
                )));
            }
        }
        Ok(())
    }

    pub fn identity(c: &FinCat, cod: &FinCat, f: &Functor) -> Self {
        NatTrans { comps: (0..c.n_objects).map(|x| cod.id(f.obj[x])).collect() }
    }
}

/// Vertical composite `t2 ∘ t1` (t1 first).
pub fn vertical_compose(cod_cat: &FinCat, t2: &NatTrans, t1: &NatTrans) -> Result<NatTrans> {
    let comps = t1
        .comps
        .iter()
        .zip(&t2.comps)
        .map(|(&a, &b)| {
            cod_cat
                .compose(b, a)
                .ok_or_else(|| Error::NotComposable("vertical composite undefined".into()))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(NatTrans { comps })
}

/// Horizontal composite of `alpha : F ⇒ G` (between `c → d`) and
/// `beta : H ⇒ K` (between `d → e`).
///
/// Both textbook formulas are evaluated and compared; a mismatch would mean
/// one of the inputs was not natural.
#[allow(clippy::too_many_arguments)]
pub fn horizontal_compose(
    c: &FinCat,
    _d: &FinCat,
    e: &FinCat,
    f: &Functor,
    g: &Functor,
    h: &Functor,
    k: &Functor,
    alpha: &NatTrans,
    beta: &NatTrans,
) -> Result<NatTrans> {
    if alpha.comps.len() != c.n_objects {
        return Err(Error::NotComposable("component count mismatch".into()));
    }
    let mut comps = Vec::with_capacity(c.n_objects);
    for x in 0..c.n_objects {
        let via_g = e
            .compose(beta.comps[g.obj[x]], h.arr[alpha.comps[x]])
            .ok_or_else(|| Error::NotComposable(format!("first formula undefined at {x}")))?;
        let via_f = e
            .compose(k.arr[alpha.comps[x]], beta.comps[f.obj[x]])
            .ok_or_else(|| Error::NotComposable(format!("second formula undefined at {x}")))?;
        if via_g != via_f {
            return Err(Error::AxiomViolation(format!(
                "horizontal composite formulas disagree at object {x}"
            )));
        }
        comps.push(via_g);
    }
    Ok(NatTrans { comps })
}

/// Returns the inverse functor when `f` is an isomorphism of categories,
/// i.e. bijective on objects and on arrows.
pub fn is_iso_of_categories(dom: &FinCat, cod: &FinCat, f: &Functor) -> Option<Functor> {
    if dom.n_objects != cod.n_objects || dom.n_arrows() != cod.n_arrows() {
        return None;
    }
    let mut obj_inv = vec![usize::MAX; cod.n_objects];
    for (x, &y) in f.obj.iter().enumerate() {
        if obj_inv[y] != usize::MAX {
            return None;
        }
        obj_inv[y] = x;
    }
    let mut arr_inv = vec![usize::MAX; cod.n_arrows()];
    for (a, &b) in f.arr.iter().enumerate() {
        if arr_inv[b] != usize::MAX {
            return None;
        }
        arr_inv[b] = a;
    }
    let inv = Functor { obj: obj_inv, arr: arr_inv };
    inv.validate(cod, dom).ok()?;
    debug_assert_eq!(compose_functors(&inv, f), Functor::identity(dom));
    debug_assert_eq!(compose_functors(f, &inv), Functor::identity(cod));
    Some(inv)
}

/// Four textbook functor properties, reported separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorProps {
    pub injective_on_objects: bool,
    pub surjective_on_objects: bool,
    pub faithful: bool,
    pub full: bool,
}

pub fn functor_props(dom: &FinCat, cod: &FinCat, f: &Functor) -> FunctorProps {
    let mut seen = vec![false; cod.n_objects];
    let mut injective_on_objects = true;
    for &y in &f.obj {
        if seen[y] {
            injective_on_objects = false;
        }
        seen[y] = true;
    }
    let surjective_on_objects = seen.iter().all(|&b| b);
    let mut faithful = true;
    let mut full = true;
    for x in 0..dom.n_objects {
        for y in 0..dom.n_objects {
            let hom = dom.arrows_between(x, y);
            let mut images: Vec<usize> = hom.iter().map(|&m| f.arr[m]).collect();
            images.sort_unstable();
            let before = images.len();
            images.dedup();
            if images.len() != before {
                faithful = false;
            }
            let target = cod.arrows_between(f.obj[x], f.obj[y]);
            if target.iter().any(|t| images.binary_search(t).is_err()) {
                full = false;
            }
        }
    }
    FunctorProps { injective_on_objects, surjective_on_objects, faithful, full }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_functor_is_valid() {
        let w = FinCat::walking_arrow();
        Functor::identity(&w).validate(&w, &w).unwrap();
    }

    #[test]
    fn identity_functor_is_an_iso() {
        let w = FinCat::walking_arrow();
        let id = Functor::identity(&w);
        let inv = is_iso_of_categories(&w, &w, &id).unwrap();
        assert_eq!(inv, id);
    }

    #[test]
    fn collapse_functor_is_not_an_iso() {
        let d2 = FinCat::discrete(2);
        let t = FinCat::terminal();
        let f = Functor::check(&d2, &t, vec![0, 0], vec![0, 0]).unwrap();
        assert!(is_iso_of_categories(&d2, &t, &f).is_none());
        let props = functor_props(&d2, &t, &f);
        assert!(!props.injective_on_objects);
        assert!(props.surjective_on_objects && props.faithful);
        assert!(!props.full, "empty hom (0,1) lands in a nonempty one");
    }

    #[test]
    fn horizontal_composition_of_identities_is_identity() {
        let w = FinCat::walking_arrow();
        let idf = Functor::identity(&w);
        let idt = NatTrans::identity(&w, &w, &idf);
        let h = horizontal_compose(&w, &w, &w, &idf, &idf, &idf, &idf, &idt, &idt).unwrap();
        assert_eq!(h, idt);
    }

    #[test]
    fn whiskering_by_identity_transformation() {
        // alpha arbitrary between constant functors on the walking arrow,
        // beta the identity on the identity functor: result is K ∘ alpha.
        let w = FinCat::walking_arrow();
        let c0 = Functor::check(&w, &w, vec![0, 0], vec![0, 0, 0]).unwrap();
        let c1 = Functor::check(&w, &w, vec![1, 1], vec![1, 1, 1]).unwrap();
        let alpha = NatTrans::check(&w, &w, &c0, &c1, vec![2, 2]).unwrap();
        let idf = Functor::identity(&w);
        let beta = NatTrans::identity(&w, &w, &idf);
        let h = horizontal_compose(&w, &w, &w, &c0, &c1, &idf, &idf, &alpha, &beta).unwrap();
        assert_eq!(h.comps, vec![2, 2]);
    }

    #[test]
    fn non_natural_component_family_is_rejected() {
        let w = FinCat::walking_arrow();
        let id = Functor::identity(&w);
        // components (id0, id1) against functors id, id are natural; swap one
        // endpoint by using m as the component at 0 against (id, id): then the
        // square at m requires m ∘ id0 = id1 ∘ m which holds, but endpoints of
        // the component at 1 break.
        assert!(NatTrans::check(&w, &w, &id, &id, vec![2, 1]).is_err());
    }
}
