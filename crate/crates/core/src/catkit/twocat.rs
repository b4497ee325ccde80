//! Strict 2-categories as tables of hom-categories.
//!
//! A 2-category here is a set of objects, one finite hom-category per ordered
//! object pair (kept even when empty), a composition table per object triple,
//! and an identity object per diagonal hom.  Validating the composition
//! tables as functors out of product categories is exactly the interchange
//! law between horizontal and vertical composition; an explicit interchange
//! sweep is run as well.

use super::construct::product_category;
use super::fincat::FinCat;
use super::functor::Functor;
use crate::error::{Error, Result};

/// Composition table for one object triple `(a, b, c)`:
/// `obj[k_bc * hom(a,b).n_objects + k_ab]` composes 1-cells, `arr` likewise
/// for 2-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompTable {
    pub obj: Vec<usize>,
    pub arr: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCat {
    pub n_objects: usize,
    /// Hom-category per ordered pair, index `a * n_objects + b`.
    pub homs: Vec<FinCat>,
    /// Identity 1-cell per object, as an object index of `hom(a, a)`.
    pub ids: Vec<usize>,
    /// Composition per triple, index `(a * n + b) * n + c` for
    /// `hom(b, c) × hom(a, b) → hom(a, c)`.
    pub comp: Vec<CompTable>,
}

impl TwoCat {
    pub fn hom(&self, a: usize, b: usize) -> &FinCat {
        &self.homs[a * self.n_objects + b]
    }

    pub fn comp_table(&self, a: usize, b: usize, c: usize) -> &CompTable {
        &self.comp[(a * self.n_objects + b) * self.n_objects + c]
    }

    /// Composite 1-cell of `f : a → b` and `g : b → c` (objects of homs).
    pub fn comp_obj(&self, a: usize, b: usize, c: usize, g: usize, f: usize) -> usize {
        self.comp_table(a, b, c).obj[g * self.hom(a, b).n_objects + f]
    }

    /// Horizontal composite 2-cell.
    pub fn comp_arr(&self, a: usize, b: usize, c: usize, beta: usize, alpha: usize) -> usize {
        self.comp_table(a, b, c).arr[beta * self.hom(a, b).n_arrows() + alpha]
    }
}

pub fn validate_two_cat(t: &TwoCat) -> Result<()> {
    let n = t.n_objects;
    if t.homs.len() != n * n || t.ids.len() != n || t.comp.len() != n * n * n {
        return Err(Error::AxiomViolation("2-category table shape mismatch".into()));
    }
    for (a, &i) in t.ids.iter().enumerate() {
        if i >= t.hom(a, a).n_objects {
            return Err(Error::AxiomViolation(format!("identity 1-cell of {a} out of range")));
        }
    }
    // composition is a functor out of the product hom(b,c) × hom(a,b)
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let table = t.comp_table(a, b, c);
                let prod = product_category(t.hom(b, c), t.hom(a, b));
                let f = Functor { obj: table.obj.clone(), arr: table.arr.clone() };
                f.validate(&prod.cat, t.hom(a, c)).map_err(|e| {
                    Error::AxiomViolation(format!(
                        "composition ({a},{b},{c}) is not a functor: {e}"
                    ))
                })?;
            }
        }
    }
    // unit laws at both levels
    for a in 0..n {
        for b in 0..n {
            let hom = t.hom(a, b);
            for f in 0..hom.n_objects {
                if t.comp_obj(a, b, b, t.ids[b], f) != f {
                    return Err(Error::AxiomViolation(format!(
                        "left unit law fails at 1-cell {f} of hom({a},{b})"
                    )));
                }
                if t.comp_obj(a, a, b, f, t.ids[a]) != f {
                    return Err(Error::AxiomViolation(format!(
                        "right unit law fails at 1-cell {f} of hom({a},{b})"
                    )));
                }
            }
            let id_b = t.hom(b, b).id(t.ids[b]);
            let id_a = t.hom(a, a).id(t.ids[a]);
            for alpha in 0..hom.n_arrows() {
                if t.comp_arr(a, b, b, id_b, alpha) != alpha
                    || t.comp_arr(a, a, b, alpha, id_a) != alpha
                {
                    return Err(Error::AxiomViolation(format!(
                        "unit law fails at 2-cell {alpha} of hom({a},{b})"
                    )));
                }
            }
        }
    }
    // strict associativity at both levels
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    for f in 0..t.hom(a, b).n_objects {
                        for g in 0..t.hom(b, c).n_objects {
                            for h in 0..t.hom(c, d).n_objects {
                                let left =
                                    t.comp_obj(a, c, d, h, t.comp_obj(a, b, c, g, f));
                                let right =
                                    t.comp_obj(a, b, d, t.comp_obj(b, c, d, h, g), f);
                                if left != right {
                                    return Err(Error::AxiomViolation(format!(
                                        "associativity fails at 1-cells ({h},{g},{f})"
                                    )));
                                }
                            }
                        }
                    }
                    for al in 0..t.hom(a, b).n_arrows() {
                        for be in 0..t.hom(b, c).n_arrows() {
                            for ga in 0..t.hom(c, d).n_arrows() {
                                let left =
                                    t.comp_arr(a, c, d, ga, t.comp_arr(a, b, c, be, al));
                                let right =
                                    t.comp_arr(a, b, d, t.comp_arr(b, c, d, ga, be), al);
                                if left != right {
                                    return Err(Error::AxiomViolation(format!(
                                        "associativity fails at 2-cells ({ga},{be},{al})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // explicit interchange sweep
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let hab = t.hom(a, b);
                let hbc = t.hom(b, c);
                for al1 in 0..hab.n_arrows() {
                    for al2 in 0..hab.n_arrows() {
                        let Some(al) = hab.compose(al2, al1) else { continue };
                        for be1 in 0..hbc.n_arrows() {
                            for be2 in 0..hbc.n_arrows() {
                                let Some(be) = hbc.compose(be2, be1) else { continue };
                                let lhs = t.comp_arr(a, b, c, be, al);
                                let h1 = t.comp_arr(a, b, c, be1, al1);
                                let h2 = t.comp_arr(a, b, c, be2, al2);
                                let rhs = t.hom(a, c).compose(h2, h1);
                                if rhs != Some(lhs) {
                                    return Err(Error::AxiomViolation(format!(
                                        "interchange fails at ({be2},{be1},{al2},{al1}) in hom({a},{b})×hom({b},{c})"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A 2-functor: an object map plus one functor per hom-pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFunctor {
    pub obj: Vec<usize>,
    pub homf: Vec<Functor>,
}

impl TwoFunctor {
    pub fn hom_functor(&self, n_dom: usize, a: usize, b: usize) -> &Functor {
        &self.homf[a * n_dom + b]
    }
}

pub fn validate_two_functor(dom: &TwoCat, cod: &TwoCat, f: &TwoFunctor) -> Result<()> {
    let n = dom.n_objects;
    if f.obj.len() != n || f.homf.len() != n * n {
        return Err(Error::AxiomViolation("2-functor table shape mismatch".into()));
    }
    if f.obj.iter().any(|&x| x >= cod.n_objects) {
        return Err(Error::AxiomViolation("2-functor object image out of range".into()));
    }
    for a in 0..n {
        for b in 0..n {
            f.homf[a * n + b]
                .validate(dom.hom(a, b), cod.hom(f.obj[a], f.obj[b]))
                .map_err(|e| {
                    Error::AxiomViolation(format!("hom functor ({a},{b}) invalid: {e}"))
                })?;
        }
    }
    for a in 0..n {
        if f.homf[a * n + a].obj[dom.ids[a]] != cod.ids[f.obj[a]] {
            return Err(Error::AxiomViolation(format!(
                "2-functor breaks the identity 1-cell at object {a}"
            )));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (fa, fb, fc) = (f.obj[a], f.obj[b], f.obj[c]);
                for g in 0..dom.hom(b, c).n_objects {
                    for h in 0..dom.hom(a, b).n_objects {
                        let lhs = f.homf[a * n + c].obj[dom.comp_obj(a, b, c, g, h)];
                        let rhs = cod.comp_obj(
                            fa,
                            fb,
                            fc,
                            f.homf[b * n + c].obj[g],
                            f.homf[a * n + b].obj[h],
                        );
                        if lhs != rhs {
                            return Err(Error::AxiomViolation(format!(
                                "2-functor breaks 1-cell composition at ({g},{h})"
                            )));
                        }
                    }
                }
                for be in 0..dom.hom(b, c).n_arrows() {
                    for al in 0..dom.hom(a, b).n_arrows() {
                        let lhs = f.homf[a * n + c].arr[dom.comp_arr(a, b, c, be, al)];
                        let rhs = cod.comp_arr(
                            fa,
                            fb,
                            fc,
                            f.homf[b * n + c].arr[be],
                            f.homf[a * n + b].arr[al],
                        );
                        if lhs != rhs {
                            return Err(Error::AxiomViolation(format!(
                                "2-functor breaks horizontal composition at ({be},{al})"
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A 2-natural transformation: a component 1-cell per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoNatTrans {
    /// Component at object `a`: an object of `cod.hom(F a, G a)`.
    pub comps: Vec<usize>,
}

pub fn validate_two_nat_trans(
    dom: &TwoCat,
    cod: &TwoCat,
    f: &TwoFunctor,
    g: &TwoFunctor,
    t: &TwoNatTrans,
) -> Result<()> {
    let n = dom.n_objects;
    if t.comps.len() != n {
        return Err(Error::AxiomViolation("2-natural component count mismatch".into()));
    }
    for a in 0..n {
        if t.comps[a] >= cod.hom(f.obj[a], g.obj[a]).n_objects {
            return Err(Error::AxiomViolation(format!("component at {a} out of range")));
        }
    }
    // 1-naturality: θ_b ∘ F(m) = G(m) ∘ θ_a for every 1-cell m : a → b
    for a in 0..n {
        for b in 0..n {
            for m in 0..dom.hom(a, b).n_objects {
                let fm = f.homf[a * n + b].obj[m];
                let gm = g.homf[a * n + b].obj[m];
                let left = cod.comp_obj(f.obj[a], f.obj[b], g.obj[b], t.comps[b], fm);
                let right = cod.comp_obj(f.obj[a], g.obj[a], g.obj[b], gm, t.comps[a]);
                if left != right {
                    return Err(Error::AxiomViolation(format!(
                        "naturality square fails at 1-cell {m} of hom({a},{b})"
                    )));
                }
            }
            // 2-natural compatibility: θ_b ∗ F(α) = G(α) ∗ θ_a for 2-cells α
            let id_b = cod.hom(f.obj[b], g.obj[b]).id(t.comps[b]);
            let id_a = cod.hom(f.obj[a], g.obj[a]).id(t.comps[a]);
            for al in 0..dom.hom(a, b).n_arrows() {
                let fa = f.homf[a * n + b].arr[al];
                let ga = g.homf[a * n + b].arr[al];
                let left = cod.comp_arr(f.obj[a], f.obj[b], g.obj[b], id_b, fa);
                let right = cod.comp_arr(f.obj[a], g.obj[a], g.obj[b], ga, id_a);
                if left != right {
                    return Err(Error::AxiomViolation(format!(
                        "2-natural compatibility fails at 2-cell {al} of hom({a},{b})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// A modification between parallel 2-natural transformations: a component
/// 2-cell per object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    /// Component at object `a`: an arrow of `cod.hom(F a, G a)`.
    pub comps: Vec<usize>,
}

pub fn validate_modification(
    dom: &TwoCat,
    cod: &TwoCat,
    f: &TwoFunctor,
    g: &TwoFunctor,
    theta: &TwoNatTrans,
    gamma: &TwoNatTrans,
    m: &Modification,
) -> Result<()> {
    let n = dom.n_objects;
    if m.comps.len() != n {
        return Err(Error::AxiomViolation("modification component count mismatch".into()));
    }
    for a in 0..n {
        let hom = cod.hom(f.obj[a], g.obj[a]);
        let c = m.comps[a];
        if c >= hom.n_arrows() || hom.dom(c) != theta.comps[a] || hom.cod(c) != gamma.comps[a]
        {
            return Err(Error::AxiomViolation(format!(
                "modification component at {a} has wrong endpoints"
            )));
        }
    }
    // G(h) ∗ m_a = m_b ∗ F(h) for every 1-cell h : a → b
    for a in 0..n {
        for b in 0..n {
            for h in 0..dom.hom(a, b).n_objects {
                let fh = f.homf[a * n + b].obj[h];
                let gh = g.homf[a * n + b].obj[h];
                let id_gh = cod.hom(g.obj[a], g.obj[b]).id(gh);
                let id_fh = cod.hom(f.obj[a], f.obj[b]).id(fh);
                let left = cod.comp_arr(f.obj[a], g.obj[a], g.obj[b], id_gh, m.comps[a]);
                let right = cod.comp_arr(f.obj[a], f.obj[b], g.obj[b], m.comps[b], id_fh);
                if left != right {
                    return Err(Error::AxiomViolation(format!(
                        "modification condition fails at 1-cell {h} of hom({a},{b})"
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Views a 1-category as a 2-category with only identity 2-cells.
pub fn locally_discrete(c: &FinCat) -> TwoCat {
    let n = c.n_objects;
    let mut homs = Vec::with_capacity(n * n);
    // hom(a, b) is the discrete category on the arrow set a → b
    let mut hom_arrows: Vec<Vec<usize>> = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let arrows = c.arrows_between(a, b);
            homs.push(FinCat::discrete(arrows.len()));
            hom_arrows.push(arrows);
        }
    }
    let ids = (0..n)
        .map(|a| hom_arrows[a * n + a].iter().position(|&f| f == c.id(a)).unwrap())
        .collect();
    let mut comp = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let ab = &hom_arrows[a * n + b];
                let bd = &hom_arrows[b * n + d];
                let ad = &hom_arrows[a * n + d];
                let mut obj = Vec::with_capacity(bd.len() * ab.len());
                for &g in bd {
                    for &f in ab {
                        let gf = c.compose(g, f).expect("composable by construction");
                        obj.push(ad.iter().position(|&h| h == gf).unwrap());
                    }
                }
                comp.push(CompTable { arr: obj.clone(), obj });
            }
        }
    }
    TwoCat { n_objects: n, homs, ids, comp }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locally_discrete_two_cats_are_valid() {
        for c in [FinCat::terminal(), FinCat::walking_arrow(), FinCat::discrete(3)] {
            validate_two_cat(&locally_discrete(&c)).unwrap();
        }
    }

    #[test]
    fn injected_violation_in_hom_composition_is_caught() {
        use super::super::fincat::Arrow;
        // a category with two parallel arrows 0 → 1, viewed locally discretely
        let two_parallel = FinCat::from_comp_fn(
            2,
            vec![
                Arrow { dom: 0, cod: 0 },
                Arrow { dom: 1, cod: 1 },
                Arrow { dom: 0, cod: 1 },
                Arrow { dom: 0, cod: 1 },
            ],
            vec![0, 1],
            |g, f| match (g, f) {
                (0, 0) => Some(0),
                (1, 1) => Some(1),
                (2, 0) | (1, 2) => Some(2),
                (3, 0) | (1, 3) => Some(3),
                _ => None,
            },
        )
        .unwrap();
        let mut t = locally_discrete(&two_parallel);
        validate_two_cat(&t).unwrap();
        // swap the whisker action of the identity on the two parallel 1-cells
        let n = t.n_objects;
        let table = &mut t.comp[(0 * n + 1) * n + 1];
        table.arr.swap(0, 1);
        assert!(matches!(validate_two_cat(&t), Err(Error::AxiomViolation(_))));
    }

    #[test]
    fn identity_two_functor_and_transformation() {
        let w = FinCat::walking_arrow();
        let t = locally_discrete(&w);
        let n = t.n_objects;
        let idf = TwoFunctor {
            obj: (0..n).collect(),
            homf: (0..n * n).map(|k| Functor::identity(&t.homs[k])).collect(),
        };
        validate_two_functor(&t, &t, &idf).unwrap();
        let theta = TwoNatTrans { comps: t.ids.clone() };
        validate_two_nat_trans(&t, &t, &idf, &idf, &theta).unwrap();
        let m = Modification {
            comps: (0..n).map(|a| t.hom(a, a).id(t.ids[a])).collect(),
        };
        validate_modification(&t, &t, &idf, &idf, &theta, &theta, &m).unwrap();
    }
}
