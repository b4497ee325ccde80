//! Products, arrow categories, and strict pullbacks of finite categories.

use super::fincat::{Arrow, FinCat};
use super::functor::Functor;
use crate::error::Result;

/// Product category with its index bookkeeping.
#[derive(Debug, Clone)]
pub struct Product {
    pub cat: FinCat,
    n2_objects: usize,
    n2_arrows: usize,
}

impl Product {
    pub fn obj_ix(&self, a: usize, b: usize) -> usize {
        a * self.n2_objects + b
    }

    pub fn arr_ix(&self, f: usize, g: usize) -> usize {
        f * self.n2_arrows + g
    }

    pub fn obj_pair(&self, k: usize) -> (usize, usize) {
        (k / self.n2_objects, k % self.n2_objects)
    }

    pub fn arr_pair(&self, k: usize) -> (usize, usize) {
        (k / self.n2_arrows, k % self.n2_arrows)
    }
}

pub fn product_category(c: &FinCat, d: &FinCat) -> Product {
    let n2o = d.n_objects;
    let n2a = d.n_arrows();
    let mut arrows = Vec::with_capacity(c.n_arrows() * n2a);
    for f in 0..c.n_arrows() {
        for g in 0..n2a {
            arrows.push(Arrow {
                dom: c.dom(f) * n2o + d.dom(g),
                cod: c.cod(f) * n2o + d.cod(g),
            });
        }
    }
    let identity = (0..c.n_objects * n2o)
        .map(|k| c.id(k / n2o) * n2a + d.id(k % n2o))
        .collect();
    let cat = FinCat::from_comp_fn(c.n_objects * n2o, arrows, identity, |k2, k1| {
        let (f2, g2) = (k2 / n2a, k2 % n2a);
        let (f1, g1) = (k1 / n2a, k1 % n2a);
        match (c.compose(f2, f1), d.compose(g2, g1)) {
            (Some(f), Some(g)) => Some(f * n2a + g),
            _ => None,
        }
    })
    .expect("product of valid categories is valid");
    Product { cat, n2_objects: n2o, n2_arrows: n2a }
}

/// Arrow category: objects are the arrows of `c`, morphisms are commuting
/// squares `(p, q)` with `v ∘ p = q ∘ u`.
#[derive(Debug, Clone)]
pub struct ArrowCat {
    pub cat: FinCat,
    /// Per arrow of the arrow category: the square sides `(p, q)`.
    pub sides: Vec<(usize, usize)>,
}

pub fn arrow_category(c: &FinCat) -> ArrowCat {
    let n = c.n_arrows();
    let mut arrows = Vec::new();
    let mut sides = Vec::new();
    for u in 0..n {
        for v in 0..n {
            for p in c.arrows_between(c.dom(u), c.dom(v)) {
                for q in c.arrows_between(c.cod(u), c.cod(v)) {
                    if c.compose(v, p) == c.compose(q, u) {
                        arrows.push(Arrow { dom: u, cod: v });
                        sides.push((p, q));
                    }
                }
            }
        }
    }
    let identity = (0..n)
        .map(|u| {
            let want = (c.id(c.dom(u)), c.id(c.cod(u)));
            arrows
                .iter()
                .zip(&sides)
                .position(|(a, s)| a.dom == u && a.cod == u && *s == want)
                .expect("identity square present")
        })
        .collect();
    let arrows_cl = arrows.clone();
    let sides_cl = sides.clone();
    let lookup = move |dom: usize, cod: usize, p: usize, q: usize| {
        arrows_cl
            .iter()
            .zip(&sides_cl)
            .position(|(a, s)| a.dom == dom && a.cod == cod && *s == (p, q))
    };
    let arrows_c2 = arrows.clone();
    let sides_c2 = sides.clone();
    let cat = FinCat::from_comp_fn(n, arrows, identity, |k2, k1| {
        let (a2, a1) = (&arrows_c2[k2], &arrows_c2[k1]);
        if a1.cod != a2.dom {
            return None;
        }
        let (p2, q2) = sides_c2[k2];
        let (p1, q1) = sides_c2[k1];
        let p = c.compose(p2, p1)?;
        let q = c.compose(q2, q1)?;
        lookup(a1.dom, a2.cod, p, q)
    })
    .expect("arrow category of a valid category is valid");
    ArrowCat { cat, sides }
}

/// Strict pullback of `f : a → c` against `g : b → c`.
#[derive(Debug, Clone)]
pub struct Pullback {
    pub cat: FinCat,
    pub obj_pairs: Vec<(usize, usize)>,
    pub arr_pairs: Vec<(usize, usize)>,
    pub proj_left: Functor,
    pub proj_right: Functor,
}

pub fn strict_pullback(
    a: &FinCat,
    b: &FinCat,
    _c: &FinCat,
    f: &Functor,
    g: &Functor,
) -> Result<Pullback> {
    let mut obj_pairs = Vec::new();
    for x in 0..a.n_objects {
        for y in 0..b.n_objects {
            if f.obj[x] == g.obj[y] {
                obj_pairs.push((x, y));
            }
        }
    }
    let obj_ix = |x: usize, y: usize| obj_pairs.iter().position(|&p| p == (x, y));
    let mut arr_pairs = Vec::new();
    let mut arrows = Vec::new();
    for m in 0..a.n_arrows() {
        for n in 0..b.n_arrows() {
            if f.arr[m] == g.arr[n] {
                let dom = obj_ix(a.dom(m), b.dom(n)).expect("endpoints agree");
                let cod = obj_ix(a.cod(m), b.cod(n)).expect("endpoints agree");
                arr_pairs.push((m, n));
                arrows.push(Arrow { dom, cod });
            }
        }
    }
    let arr_ix = |m: usize, n: usize| arr_pairs.iter().position(|&p| p == (m, n));
    let identity = obj_pairs
        .iter()
        .map(|&(x, y)| arr_ix(a.id(x), b.id(y)).expect("identity pair present"))
        .collect();
    let arr_pairs_cl = arr_pairs.clone();
    let cat = FinCat::from_comp_fn(obj_pairs.len(), arrows, identity, |k2, k1| {
        let (m2, n2) = arr_pairs_cl[k2];
        let (m1, n1) = arr_pairs_cl[k1];
        let m = a.compose(m2, m1)?;
        let n = b.compose(n2, n1)?;
        arr_ix(m, n)
    })?;
    let proj_left = Functor {
        obj: obj_pairs.iter().map(|&(x, _)| x).collect(),
        arr: arr_pairs.iter().map(|&(m, _)| m).collect(),
    };
    let proj_right = Functor {
        obj: obj_pairs.iter().map(|&(_, y)| y).collect(),
        arr: arr_pairs.iter().map(|&(_, n)| n).collect(),
    };
    proj_left.validate(&cat, a)?;
    proj_right.validate(&cat, b)?;
    Ok(Pullback { cat, obj_pairs, arr_pairs, proj_left, proj_right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catkit::is_iso_of_categories;

    #[test]
    fn product_with_terminal_is_isomorphic_to_factor() {
        let w = FinCat::walking_arrow();
        let p = product_category(&w, &FinCat::terminal());
        assert_eq!(p.cat.n_objects, w.n_objects);
        assert_eq!(p.cat.n_arrows(), w.n_arrows());
        let f = Functor {
            obj: (0..p.cat.n_objects).map(|k| p.obj_pair(k).0).collect(),
            arr: (0..p.cat.n_arrows()).map(|k| p.arr_pair(k).0).collect(),
        };
        f.validate(&p.cat, &w).unwrap();
        assert!(is_iso_of_categories(&p.cat, &w, &f).is_some());
    }

    #[test]
    fn arrow_category_of_terminal_is_terminal() {
        let a = arrow_category(&FinCat::terminal());
        assert_eq!(a.cat.n_objects, 1);
        assert_eq!(a.cat.n_arrows(), 1);
    }

    #[test]
    fn arrow_category_of_walking_arrow() {
        // oracle: enumerate commuting squares directly
        let w = FinCat::walking_arrow();
        let mut squares = 0;
        for u in 0..3 {
            for v in 0..3 {
                for p in 0..3 {
                    for q in 0..3 {
                        if w.dom(p) == w.dom(u)
                            && w.cod(p) == w.dom(v)
                            && w.dom(q) == w.cod(u)
                            && w.cod(q) == w.cod(v)
                            && w.compose(v, p) == w.compose(q, u)
                        {
                            squares += 1;
                        }
                    }
                }
            }
        }
        let a = arrow_category(&w);
        assert_eq!(a.cat.n_objects, 3);
        assert_eq!(a.cat.n_arrows(), squares);
        assert_eq!(squares, 6);
    }

    #[test]
    fn pullback_along_identity_is_the_other_leg() {
        let w = FinCat::walking_arrow();
        let d = FinCat::discrete(2);
        let f = Functor::check(&d, &w, vec![0, 1], vec![0, 1]).unwrap();
        let idw = Functor::identity(&w);
        let pb = strict_pullback(&d, &w, &w, &f, &idw).unwrap();
        assert!(is_iso_of_categories(&pb.cat, &d, &pb.proj_left).is_some());
    }

    #[test]
    fn pullback_over_terminal_is_product() {
        let w = FinCat::walking_arrow();
        let d = FinCat::discrete(2);
        let t = FinCat::terminal();
        let to_t = |c: &FinCat| Functor {
            obj: vec![0; c.n_objects],
            arr: vec![0; c.n_arrows()],
        };
        let pb = strict_pullback(&w, &d, &t, &to_t(&w), &to_t(&d)).unwrap();
        let pr = product_category(&w, &d);
        assert_eq!(pb.cat.n_objects, pr.cat.n_objects);
        assert_eq!(pb.cat.n_arrows(), pr.cat.n_arrows());
    }
}
