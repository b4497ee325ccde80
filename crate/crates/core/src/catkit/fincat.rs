//! Finite categories as explicit tables.

use crate::error::{Error, Result};

/// An arrow with its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    pub dom: usize,
    pub cod: usize,
}

/// A finite category.  `comp[g * n_arrows + f]` is `g ∘ f` (apply `f` first),
/// present exactly when `cod(f) = dom(g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCat {
    pub n_objects: usize,
    pub arrows: Vec<Arrow>,
    pub identity: Vec<usize>,
    comp: Vec<Option<usize>>,
}

impl FinCat {
    pub fn new(
        n_objects: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        comp: Vec<Option<usize>>,
    ) -> Result<Self> {
        let cat = FinCat { n_objects, arrows, identity, comp };
        cat.check()?;
        Ok(cat)
    }

    /// Builds the composition table from a closure and validates.
    pub fn from_comp_fn(
        n_objects: usize,
        arrows: Vec<Arrow>,
        identity: Vec<usize>,
        comp: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let n = arrows.len();
        let mut table = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                table[g * n + f] = comp(g, f);
            }
        }
        Self::new(n_objects, arrows, identity, table)
    }

    fn check(&self) -> Result<()> {
        let n = self.arrows.len();
        if self.identity.len() != self.n_objects {
            return Err(Error::AxiomViolation("identity table length mismatch".into()));
        }
        if self.comp.len() != n * n {
            return Err(Error::AxiomViolation("composition table length mismatch".into()));
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.dom >= self.n_objects || a.cod >= self.n_objects {
                return Err(Error::AxiomViolation(format!("arrow {i} endpoint out of range")));
            }
        }
        for (x, &i) in self.identity.iter().enumerate() {
            if i >= n {
                return Err(Error::AxiomViolation(format!("identity of object {x} out of range")));
            }
            if self.arrows[i].dom != x || self.arrows[i].cod != x {
                return Err(Error::AxiomViolation(format!(
                    "identity of object {x} is not an endo-arrow at {x}"
                )));
            }
        }
        for g in 0..n {
            for f in 0..n {
                let defined = self.comp[g * n + f];
                let composable = self.arrows[f].cod == self.arrows[g].dom;
                match (defined, composable) {
                    (Some(_), false) => {
                        return Err(Error::AxiomViolation(format!(
                            "comp({g}, {f}) defined on a non-composable pair"
                        )))
                    }
                    (None, true) => {
                        return Err(Error::AxiomViolation(format!(
                            "comp({g}, {f}) missing on a composable pair"
                        )))
                    }
                    (Some(h), true) => {
                        if h >= n {
                            return Err(Error::AxiomViolation(format!(
                                "comp({g}, {f}) out of range"
                            )));
                        }
                        if self.arrows[h].dom != self.arrows[f].dom
                            || self.arrows[h].cod != self.arrows[g].cod
                        {
                            return Err(Error::AxiomViolation(format!(
                                "comp({g}, {f}) = {h} has mismatched endpoints"
                            )));
                        }
                    }
                    (None, false) => {}
                }
            }
        }
        for (f, a) in self.arrows.iter().enumerate() {
            if self.comp[self.identity[a.cod] * n + f] != Some(f) {
                return Err(Error::AxiomViolation(format!("left identity law fails at {f}")));
            }
            if self.comp[f * n + self.identity[a.dom]] != Some(f) {
                return Err(Error::AxiomViolation(format!("right identity law fails at {f}")));
            }
        }
        for f in 0..n {
            for g in 0..n {
                if self.arrows[f].cod != self.arrows[g].dom {
                    continue;
                }
                let gf = self.comp[g * n + f].unwrap();
                for h in 0..n {
                    if self.arrows[g].cod != self.arrows[h].dom {
                        continue;
                    }
                    let hg = self.comp[h * n + g].unwrap();
                    if self.comp[h * n + gf] != self.comp[hg * n + f] {
                        return Err(Error::AxiomViolation(format!(
                            "associativity fails at ({h}, {g}, {f})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn dom(&self, f: usize) -> usize {
        self.arrows[f].dom
    }

    pub fn cod(&self, f: usize) -> usize {
        self.arrows[f].cod
    }

    pub fn id(&self, x: usize) -> usize {
        self.identity[x]
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.arrows[f].dom] == f && self.arrows[f].dom == self.arrows[f].cod
    }

    /// `g ∘ f`, present when `cod(f) = dom(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp[g * self.arrows.len() + f]
    }

    pub fn arrows_between(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.n_arrows())
            .filter(|&f| self.arrows[f].dom == x && self.arrows[f].cod == y)
            .collect()
    }

    pub fn terminal() -> Self {
        FinCat {
            n_objects: 1,
            arrows: vec![Arrow { dom: 0, cod: 0 }],
            identity: vec![0],
            comp: vec![Some(0)],
        }
    }

    pub fn empty() -> Self {
        FinCat { n_objects: 0, arrows: vec![], identity: vec![], comp: vec![] }
    }

    pub fn discrete(n: usize) -> Self {
        let arrows = (0..n).map(|i| Arrow { dom: i, cod: i }).collect();
        let identity = (0..n).collect();
        let mut comp = vec![None; n * n];
        for i in 0..n {
            comp[i * n + i] = Some(i);
        }
        FinCat { n_objects: n, arrows, identity, comp }
    }

    /// The category `• → •`.
    pub fn walking_arrow() -> Self {
        let arrows = vec![
            Arrow { dom: 0, cod: 0 },
            Arrow { dom: 1, cod: 1 },
            Arrow { dom: 0, cod: 1 },
        ];
        FinCat::from_comp_fn(2, arrows, vec![0, 1], |g, f| match (g, f) {
            (0, 0) => Some(0),
            (1, 1) => Some(1),
            (2, 0) => Some(2),
            (1, 2) => Some(2),
            _ => None,
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_and_discrete_are_valid() {
        FinCat::terminal().check().unwrap();
        FinCat::discrete(3).check().unwrap();
        FinCat::empty().check().unwrap();
        FinCat::walking_arrow().check().unwrap();
    }

    #[test]
    fn mismatched_codomain_in_composition_is_rejected() {
        // two objects, identities plus m: 0 → 1; corrupt comp(m, id0) to id0
        let arrows = vec![
            Arrow { dom: 0, cod: 0 },
            Arrow { dom: 1, cod: 1 },
            Arrow { dom: 0, cod: 1 },
        ];
        let mut comp = vec![None; 9];
        comp[0] = Some(0);
        comp[3 + 1] = Some(1);
        comp[2 * 3] = Some(0); // comp(m, id0) = id0: endpoint mismatch
        comp[3 + 2] = Some(2);
        let err = FinCat::new(2, arrows, vec![0, 1], comp).unwrap_err();
        assert!(matches!(err, Error::AxiomViolation(_)));
    }

    #[test]
    fn hom_sets() {
        let w = FinCat::walking_arrow();
        assert_eq!(w.arrows_between(0, 1), vec![2]);
        assert!(w.arrows_between(1, 0).is_empty());
        assert_eq!(w.compose(1, 2), Some(2));
        assert_eq!(w.compose(2, 2), None);
    }
}
