use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::RationalFunction;
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape, SkewTableau};

/// A morphism `λ → μ` of the path category: a linear combination of
/// standard tableaux of shape `μ/λ`. The zero morphism has no terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathMorphism {
    source: Partition,
    target: Partition,
    terms: BTreeMap<SkewTableau, RationalFunction>,
}

impl PathMorphism {
    pub fn zero(source: Partition, target: Partition) -> Result<Self> {
        SkewShape::new(source.clone(), target.clone())?;
        Ok(Self { source, target, terms: BTreeMap::new() })
    }

    /// The empty path at `p`.
    pub fn identity(p: Partition) -> Self {
        Self::from_tableau(SkewTableau::identity(p))
    }

    pub fn from_tableau(t: SkewTableau) -> Self {
        let source = t.shape().inner().clone();
        let target = t.shape().outer().clone();
        Self { source, target, terms: BTreeMap::from([(t, RationalFunction::one())]) }
    }

    /// `Σ coeffs[k] · basis[k]`; every tableau must have shape `shape`.
    pub fn from_coordinates(shape: &SkewShape, basis: &[SkewTableau], coeffs: &[RationalFunction]) -> Result<Self> {
        if basis.len() != coeffs.len() {
            return Err(Error::PreconditionViolation("basis and coordinate lengths differ".into()));
        }
        let mut m = Self::zero(shape.inner().clone(), shape.outer().clone())?;
        for (t, c) in basis.iter().zip(coeffs) {
            if t.shape() != shape {
                return Err(Error::SourceTargetMismatch(format!("tableau of shape {} in {shape}", t.shape())));
            }
            m.add_term(t.clone(), c.clone());
        }
        Ok(m)
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Partition {
        &self.target
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.source.clone(), self.target.clone()).expect("checked on construction")
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SkewTableau, &RationalFunction)> {
        self.terms.iter()
    }

    /// Coefficients against `basis`; tableaux outside it are an error.
    pub fn coordinates(&self, basis: &[SkewTableau]) -> Result<Vec<RationalFunction>> {
        let mut out = vec![RationalFunction::zero(); basis.len()];
        let mut matched = 0;
        for (k, t) in basis.iter().enumerate() {
            if let Some(c) = self.terms.get(t) {
                out[k] = c.clone();
                matched += 1;
            }
        }
        if matched != self.terms.len() {
            return Err(Error::PreconditionViolation("morphism has terms outside the basis".into()));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self { source: self.source.clone(), target: self.target.clone(), terms: BTreeMap::new() };
        for (t, x) in &self.terms {
            out.add_term(t.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (&self.source, &self.target) != (&other.source, &other.target) {
            return Err(Error::SourceTargetMismatch(format!(
                "cannot add {}->{} and {}->{}",
                self.source, self.target, other.source, other.target
            )));
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    fn add_term(&mut self, t: SkewTableau, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }
}

/// `g ∘ f`: the bilinear extension of path concatenation, `f` first.
pub fn path_compose(g: &PathMorphism, f: &PathMorphism) -> Result<PathMorphism> {
    if f.target != g.source {
        return Err(Error::SourceTargetMismatch(format!(
            "f ends at {} but g starts at {}",
            f.target, g.source
        )));
    }
    let mut out = PathMorphism::zero(f.source.clone(), g.target.clone())?;
    for (s, x) in &f.terms {
        for (t, y) in &g.terms {
            out.add_term(s.concat(t)?, x * y);
        }
    }
    Ok(out)
}

impl Serialize for PathMorphism {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            boxes: &'a [crate::shapes::Cell],
            coefficient: &'a RationalFunction,
        }
        let terms: Vec<_> = self.terms.iter().map(|(t, c)| Term { boxes: t.cells(), coefficient: c }).collect();
        let mut st = s.serialize_struct("PathMorphism", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_skew_tableaux, Cell};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn tab(inner: &str, outer: &str, cells: &[(usize, usize)]) -> SkewTableau {
        let shape = SkewShape::new(p(inner), p(outer)).unwrap();
        SkewTableau::from_cells(shape, cells.iter().map(|&(r, c)| Cell::new(r, c)).collect()).unwrap()
    }

    #[test]
    fn identity_is_unital() {
        let f = PathMorphism::from_tableau(tab("1", "2,1", &[(1, 2), (2, 1)]));
        assert_eq!(path_compose(&PathMorphism::identity(p("2,1")), &f).unwrap(), f);
        assert_eq!(path_compose(&f, &PathMorphism::identity(p("1"))).unwrap(), f);
    }

    #[test]
    fn single_boxes_concatenate_to_row() {
        let f = PathMorphism::from_tableau(tab("", "1", &[(1, 1)]));
        let g = PathMorphism::from_tableau(tab("1", "2", &[(1, 2)]));
        let row = enumerate_skew_tableaux(&SkewShape::new(p(""), p("2")).unwrap()).remove(0);
        assert_eq!(path_compose(&g, &f).unwrap(), PathMorphism::from_tableau(row));
        assert!(matches!(path_compose(&f, &g), Err(Error::SourceTargetMismatch(_))));
    }

    #[test]
    fn sum_over_intermediates_reaches_every_path() {
        // every tableau of (2,1)/∅ factors uniquely through its first box
        let outer = p("2,1");
        let mut total = PathMorphism::zero(p(""), outer.clone()).unwrap();
        let first = PathMorphism::from_tableau(tab("", "1", &[(1, 1)]));
        for nu in [p("2"), p("1,1")] {
            let rest = SkewShape::new(p("1"), nu.clone()).unwrap();
            for t1 in enumerate_skew_tableaux(&rest) {
                let last = SkewShape::new(nu.clone(), outer.clone()).unwrap();
                for t2 in enumerate_skew_tableaux(&last) {
                    let g = PathMorphism::from_tableau(t1.concat(&t2).unwrap());
                    total = total.add(&path_compose(&g, &first).unwrap()).unwrap();
                }
            }
        }
        let basis = enumerate_skew_tableaux(&SkewShape::straight(outer));
        assert_eq!(total.terms().count(), basis.len());
        assert!(total.coordinates(&basis).unwrap().iter().all(RationalFunction::is_one));
    }

    #[test]
    fn cancellation_yields_zero() {
        let f = PathMorphism::from_tableau(tab("", "1", &[(1, 1)]));
        let z = f.add(&f.scale(&RationalFunction::from_int(-1))).unwrap();
        assert!(z.is_zero());
    }
}
