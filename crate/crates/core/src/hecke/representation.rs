use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use super::seminormal::{BlockConvention, MatrixBuilder};
use crate::arith::{QMatrix, RatMatrix, RationalFunction};
use crate::error::{Error, Result};
use crate::shapes::{enumerate_skew_tableaux, SkewShape, SkewTableau};

/// A word `g_{i₁} g_{i₂} ⋯` in the Hecke generators (1-based indices).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeckeWord(pub Vec<usize>);

impl HeckeWord {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for HeckeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let letters: Vec<_> = self.0.iter().map(|i| format!("g{i}")).collect();
        f.write_str(&letters.join(" "))
    }
}

/// Seminormal representation of `H_n` on the standard tableaux of a skew
/// shape with `n` boxes.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewRepresentation {
    shape: SkewShape,
    basis: Vec<SkewTableau>,
    generators: Vec<QMatrix>,
}

/// One relation that failed to hold exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum RelationFailure {
    Quadratic { i: usize },
    Braid { i: usize },
    FarCommutation { i: usize, j: usize },
}

impl fmt::Display for RelationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Quadratic { i } => write!(f, "g{i}^2 != (a - a^-1) g{i} + 1"),
            Self::Braid { i } => write!(f, "g{i} g{j} g{i} != g{j} g{i} g{j}", j = i + 1),
            Self::FarCommutation { i, j } => write!(f, "g{i} g{j} != g{j} g{i}"),
        }
    }
}

/// `a − a⁻¹`
pub fn hecke_parameter() -> RationalFunction {
    RationalFunction::a_pow(1) - RationalFunction::a_pow(-1)
}

/// Builds the representation of `shape` and checks every defining relation
/// before returning it.
pub fn build_representation(shape: &SkewShape) -> Result<SkewRepresentation> {
    SkewRepresentation::build(shape, BlockConvention::Standard)
}

impl SkewRepresentation {
    /// Assembles the generator matrices and fails on the first relation that
    /// does not hold.
    pub fn build(shape: &SkewShape, convention: BlockConvention) -> Result<Self> {
        let rep = Self::build_unchecked(shape, convention)?;
        if let Some(fail) = rep.check_relations().into_iter().next() {
            return Err(Error::RelationViolation(format!("{shape}: {fail}")));
        }
        Ok(rep)
    }

    /// Assembles the generator matrices without verifying the relations.
    pub fn build_unchecked(shape: &SkewShape, convention: BlockConvention) -> Result<Self> {
        let basis = enumerate_skew_tableaux(shape);
        let n = shape.size();
        let generators = {
            let mut builder = MatrixBuilder::new(&basis, convention);
            (1..n).map(|i| builder.generator(i)).collect::<Result<Vec<_>>>()?
        };
        Ok(Self { shape: shape.clone(), basis, generators })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Number of boxes, i.e. the `n` of `H_n`.
    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SkewTableau] {
        &self.basis
    }

    pub fn generators(&self) -> &[QMatrix] {
        &self.generators
    }

    /// Matrix of `g_i`, 1-based.
    pub fn generator(&self, i: usize) -> Result<&QMatrix> {
        i.checked_sub(1)
            .and_then(|k| self.generators.get(k))
            .ok_or(Error::IndexOutOfRange { index: i, max: self.generators.len() })
    }

    /// Ordered product of generator matrices; the empty word acts as the
    /// identity.
    pub fn act_word(&self, w: &HeckeWord) -> Result<QMatrix> {
        let mut acc = QMatrix::identity(self.dimension());
        for &i in w.letters() {
            acc = acc.mul(self.generator(i)?);
        }
        Ok(acc)
    }

    /// Every quadratic, braid and far-commutation relation that fails.
    pub fn check_relations(&self) -> Vec<RelationFailure> {
        let dim = self.dimension();
        let id = QMatrix::identity(dim);
        let z = hecke_parameter();
        let g = &self.generators;
        let mut failures = Vec::new();
        for (k, m) in g.iter().enumerate() {
            if m.mul(m) != m.scale(&z).add(&id) {
                failures.push(RelationFailure::Quadratic { i: k + 1 });
            }
        }
        for k in 0..g.len().saturating_sub(1) {
            let lhs = g[k].mul(&g[k + 1]).mul(&g[k]);
            let rhs = g[k + 1].mul(&g[k]).mul(&g[k + 1]);
            if lhs != rhs {
                failures.push(RelationFailure::Braid { i: k + 1 });
            }
        }
        for k in 0..g.len() {
            for l in k + 2..g.len() {
                if g[k].mul(&g[l]) != g[l].mul(&g[k]) {
                    failures.push(RelationFailure::FarCommutation { i: k + 1, j: l + 1 });
                }
            }
        }
        failures
    }

    /// The 2×2 mixing blocks of `g_i`: pairs of basis indices `(t, t')`,
    /// `t < t'`, coupled by an off-diagonal entry.
    pub fn mixing_blocks(&self, i: usize) -> Result<Vec<(usize, usize, QMatrix)>> {
        let m = self.generator(i)?;
        let dim = self.dimension();
        let mut out = Vec::new();
        for t in 0..dim {
            for u in t + 1..dim {
                if !m.get(t, u).is_zero() || !m.get(u, t).is_zero() {
                    let block = QMatrix::from_rows(vec![
                        vec![m.get(t, t).clone(), m.get(t, u).clone()],
                        vec![m.get(u, t).clone(), m.get(u, u).clone()],
                    ])?;
                    out.push((t, u, block));
                }
            }
        }
        Ok(out)
    }

    /// Generator matrices at `a = 1`: the classical Young seminormal form.
    pub fn classical_limit(&self) -> Result<Vec<RatMatrix>> {
        let one = BigRational::one();
        self.generators.iter().map(|m| m.eval(&one)).collect()
    }
}

/// See [`SkewRepresentation::act_word`].
pub fn act_word(rep: &SkewRepresentation, w: &HeckeWord) -> Result<QMatrix> {
    rep.act_word(w)
}

/// See [`SkewRepresentation::classical_limit`].
pub fn classical_limit(rep: &SkewRepresentation) -> Result<Vec<RatMatrix>> {
    rep.classical_limit()
}

/// Failures of `s_i² = 1`, braid and far commutation for specialised
/// matrices (e.g. the classical limit).
pub fn symmetric_group_failures(gens: &[RatMatrix]) -> Vec<RelationFailure> {
    let mut failures = Vec::new();
    let Some(first) = gens.first() else {
        return failures;
    };
    let id = RatMatrix::identity(first.rows());
    for (k, m) in gens.iter().enumerate() {
        if m.mul(m) != id {
            failures.push(RelationFailure::Quadratic { i: k + 1 });
        }
    }
    for k in 0..gens.len().saturating_sub(1) {
        if gens[k].mul(&gens[k + 1]).mul(&gens[k]) != gens[k + 1].mul(&gens[k]).mul(&gens[k + 1]) {
            failures.push(RelationFailure::Braid { i: k + 1 });
        }
    }
    for k in 0..gens.len() {
        for l in k + 2..gens.len() {
            if gens[k].mul(&gens[l]) != gens[l].mul(&gens[k]) {
                failures.push(RelationFailure::FarCommutation { i: k + 1, j: l + 1 });
            }
        }
    }
    failures
}

impl Serialize for SkewRepresentation {
    /// `{"shape", "dimension", "basis", "generators"}`; `basis` lists each
    /// tableau's boxes in step order and fixes the row/column order of every
    /// generator matrix.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let basis: Vec<_> = self.basis.iter().map(SkewTableau::cells).collect();
        let mut st = s.serialize_struct("SkewRepresentation", 4)?;
        st.serialize_field("shape", &self.shape)?;
        st.serialize_field("dimension", &self.dimension())?;
        st.serialize_field("basis", &basis)?;
        st.serialize_field("generators", &self.generators)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(inner: &str, outer: &str) -> SkewShape {
        SkewShape::new(inner.parse().unwrap(), outer.parse().unwrap()).unwrap()
    }

    fn w(letters: &[usize]) -> HeckeWord {
        HeckeWord(letters.to_vec())
    }

    #[test]
    fn build_examples() {
        let one = build_representation(&s("", "1")).unwrap();
        assert_eq!((one.dimension(), one.generators().len()), (1, 0));

        let hook = build_representation(&s("", "2,1")).unwrap();
        assert_eq!((hook.dimension(), hook.generators().len()), (2, 2));

        let square = build_representation(&s("", "2,2")).unwrap();
        assert_eq!(square.dimension(), 2);
        assert_eq!(square.act_word(&w(&[1, 2, 1])).unwrap(), square.act_word(&w(&[2, 1, 2])).unwrap());
    }

    #[test]
    fn word_action() {
        let rep = build_representation(&s("", "2,1")).unwrap();
        assert_eq!(rep.act_word(&HeckeWord::empty()).unwrap(), QMatrix::identity(2));
        let m1 = rep.generator(1).unwrap();
        let expected = m1.scale(&hecke_parameter()).add(&QMatrix::identity(2));
        assert_eq!(rep.act_word(&w(&[1, 1])).unwrap(), expected);
        assert_eq!(rep.act_word(&w(&[1, 2, 1])).unwrap(), rep.act_word(&w(&[2, 1, 2])).unwrap());
        assert!(matches!(rep.act_word(&w(&[3])), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(rep.act_word(&w(&[0])), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn swapped_convention_breaks_braid() {
        let rep = SkewRepresentation::build_unchecked(&s("", "2,1"), BlockConvention::Swapped).unwrap();
        let fails = rep.check_relations();
        assert!(fails.contains(&RelationFailure::Braid { i: 1 }), "{fails:?}");
    }

    #[test]
    fn classical_limit_of_hook() {
        let rep = build_representation(&s("", "2,1")).unwrap();
        let lim = rep.classical_limit().unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(lim[0], RatMatrix::from_rows(vec![vec![r(1, 1), r(0, 1)], vec![r(0, 1), r(-1, 1)]]).unwrap());
        // basis order (T₋, T₊); in (T₊, T₋) order this is [[1/2, 3/4], [1, -1/2]]
        assert_eq!(lim[1], RatMatrix::from_rows(vec![vec![r(-1, 2), r(1, 1)], vec![r(3, 4), r(1, 2)]]).unwrap());
        assert!(symmetric_group_failures(&lim).is_empty());
    }

    #[test]
    fn json_layout() {
        let rep = build_representation(&s("", "2")).unwrap();
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["dimension"], 1);
        assert_eq!(v["basis"], serde_json::json!([[[1, 1], [1, 2]]]));
        assert_eq!(v["generators"][0]["entries"][0][0]["num"], serde_json::json!({"1": "1"}));
    }
}
