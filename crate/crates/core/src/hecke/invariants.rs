use super::SkewRepresentation;
use crate::arith::{QMatrix, RationalFunction};

/// `M_i − a·I` for every generator.
fn shifted_generators(rep: &SkewRepresentation) -> Vec<QMatrix> {
    let a_id = QMatrix::identity(rep.dimension()).scale(&RationalFunction::a_pow(1));
    rep.generators().iter().map(|m| m.sub(&a_id)).collect()
}

/// Basis of the joint eigenspace `{v : M_i v = a v for all i}`.
///
/// For `n ≤ 1` there are no generators and the whole space is invariant.
pub fn invariant_subspace(rep: &SkewRepresentation) -> Vec<QMatrix> {
    let dim = rep.dimension();
    let shifted = shifted_generators(rep);
    let Some(first) = shifted.first() else {
        return (0..dim)
            .map(|k| QMatrix::column((0..dim).map(|j| if j == k { RationalFunction::one() } else { RationalFunction::zero() }).collect()))
            .collect();
    };
    let stacked = shifted[1..].iter().fold(first.clone(), |acc, m| acc.vstack(m));
    stacked.nullspace()
}

/// The invariant vector scaled so its first nonzero coordinate is 1, when
/// the invariant space is one-dimensional.
pub fn normalized_invariant(rep: &SkewRepresentation) -> Option<Vec<RationalFunction>> {
    let mut basis = invariant_subspace(rep);
    if basis.len() != 1 {
        return None;
    }
    let v = basis.pop().unwrap().into_entries();
    let lead = v.iter().find(|x| !x.is_zero())?.inv();
    Some(v.iter().map(|x| x * &lead).collect())
}

/// Basis of `Σ_i im(M_i − a·I)`, the sum of the non-trivial isotypic
/// components. It is a submodule complementary to the invariants.
pub fn non_invariant_span(rep: &SkewRepresentation) -> Vec<Vec<RationalFunction>> {
    let shifted = shifted_generators(rep);
    let Some(first) = shifted.first() else {
        return Vec::new();
    };
    let wide = shifted[1..].iter().fold(first.clone(), |acc, m| acc.hstack(m));
    let (_, pivots) = wide.rref();
    pivots.into_iter().map(|c| wide.col(c)).collect()
}
