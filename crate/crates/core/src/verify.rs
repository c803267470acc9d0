//! Exhaustive property sweeps over skew shapes. Each returns a report with
//! every counterexample found rather than stopping at the first.

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::arith::{quantum_int, LaurentPoly, RationalFunction};
use crate::hecke::{
    hecke_parameter, invariant_subspace, symmetric_group_failures, BlockConvention, SkewRepresentation,
};
use crate::par::Exec;
use crate::shapes::{skew_shapes, SkewShape};

/// Shapes `μ/λ` with `|μ| ≤ max_outer` and `min_boxes ≤ |μ/λ| ≤ max_boxes`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeBounds {
    pub max_outer: usize,
    pub min_boxes: usize,
    pub max_boxes: usize,
}

impl ShapeBounds {
    /// Relation and classical-limit sweeps: `|μ| ≤ 6`, `2 ≤ |μ/λ| ≤ 5`.
    pub const RELATIONS: ShapeBounds = ShapeBounds { max_outer: 6, min_boxes: 2, max_boxes: 5 };
    /// Invariant sweep: `|μ| ≤ 8`, `|μ/λ| ≤ 5`.
    pub const INVARIANTS: ShapeBounds = ShapeBounds { max_outer: 8, min_boxes: 0, max_boxes: 5 };

    pub fn shapes(&self) -> Vec<SkewShape> {
        skew_shapes(self.max_outer, self.min_boxes, self.max_boxes)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeFailure {
    /// `None` for checks that are not about a particular shape.
    pub shape: Option<SkewShape>,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub bounds: ShapeBounds,
    pub shapes_checked: usize,
    /// Individual identities checked (relations, blocks, dimensions, …).
    pub checks: usize,
    pub failures: Vec<ShapeFailure>,
    pub pass: bool,
}

impl SweepReport {
    fn collect(suite: &str, bounds: ShapeBounds, shapes: usize, per_shape: Vec<(usize, Vec<ShapeFailure>)>) -> Self {
        let checks = per_shape.iter().map(|(c, _)| c).sum();
        let failures: Vec<_> = per_shape.into_iter().flat_map(|(_, f)| f).collect();
        Self {
            suite: suite.to_string(),
            bounds,
            shapes_checked: shapes,
            checks,
            pass: failures.is_empty(),
            failures,
        }
    }
}

fn failure(shape: &SkewShape, check: &str, detail: impl ToString) -> ShapeFailure {
    ShapeFailure { shape: Some(shape.clone()), check: check.to_string(), detail: detail.to_string() }
}

/// `[d−1][d+1] = [d]² − 1` for `2 ≤ d ≤ max_d`; returns the failing `d`.
pub fn q_identity_failures(max_d: i64) -> Vec<i64> {
    (2..=max_d)
        .filter(|&d| {
            let lhs = &quantum_int(d - 1) * &quantum_int(d + 1);
            let rhs = &(&quantum_int(d) * &quantum_int(d)) - &LaurentPoly::one();
            lhs != rhs
        })
        .collect()
}

fn relations_for(shape: &SkewShape, convention: BlockConvention) -> (usize, Vec<ShapeFailure>) {
    let rep = match SkewRepresentation::build_unchecked(shape, convention) {
        Ok(r) => r,
        Err(e) => return (1, vec![failure(shape, "build", e)]),
    };
    let g = rep.generators().len();
    let mut checks = g + g.saturating_sub(1) + g.saturating_sub(1) * g.saturating_sub(2) / 2;
    let mut out: Vec<_> = rep.check_relations().into_iter().map(|f| failure(shape, "relations", f)).collect();

    let z = hecke_parameter();
    let minus_one = RationalFunction::from_int(-1);
    for i in 1..=g {
        for (t, u, block) in rep.mixing_blocks(i).expect("generator index in range") {
            checks += 2;
            if block.trace() != z {
                out.push(failure(shape, "block_trace", format!("g{i} block ({t},{u}): trace {}", block.trace())));
            }
            let det = block.get(0, 0) * block.get(1, 1) - block.get(0, 1) * block.get(1, 0);
            if det != minus_one {
                out.push(failure(shape, "block_det", format!("g{i} block ({t},{u}): det {det}")));
            }
        }
    }
    (checks, out)
}

/// Quadratic, braid and far-commutation relations plus the trace/determinant
/// of every 2×2 mixing block, and the q-identity for `d ≤ 12`.
pub fn verify_relations(bounds: ShapeBounds, convention: BlockConvention, exec: Exec) -> SweepReport {
    let shapes = bounds.shapes();
    let mut per_shape = exec.map(&shapes, |s| relations_for(s, convention));
    let q_fail = q_identity_failures(12);
    per_shape.push((
        11,
        q_fail
            .into_iter()
            .map(|d| ShapeFailure { shape: None, check: "q_identity".into(), detail: format!("d = {d}") })
            .collect(),
    ));
    SweepReport::collect("relations", bounds, shapes.len(), per_shape)
}

/// Evaluation at `a = 1` never meets a vanishing denominator and yields
/// matrices satisfying the symmetric-group relations.
pub fn verify_classical(bounds: ShapeBounds, exec: Exec) -> SweepReport {
    let shapes = bounds.shapes();
    let per_shape = exec.map(&shapes, |s| {
        let rep = match SkewRepresentation::build_unchecked(s, BlockConvention::Standard) {
            Ok(r) => r,
            Err(e) => return (1, vec![failure(s, "build", e)]),
        };
        match rep.classical_limit() {
            Ok(mats) => {
                let fails = symmetric_group_failures(&mats);
                (mats.len().max(1), fails.into_iter().map(|f| failure(s, "classical_relations", f)).collect())
            }
            Err(e) => (1, vec![failure(s, "classical_eval", e)]),
        }
    });
    SweepReport::collect("classical", bounds, shapes.len(), per_shape)
}

/// The invariant space is a line for horizontal strips and zero otherwise.
pub fn verify_invariants(bounds: ShapeBounds, exec: Exec) -> SweepReport {
    let shapes = bounds.shapes();
    let per_shape = exec.map(&shapes, |s| {
        let rep = match SkewRepresentation::build_unchecked(s, BlockConvention::Standard) {
            Ok(r) => r,
            Err(e) => return (1, vec![failure(s, "build", e)]),
        };
        let dim = invariant_subspace(&rep).len();
        let expected = usize::from(s.is_horizontal_strip());
        let fails = if dim == expected {
            vec![]
        } else {
            vec![failure(s, "invariant_dimension", format!("expected {expected}, got {dim}"))]
        };
        (1, fails)
    });
    SweepReport::collect("invariants", bounds, shapes.len(), per_shape)
}

/// The classical specialisation point.
pub fn classical_point() -> BigRational {
    BigRational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_identity_holds() {
        assert!(q_identity_failures(12).is_empty());
    }

    #[test]
    fn small_sweeps_pass() {
        let b = ShapeBounds { max_outer: 4, min_boxes: 2, max_boxes: 4 };
        let r = verify_relations(b, BlockConvention::Standard, Exec::Sequential);
        assert!(r.pass, "{:?}", r.failures);
        assert!(r.checks > r.shapes_checked);
        assert!(verify_classical(b, Exec::Sequential).pass);
        assert!(verify_invariants(ShapeBounds { max_outer: 5, min_boxes: 0, max_boxes: 4 }, Exec::Sequential).pass);
    }

    #[test]
    fn swapped_relations_fail() {
        let b = ShapeBounds { max_outer: 3, min_boxes: 2, max_boxes: 3 };
        let r = verify_relations(b, BlockConvention::Swapped, Exec::Sequential);
        assert!(!r.pass);
        assert!(r.failures.iter().any(|f| f.check == "relations"));
    }
}
