//! The projection `Q` from the path category onto Hecke invariants, the
//! composition scalars it induces between horizontal strips, and the finite
//! sweep that checks those scalars reproduce composition in the
//! horizontal-strip category.

use std::collections::HashMap;

use serde::Serialize;

use super::{hs_compose, HSMorphism, PathMorphism};
use crate::arith::{QMatrix, RationalFunction};
use crate::error::{Error, Result};
use crate::hecke::{invariant_subspace, non_invariant_span, normalized_invariant, BlockConvention, SkewRepresentation};
use crate::par::Exec;
use crate::shapes::{Cell, Partition, SkewShape};

/// Projection data for one skew shape.
///
/// `Q` is the equivariant projection onto the invariants along
/// `Σ_i im(g_i − a)`. It is realised as the functional `φ` with `φ(v) = 1`
/// on the normalised invariant `v` and `φ = 0` on that complement.
#[derive(Clone, Debug)]
pub struct Projector {
    rep: SkewRepresentation,
    invariant_dim: usize,
    invariant: Option<Vec<RationalFunction>>,
    functional: Option<Vec<RationalFunction>>,
}

impl Projector {
    pub fn new(shape: &SkewShape) -> Result<Self> {
        Self::with_convention(shape, BlockConvention::Standard)
    }

    /// Fails with [`Error::RelationViolation`] when the convention does not
    /// give a representation.
    pub fn with_convention(shape: &SkewShape, convention: BlockConvention) -> Result<Self> {
        Self::from_representation(SkewRepresentation::build(shape, convention)?)
    }

    pub fn from_representation(rep: SkewRepresentation) -> Result<Self> {
        let invariant_dim = invariant_subspace(&rep).len();
        let invariant = normalized_invariant(&rep);
        let functional = match &invariant {
            Some(v) => {
                let complement = non_invariant_span(&rep);
                if complement.len() + 1 == rep.dimension() {
                    let mut cols = vec![v.clone()];
                    cols.extend(complement);
                    // columns [v | W]; φ is the first row of the inverse
                    let frame = QMatrix::from_rows(cols)?;
                    let mut e0 = vec![RationalFunction::zero(); rep.dimension()];
                    e0[0] = RationalFunction::one();
                    frame.solve(&QMatrix::column(e0)).ok().map(QMatrix::into_entries)
                } else {
                    None
                }
            }
            None => None,
        };
        Ok(Self { rep, invariant_dim, invariant, functional })
    }

    pub fn shape(&self) -> &SkewShape {
        self.rep.shape()
    }

    pub fn representation(&self) -> &SkewRepresentation {
        &self.rep
    }

    pub fn invariant_dim(&self) -> usize {
        self.invariant_dim
    }

    /// The normalised invariant vector, when the invariants are a line.
    pub fn invariant(&self) -> Option<&[RationalFunction]> {
        self.invariant.as_deref()
    }

    /// Coordinate of `Q(x)` along the normalised invariant; zero when there
    /// are no invariants.
    pub fn scalar(&self, coords: &[RationalFunction]) -> Result<RationalFunction> {
        if coords.len() != self.rep.dimension() {
            return Err(Error::PreconditionViolation(format!(
                "{} coordinates for a {}-dimensional space",
                coords.len(),
                self.rep.dimension()
            )));
        }
        if self.invariant_dim == 0 {
            return Ok(RationalFunction::zero());
        }
        let phi = self.functional.as_ref().ok_or_else(|| {
            Error::InternalError(format!("projection onto invariants of {} is undefined", self.shape()))
        })?;
        Ok(phi.iter().zip(coords).fold(RationalFunction::zero(), |acc, (p, x)| &acc + &(p * x)))
    }

    fn index(&self) -> HashMap<&[Cell], usize> {
        self.rep.basis().iter().enumerate().map(|(k, t)| (t.cells(), k)).collect()
    }
}

/// Image of a path morphism under `Q`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QImage {
    pub source: Partition,
    pub target: Partition,
    pub scalar: RationalFunction,
    /// Normalised invariant (zero vector when there are no invariants).
    pub reference_vector: Vec<RationalFunction>,
}

/// Projects `p` onto the invariants of its hom-space.
pub fn project_q(p: &PathMorphism) -> Result<QImage> {
    let proj = Projector::new(&p.shape())?;
    let coords = p.coordinates(proj.rep.basis())?;
    let scalar = proj.scalar(&coords)?;
    let reference_vector = proj
        .invariant
        .clone()
        .unwrap_or_else(|| vec![RationalFunction::zero(); proj.rep.dimension()]);
    Ok(QImage { source: p.source().clone(), target: p.target().clone(), scalar, reference_vector })
}

/// `c` with `Q(v_{ν/μ} ∘ v_{μ/λ}) = c · v_{ν/λ}`, from precomputed projectors
/// of `μ/λ`, `ν/μ` and `ν/λ`.
pub fn composition_scalar(first: &Projector, second: &Projector, composite: &Projector) -> Result<RationalFunction> {
    if first.shape().outer() != second.shape().inner()
        || composite.shape().inner() != first.shape().inner()
        || composite.shape().outer() != second.shape().outer()
    {
        return Err(Error::SourceTargetMismatch(format!(
            "{} then {} does not compose to {}",
            first.shape(),
            second.shape(),
            composite.shape()
        )));
    }
    let missing = |p: &Projector| Error::PreconditionViolation(format!("{} has no invariant line", p.shape()));
    let v1 = first.invariant().ok_or_else(|| missing(first))?;
    let v2 = second.invariant().ok_or_else(|| missing(second))?;
    let index = composite.index();
    let mut coords = vec![RationalFunction::zero(); composite.rep.dimension()];
    let mut key = Vec::with_capacity(composite.shape().size());
    for (s, x) in first.rep.basis().iter().zip(v1) {
        if x.is_zero() {
            continue;
        }
        for (t, y) in second.rep.basis().iter().zip(v2) {
            if y.is_zero() {
                continue;
            }
            key.clear();
            key.extend_from_slice(s.cells());
            key.extend_from_slice(t.cells());
            let k = *index
                .get(key.as_slice())
                .ok_or_else(|| Error::InternalError("concatenated path missing from basis".into()))?;
            coords[k] = &coords[k] + &(x * y);
        }
    }
    composite.scalar(&coords)
}

/// The composition scalar for `λ ⊆ μ ⊆ ν`; both factors must be
/// horizontal strips. Nonzero exactly when `ν/λ` is a horizontal strip.
pub fn morita_composition_scalar(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<RationalFunction> {
    let first = SkewShape::new(lambda.clone(), mu.clone())?;
    let second = SkewShape::new(mu.clone(), nu.clone())?;
    for s in [&first, &second] {
        if !s.is_horizontal_strip() {
            return Err(Error::PreconditionViolation(format!("{s} is not a horizontal strip")));
        }
    }
    let composite = SkewShape::new(lambda.clone(), nu.clone())?;
    composition_scalar(&Projector::new(&first)?, &Projector::new(&second)?, &Projector::new(&composite)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaBounds {
    pub max_outer_size: usize,
    pub max_strip_len: usize,
}

impl Default for MoritaBounds {
    fn default() -> Self {
        Self { max_outer_size: 6, max_strip_len: 4 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoritaCheck {
    /// Composition scalar vanishes where the strip composite does not, or
    /// the other way round.
    Nonvanishing,
    Cocycle,
    InvariantDimension,
    /// The projection could not be computed at all.
    Projection,
    /// The seminormal matrices violate a Hecke relation.
    Relations,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MoritaFailure {
    pub check: MoritaCheck,
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Option<Partition>,
    pub rho: Option<Partition>,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MoritaReport {
    pub bounds: MoritaBounds,
    pub shapes_checked: usize,
    pub chains_checked: usize,
    pub cocycles_checked: usize,
    pub failures: Vec<MoritaFailure>,
    pub pass: bool,
}

/// Sweeps every chain `λ ⊆ μ ⊆ ν` with `|ν| ≤ max_outer_size` whose steps are
/// horizontal strips of at most `max_strip_len` boxes.
pub fn verify_morita(bounds: MoritaBounds) -> MoritaReport {
    verify_morita_with(bounds, BlockConvention::Standard, Exec::default())
}

type Pair = (Partition, Partition);

pub fn verify_morita_with(bounds: MoritaBounds, convention: BlockConvention, exec: Exec) -> MoritaReport {
    let composite_len = bounds.max_strip_len.saturating_mul(2);
    let pairs: Vec<Pair> = Partition::all_up_to(bounds.max_outer_size)
        .into_iter()
        .flat_map(|mu| {
            mu.subpartitions()
                .into_iter()
                .filter(|l| mu.size() - l.size() <= composite_len)
                .map(|l| (l, mu.clone()))
                .collect::<Vec<_>>()
        })
        .collect();

    let built = exec.map(&pairs, |(l, m)| {
        Projector::with_convention(&SkewShape::new(l.clone(), m.clone()).expect("subpartition"), convention)
    });

    let mut failures = Vec::new();
    let mut projectors: HashMap<Pair, Projector> = HashMap::new();
    for (pair, proj) in pairs.iter().zip(built) {
        match proj {
            Ok(p) => {
                let expected = usize::from(p.shape().is_horizontal_strip());
                if p.invariant_dim() != expected {
                    failures.push(MoritaFailure {
                        check: MoritaCheck::InvariantDimension,
                        lambda: pair.0.clone(),
                        mu: pair.1.clone(),
                        nu: None,
                        rho: None,
                        expected: expected.to_string(),
                        got: p.invariant_dim().to_string(),
                    });
                }
                projectors.insert(pair.clone(), p);
            }
            Err(e) => failures.push(MoritaFailure {
                check: match e {
                    Error::RelationViolation(_) => MoritaCheck::Relations,
                    _ => MoritaCheck::Projection,
                },
                lambda: pair.0.clone(),
                mu: pair.1.clone(),
                nu: None,
                rho: None,
                expected: "representation".into(),
                got: e.to_string(),
            }),
        }
    }

    // morphisms of the strip category within bounds, indexed by source
    let mut strips_from: HashMap<&Partition, Vec<&Partition>> = HashMap::new();
    for (l, m) in &pairs {
        let shape = SkewShape::new(l.clone(), m.clone()).expect("subpartition");
        if shape.is_horizontal_strip() && shape.size() <= bounds.max_strip_len {
            strips_from.entry(l).or_default().push(m);
        }
    }
    let mut chains: Vec<(Partition, Partition, Partition)> = Vec::new();
    for (l, mus) in &strips_from {
        for m in mus {
            for n in strips_from.get(m).into_iter().flatten() {
                chains.push(((*l).clone(), (*m).clone(), (*n).clone()));
            }
        }
    }
    chains.sort();

    let scalars = exec.map(&chains, |(l, m, n)| {
        let get = |a: &Partition, b: &Partition| {
            projectors
                .get(&(a.clone(), b.clone()))
                .ok_or_else(|| Error::InternalError(format!("no projector for {b}/{a}")))
        };
        composition_scalar(get(l, m)?, get(m, n)?, get(l, n)?)
    });

    let mut table: HashMap<(&Partition, &Partition, &Partition), RationalFunction> = HashMap::new();
    for ((l, m, n), c) in chains.iter().zip(scalars) {
        let hs = hs_compose(
            &HSMorphism::strip(m.clone(), n.clone()).expect("strip"),
            &HSMorphism::strip(l.clone(), m.clone()).expect("strip"),
        )
        .expect("composable");
        let failure = |check, expected: String, got: String| MoritaFailure {
            check,
            lambda: l.clone(),
            mu: m.clone(),
            nu: Some(n.clone()),
            rho: None,
            expected,
            got,
        };
        match c {
            Ok(c) => {
                if c.is_zero() != hs.is_zero() {
                    let expected = if hs.is_zero() { "zero" } else { "nonzero" };
                    failures.push(failure(MoritaCheck::Nonvanishing, expected.into(), c.to_string()));
                }
                table.insert((l, m, n), c);
            }
            Err(e) => failures.push(failure(MoritaCheck::Projection, "scalar".into(), e.to_string())),
        }
    }

    // c(λ,μ,ν)·c(λ,ν,ρ) = c(μ,ν,ρ)·c(λ,μ,ρ)
    let mut cocycles_checked = 0;
    for (l, m, n) in &chains {
        for r in strips_from.get(n).into_iter().flatten() {
            let factors = (
                table.get(&(l, m, n)),
                table.get(&(l, n, *r)),
                table.get(&(m, n, *r)),
                table.get(&(l, m, *r)),
            );
            if let (Some(a), Some(b), Some(c), Some(d)) = factors {
                cocycles_checked += 1;
                let lhs = a * b;
                let rhs = c * d;
                if lhs != rhs {
                    failures.push(MoritaFailure {
                        check: MoritaCheck::Cocycle,
                        lambda: l.clone(),
                        mu: m.clone(),
                        nu: Some(n.clone()),
                        rho: Some((*r).clone()),
                        expected: lhs.to_string(),
                        got: rhs.to_string(),
                    });
                }
            }
        }
    }

    MoritaReport {
        bounds,
        shapes_checked: pairs.len(),
        chains_checked: chains.len(),
        cocycles_checked,
        pass: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_skew_tableaux, SkewTableau};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn shape(a: &str, b: &str) -> SkewShape {
        SkewShape::new(p(a), p(b)).unwrap()
    }

    #[test]
    fn single_tableau_projections() {
        for (a, b) in [("", "3"), ("1", "3,1"), ("2,1", "4,2,1"), ("1", "2,1")] {
            for t in enumerate_skew_tableaux(&shape(a, b)) {
                let img = project_q(&PathMorphism::from_tableau(t)).unwrap();
                assert!(!img.scalar.is_zero(), "{b}/{a}");
            }
        }
        for (a, b) in [("", "1,1"), ("", "2,1"), ("1", "2,2")] {
            for t in enumerate_skew_tableaux(&shape(a, b)) {
                let img = project_q(&PathMorphism::from_tableau(t)).unwrap();
                assert!(img.scalar.is_zero(), "{b}/{a}");
                assert!(img.reference_vector.iter().all(RationalFunction::is_zero));
            }
        }
        let row = enumerate_skew_tableaux(&shape("", "4")).remove(0);
        assert!(project_q(&PathMorphism::from_tableau(row)).unwrap().scalar.is_one());
    }

    #[test]
    fn projection_is_idempotent() {
        let sh = shape("1", "3,1");
        let proj = Projector::new(&sh).unwrap();
        let v = proj.invariant().unwrap().to_vec();
        let basis: Vec<SkewTableau> = proj.representation().basis().to_vec();
        let c = RationalFunction::from_int(5) / RationalFunction::a_pow(2);
        let scaled: Vec<_> = v.iter().map(|x| x * &c).collect();
        let pm = PathMorphism::from_coordinates(&sh, &basis, &scaled).unwrap();
        assert_eq!(project_q(&pm).unwrap().scalar, c);
    }

    #[test]
    fn scalar_examples() {
        assert!(!morita_composition_scalar(&p(""), &p("1"), &p("2")).unwrap().is_zero());
        assert!(morita_composition_scalar(&p(""), &p("2"), &p("3,1")).unwrap().is_zero());
        let l = p("2,1");
        assert!(morita_composition_scalar(&l, &l, &l).unwrap().is_one());
        assert!(matches!(
            morita_composition_scalar(&p(""), &p("1,1"), &p("2,1")),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn small_sweeps() {
        let tiny = verify_morita(MoritaBounds { max_outer_size: 1, max_strip_len: 1 });
        assert!(tiny.pass);
        let small = verify_morita_with(
            MoritaBounds { max_outer_size: 4, max_strip_len: 3 },
            BlockConvention::Standard,
            Exec::Sequential,
        );
        assert!(small.pass, "{:?}", small.failures);
        assert!(small.cocycles_checked > 0);
    }

    #[test]
    fn swapped_convention_is_caught() {
        let bad = verify_morita_with(
            MoritaBounds { max_outer_size: 4, max_strip_len: 3 },
            BlockConvention::Swapped,
            Exec::Sequential,
        );
        assert!(!bad.pass);
        let hook = bad
            .failures
            .iter()
            .find(|f| f.lambda == p("") && f.mu == p("2,1"))
            .expect("(2,1)/∅ reported");
        assert_eq!(hook.check, MoritaCheck::Relations);
        assert!(hook.got.contains("g1 g2 g1"), "{}", hook.got);
    }
}
