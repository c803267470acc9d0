use serde::Serialize;

use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// A morphism `source → target` of the horizontal-strip category: either
/// zero or the (unique up to scalar) strip `target ∖ source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HSMorphism {
    source: Partition,
    target: Partition,
    value: Option<SkewShape>,
}

impl HSMorphism {
    /// The nonzero morphism `target ∖ source`, which must be a horizontal strip.
    pub fn strip(source: Partition, target: Partition) -> Result<Self> {
        let shape = SkewShape::new(source.clone(), target.clone())?;
        if !shape.is_horizontal_strip() {
            return Err(Error::PreconditionViolation(format!("{shape} is not a horizontal strip")));
        }
        Ok(Self { source, target, value: Some(shape) })
    }

    pub fn zero(source: Partition, target: Partition) -> Self {
        Self { source, target, value: None }
    }

    pub fn identity(p: Partition) -> Self {
        Self::strip(p.clone(), p).expect("empty strip")
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Partition {
        &self.target
    }

    pub fn value(&self) -> Option<&SkewShape> {
        self.value.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_none()
    }
}

/// `g ∘ f`: the composite strip when it is again a horizontal strip, zero
/// otherwise. Zero absorbs.
pub fn hs_compose(g: &HSMorphism, f: &HSMorphism) -> Result<HSMorphism> {
    if f.target != g.source {
        return Err(Error::SourceTargetMismatch(format!("f ends at {} but g starts at {}", f.target, g.source)));
    }
    if f.is_zero() || g.is_zero() {
        return Ok(HSMorphism::zero(f.source.clone(), g.target.clone()));
    }
    Ok(HSMorphism::strip(f.source.clone(), g.target.clone())
        .unwrap_or_else(|_| HSMorphism::zero(f.source.clone(), g.target.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn strip(a: &str, b: &str) -> HSMorphism {
        HSMorphism::strip(p(a), p(b)).unwrap()
    }

    #[test]
    fn composition_examples() {
        let c = hs_compose(&strip("1", "2"), &strip("", "1")).unwrap();
        assert_eq!(c, strip("", "2"));
        let z = hs_compose(&strip("2", "3,1"), &strip("", "2")).unwrap();
        assert!(z.is_zero());
        let f = strip("1", "3,1");
        assert_eq!(hs_compose(&f, &HSMorphism::identity(p("1"))).unwrap(), f);
        assert_eq!(hs_compose(&HSMorphism::identity(p("3,1")), &f).unwrap(), f);
    }

    #[test]
    fn zero_absorbs_and_mismatch_errors() {
        let z = HSMorphism::zero(p(""), p("1,1"));
        assert!(hs_compose(&strip("1,1", "2,1"), &z).unwrap().is_zero());
        assert!(matches!(hs_compose(&strip("", "1"), &strip("", "1")), Err(Error::SourceTargetMismatch(_))));
        assert!(HSMorphism::strip(p(""), p("1,1")).is_err());
        assert!(HSMorphism::strip(p("2"), p("1")).is_err());
    }
}
