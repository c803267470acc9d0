use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize};

use super::laurent::{forward_owned, LaurentPoly};
use super::poly;
use crate::error::{Error, Result};

/// Element of the field ℚ(a).
///
/// Always held in canonical form: the denominator is a polynomial in `a`
/// with nonzero constant term, coprime to the numerator and monic. Two
/// equal functions therefore have identical fields.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from(BigRational::from_integer(n.into()))
    }

    /// `a^exp`
    pub fn a_pow(exp: i64) -> Self {
        Self::from(LaurentPoly::a_pow(exp))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Returns `None` for zero.
    pub fn checked_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn inv(&self) -> Self {
        self.checked_inv().expect("inverse of zero in Q(a)")
    }

    /// Substitute `a := x`. Fails where the reduced denominator vanishes,
    /// which marks `x` as a non-generic specialisation.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if x.is_zero() {
            return Err(Error::EvaluationAtZero);
        }
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return Err(Error::DenominatorVanishes { point: super::laurent::fmt_rational(x) });
        }
        Ok(self.num.eval(x)? / d)
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let (num_low, n) = num.split();
        let (den_low, d) = den.split();
        let shift = num_low - den_low;
        if d.len() == 1 {
            let inv = d[0].recip();
            return Self {
                num: LaurentPoly::from_dense(shift, poly::scale(n, &inv)),
                den: LaurentPoly::one(),
            };
        }
        let g = poly::gcd(n, d);
        let (mut n, mut d) = if g.len() > 1 {
            (poly::div_rem(n, &g).0, poly::div_rem(d, &g).0)
        } else {
            (n.to_vec(), d.to_vec())
        };
        let lead = d.last().cloned().unwrap();
        if !lead.is_one() {
            let inv = lead.recip();
            n = poly::scale(&n, &inv);
            d = poly::scale(&d, &inv);
        }
        Self { num: LaurentPoly::from_dense(shift, n), den: LaurentPoly::from_dense(0, d) }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }
}

impl From<BigRational> for RationalFunction {
    fn from(c: BigRational) -> Self {
        Self::from(LaurentPoly::constant(c))
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &'a RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &'a RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from(&self.num * &rhs.num);
        }
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    /// Panics on division by zero, like the primitive numeric types.
    fn div(self, rhs: &'a RationalFunction) -> RationalFunction {
        self * &rhs.inv()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

forward_owned!(RationalFunction, Add add, Sub sub, Mul mul, Div div);

fn needs_parens(p: &LaurentPoly) -> bool {
    p.terms().count() > 1
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: LaurentPoly,
        }
        let raw = Raw::deserialize(d)?;
        RationalFunction::new(raw.num, raw.den).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quantum_int;

    fn q(n: i64) -> RationalFunction {
        RationalFunction::from(quantum_int(n))
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn canonical_form_is_structural() {
        // (a^2 - 1)/(a - a^-1) = a
        let num = &LaurentPoly::a_pow(2) - &LaurentPoly::one();
        let den = &LaurentPoly::a_pow(1) - &LaurentPoly::a_pow(-1);
        let f = RationalFunction::new(num, den).unwrap();
        assert_eq!(f, RationalFunction::a_pow(1));

        let g = RationalFunction::new(LaurentPoly::one(), quantum_int(2).scale(&rat(3, 1))).unwrap();
        assert_eq!(g.den().low_exp(), Some(0));
        assert!(g.den().coeff(g.den().high_exp().unwrap()).is_one());
        assert_eq!(g.to_string(), "1/3*a/(a^2 + 1)");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::zero().checked_inv().is_none());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(q(2).eval(&rat(1, 1)).unwrap(), rat(2, 1));
        for d in 1..=12 {
            let inv = q(d).inv();
            assert_eq!(inv.eval(&rat(1, 1)).unwrap(), rat(1, d));
        }
        let a_minus = RationalFunction::from(&LaurentPoly::a_pow(1) - &LaurentPoly::a_pow(-1));
        assert!(matches!(
            a_minus.inv().eval(&rat(1, 1)),
            Err(Error::DenominatorVanishes { .. })
        ));
        assert_eq!(q(2).eval(&rat(0, 1)), Err(Error::EvaluationAtZero));
    }

    #[test]
    fn block_entries_simplify() {
        // [d-1][d+1]/[d]^2 = 1 - 1/[d]^2
        for d in 2..=6 {
            let lhs = &(&q(d - 1) * &q(d + 1)) / &(&q(d) * &q(d));
            let rhs = &RationalFunction::one() - &(&q(d) * &q(d)).inv();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn json_round_trip() {
        let f = &RationalFunction::a_pow(2) / &q(2);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"num":{"3":"1"},"den":{"2":"1","0":"1"}}"#);
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }
}
