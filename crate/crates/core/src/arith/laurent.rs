use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use super::poly;
use crate::error::{Error, Result};

/// Laurent polynomial in `a` with exact rational coefficients.
///
/// Stored densely from the lowest exponent upwards. The first and last
/// stored coefficients are always nonzero and the zero polynomial has no
/// coefficients at all, so derived equality is structural equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · a^exp`
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { low: exp, coeffs: vec![c] }
        }
    }

    /// The indeterminate `a` raised to `exp`.
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    pub(crate) fn from_dense(mut low: i64, mut coeffs: Vec<BigRational>) -> Self {
        poly::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead_zeros);
        low += lead_zeros as i64;
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 {
            return BigRational::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Multiply by `a^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: poly::scale(&self.coeffs, c) }
    }

    /// Splits off the lowest power: `self = a^low · p(a)` with `p(0) ≠ 0`.
    pub(crate) fn split(&self) -> (i64, &[BigRational]) {
        (self.low, &self.coeffs)
    }

    /// Substitute `a := x`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        if x.is_zero() {
            if self.low < 0 {
                return Err(Error::EvaluationAtZero);
            }
            return Ok(self.coeff(0));
        }
        // Horner on the dense part, then multiply by x^low.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc * pow(x, self.low))
    }
}

fn pow(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

/// The quantum integer `[n] = (a^n − a^{−n}) / (a − a^{−1})`.
///
/// The division is exact: for `n > 0` this is `a^{n−1} + a^{n−3} + … + a^{1−n}`,
/// `[0] = 0`, and `[−n] = −[n]`.
pub fn quantum_int(n: i64) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.abs();
    let sign = if n > 0 { BigRational::one() } else { -BigRational::one() };
    // exponents 1-m, 3-m, ..., m-1 sit two apart
    let mut coeffs = vec![BigRational::zero(); (2 * m - 1) as usize];
    for k in 0..m {
        coeffs[(2 * k) as usize] = sign.clone();
    }
    LaurentPoly::from_dense(1 - m, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (src, off) in [(self, self.low - low), (rhs, rhs.low - low)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                coeffs[off as usize + i] += c;
            }
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly::mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t { (&self).$m(rhs) }
        }
        impl<'a> $tr<$t> for &'a $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t { self.$m(&rhs) }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentPoly, Add add, Sub sub, Mul mul);

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn fmt_monomial(exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => "a".to_string(),
        e => format!("a^{e}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `a^2 + 1 + a^-2` or `-3/2*a^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (exp, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let mono = fmt_monomial(exp);
            if mono.is_empty() {
                f.write_str(&fmt_rational(&mag))?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&mag), mono)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().rev().collect();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), &fmt_rational(c))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct TermsVisitor;

        impl<'de> Visitor<'de> for TermsVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from exponent strings to rational strings")
            }

            fn visit_map<M: MapAccess<'de>>(self, mut m: M) -> std::result::Result<LaurentPoly, M::Error> {
                let mut terms = Vec::new();
                while let Some((k, v)) = m.next_entry::<String, String>()? {
                    let e: i64 = k.trim().parse().map_err(de::Error::custom)?;
                    let c = parse_rational(&v).map_err(de::Error::custom)?;
                    terms.push((e, c));
                }
                Ok(LaurentPoly::from_terms(terms))
            }
        }

        d.deserialize_map(TermsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn quantum_int_examples() {
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        let two = LaurentPoly::from_terms([(1, r(1)), (-1, r(1))]);
        assert_eq!(quantum_int(2), two);
        let m3 = LaurentPoly::from_terms([(2, r(-1)), (0, r(-1)), (-2, r(-1))]);
        assert_eq!(quantum_int(-3), m3);
    }

    #[test]
    fn quantum_int_times_denominator() {
        // [n](a - a^-1) = a^n - a^-n
        let a_minus = LaurentPoly::from_terms([(1, r(1)), (-1, r(-1))]);
        for n in -8..=8 {
            let lhs = &quantum_int(n) * &a_minus;
            let rhs = &LaurentPoly::a_pow(n) - &LaurentPoly::a_pow(-n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn eval_and_zero_point() {
        let q = quantum_int(3);
        assert_eq!(q.eval(&r(1)).unwrap(), r(3));
        assert_eq!(q.eval(&r(2)).unwrap(), BigRational::new(21.into(), 4.into()));
        assert_eq!(q.eval(&r(0)), Err(Error::EvaluationAtZero));
        assert_eq!(LaurentPoly::a_pow(2).eval(&r(0)).unwrap(), r(0));
    }

    #[test]
    fn display() {
        assert_eq!(quantum_int(3).to_string(), "a^2 + 1 + a^-2");
        assert_eq!((-LaurentPoly::a_pow(-1)).to_string(), "-a^-1");
        let p = LaurentPoly::from_terms([(1, BigRational::new(3.into(), 2.into())), (0, r(-2))]);
        assert_eq!(p.to_string(), "3/2*a - 2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_keeps_invariants() {
        let p = LaurentPoly::from_terms([(3, r(1)), (0, r(2)), (-2, r(5))]);
        let q = LaurentPoly::from_terms([(3, r(-1)), (-2, r(-5))]);
        let s = &p + &q;
        assert_eq!(s, LaurentPoly::constant(r(2)));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn json_shape() {
        let two = quantum_int(2);
        assert_eq!(serde_json::to_string(&two).unwrap(), r#"{"1":"1","-1":"1"}"#);
        let back: LaurentPoly = serde_json::from_str(r#"{"-1":"1","1":"1"}"#).unwrap();
        assert_eq!(back, two);
    }
}
