//! Dense univariate polynomials over ℚ, stored as ascending coefficient
//! vectors with no trailing zeros. Only what the rational-function
//! canonicalisation needs.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub(crate) fn degree(v: &[BigRational]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division. Panics if `b` is zero.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = degree(b).expect("polynomial division by zero");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                rem[shift + k] -= &c * bk;
            }
        }
        quot[shift] = c;
        // the leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn make_monic(mut v: Vec<BigRational>) -> Vec<BigRational> {
    if let Some(lead) = v.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
        }
    }
    v
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
pub(crate) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = make_monic(r);
    }
    make_monic(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(cs: &[i64]) -> Vec<BigRational> {
        let mut v: Vec<_> = cs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        trim(&mut v);
        v
    }

    #[test]
    fn division_reconstructs_dividend() {
        let a = p(&[1, 0, 0, 0, 1]);
        let b = p(&[1, 0, 1]);
        let (q, r) = div_rem(&a, &b);
        let mut back = mul(&q, &b);
        back.resize(a.len().max(back.len()), BigRational::zero());
        for (i, ri) in r.iter().enumerate() {
            back[i] += ri;
        }
        trim(&mut back);
        assert_eq!(back, a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn gcd_of_products() {
        // (x+1)(x-2) and (x+1)(x+3)
        let a = mul(&p(&[1, 1]), &p(&[-2, 1]));
        let b = mul(&p(&[1, 1]), &p(&[3, 1]));
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&p(&[2]), &p(&[0, 3])), p(&[1]));
        assert!(gcd(&[], &[]).is_empty());
    }
}
