use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

use hecke_strip::arith::{quantum_int, BigRational, LaurentPoly, QMatrix, RatMatrix, RationalFunction};
use hecke_strip::hecke::{build_representation, hecke_parameter};
use hecke_strip::shapes::{
    count_skew_tableaux, enumerate_skew_tableaux, skew_shapes, young_successors, Partition, SkewShape,
};
use hecke_strip::strip::{hs_compose, path_compose, HSMorphism, PathMorphism};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i64..=3, -4i64..=4, 1i64..=3), 0..4)
        .prop_map(|terms| LaurentPoly::from_terms(terms.into_iter().map(|(e, n, d)| (e, rat(n, d)))))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (laurent(), laurent().prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn partition(max_rows: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A chain `λ₀ ⊆ λ₁ ⊆ … ⊆ λ_k` obtained by shrinking a random partition.
fn chain(len: usize) -> impl Strategy<Value = Vec<Partition>> {
    (partition(3, 4), prop::collection::vec(any::<prop::sample::Index>(), len)).prop_map(|(top, picks)| {
        let mut out = vec![top];
        for idx in picks {
            let subs = out.last().unwrap().subpartitions();
            out.push(idx.get(&subs).clone());
        }
        out.reverse();
        out
    })
}

fn small_shape() -> impl Strategy<Value = SkewShape> {
    any::<prop::sample::Index>().prop_map(|i| {
        let shapes = skew_shapes(5, 2, 4);
        i.get(&shapes).clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(x in laurent(), y in laurent(), z in laurent()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &LaurentPoly::one(), x.clone());
    }

    #[test]
    fn laurent_eval_is_a_homomorphism(x in laurent(), y in laurent(), n in 1i64..5, d in 1i64..5) {
        let p = rat(n, d);
        prop_assert_eq!((&x * &y).eval(&p).unwrap(), x.eval(&p).unwrap() * y.eval(&p).unwrap());
        prop_assert_eq!((&x + &y).eval(&p).unwrap(), x.eval(&p).unwrap() + y.eval(&p).unwrap());
    }

    #[test]
    fn ratfunc_field_axioms(x in ratfunc(), y in ratfunc(), z in ratfunc()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv()).is_one());
            prop_assert_eq!(&(&y / &x) * &x, y.clone());
        }
    }

    #[test]
    fn ratfunc_serde_roundtrip(x in ratfunc()) {
        let s = serde_json::to_string(&x).unwrap();
        let back: RationalFunction = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn rref_is_idempotent(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-3i64..=3, 16)) {
        let m = RatMatrix::from_vec(rows, cols, seed[..rows * cols].iter().map(|&v| rat(v, 1)).collect()).unwrap();
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots.len(), pivots2.len());
        prop_assert_eq!(m.nullspace().len() + pivots.len(), cols);
    }

    #[test]
    fn nullspace_vectors_are_annihilated(rows in 1usize..4, cols in 1usize..4, e in prop::collection::vec((-2i64..=2, -2i64..=2), 9)) {
        let entries = e[..rows * cols]
            .iter()
            .map(|&(k, c)| &RationalFunction::a_pow(k) + &RationalFunction::from_int(c))
            .collect();
        let m = QMatrix::from_vec(rows, cols, entries).unwrap();
        for v in m.nullspace() {
            prop_assert!(m.mul(&v).is_zero());
            prop_assert!(!v.is_zero());
        }
    }
}

proptest! {
    #[test]
    fn quantum_int_antisymmetric_and_classical(n in -12i64..=12) {
        prop_assert_eq!(quantum_int(-n), -&quantum_int(n));
        prop_assert_eq!(quantum_int(n).eval(&BigRational::one()).unwrap(), rat(n, 1));
    }

    #[test]
    fn q_identity(d in 2i64..=40) {
        let lhs = &quantum_int(d - 1) * &quantum_int(d + 1);
        let rhs = &(&quantum_int(d) * &quantum_int(d)) - &LaurentPoly::one();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn successors_add_one_addable_box(p in partition(5, 5)) {
        let succ = young_successors(&p);
        prop_assert_eq!(succ.len(), p.addable_rows().count());
        for q in &succ {
            prop_assert_eq!(q.size(), p.size() + 1);
            prop_assert!(q.contains(&p));
        }
        let mut sorted = succ.clone();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), succ.len());
    }

    #[test]
    fn path_count_recursion(c in chain(1)) {
        let (lambda, mu) = (&c[0], &c[1]);
        let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
        let count = count_skew_tableaux(&shape);
        let expected: u64 = if lambda == mu {
            1
        } else {
            young_successors(lambda)
                .into_iter()
                .filter(|s| mu.contains(s))
                .map(|s| count_skew_tableaux(&SkewShape::new(s, mu.clone()).unwrap()))
                .sum()
        };
        prop_assert_eq!(count, expected);
        prop_assert_eq!(enumerate_skew_tableaux(&shape).len() as u64, count);
    }

    #[test]
    fn horizontal_strip_iff_columns_distinct(c in chain(1)) {
        let shape = SkewShape::new(c[0].clone(), c[1].clone()).unwrap();
        let mut cols: Vec<_> = shape.cells().iter().map(|b| b.col).collect();
        let n = cols.len();
        cols.sort_unstable();
        cols.dedup();
        prop_assert_eq!(shape.is_horizontal_strip(), cols.len() == n);
    }

    #[test]
    fn hs_composition_is_associative(c in chain(3)) {
        let m = |i: usize, j: usize| {
            HSMorphism::strip(c[i].clone(), c[j].clone())
                .unwrap_or_else(|_| HSMorphism::zero(c[i].clone(), c[j].clone()))
        };
        let (f, g, h) = (m(0, 1), m(1, 2), m(2, 3));
        let left = hs_compose(&h, &hs_compose(&g, &f).unwrap()).unwrap();
        let right = hs_compose(&hs_compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn path_composition_is_associative(c in chain(3), coeffs in prop::collection::vec(-3i64..=3, 3)) {
        // the sum of all tableaux of each step, scaled
        let m = |i: usize| {
            let shape = SkewShape::new(c[i].clone(), c[i + 1].clone()).unwrap();
            let basis = enumerate_skew_tableaux(&shape);
            let xs: Vec<_> = (0..basis.len())
                .map(|k| &RationalFunction::from_int(coeffs[i]) + &RationalFunction::a_pow(k as i64))
                .collect();
            PathMorphism::from_coordinates(&shape, &basis, &xs).unwrap()
        };
        let (f, g, h) = (m(0), m(1), m(2));
        let left = path_compose(&h, &path_compose(&g, &f).unwrap()).unwrap();
        let right = path_compose(&path_compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn generators_are_invertible(shape in small_shape()) {
        let rep = build_representation(&shape).unwrap();
        let id = QMatrix::identity(rep.dimension());
        let z = hecke_parameter();
        for g in rep.generators() {
            prop_assert_eq!(g.mul(&g.sub(&id.scale(&z))), id.clone());
        }
    }
}
