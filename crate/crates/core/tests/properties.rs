use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use qgrow::exact::minpoly::{minpoly_probe, signed_monomial_roots};
use qgrow::exact::{nullspace, rank, LaurentScalar, PolyMatrix, RatScalar, Side};
use qgrow::lattice::{fundamental_weight, reference_cartan, Series, Weight};
use qgrow::nichols::{pairing_matrix, pairing_value, radical_basis, Braiding, Comb, Word};
use qgrow::rmx::vector_rmatrix_star;

const DEN: u32 = 2;

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn laurent() -> impl Strategy<Value = LaurentScalar> {
    prop::collection::vec((-6i64..=6, -4i64..=4), 0..5)
        .prop_map(|ts| LaurentScalar::from_terms(DEN, ts.into_iter().map(|(e, c)| (e, r(c)))))
}

fn ratfn() -> impl Strategy<Value = RatScalar> {
    (laurent(), laurent()).prop_filter_map("nonzero denominator", |(a, b)| {
        if b.is_zero() {
            None
        } else {
            RatScalar::new(a, b).ok()
        }
    })
}

fn small_matrix() -> impl Strategy<Value = PolyMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop_oneof![3 => Just(None), 2 => laurent().prop_map(Some)], m * n).prop_map(move |xs| {
            let entries = xs
                .into_iter()
                .enumerate()
                .filter_map(|(k, x)| x.map(|x| (k / n, k % n, RatScalar::from(x))));
            PolyMatrix::from_entries(DEN, m, n, entries).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentScalar::one(DEN), a.clone());
    }

    #[test]
    fn laurent_canonical_form(ts in prop::collection::vec((-5i64..=5, -3i64..=3), 0..8)) {
        let a = LaurentScalar::from_terms(DEN, ts.iter().map(|&(e, c)| (e, r(c))));
        let mut rev = ts.clone();
        rev.reverse();
        let b = LaurentScalar::from_terms(DEN, rev.iter().map(|&(e, c)| (e, r(c))));
        prop_assert_eq!(&a, &b);
        let exps: Vec<i64> = a.terms().iter().map(|t| t.0).collect();
        prop_assert!(exps.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(a.terms().iter().all(|t| !t.1.is_zero()));
        let mut sums: BTreeMap<i64, i64> = BTreeMap::new();
        for &(e, c) in &ts {
            *sums.entry(e).or_default() += c;
        }
        for (e, c) in sums {
            prop_assert_eq!(a.coeff(e), r(c));
        }
    }

    #[test]
    fn ratfn_field_axioms(a in ratfn(), b in ratfn(), c in ratfn()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn nullspace_is_annihilated(m in small_matrix()) {
        let right = nullspace(&m, Side::Right);
        prop_assert_eq!(rank(&m) + right.len(), m.ncols());
        for v in &right {
            for i in 0..m.nrows() {
                let mut s = RatScalar::zero(DEN);
                for j in 0..m.ncols() {
                    s = &s + &(&m.get(i, j) * &v[j]);
                }
                prop_assert!(s.is_zero());
            }
        }
        let left = nullspace(&m, Side::Left);
        prop_assert_eq!(rank(&m) + left.len(), m.nrows());
        for v in &left {
            for j in 0..m.ncols() {
                let mut s = RatScalar::zero(DEN);
                for i in 0..m.nrows() {
                    s = &s + &(&v[i] * &m.get(i, j));
                }
                prop_assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn minpoly_of_diagonal_is_minimal(diag in prop::collection::vec((any::<bool>(), -3i64..=3), 1..6)) {
        let n = diag.len();
        let entries = diag.iter().enumerate().map(|(k, &(neg, e))| {
            let x = LaurentScalar::q_int(DEN, e);
            (k, k, RatScalar::from(if neg { -x } else { x }))
        });
        let m = PolyMatrix::from_entries(DEN, n, n, entries).unwrap();
        let p = minpoly_probe(&m).unwrap();
        let mut distinct = diag.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(p.degree(), Some(distinct.len()));
        prop_assert!(p.eval_matrix(&m).unwrap().is_zero());
        let mut roots: Vec<(bool, BigRational)> = signed_monomial_roots(&p)
            .unwrap()
            .into_iter()
            .map(|q| (q.is_negative(), q.exp))
            .collect();
        roots.sort();
        let want: Vec<(bool, BigRational)> = distinct.iter().map(|&(s, e)| (s, r(e))).collect();
        prop_assert_eq!(roots, want);
    }

    #[test]
    fn inner_product_matches_euclidean_embedding(
        n in 2usize..=5,
        a in prop::collection::vec(-3i64..=3, 4),
        b in prop::collection::vec(-3i64..=3, 4),
    ) {
        let x = Weight::from_ints(&a[..n - 1]);
        let y = Weight::from_ints(&b[..n - 1]);
        // α_i = e_i − e_{i+1} in ℤⁿ
        let embed = |c: &[i64]| -> Vec<i64> {
            let mut v = vec![0; n];
            for (i, &ci) in c.iter().enumerate() {
                v[i] += ci;
                v[i + 1] -= ci;
            }
            v
        };
        let dot: i64 = embed(&a[..n - 1]).iter().zip(embed(&b[..n - 1])).map(|(p, q)| p * q).sum();
        prop_assert_eq!(x.inner(&y).unwrap(), r(dot));
        prop_assert_eq!(x.inner(&y).unwrap(), y.inner(&x).unwrap());
    }

    #[test]
    fn braid_relation_on_words(w in prop::collection::vec(1usize..=3, 3)) {
        let b = Braiding::from_majid(&vector_rmatrix_star(3).unwrap()).unwrap();
        let start: Comb = [(w.clone(), RatScalar::one(b.session()))].into_iter().collect();
        let lhs = b.apply(&b.apply(&b.apply(&start, 1).unwrap(), 2).unwrap(), 1).unwrap();
        let rhs = b.apply(&b.apply(&b.apply(&start, 2).unwrap(), 1).unwrap(), 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_coassociative(w in prop::collection::vec(1usize..=2, 3..=4), split in (1usize..=2, 1usize..=2)) {
        let b = Braiding::from_majid(&vector_rmatrix_star(2).unwrap()).unwrap();
        let d = w.len();
        let (i, j) = split;
        prop_assume!(i + j < d);
        let mut left = BTreeMap::new();
        for ((u, c), x) in b.coproduct_component(&w, i + j).unwrap() {
            for ((a, bb), y) in b.coproduct_component(&u, i).unwrap() {
                add(&mut left, (a, bb, c.clone()), &x * &y);
            }
        }
        let mut right = BTreeMap::new();
        for ((a, u), x) in b.coproduct_component(&w, i).unwrap() {
            for ((bb, c), y) in b.coproduct_component(&u, j).unwrap() {
                add(&mut right, (a.clone(), bb, c), &x * &y);
            }
        }
        prop_assert_eq!(left, right);
    }

    #[test]
    fn coproduct_at_q_one_is_the_shuffle_coproduct(w in prop::collection::vec(1usize..=3, 2..=4), k in 1usize..=3) {
        let d = w.len();
        prop_assume!(k < d);
        let b = Braiding::from_majid(&vector_rmatrix_star(3).unwrap()).unwrap();
        let got: BTreeMap<(Word, Word), BigRational> = b
            .coproduct_component(&w, k)
            .unwrap()
            .into_iter()
            .map(|(key, x)| (key, at_q_one(&x)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let mut want: BTreeMap<(Word, Word), BigRational> = BTreeMap::new();
        for mask in 0u32..(1 << d) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let (mut a, mut c) = (Vec::new(), Vec::new());
            for (p, &l) in w.iter().enumerate() {
                if mask & (1 << p) != 0 { a.push(l) } else { c.push(l) }
            }
            *want.entry((a, c)).or_insert_with(BigRational::zero) += r(1);
        }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn radical_pairs_to_zero_with_every_word(n in 2usize..=3, f in prop::collection::vec(1usize..=3, 3)) {
        prop_assume!(f.iter().all(|&l| l <= n));
        let b = Braiding::from_majid(&vector_rmatrix_star(n).unwrap()).unwrap();
        let pm = pairing_matrix(&b, 3).unwrap();
        let rad = radical_basis(&b, 3).unwrap();
        for x in &rad.right {
            let mut s = RatScalar::zero(b.session());
            for (e, c) in x {
                s = &s + &(c * &pairing_value(&pm, &f, e));
            }
            prop_assert!(s.is_zero());
        }
        for y in &rad.left {
            let mut s = RatScalar::zero(b.session());
            for (g, c) in y {
                s = &s + &(c * &pairing_value(&pm, g, &f));
            }
            prop_assert!(s.is_zero());
        }
    }
}

fn add<K: Ord>(m: &mut BTreeMap<K, RatScalar>, k: K, x: RatScalar) {
    let e = m.remove(&k).map(|y| &y + &x).unwrap_or(x);
    if !e.is_zero() {
        m.insert(k, e);
    }
}

fn at_q_one(x: &RatScalar) -> BigRational {
    let sum = |l: &LaurentScalar| l.terms().iter().map(|t| t.1.clone()).sum::<BigRational>();
    sum(x.numer()) / sum(x.denom())
}

/// Cartan matrices from explicit simple roots in ℤʳ.
fn euclidean_cartan(series: Series, r: usize) -> Vec<Vec<i64>> {
    let e = |i: usize, s: i64| {
        let mut v = vec![0i64; r];
        v[i] = s;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..r - 1)
        .map(|i| {
            let mut v = e(i, 1);
            v[i + 1] = -1;
            v
        })
        .collect();
    match series {
        Series::A => unreachable!(),
        Series::B => roots.push(e(r - 1, 1)),
        Series::C => roots.push(e(r - 1, 2)),
        Series::D => {
            let mut v = e(r - 2, 1);
            v[r - 1] = 1;
            roots.push(v);
        }
    }
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    roots.iter().map(|a| roots.iter().map(|b| 2 * dot(a, b) / dot(a, a)).collect()).collect()
}

#[test]
fn reference_cartan_matches_euclidean_roots() {
    for r in 2..=6 {
        assert_eq!(reference_cartan(Series::B, r).unwrap(), euclidean_cartan(Series::B, r), "B{r}");
        assert_eq!(reference_cartan(Series::C, r).unwrap(), euclidean_cartan(Series::C, r), "C{r}");
    }
    for r in 4..=6 {
        assert_eq!(reference_cartan(Series::D, r).unwrap(), euclidean_cartan(Series::D, r), "D{r}");
    }
}

#[test]
fn fundamental_weights_are_dual_to_simple_roots() {
    for n in 2..=5 {
        for i in 1..n {
            let w = fundamental_weight(n, i).unwrap();
            for j in 1..n {
                let a = Weight::simple_root(n - 1, j).unwrap();
                assert_eq!(w.inner(&a).unwrap(), r(i64::from(i == j)));
            }
        }
    }
}
