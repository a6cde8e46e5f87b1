//! Fraction-free elimination: rank and exact kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentScalar;
use super::matrix::PolyMatrix;
use super::ratfn::RatScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Least common multiple of canonical denominators (lowest exponent 0).
pub(crate) fn laurent_lcm(a: &LaurentScalar, b: &LaurentScalar) -> LaurentScalar {
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() || a == b {
        return a.clone();
    }
    let g = a.gcd(b);
    (a * b).div_exact(&g).expect("gcd divides product").normalized_associate()
}

/// Row of Laurent polynomials proportional to `row`.
fn clear_row(den: u32, row: &[(usize, RatScalar)], ncols: usize) -> Vec<LaurentScalar> {
    let mut l = LaurentScalar::one(den);
    for (_, x) in row {
        l = laurent_lcm(&l, x.denom());
    }
    let mut out = vec![LaurentScalar::zero(den); ncols];
    for (j, x) in row {
        let f = l.div_exact(x.denom()).expect("lcm is a multiple");
        out[*j] = x.numer() * &f;
    }
    out
}

/// Bareiss echelon form of `m` (rows cleared of denominators first).
/// Returns the reduced rows and the pivot positions `(row, col)`.
pub(crate) fn bareiss(m: &PolyMatrix) -> (Vec<Vec<LaurentScalar>>, Vec<(usize, usize)>) {
    let den = m.session();
    let (nr, nc) = (m.nrows(), m.ncols());
    let mut a: Vec<Vec<LaurentScalar>> = (0..nr).map(|i| clear_row(den, m.row(i), nc)).collect();
    let mut prev = LaurentScalar::one(den);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in r + 1..nr {
            if a[i][c].is_zero() {
                if !prev.is_one() || !piv.is_one() {
                    for j in c + 1..nc {
                        if !a[i][j].is_zero() {
                            a[i][j] = (&piv * &a[i][j]).div_exact(&prev).expect("Bareiss step is exact");
                        }
                    }
                }
                continue;
            }
            let f = a[i][c].clone();
            for j in c + 1..nc {
                if a[i][j].is_zero() && a[r][j].is_zero() {
                    continue;
                }
                let t = &(&piv * &a[i][j]) - &(&f * &a[r][j]);
                a[i][j] = t.div_exact(&prev).expect("Bareiss step is exact");
            }
            a[i][c] = LaurentScalar::zero(den);
        }
        prev = piv;
        pivots.push((r, c));
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &PolyMatrix) -> usize {
    bareiss(m).1.len()
}

/// Scales a kernel vector to its canonical representative: Laurent entries,
/// lowest exponent 0 overall, primitive integer coefficients, and positive
/// leading coefficient in the first nonzero coordinate.
pub fn normalize_vector(x: &[RatScalar]) -> Vec<RatScalar> {
    let den = x.first().map(|e| e.session()).unwrap_or(1);
    let mut l = LaurentScalar::one(den);
    for e in x {
        l = laurent_lcm(&l, e.denom());
    }
    let mut v: Vec<LaurentScalar> = x
        .iter()
        .map(|e| e.numer() * &l.div_exact(e.denom()).expect("lcm is a multiple"))
        .collect();
    let mut g = LaurentScalar::zero(den);
    for e in &v {
        if !e.is_zero() {
            g = if g.is_zero() { e.normalized_associate() } else { g.gcd(e) };
        }
    }
    if g.is_zero() {
        return x.to_vec();
    }
    if !g.is_one() {
        v = v.iter().map(|e| e.div_exact(&g).expect("gcd divides")).collect();
    }
    let lo = v.iter().filter_map(LaurentScalar::min_exp).min().unwrap();
    let mut nu = BigInt::zero();
    let mut de = BigInt::one();
    for (_, c) in v.iter().flat_map(|e| e.terms()) {
        nu = nu.gcd(c.numer());
        de = de.lcm(c.denom());
    }
    let mut content = BigRational::new(nu, de);
    let first = v.iter().find(|e| !e.is_zero()).unwrap();
    if first.leading_coeff().unwrap().is_negative() {
        content = -content;
    }
    let inv = content.recip();
    v.into_iter().map(|e| e.shift(-lo).scale(&inv).into()).collect()
}

/// Right kernel (`M x = 0`) or left kernel (`xᵀ M = 0`) basis, canonical and
/// deterministic. One basis vector per non-pivot column, in column order.
pub fn nullspace(m: &PolyMatrix, side: Side) -> Vec<Vec<RatScalar>> {
    let m = match side {
        Side::Right => m.clone(),
        Side::Left => m.transpose(),
    };
    let den = m.session();
    let nc = m.ncols();
    let (a, pivots) = bareiss(&m);
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let free: Vec<usize> = (0..nc).filter(|c| !pivot_cols.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![RatScalar::zero(den); nc];
        x[f] = RatScalar::one(den);
        for &(r, c) in pivots.iter().rev() {
            let mut s = RatScalar::zero(den);
            for j in c + 1..nc {
                if !a[r][j].is_zero() && !x[j].is_zero() {
                    s = &s + &x[j].mul_laurent(&a[r][j]);
                }
            }
            if !s.is_zero() {
                x[c] = -(&s / &RatScalar::from(a[r][c].clone()));
            }
        }
        out.push(normalize_vector(&x));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::SparseVec;

    const D: u32 = 4;

    fn l(k: i64) -> RatScalar {
        LaurentScalar::q_int(D, k).into()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = PolyMatrix::identity(D, 3);
        assert!(nullspace(&m, Side::Right).is_empty());
        assert!(nullspace(&m, Side::Left).is_empty());
    }

    #[test]
    fn one_row_kernel_is_difference() {
        let a = &RatScalar::one(D) + &l(1);
        let m = PolyMatrix::from_entries(D, 1, 2, [(0, 0, a.clone()), (0, 1, a)]).unwrap();
        let k = nullspace(&m, Side::Right);
        assert_eq!(k, vec![vec![RatScalar::one(D), RatScalar::from_i64(D, -1)]]);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        // third row is the sum of the first two
        let e = |i, j, x| (i, j, x);
        let m = PolyMatrix::from_entries(
            D,
            3,
            3,
            [
                e(0, 0, l(1)),
                e(0, 1, l(2)),
                e(0, 2, l(-1)),
                e(1, 0, l(2)),
                e(1, 1, l(1)),
                e(1, 2, RatScalar::one(D)),
                e(2, 0, &l(1) + &l(2)),
                e(2, 1, &l(2) + &l(1)),
                e(2, 2, &l(-1) + &RatScalar::one(D)),
            ],
        )
        .unwrap();
        assert_eq!(rank(&m), 2);
        for side in [Side::Right, Side::Left] {
            let k = nullspace(&m, side);
            assert_eq!(k.len(), 1);
            let x: SparseVec = k[0].iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect();
            let y = match side {
                Side::Right => m.apply(&x),
                Side::Left => m.apply_left(&x),
            };
            assert!(y.is_empty());
        }
    }
}
