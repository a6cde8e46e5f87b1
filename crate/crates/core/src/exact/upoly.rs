//! Dense univariate polynomials over ℚ, index = degree.
//!
//! Only what the Laurent layer needs: exact division and gcd. Inputs and
//! outputs are trimmed (no trailing zeros); the zero polynomial is `[]`.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) type Dense = Vec<BigRational>;

pub(crate) fn trim(p: &mut Dense) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &Dense) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Euclidean division `a = q*b + r` with `deg r < deg b`. Panics on `b = 0`.
pub(crate) fn divrem(a: &Dense, b: &Dense) -> (Dense, Dense) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r = a.clone();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = BigRational::one() / &b[db];
    let mut q = vec![BigRational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                r[shift + k] -= &c * bk;
            }
        }
        q[shift] = c;
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn make_monic(p: &mut Dense) {
    if let Some(lead) = p.last().cloned() {
        for c in p.iter_mut() {
            *c /= &lead;
        }
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &Dense, b: &Dense) -> Dense {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
        make_monic(&mut y);
    }
    make_monic(&mut x);
    x
}
