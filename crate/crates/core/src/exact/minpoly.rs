//! Minimal polynomials by Krylov probing, and their signed q-monomial roots.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{rat_frac, LaurentScalar};
use super::linalg::{nullspace, Side};
use super::matrix::{axpy, PolyMatrix, SparseVec};
use super::ratfn::RatScalar;
use crate::error::{Error, Result};

/// Univariate polynomial over the session field, index = degree, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KPoly {
    den: u32,
    coeffs: Vec<RatScalar>,
}

impl KPoly {
    pub fn new(den: u32, mut coeffs: Vec<RatScalar>) -> Self {
        while coeffs.last().is_some_and(RatScalar::is_zero) {
            coeffs.pop();
        }
        KPoly { den, coeffs }
    }

    pub fn one(den: u32) -> Self {
        KPoly { den, coeffs: vec![RatScalar::one(den)] }
    }

    /// `x - r`.
    pub fn linear(r: &RatScalar) -> Self {
        let den = r.session();
        KPoly { den, coeffs: vec![-r, RatScalar::one(den)] }
    }

    pub fn coeffs(&self) -> &[RatScalar] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                KPoly { den: self.den, coeffs: self.coeffs.iter().map(|c| c * &inv).collect() }
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return KPoly::new(self.den, Vec::new());
        }
        let mut out = vec![RatScalar::zero(self.den); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        KPoly::new(self.den, out)
    }

    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by the zero polynomial");
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return (KPoly::new(self.den, Vec::new()), self.clone());
        }
        let lead_inv = b.coeffs[db].inv().expect("nonzero leading coefficient");
        let mut q = vec![RatScalar::zero(self.den); r.len() - db];
        for k in (db..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let c = &r[k] * &lead_inv;
            for (i, bi) in b.coeffs.iter().enumerate() {
                let idx = k - db + i;
                r[idx] = &r[idx] - &(&c * bi);
            }
            q[k - db] = c;
        }
        (KPoly::new(self.den, q), KPoly::new(self.den, r))
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let g = self.gcd(o);
        let (q, r) = self.mul(o).divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn eval(&self, x: &RatScalar) -> RatScalar {
        let mut acc = RatScalar::zero(self.den);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(M)` by Horner's scheme.
    pub fn eval_matrix(&self, m: &PolyMatrix) -> Result<PolyMatrix> {
        let n = m.nrows();
        let mut acc = PolyMatrix::zeros(self.den, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mat_mul(m)?.add(&PolyMatrix::identity(self.den, n).scale(c))?;
        }
        Ok(acc)
    }

    /// `p(M) x` by Horner's scheme on the vector.
    pub fn eval_on_vector(&self, m: &PolyMatrix, x: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for c in self.coeffs.iter().rev() {
            acc = m.apply(&acc);
            axpy(&mut acc, c, x);
        }
        acc
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 if c.is_one() => write!(f, "x")?,
                1 => write!(f, "({c})*x")?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Monic annihilator of `x` under `m` from the first Krylov dependency.
fn krylov_annihilator(m: &PolyMatrix, x: &SparseVec) -> KPoly {
    let den = m.session();
    let n = m.nrows();
    let mut vs: Vec<SparseVec> = vec![x.clone()];
    loop {
        let k = vs.len();
        let cols = PolyMatrix::from_entries(
            den,
            n,
            k,
            vs.iter().enumerate().flat_map(|(j, v)| v.iter().map(move |(i, c)| (*i, j, c.clone()))),
        )
        .expect("Krylov columns fit");
        let ker = nullspace(&cols, Side::Right);
        if let Some(c) = ker.into_iter().next() {
            return KPoly::new(den, c).monic();
        }
        let next = m.apply(vs.last().unwrap());
        vs.push(next);
    }
}

/// Minimal polynomial of a square matrix as the lcm of probe annihilators.
///
/// Probes are the standard basis vectors in index order; a probe already
/// annihilated by the running lcm is skipped, and after every change of the
/// lcm it is substituted into `m` to test for early termination.
pub fn minpoly_probe(m: &PolyMatrix) -> Result<KPoly> {
    if !m.is_square() {
        return Err(Error::Dimension(format!("{}×{} is not square", m.nrows(), m.ncols())));
    }
    let den = m.session();
    let mut l = KPoly::one(den);
    for k in 0..m.nrows() {
        let e: SparseVec = [(k, RatScalar::one(den))].into_iter().collect();
        if l.eval_on_vector(m, &e).is_empty() {
            continue;
        }
        let a = krylov_annihilator(m, &e);
        l = l.lcm(&a);
        if l.eval_matrix(m)?.is_zero() {
            return Ok(l);
        }
    }
    Ok(l)
}

/// A signed power `sign · q^exp`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMonomial {
    pub sign: i8,
    pub exp: BigRational,
}

impl QMonomial {
    pub fn new(sign: i8, exp: BigRational) -> Self {
        QMonomial { sign, exp }
    }

    pub fn to_scalar(&self, den: u32) -> Result<LaurentScalar> {
        let p = LaurentScalar::q_pow(den, &self.exp)?;
        Ok(if self.sign < 0 { -p } else { p })
    }

    pub fn is_negative(&self) -> bool {
        self.sign < 0
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign < 0 { "-" } else { "" };
        if self.exp.is_zero() {
            write!(f, "{s}1")
        } else if self.exp.is_one() {
            write!(f, "{s}q")
        } else {
            write!(f, "{s}q^({})", self.exp)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct QMonomialJson {
    sign: i8,
    exp: String,
}

impl Serialize for QMonomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QMonomialJson { sign: self.sign, exp: self.exp.to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QMonomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = QMonomialJson::deserialize(d)?;
        let exp = j.exp.parse().map_err(|_| serde::de::Error::custom("bad exponent"))?;
        Ok(QMonomial { sign: j.sign, exp })
    }
}

/// Factors a monic polynomial into linear factors `x ∓ q^s`, roots returned
/// in ascending `(sign, exp)` order with multiplicity.
pub fn signed_monomial_roots(p: &KPoly) -> Result<Vec<QMonomial>> {
    let den = p.den;
    let bound: i64 = p
        .coeffs()
        .iter()
        .flat_map(|c| [c.numer().min_exp(), c.numer().max_exp(), c.denom().max_exp()])
        .flatten()
        .map(i64::abs)
        .sum::<i64>()
        + 1;
    let mut rest = p.monic();
    let mut roots = Vec::new();
    'outer: while rest.degree().unwrap_or(0) > 0 {
        for e in -bound..=bound {
            for sign in [1i8, -1] {
                let mono = LaurentScalar::monomial(den, e, BigRational::from_integer(sign.into()));
                let x: RatScalar = mono.into();
                if rest.eval(&x).is_zero() {
                    let (q, _) = rest.divrem(&KPoly::linear(&x));
                    rest = q;
                    roots.push(QMonomial::new(sign, rat_frac(e, den as i64)));
                    continue 'outer;
                }
            }
        }
        return Err(Error::Spectrum(format!("minimal polynomial {p} has a factor {rest} without signed q-power roots")));
    }
    roots.sort();
    Ok(roots)
}

/// `Π (x − r)` over the given roots.
pub fn poly_from_roots(den: u32, roots: &[QMonomial]) -> Result<KPoly> {
    let mut p = KPoly::one(den);
    for r in roots {
        p = p.mul(&KPoly::linear(&r.to_scalar(den)?.into()));
    }
    Ok(p)
}

/// `true` when `p(M) = 0` and removing any single linear factor breaks that.
pub fn is_minimal_annihilator(m: &PolyMatrix, roots: &[QMonomial]) -> Result<bool> {
    let den = m.session();
    if !poly_from_roots(den, roots)?.eval_matrix(m)?.is_zero() {
        return Ok(false);
    }
    for skip in 0..roots.len() {
        let sub: Vec<QMonomial> =
            roots.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, r)| r.clone()).collect();
        if poly_from_roots(den, &sub)?.eval_matrix(m)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    const D: u32 = 4;

    #[test]
    fn flip_has_minpoly_x2_minus_1() {
        let p = minpoly_probe(&PolyMatrix::flip(D, 2)).unwrap();
        assert_eq!(p, KPoly::new(D, vec![RatScalar::from_i64(D, -1), RatScalar::zero(D), RatScalar::one(D)]));
        let r = signed_monomial_roots(&p).unwrap();
        assert_eq!(r, vec![QMonomial::new(-1, BigRational::zero()), QMonomial::new(1, BigRational::zero())]);
    }

    #[test]
    fn identity_has_linear_minpoly() {
        let p = minpoly_probe(&PolyMatrix::identity(D, 5)).unwrap();
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn diagonal_with_repeats() {
        let q = |k| -> RatScalar { LaurentScalar::q_int(D, k).into() };
        let m = PolyMatrix::diagonal(vec![q(1), q(-1), q(1), -q(2)], D);
        let p = minpoly_probe(&m).unwrap();
        assert_eq!(p.degree(), Some(3));
        let r = signed_monomial_roots(&p).unwrap();
        assert!(is_minimal_annihilator(&m, &r).unwrap());
    }
}
