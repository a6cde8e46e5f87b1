//! Laurent polynomials in `v = q^{1/D}` with exact rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::upoly::{self, Dense};
use crate::error::{Error, Result};

/// An element of `ℚ[v, v⁻¹]` where `v = q^{1/den}`.
///
/// Terms are kept sorted by ascending exponent with no zero coefficients;
/// the empty term list is zero. `den` is the session denominator and must
/// agree between operands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentScalar {
    den: u32,
    terms: Vec<(i64, BigRational)>,
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub(crate) fn rat_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LaurentScalar {
    pub fn zero(den: u32) -> Self {
        assert!(den > 0, "session denominator must be positive");
        LaurentScalar { den, terms: Vec::new() }
    }

    pub fn one(den: u32) -> Self {
        Self::constant(den, BigRational::one())
    }

    pub fn constant(den: u32, c: BigRational) -> Self {
        Self::monomial(den, 0, c)
    }

    pub fn from_i64(den: u32, c: i64) -> Self {
        Self::constant(den, rat(c))
    }

    /// `c · v^exp`.
    pub fn monomial(den: u32, exp: i64, c: BigRational) -> Self {
        assert!(den > 0, "session denominator must be positive");
        if c.is_zero() {
            return Self::zero(den);
        }
        LaurentScalar { den, terms: vec![(exp, c)] }
    }

    /// `q = v^den`.
    pub fn q(den: u32) -> Self {
        Self::monomial(den, den as i64, BigRational::one())
    }

    /// `q^k` for integer k.
    pub fn q_int(den: u32, k: i64) -> Self {
        Self::monomial(den, k * den as i64, BigRational::one())
    }

    /// `q^r` for rational r; fails when `r·den` is not an integer.
    pub fn q_pow(den: u32, r: &BigRational) -> Result<Self> {
        let e = r * BigRational::from_integer(BigInt::from(den));
        if !e.is_integer() {
            return Err(Error::OffLattice { exp: r.to_string(), den });
        }
        let e: i64 = e
            .to_integer()
            .try_into()
            .map_err(|_| Error::OffLattice { exp: r.to_string(), den })?;
        Ok(Self::monomial(den, e, BigRational::one()))
    }

    /// Builds from arbitrary (exponent, coefficient) pairs, merging repeats.
    pub fn from_terms(den: u32, terms: impl IntoIterator<Item = (i64, BigRational)>) -> Self {
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert_with(BigRational::zero) += c;
        }
        LaurentScalar {
            den,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn terms(&self) -> &[(i64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    /// Coefficient of the highest power of `v`.
    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.last().map(|t| &t.1)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms
            .binary_search_by(|t| t.0.cmp(&exp))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| BigRational::zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// If `self = ±q^s` exactly, returns `(sign, s)`.
    pub fn as_signed_q_power(&self) -> Option<(i8, BigRational)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = &self.terms[0];
        let sign = if c.is_one() {
            1
        } else if (-c).is_one() {
            -1
        } else {
            return None;
        };
        Some((sign, rat_frac(*e, self.den as i64)))
    }

    /// Exponent `s` when `self = q^s`.
    pub fn q_exponent(&self) -> Option<BigRational> {
        match self.as_signed_q_power() {
            Some((1, s)) => Some(s),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.den != other.den {
            Err(Error::SessionMismatch(self.den, other.den))
        } else {
            Ok(())
        }
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentScalar { den: self.den, terms: out }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.den));
        }
        if other.terms.len() == 1 {
            let (e, c) = &other.terms[0];
            return Ok(LaurentScalar {
                den: self.den,
                terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect(),
            });
        }
        if self.terms.len() == 1 {
            return other.checked_mul(self);
        }
        let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea + eb).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Ok(LaurentScalar {
            den: self.den,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.den);
        }
        LaurentScalar {
            den: self.den,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentScalar {
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.den);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a monomial; `None` otherwise.
    pub fn inv_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = &self.terms[0];
        Some(LaurentScalar { den: self.den, terms: vec![(-e, c.recip())] })
    }

    /// Positive rational content: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> BigRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num, den)
    }

    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(-1);
        let mut d = vec![BigRational::zero(); (hi - lo + 1).max(0) as usize];
        for (e, c) in &self.terms {
            d[(e - lo) as usize] = c.clone();
        }
        (lo, d)
    }

    pub(crate) fn from_dense(den: u32, lo: i64, d: &Dense) -> Self {
        LaurentScalar {
            den,
            terms: d
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (lo + k as i64, c.clone()))
                .collect(),
        }
    }

    /// Exact quotient in the Laurent ring, or `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if self.den != other.den || other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.den));
        }
        if let Some(inv) = other.inv_monomial() {
            return Some(self * &inv);
        }
        let (la, a) = self.to_dense();
        let (lb, b) = other.to_dense();
        let (q, r) = upoly::divrem(&a, &b);
        if !r.is_empty() {
            return None;
        }
        Some(Self::from_dense(self.den, la - lb, &q))
    }

    /// Normalized gcd in `ℚ[v, v⁻¹]`: a polynomial with lowest exponent 0,
    /// integer primitive coefficients and positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(self.den, other.den, "session denominator mismatch");
        if self.is_zero() && other.is_zero() {
            return Self::zero(self.den);
        }
        if self.is_zero() {
            return other.normalized_associate();
        }
        if other.is_zero() {
            return self.normalized_associate();
        }
        if self.is_monomial() || other.is_monomial() {
            return Self::one(self.den);
        }
        let (_, a) = self.to_dense();
        let (_, b) = other.to_dense();
        let g = upoly::gcd(&a, &b);
        Self::from_dense(self.den, 0, &g).normalized_associate()
    }

    /// The unique associate (up to monomial units) with lowest exponent 0,
    /// primitive integer coefficients and positive leading coefficient.
    pub fn normalized_associate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp().unwrap();
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        self.shift(-lo).scale(&c.recip())
    }

    /// Evaluates at `q = value` numerically (diagnostics only).
    pub fn eval_f64(&self, q: f64) -> f64 {
        let v = q.powf(1.0 / self.den as f64);
        self.terms
            .iter()
            .map(|(e, c)| {
                let cf = c.numer().to_string().parse::<f64>().unwrap_or(f64::NAN)
                    / c.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
                cf * v.powi(*e as i32)
            })
            .sum()
    }
}

/// Formats `q^(e/den)` with the exponent reduced.
pub(crate) fn fmt_q_power(e: i64, den: u32) -> String {
    let r = rat_frac(e, den as i64);
    if r.is_zero() {
        "1".to_string()
    } else if r.is_one() {
        "q".to_string()
    } else {
        format!("q^({})", r)
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let qp = fmt_q_power(*e, self.den);
            match (a.is_one(), qp.as_str()) {
                (_, "1") => write!(f, "{}", a)?,
                (true, _) => write!(f, "{}", qp)?,
                (false, _) => write!(f, "{}*{}", a, qp)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L[{}]({})", self.den, self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a LaurentScalar> for &'a LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: &'a LaurentScalar) -> LaurentScalar {
                self.$checked(rhs).expect("LaurentScalar operands from different sessions")
            }
        }
        impl $tr for LaurentScalar {
            type Output = LaurentScalar;
            fn $m(self, rhs: LaurentScalar) -> LaurentScalar {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    den: u32,
    terms: Vec<(i64, String)>,
}

impl Serialize for LaurentScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LaurentJson {
            den: self.den,
            terms: self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        if j.den == 0 {
            return Err(D::Error::custom("den must be positive"));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for (e, c) in j.terms {
            let c: BigRational = c.parse().map_err(|_| D::Error::custom(format!("bad rational {c}")))?;
            terms.push((e, c));
        }
        Ok(LaurentScalar::from_terms(j.den, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D: u32 = 4;

    fn q() -> LaurentScalar {
        LaurentScalar::q(D)
    }

    fn qi() -> LaurentScalar {
        LaurentScalar::q_int(D, -1)
    }

    #[test]
    fn half_powers_multiply_to_q() {
        let h = LaurentScalar::q_pow(D, &rat_frac(1, 2)).unwrap();
        assert_eq!(&h * &h, q());
    }

    #[test]
    fn difference_of_squares() {
        let a = &q() - &qi();
        let b = &q() + &qi();
        let expect = &LaurentScalar::q_int(D, 2) - &LaurentScalar::q_int(D, -2);
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn exact_division() {
        let one = LaurentScalar::one(D);
        let num = &LaurentScalar::q_int(D, 2) - &one;
        let den = &q() - &one;
        assert_eq!(num.div_exact(&den).unwrap(), &q() + &one);
        assert!(den.div_exact(&num).is_none());
    }

    #[test]
    fn session_mismatch_is_an_error() {
        let a = LaurentScalar::q(4);
        let b = LaurentScalar::q(6);
        assert_eq!(a.checked_add(&b), Err(Error::SessionMismatch(4, 6)));
    }

    #[test]
    fn off_lattice_exponent_rejected() {
        assert!(LaurentScalar::q_pow(4, &rat_frac(1, 3)).is_err());
    }

    #[test]
    fn display_reads_in_q() {
        let x = &q() - &qi();
        assert_eq!(x.to_string(), "q - q^(-1)");
        let h = LaurentScalar::q_pow(D, &rat_frac(-1, 2)).unwrap();
        assert_eq!(h.to_string(), "q^(-1/2)");
    }

    #[test]
    fn json_shape() {
        let x = &q() - &qi().scale(&rat_frac(3, 2));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"den":4,"terms":[[-4,"-3/2"],[4,"1"]]}"#);
        let back: LaurentScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn gcd_normalizes() {
        let one = LaurentScalar::one(D);
        let a = (&q() - &one).shift(-3).scale(&rat(-6));
        let b = &LaurentScalar::q_int(D, 2) - &one;
        assert_eq!(a.gcd(&b), &q() - &one);
    }
}
