//! Field of fractions of the Laurent ring.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentScalar;
use crate::error::{Error, Result};

/// `num / den` in lowest terms.
///
/// `den` has lowest exponent 0, primitive integer coefficients and a positive
/// leading coefficient, and shares no non-unit factor with `num`. Equal values
/// therefore have identical representations and derived `Eq` is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatScalar {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RatScalar {
    pub fn zero(d: u32) -> Self {
        RatScalar { num: LaurentScalar::zero(d), den: LaurentScalar::one(d) }
    }

    pub fn one(d: u32) -> Self {
        LaurentScalar::one(d).into()
    }

    pub fn from_i64(d: u32, c: i64) -> Self {
        LaurentScalar::from_i64(d, c).into()
    }

    pub fn session(&self) -> u32 {
        self.num.den()
    }

    pub fn numer(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denom(&self) -> &LaurentScalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial this equals, if its denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Result<Self> {
        if num.den() != den.den() {
            return Err(Error::SessionMismatch(num.den(), den.den()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(mut num: LaurentScalar, mut den: LaurentScalar) -> Self {
        let d = num.den();
        if num.is_zero() {
            return Self::zero(d);
        }
        if !den.is_monomial() {
            let g = num.gcd(&den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let lo = den.min_exp().unwrap();
        let mut c = den.content();
        if den.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        let cinv = c.recip();
        RatScalar {
            num: num.shift(-lo).scale(&cinv),
            den: den.shift(-lo).scale(&cinv),
        }
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.session() != o.session() {
            Err(Error::SessionMismatch(self.session(), o.session()))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.den.is_one() && o.den.is_one() {
            return Ok((&self.num + &o.num).into());
        }
        if self.den == o.den {
            return Ok(Self::canonical(&self.num + &o.num, self.den.clone()));
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        Ok(Self::canonical(n, &self.den * &o.den))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self> {
        self.checked_add(&-o)
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.den.is_one() && o.den.is_one() {
            return Ok((&self.num * &o.num).into());
        }
        Ok(Self::canonical(&self.num * &o.num, &self.den * &o.den))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.den.is_one() && o.den.is_one() {
            if let Some(q) = self.num.div_exact(&o.num) {
                return Ok(q.into());
            }
        }
        Ok(Self::canonical(&self.num * &o.den, &self.den * &o.num))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one(self.session()).checked_div(self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatScalar { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplies by the Laurent polynomial `l`.
    pub fn mul_laurent(&self, l: &LaurentScalar) -> Self {
        if self.den.is_one() {
            return (&self.num * l).into();
        }
        Self::canonical(&self.num * l, self.den.clone())
    }
}

impl From<LaurentScalar> for RatScalar {
    fn from(num: LaurentScalar) -> Self {
        let den = LaurentScalar::one(num.den());
        RatScalar { num, den }
    }
}

/// Dispatching entry point for mixed Laurent / rational arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn scalar_arith(a: &RatScalar, b: &RatScalar, op: ArithOp) -> Result<RatScalar> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

impl fmt::Display for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{}]({})", self.session(), self)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a RatScalar> for &'a RatScalar {
            type Output = RatScalar;
            fn $m(self, rhs: &'a RatScalar) -> RatScalar {
                self.$checked(rhs).expect("invalid RatScalar operation")
            }
        }
        impl $tr for RatScalar {
            type Output = RatScalar;
            fn $m(self, rhs: RatScalar) -> RatScalar {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        RatScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatScalar {
    type Output = RatScalar;
    fn neg(self) -> RatScalar {
        -&self
    }
}

/// Laurent values serialize exactly like `LaurentScalar`; genuine fractions
/// as `{"numer": .., "denom": ..}`.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RatJson {
    Frac { numer: LaurentScalar, denom: LaurentScalar },
    Poly(LaurentScalar),
}

impl Serialize for RatScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.den.is_one() {
            self.num.serialize(s)
        } else {
            RatJson::Frac { numer: self.num.clone(), denom: self.den.clone() }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for RatScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match RatJson::deserialize(d)? {
            RatJson::Poly(p) => Ok(p.into()),
            RatJson::Frac { numer, denom } => {
                RatScalar::new(numer, denom).map_err(|e| D::Error::custom(e.to_string()))
            }
        }
    }
}

impl RatScalar {
    /// `true` when this is a nonzero rational constant.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_monomial() && self.num.min_exp() == Some(0)
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn is_unit_constant(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat;

    const D: u32 = 6;

    fn l(k: i64) -> LaurentScalar {
        LaurentScalar::q_int(D, k)
    }

    #[test]
    fn cancels_common_factor() {
        let one = LaurentScalar::one(D);
        let a: RatScalar = (&l(2) - &one).into();
        let b: RatScalar = (&l(1) - &one).into();
        let c = a.checked_div(&b).unwrap();
        assert_eq!(c, (&l(1) + &one).into());
        assert!(c.as_laurent().is_some());
    }

    #[test]
    fn canonical_denominator_shape() {
        let one = LaurentScalar::one(D);
        let n: LaurentScalar = l(3);
        let d = (&l(-1) - &one).scale(&rat(-4));
        let x = RatScalar::new(n, d).unwrap();
        assert_eq!(x.denom().min_exp(), Some(0));
        assert!(x.denom().leading_coeff().unwrap().is_positive());
        assert_eq!(x.denom().content(), rat(1));
    }

    #[test]
    fn division_by_zero() {
        let a = RatScalar::one(D);
        assert_eq!(a.checked_div(&RatScalar::zero(D)), Err(Error::DivisionByZero));
    }

    #[test]
    fn fraction_json_round_trip() {
        let one = LaurentScalar::one(D);
        let x = RatScalar::new(one.clone(), &l(1) + &one).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with("{\"numer\""));
        let back: RatScalar = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let y: RatScalar = l(1).into();
        let back: RatScalar = serde_json::from_str(&serde_json::to_string(&y).unwrap()).unwrap();
        assert_eq!(back, y);
    }
}
