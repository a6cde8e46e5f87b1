//! Root and weight lattice of `A_{n-1}`, plus reference Cartan matrices.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::laurent::{rat, rat_frac};

/// `Σ cᵢ αᵢ` in the simple-root basis of `A_{n-1}`, optionally carrying a
/// central component `v` orthogonal to every `αᵢ`.
///
/// `central` is the norm `(v, v)` of the attached central generator, or zero
/// when there is none. Two weights carrying the same nonzero norm are taken
/// to carry the same generator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Weight {
    pub coords: Vec<BigRational>,
    pub central: BigRational,
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight { coords: vec![BigRational::zero(); rank], central: BigRational::zero() }
    }

    pub fn from_coords(coords: Vec<BigRational>) -> Self {
        Weight { coords, central: BigRational::zero() }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Self::from_coords(coords.iter().map(|&c| rat(c)).collect())
    }

    /// Simple root `αᵢ`, `1 ≤ i ≤ rank`.
    pub fn simple_root(rank: usize, i: usize) -> Result<Self> {
        if i == 0 || i > rank {
            return Err(Error::IndexOutOfRange(format!("simple root {i} of rank {rank}")));
        }
        let mut w = Self::zero(rank);
        w.coords[i - 1] = rat(1);
        Ok(w)
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// Sum of the α-coordinates.
    pub fn height(&self) -> BigRational {
        self.coords.iter().sum()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Weight {
            coords: self.coords.iter().map(|x| x * c).collect(),
            central: if c.is_zero() { BigRational::zero() } else { self.central.clone() },
        }
    }

    pub fn with_central(&self, norm: BigRational) -> Self {
        Weight { coords: self.coords.clone(), central: norm }
    }

    fn combine(&self, o: &Self, sign: i64) -> Self {
        assert_eq!(self.rank(), o.rank(), "weight rank mismatch");
        let central = if self.central.is_zero() { o.central.clone() } else { self.central.clone() };
        Weight {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b * rat(sign)).collect(),
            central,
        }
    }

    /// `(self, o)` for the type-A form `(αᵢ, αⱼ) = aᵢⱼ`.
    pub fn inner(&self, o: &Self) -> Result<BigRational> {
        if self.rank() != o.rank() {
            return Err(Error::Dimension(format!("weights of rank {} and {}", self.rank(), o.rank())));
        }
        let r = self.rank();
        let mut s = BigRational::zero();
        for i in 0..r {
            if self.coords[i].is_zero() {
                continue;
            }
            let mut t = &o.coords[i] * rat(2);
            if i > 0 {
                t -= &o.coords[i - 1];
            }
            if i + 1 < r {
                t -= &o.coords[i + 1];
            }
            s += &self.coords[i] * t;
        }
        if !self.central.is_zero() && self.central == o.central {
            s += &self.central;
        }
        Ok(s)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        self.combine(o, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        self.combine(o, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|c| -c).collect(), central: self.central.clone() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            write!(f, "({})a{}", c.abs(), i + 1)?;
        }
        if !self.central.is_zero() {
            write!(f, "{}v[{}]", if first { "" } else { " + " }, self.central)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct WeightJson {
    coords: Vec<String>,
    central: String,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightJson {
            coords: self.coords.iter().map(ToString::to_string).collect(),
            central: self.central.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = WeightJson::deserialize(d)?;
        let parse = |s: &str| s.parse::<BigRational>().map_err(|_| D::Error::custom(format!("bad rational {s}")));
        Ok(Weight {
            coords: j.coords.iter().map(|s| parse(s)).collect::<std::result::Result<_, _>>()?,
            central: parse(&j.central)?,
        })
    }
}

/// Fundamental weight `λᵢ` of `A_{n-1}` in the α-basis.
pub fn fundamental_weight(n: usize, i: usize) -> Result<Weight> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("fundamental weight {i} for n = {n}")));
    }
    let (n, i) = (n as i64, i as i64);
    let coords = (1..n)
        .map(|k| if k <= i { rat_frac(k * (n - i), n) } else { rat_frac(i * (n - k), n) })
        .collect();
    Ok(Weight::from_coords(coords))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Series::A => "A",
            Series::B => "B",
            Series::C => "C",
            Series::D => "D",
        };
        write!(f, "{s}")
    }
}

/// Cartan data of a finite root system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub lengths: Vec<BigRational>,
}

impl RootDatum {
    /// `A_{n-1}`, rank `n − 1`, all roots of squared length 2.
    pub fn type_a(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Unsupported(format!("A_(n-1) needs n ≥ 2, got {n}")));
        }
        let r = n - 1;
        Ok(RootDatum { rank: r, cartan: reference_cartan(Series::A, r)?, lengths: vec![rat(2); r] })
    }
}

/// Standard Cartan matrix `aᵢⱼ = 2(αᵢ, αⱼ)/(αᵢ, αᵢ)` in Bourbaki order.
pub fn reference_cartan(series: Series, rank: usize) -> Result<Vec<Vec<i64>>> {
    let min = match series {
        Series::A => 1,
        Series::B | Series::C => 2,
        Series::D => 4,
    };
    if rank < min {
        return Err(Error::Unsupported(format!("{series}{rank}: rank must be at least {min}")));
    }
    let r = rank;
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        a[i][i] = 2;
        if i + 1 < r {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match series {
        Series::A => {}
        Series::B => a[r - 1][r - 2] = -2,
        Series::C => a[r - 2][r - 1] = -2,
        Series::D => {
            a[r - 2][r - 1] = 0;
            a[r - 1][r - 2] = 0;
            a[r - 3][r - 1] = -1;
            a[r - 1][r - 3] = -1;
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_rank_fundamental_weights() {
        assert_eq!(fundamental_weight(2, 1).unwrap().coords, vec![rat_frac(1, 2)]);
        assert_eq!(fundamental_weight(3, 1).unwrap().coords, vec![rat_frac(2, 3), rat_frac(1, 3)]);
        assert_eq!(
            fundamental_weight(4, 2).unwrap().coords,
            vec![rat_frac(1, 2), rat(1), rat_frac(1, 2)]
        );
        assert!(fundamental_weight(3, 3).is_err());
    }

    #[test]
    fn inner_products() {
        let a1 = Weight::simple_root(2, 1).unwrap();
        let l1 = fundamental_weight(3, 1).unwrap();
        assert_eq!(a1.inner(&a1).unwrap(), rat(2));
        assert_eq!(l1.inner(&a1).unwrap(), rat(1));
        assert_eq!(l1.inner(&l1).unwrap(), rat_frac(2, 3));
        assert!(a1.inner(&Weight::zero(3)).is_err());
    }

    #[test]
    fn central_components() {
        let a1 = Weight::simple_root(2, 1).unwrap();
        let v = Weight::zero(2).with_central(rat(3));
        let w = &a1 + &v;
        assert_eq!(w.inner(&w).unwrap(), rat(5));
        assert_eq!(w.inner(&a1).unwrap(), rat(2));
        let other = Weight::zero(2).with_central(rat(1));
        assert_eq!(w.inner(&other).unwrap(), rat(0));
    }

    #[test]
    fn reference_matrices() {
        assert_eq!(reference_cartan(Series::B, 2).unwrap(), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(
            reference_cartan(Series::C, 3).unwrap(),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            reference_cartan(Series::D, 4).unwrap(),
            vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]]
        );
        assert!(reference_cartan(Series::D, 3).is_err());
        assert!(reference_cartan(Series::B, 1).is_err());
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&fundamental_weight(3, 1).unwrap()).unwrap();
        assert_eq!(s, r#"{"coords":["2/3","1/3"],"central":"0"}"#);
    }
}
