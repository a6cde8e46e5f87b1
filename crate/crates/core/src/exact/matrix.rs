//! Sparse exact matrices over `RatScalar`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::LaurentScalar;
use super::ratfn::RatScalar;
use crate::error::{Error, Result};

/// Sparse vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, RatScalar>;

/// Adds `c · x` into `acc`, dropping cancelled coordinates.
pub fn axpy(acc: &mut SparseVec, c: &RatScalar, x: &SparseVec) {
    for (k, v) in x {
        add_at(acc, *k, &(c * v));
    }
}

pub fn add_at(acc: &mut SparseVec, k: usize, v: &RatScalar) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(e) => {
            let s = &*e + v;
            if s.is_zero() {
                acc.remove(&k);
            } else {
                *e = s;
            }
        }
        None => {
            acc.insert(k, v.clone());
        }
    }
}

/// A sparse `nrows × ncols` matrix with entries in the session field.
///
/// Each row stores its nonzero entries sorted by column.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    nrows: usize,
    ncols: usize,
    den: u32,
    rows: Vec<Vec<(usize, RatScalar)>>,
}

impl PolyMatrix {
    pub fn zeros(den: u32, nrows: usize, ncols: usize) -> Self {
        PolyMatrix { nrows, ncols, den, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(den: u32, n: usize) -> Self {
        Self::diagonal((0..n).map(|_| RatScalar::one(den)).collect(), den)
    }

    pub fn diagonal(diag: Vec<RatScalar>, den: u32) -> Self {
        let n = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, x)| if x.is_zero() { Vec::new() } else { vec![(i, x)] })
            .collect();
        PolyMatrix { nrows: n, ncols: n, den, rows }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(
        den: u32,
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, RatScalar)>,
    ) -> Result<Self> {
        let mut acc: Vec<SparseVec> = vec![SparseVec::new(); nrows];
        for (i, j, x) in entries {
            if i >= nrows || j >= ncols {
                return Err(Error::IndexOutOfRange(format!("({i}, {j}) in {nrows}×{ncols}")));
            }
            if x.session() != den {
                return Err(Error::SessionMismatch(den, x.session()));
            }
            add_at(&mut acc[i], j, &x);
        }
        Ok(PolyMatrix { nrows, ncols, den, rows: acc.into_iter().map(|r| r.into_iter().collect()).collect() })
    }

    pub fn from_sparse_rows(den: u32, ncols: usize, rows: Vec<SparseVec>) -> Self {
        PolyMatrix {
            nrows: rows.len(),
            ncols,
            den,
            rows: rows.into_iter().map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect(),
        }
    }

    /// The flip `x ⊗ y ↦ y ⊗ x` on `ℚ^d ⊗ ℚ^d`.
    pub fn flip(den: u32, d: usize) -> Self {
        let one = RatScalar::one(den);
        let rows = (0..d * d)
            .map(|r| {
                let (i, j) = (r / d, r % d);
                vec![(j * d + i, one.clone())]
            })
            .collect();
        PolyMatrix { nrows: d * d, ncols: d * d, den, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn session(&self) -> u32 {
        self.den
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    pub fn row(&self, i: usize) -> &[(usize, RatScalar)] {
        &self.rows[i]
    }

    pub fn row_vec(&self, i: usize) -> SparseVec {
        self.rows[i].iter().cloned().collect()
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> RatScalar {
        self.rows[i]
            .binary_search_by(|e| e.0.cmp(&j))
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_else(|_| RatScalar::zero(self.den))
    }

    /// Row-major `(row, col, value)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RatScalar)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, x)| (i, j.to_owned(), x)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    fn check_session(&self, o: &Self) -> Result<()> {
        if self.den != o.den {
            Err(Error::SessionMismatch(self.den, o.den))
        } else {
            Ok(())
        }
    }

    pub fn mat_mul(&self, o: &Self) -> Result<Self> {
        self.check_session(o)?;
        if self.ncols != o.nrows {
            return Err(Error::Dimension(format!(
                "{}×{} times {}×{}",
                self.nrows, self.ncols, o.nrows, o.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut acc = SparseVec::new();
                for (k, a) in r {
                    for (j, b) in &o.rows[*k] {
                        add_at(&mut acc, *j, &(a * b));
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(PolyMatrix { nrows: self.nrows, ncols: o.ncols, den: self.den, rows })
    }

    fn combine(&self, o: &Self, sign: bool) -> Result<Self> {
        self.check_session(o)?;
        if self.nrows != o.nrows || self.ncols != o.ncols {
            return Err(Error::Dimension(format!(
                "{}×{} vs {}×{}",
                self.nrows, self.ncols, o.nrows, o.ncols
            )));
        }
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| {
                let mut acc: SparseVec = a.iter().cloned().collect();
                for (j, x) in b {
                    add_at(&mut acc, *j, &if sign { x.clone() } else { -x });
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(PolyMatrix { nrows: self.nrows, ncols: self.ncols, den: self.den, rows })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.combine(o, true)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.combine(o, false)
    }

    pub fn scale(&self, c: &RatScalar) -> Self {
        if c.is_zero() {
            return Self::zeros(self.den, self.nrows, self.ncols);
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|(j, x)| (*j, x * c)).collect()).collect();
        PolyMatrix { nrows: self.nrows, ncols: self.ncols, den: self.den, rows }
    }

    pub fn scale_laurent(&self, c: &LaurentScalar) -> Self {
        self.scale(&c.clone().into())
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.ncols];
        for (i, j, x) in self.entries() {
            rows[j].push((i, x.clone()));
        }
        PolyMatrix { nrows: self.ncols, ncols: self.nrows, den: self.den, rows }
    }

    /// Kronecker product `self ⊗ o`: row `(i, k) ↦ i·o.nrows + k`.
    pub fn kron(&self, o: &Self) -> Result<Self> {
        self.check_session(o)?;
        let mut rows = Vec::with_capacity(self.nrows * o.nrows);
        for ra in &self.rows {
            for rb in &o.rows {
                let mut r = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        r.push((ja * o.ncols + jb, a * b));
                    }
                }
                rows.push(r);
            }
        }
        Ok(PolyMatrix { nrows: self.nrows * o.nrows, ncols: self.ncols * o.ncols, den: self.den, rows })
    }

    /// Side length `d` when this is a `d² × d²` matrix.
    pub fn tensor_side(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{}×{} is not square", self.nrows, self.ncols)));
        }
        let d = (self.nrows as f64).sqrt().round() as usize;
        if d * d != self.nrows {
            return Err(Error::Dimension(format!("size {} is not a perfect square", self.nrows)));
        }
        Ok(d)
    }

    /// Conjugation by the flip: `P · M · P`. An involution.
    pub fn convert(&self) -> Result<Self> {
        let d = self.tensor_side()?;
        let sw = |r: usize| (r % d) * d + r / d;
        let mut rows = vec![Vec::new(); self.nrows];
        for (i, j, x) in self.entries() {
            rows[sw(i)].push((sw(j), x.clone()));
        }
        for r in &mut rows {
            r.sort_by_key(|e| e.0);
        }
        Ok(PolyMatrix { nrows: self.nrows, ncols: self.ncols, den: self.den, rows })
    }

    /// `M · x` for a sparse column vector.
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc: Option<RatScalar> = None;
            for (j, a) in r {
                if let Some(b) = x.get(j) {
                    let t = a * b;
                    acc = Some(match acc {
                        Some(s) => &s + &t,
                        None => t,
                    });
                }
            }
            if let Some(s) = acc {
                if !s.is_zero() {
                    out.insert(i, s);
                }
            }
        }
        out
    }

    /// `xᵀ · M` for a sparse row vector.
    pub fn apply_left(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in x {
            for (j, a) in &self.rows[*i] {
                add_at(&mut out, *j, &(c * a));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::identity(self.den, self.nrows);
        for _ in 0..k {
            acc = acc.mat_mul(self)?;
        }
        Ok(acc)
    }

    /// First position where two equal-shape matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize, RatScalar, RatScalar)> {
        for i in 0..self.nrows {
            if self.rows[i] != o.rows[i] {
                let a: SparseVec = self.rows[i].iter().cloned().collect();
                let b: SparseVec = o.rows[i].iter().cloned().collect();
                let cols: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
                for j in cols {
                    let x = a.get(&j).cloned().unwrap_or_else(|| RatScalar::zero(self.den));
                    let y = b.get(&j).cloned().unwrap_or_else(|| RatScalar::zero(self.den));
                    if x != y {
                        return Some((i, j, x, y));
                    }
                }
            }
        }
        None
    }

    /// Restriction of the rows/columns to `idx` (in that order).
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let pos: BTreeMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let rows = idx
            .iter()
            .map(|&i| {
                let mut r: Vec<(usize, RatScalar)> =
                    self.rows[i].iter().filter_map(|(j, x)| pos.get(j).map(|&k| (k, x.clone()))).collect();
                r.sort_by_key(|e| e.0);
                r
            })
            .collect();
        PolyMatrix { nrows: idx.len(), ncols: idx.len(), den: self.den, rows }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}×{} [", self.nrows, self.ncols)?;
        for (i, j, x) in self.entries() {
            writeln!(f, "  ({i}, {j}): {x}")?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    nrows: usize,
    ncols: usize,
    entries: Vec<(usize, usize, RatScalar)>,
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries().map(|(i, j, x)| (i, j, x.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        let den = j.entries.first().map(|e| e.2.session()).unwrap_or(1);
        PolyMatrix::from_entries(den, j.nrows, j.ncols, j.entries).map_err(|e| D::Error::custom(e.to_string()))
    }
}
