//! R-matrices on `V ⊗ V` for the vector, symmetric-square and
//! exterior-square representations.
//!
//! Matrices are stored in operator layout: column `(k, l)` holds the image
//! of `v_k ⊗ v_l`. The Majid layout used for index-level comparisons is its
//! conjugate by the flip, so the Majid entry `R^{ij}_{kl}` is the operator
//! entry at row `(j, i)`, column `(l, k)`.

pub mod cable;
pub mod qybe;
pub mod spectrum;
pub mod star;
pub mod universal;

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::minpoly::QMonomial;
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::qrep::{build_rep, Rep, RepKind};

pub use cable::cable_rmatrix_op;
pub use qybe::{check_braid, check_qybe, check_rprime_conditions, CheckMode};
pub use spectrum::{rprime_closed_form, Spectrum};
pub use star::{majid_entry, vector_rmatrix_star};
pub use universal::universal_r_vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Operator,
    Majid,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RPrime {
    /// `R′ = P`: the free braided (co)vector algebra.
    Free,
    Matrix(PolyMatrix),
}

/// A representation's R-matrix together with everything derived from it.
#[derive(Clone, Debug)]
pub struct RMatrixBundle {
    pub rep: Rep,
    /// `R_VV` in operator layout.
    pub rvv: PolyMatrix,
    pub spectrum: Option<Spectrum>,
    pub lambda: Option<LaurentScalar>,
    pub rnorm: Option<PolyMatrix>,
    pub rprime: Option<RPrime>,
}

impl RMatrixBundle {
    pub fn kind(&self) -> RepKind {
        self.rep.kind
    }

    pub fn n(&self) -> usize {
        self.rep.n
    }

    pub fn den(&self) -> u32 {
        self.rep.den
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn rvv_majid(&self) -> PolyMatrix {
        self.rvv.convert().expect("square tensor matrix")
    }

    /// `P·R_VV` in Majid layout.
    pub fn pr_majid(&self) -> PolyMatrix {
        PolyMatrix::flip(self.den(), self.dim()).mat_mul(&self.rvv_majid()).expect("matching sizes")
    }

    /// Majid entry `(PR_VV)^{ij}_{kl}`, 1-based.
    pub fn pr_entry(&self, i: usize, j: usize, k: usize, l: usize) -> RatScalar {
        majid_entry(&self.pr_majid(), self.dim(), i, j, k, l)
    }

    /// Majid entry `R_VV^{ij}_{kl}`, 1-based.
    pub fn r_entry(&self, i: usize, j: usize, k: usize, l: usize) -> RatScalar {
        let d = self.dim();
        self.rvv.get((j - 1) * d + (i - 1), (l - 1) * d + (k - 1))
    }

    /// Braid operator `P·R_VV` (operator layout).
    pub fn braid(&self) -> PolyMatrix {
        PolyMatrix::flip(self.den(), self.dim()).mat_mul(&self.rvv).expect("matching sizes")
    }

    pub fn spectrum(&self) -> Result<&Spectrum> {
        self.spectrum.as_ref().ok_or_else(|| Error::Spectrum("spectrum not computed".into()))
    }

    pub fn lambda(&self) -> Result<&LaurentScalar> {
        self.lambda.as_ref().ok_or_else(|| Error::Spectrum("normalization not computed".into()))
    }

    /// `s` with `λ = q^s`.
    pub fn lambda_exp(&self) -> Result<BigRational> {
        self.lambda()?
            .q_exponent()
            .ok_or_else(|| Error::Spectrum(format!("λ = {} is not a power of q", self.lambda().unwrap())))
    }

    pub fn rnorm(&self) -> Result<&PolyMatrix> {
        self.rnorm.as_ref().ok_or_else(|| Error::Spectrum("normalization not computed".into()))
    }

    /// `R′` as a matrix; `P` for the free case.
    pub fn rprime_matrix(&self) -> Result<PolyMatrix> {
        match &self.rprime {
            Some(RPrime::Matrix(m)) => Ok(m.clone()),
            Some(RPrime::Free) => Ok(PolyMatrix::flip(self.den(), self.dim())),
            None => Err(Error::Spectrum("R′ not computed".into())),
        }
    }
}

/// Builds `R_VV`: `q^{−1/n}` times the standard matrix for the vector
/// representation, cabling for `sym²V` and `∧²V`.
pub fn build_bundle(kind: RepKind, n: usize) -> Result<RMatrixBundle> {
    let rep = build_rep(kind, n)?;
    let rvv = match kind {
        RepKind::Vector => {
            let s = LaurentScalar::q_pow(rep.den, &crate::exact::laurent::rat_frac(-1, n as i64))?;
            vector_rmatrix_star(n)?.convert()?.scale_laurent(&s)
        }
        _ => {
            let r = cable_rmatrix_op(&rep)?;
            cable::check_cartan_diagonal(&r, &rep)?;
            r
        }
    };
    Ok(RMatrixBundle { rep, rvv, spectrum: None, lambda: None, rnorm: None, rprime: None })
}

/// Runs the minimal-polynomial analysis on `P·R_VV`.
pub fn compute_spectrum(mut b: RMatrixBundle) -> Result<RMatrixBundle> {
    b.spectrum = Some(spectrum::spectrum_of(&b.pr_majid())?);
    Ok(b)
}

/// Sets `λ`, `R = λ⁻¹ R_VV` and `R′`.
pub fn normalize_and_rprime(mut b: RMatrixBundle) -> Result<RMatrixBundle> {
    if b.spectrum.is_none() {
        b = compute_spectrum(b)?;
    }
    let den = b.den();
    let eigs = b.spectrum()?.eigenvalues.clone();
    let s = spectrum::normalization_exponent(b.kind(), &eigs)?;
    let lambda = LaurentScalar::q_pow(den, &s)?;
    let inv = lambda.inv_monomial().expect("monomial");
    let rnorm = b.rvv.scale_laurent(&inv);
    let rprime = match b.kind() {
        RepKind::Vector => RPrime::Free,
        _ => {
            let normalized: Vec<QMonomial> =
                eigs.iter().map(|e| QMonomial::new(e.sign, &e.exp - &s)).collect();
            RPrime::Matrix(spectrum::rprime_from_spectrum(&rnorm, &normalized)?)
        }
    };
    b.lambda = Some(lambda);
    b.rnorm = Some(rnorm);
    b.rprime = Some(rprime);
    Ok(b)
}

/// Full pipeline: construction, spectrum, normalization and `R′`.
pub fn full_bundle(kind: RepKind, n: usize) -> Result<RMatrixBundle> {
    normalize_and_rprime(compute_spectrum(build_bundle(kind, n)?)?)
}

/// `true` when the Majid-layout matrix is upper triangular for the
/// lexicographic order on index pairs.
pub fn is_upper_triangular(majid: &PolyMatrix) -> bool {
    majid.entries().all(|(i, j, _)| i <= j)
}

#[derive(Serialize)]
struct BundleJson<'a> {
    rep: &'static str,
    n: usize,
    dim: usize,
    convention: Convention,
    labels: &'a [String],
    rvv: &'a PolyMatrix,
    rvv_majid: PolyMatrix,
    eigenvalues: Option<&'a [QMonomial]>,
    minimal_polynomial: Option<String>,
    symmetric: Option<bool>,
    asymmetry_witness: Option<&'a spectrum::AsymmetryWitness>,
    lambda: Option<&'a LaurentScalar>,
    rnorm: Option<&'a PolyMatrix>,
    rprime: serde_json::Value,
}

impl Serialize for RMatrixBundle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let sp = self.spectrum.as_ref();
        let rprime = match &self.rprime {
            None => serde_json::Value::Null,
            Some(RPrime::Free) => serde_json::Value::String("free".into()),
            Some(RPrime::Matrix(m)) => serde_json::to_value(m).map_err(serde::ser::Error::custom)?,
        };
        BundleJson {
            rep: self.kind().tag(),
            n: self.n(),
            dim: self.dim(),
            convention: Convention::Operator,
            labels: &self.rep.labels,
            rvv: &self.rvv,
            rvv_majid: self.rvv_majid(),
            eigenvalues: sp.map(|x| x.eigenvalues.as_slice()),
            minimal_polynomial: sp.map(|x| x.minpoly.to_string()),
            symmetric: sp.map(|x| x.symmetric),
            asymmetry_witness: sp.and_then(|x| x.witness.as_ref()),
            lambda: self.lambda.as_ref(),
            rnorm: self.rnorm.as_ref(),
            rprime,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat_frac;

    fn qp(den: u32, a: i64, b: i64) -> RatScalar {
        LaurentScalar::q_pow(den, &rat_frac(a, b)).unwrap().into()
    }

    #[test]
    fn universal_matches_scaled_star() {
        for n in 2..=3 {
            let b = build_bundle(RepKind::Vector, n).unwrap();
            assert_eq!(universal_r_vector(n).unwrap(), b.rvv);
        }
    }

    #[test]
    fn sym2_n3_entries() {
        let b = build_bundle(RepKind::Sym2, 3).unwrap();
        let den = b.den();
        let t = &qp(den, 1, 1) - &qp(den, -1, 1);
        let s = &qp(den, 1, 1) + &qp(den, -1, 1);
        assert!(b.pr_entry(1, 2, 1, 2).is_zero());
        assert_eq!(b.pr_entry(1, 2, 2, 1), qp(den, 2, 3));
        assert_eq!(b.pr_entry(2, 1, 2, 1), &(&qp(den, 2, 3) * &s) * &t);
    }

    #[test]
    fn majid_layout_is_upper_triangular() {
        for (k, n) in [(RepKind::Vector, 3), (RepKind::Sym2, 2), (RepKind::Sym2, 3), (RepKind::Wedge2, 4)] {
            assert!(is_upper_triangular(&build_bundle(k, n).unwrap().rvv_majid()), "{k} n={n}");
        }
    }

    #[test]
    fn vector_normalization() {
        let b = full_bundle(RepKind::Vector, 3).unwrap();
        assert_eq!(b.lambda().unwrap(), &LaurentScalar::q_pow(6, &rat_frac(-1, 3)).unwrap());
        assert_eq!(b.rprime, Some(RPrime::Free));
        let star = vector_rmatrix_star(3).unwrap().convert().unwrap();
        assert_eq!(b.rnorm().unwrap(), &star);
    }

    fn roots(b: &RMatrixBundle) -> Vec<(i8, BigRational)> {
        let mut v: Vec<_> = b.spectrum().unwrap().eigenvalues.iter().map(|e| (e.sign, e.exp.clone())).collect();
        v.sort();
        v
    }

    fn want(mut v: Vec<(i8, i64, i64)>) -> Vec<(i8, BigRational)> {
        v.sort_by_key(|a| (a.0, rat_frac(a.1, a.2)));
        v.into_iter().map(|(s, a, b)| (s, rat_frac(a, b))).collect()
    }

    #[test]
    fn sym2_spectrum_closed_form() {
        for n in 2..=4i64 {
            let b = full_bundle(RepKind::Sym2, n as usize).unwrap();
            assert_eq!(roots(&b), want(vec![(1, 4 * (n - 1), n), (1, -2 * (n + 2), n), (-1, -4, n)]));
            assert!(!b.spectrum().unwrap().symmetric);
            assert_eq!(b.lambda_exp().unwrap(), rat_frac(-4, n));
        }
    }

    #[test]
    fn sym2_witness_is_reported() {
        let b = full_bundle(RepKind::Sym2, 2).unwrap();
        let w = b.spectrum().unwrap().witness.clone().unwrap();
        assert_ne!(w.entry, w.transposed);
    }

    #[test]
    fn wedge2_spectrum_is_symmetric_with_casimir_roots() {
        for n in 4..=5i64 {
            let b = full_bundle(RepKind::Wedge2, n as usize).unwrap();
            assert!(b.spectrum().unwrap().symmetric);
            assert_eq!(roots(&b), want(vec![(1, 2 * (n - 2), n), (1, -4 * (n + 1), n), (-1, -4, n)]));
        }
    }

    #[test]
    fn wedge2_n4_matches_so6_vector_braiding() {
        // ∧²V of sl_4 is the 6-dim vector rep of so_6: eigenvalues q, −q⁻¹, q^{1−6}.
        let b = full_bundle(RepKind::Wedge2, 4).unwrap();
        assert_eq!(roots(&b), want(vec![(1, 1, 1), (-1, -1, 1), (1, -5, 1)]));
    }

    #[test]
    fn sym2_rprime_matches_closed_form() {
        for n in 2..=3 {
            let b = full_bundle(RepKind::Sym2, n).unwrap();
            let cf = rprime_closed_form(RepKind::Sym2, b.rnorm().unwrap()).unwrap();
            assert_eq!(cf, b.rprime_matrix().unwrap());
        }
    }

    #[test]
    fn rprime_conditions_hold() {
        for (k, n) in [(RepKind::Sym2, 2), (RepKind::Sym2, 3), (RepKind::Wedge2, 4)] {
            let b = full_bundle(k, n).unwrap();
            let rep = check_rprime_conditions(b.rnorm().unwrap(), &b.rprime_matrix().unwrap(), CheckMode::auto(b.dim())).unwrap();
            assert!(rep.passed(), "{k} n={n}: {rep}");
        }
    }

    #[test]
    fn braid_relation_for_all_reps() {
        for (k, n) in [(RepKind::Vector, 3), (RepKind::Sym2, 3), (RepKind::Wedge2, 4)] {
            let b = full_bundle(k, n).unwrap();
            assert!(check_braid(b.rnorm().unwrap(), CheckMode::Probe).unwrap().passed());
        }
    }
}
