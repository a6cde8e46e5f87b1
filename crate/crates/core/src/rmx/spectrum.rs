//! Spectrum of `P·R_VV`, normalization and the relation matrix `R′`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::minpoly::{minpoly_probe, signed_monomial_roots, KPoly, QMonomial};
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::qrep::RepKind;

/// A pair of transposed entries of `PR` that differ (1-based Majid indices).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AsymmetryWitness {
    pub upper: [usize; 2],
    pub lower: [usize; 2],
    pub entry: String,
    pub transposed: String,
}

#[derive(Clone, Debug)]
pub struct Spectrum {
    pub minpoly: KPoly,
    pub eigenvalues: Vec<QMonomial>,
    pub symmetric: bool,
    pub witness: Option<AsymmetryWitness>,
}

/// Row/column label `(i, j)` of a `d² × d²` matrix index.
pub fn pair_label(idx: usize, d: usize) -> [usize; 2] {
    [idx / d + 1, idx % d + 1]
}

/// Minimal polynomial and signed q-monomial eigenvalues of `pr`, plus a
/// symmetry test with a witness when it fails.
pub fn spectrum_of(pr: &PolyMatrix) -> Result<Spectrum> {
    let d = pr.tensor_side()?;
    let minpoly = minpoly_probe(pr)?;
    let eigenvalues = signed_monomial_roots(&minpoly)?;
    let t = pr.transpose();
    let witness = pr.first_difference(&t).map(|(i, j, x, y)| AsymmetryWitness {
        upper: pair_label(i, d),
        lower: pair_label(j, d),
        entry: x.to_string(),
        transposed: y.to_string(),
    });
    Ok(Spectrum { minpoly, eigenvalues, symmetric: witness.is_none(), witness })
}

/// The unique eigenvalue of the form `−q^s`.
pub fn negative_eigenvalue(eigs: &[QMonomial]) -> Result<&QMonomial> {
    let neg: Vec<&QMonomial> = eigs.iter().filter(|e| e.is_negative()).collect();
    match neg.as_slice() {
        [one] => Ok(one),
        [] => Err(Error::Spectrum("no eigenvalue of the form -q^s".into())),
        many => Err(Error::Spectrum(format!(
            "{} negative eigenvalues: {}",
            many.len(),
            many.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Normalization constant for a representation.
///
/// For `sym²V` and `∧²V` the negative eigenvalue `−q^s` of `P·R_VV` is sent
/// to `−1`, so `λ = q^s`. For the vector representation the braiding is
/// normalized to Hecke form, eigenvalues `q` and `−q⁻¹`, giving `λ = q^{s+1}`.
pub fn normalization_exponent(kind: RepKind, eigs: &[QMonomial]) -> Result<num_rational::BigRational> {
    let s = negative_eigenvalue(eigs)?.exp.clone();
    Ok(match kind {
        RepKind::Vector => s + crate::exact::laurent::rat(1),
        _ => s,
    })
}

/// `R′ = P + P·Π_{j≠i}(P·R − y_j)` where `y_j` runs over the normalized
/// eigenvalues other than `−1`.
pub fn rprime_from_spectrum(rnorm: &PolyMatrix, normalized: &[QMonomial]) -> Result<PolyMatrix> {
    let d = rnorm.tensor_side()?;
    let den = rnorm.session();
    let p = PolyMatrix::flip(den, d);
    let pr = p.mat_mul(rnorm)?;
    let id = PolyMatrix::identity(den, d * d);
    let mut prod = id.clone();
    let mut skipped = false;
    for y in normalized {
        if !skipped && y.is_negative() && y.exp == num_rational::BigRational::from_integer(0.into()) {
            skipped = true;
            continue;
        }
        let ys: RatScalar = y.to_scalar(den)?.into();
        prod = prod.mat_mul(&pr.sub(&id.scale(&ys))?)?;
    }
    if !skipped {
        return Err(Error::Spectrum("normalized spectrum does not contain -1".into()));
    }
    p.add(&p.mat_mul(&prod)?)
}

/// The displayed closed forms: `RPR − (q⁻² + q⁴)R + (q² + 1)P` for `sym²V`
/// and `RPR − (q² + 1)R + (q² + 1)P` for `∧²V`.
pub fn rprime_closed_form(kind: RepKind, r: &PolyMatrix) -> Result<PolyMatrix> {
    let d = r.tensor_side()?;
    let den = r.session();
    let q = |k| LaurentScalar::q_int(den, k);
    let one = LaurentScalar::one(den);
    let c_r = match kind {
        RepKind::Sym2 => &q(-2) + &q(4),
        RepKind::Wedge2 => &q(2) + &one,
        RepKind::Vector => return Err(Error::Unsupported("the vector representation has R′ = P".into())),
    };
    let c_p = &q(2) + &one;
    let p = PolyMatrix::flip(den, d);
    r.mat_mul(&p)?.mat_mul(r)?.sub(&r.scale_laurent(&c_r))?.add(&p.scale_laurent(&c_p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::rat;

    #[test]
    fn negative_eigenvalue_must_be_unique() {
        let e = vec![QMonomial::new(-1, rat(1)), QMonomial::new(-1, rat(2))];
        assert!(negative_eigenvalue(&e).is_err());
        assert!(negative_eigenvalue(&[QMonomial::new(1, rat(1))]).is_err());
    }
}
