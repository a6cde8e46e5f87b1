//! The universal R-matrix of `U_q(sl_n)` evaluated on `V ⊗ V`.
//!
//! `ℜ = B ∘ Π_β Σ_r c_r E_β^r ⊗ F_β^r` with
//! `c_r = (1 − q⁻²)^r q^{r(r+1)/2} / [r]_q!` and `B(v ⊗ w) = q^{(μ, μ′)} v ⊗ w`.
//! Root vectors come from the q-commutator recursion
//! `E_{i,k+1} = E_k E_{i,k} − q⁻¹ E_{i,k} E_k`,
//! `F_{i,k+1} = F_{i,k} F_k − q F_k F_{i,k}`; the product runs over positive
//! roots `α_i + ⋯ + α_{k−1}` in lexicographic order of `(i, k)`.

use crate::error::Result;
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::qrep::{q_integer, vector_rep, Rep};

/// Root vectors `(E_β, F_β)` for `β = α_i + ⋯ + α_{k−1}`, keyed by `(i, k)`.
pub fn root_vectors(rep: &Rep) -> Result<Vec<((usize, usize), PolyMatrix, PolyMatrix)>> {
    let n = rep.n;
    let den = rep.den;
    let q: RatScalar = LaurentScalar::q(den).into();
    let qinv: RatScalar = LaurentScalar::q_int(den, -1).into();
    let mut out = Vec::new();
    for i in 1..n {
        let mut e = rep.e(i).clone();
        let mut f = rep.f(i).clone();
        out.push(((i, i + 1), e.clone(), f.clone()));
        for k in i + 1..n {
            e = rep.e(k).mat_mul(&e)?.sub(&e.mat_mul(rep.e(k))?.scale(&qinv))?;
            f = f.mat_mul(rep.f(k))?.sub(&rep.f(k).mat_mul(&f)?.scale(&q))?;
            out.push(((i, k + 1), e.clone(), f.clone()));
        }
    }
    Ok(out)
}

/// `c_r = (1 − q⁻²)^r q^{r(r+1)/2} / [r]_q!`.
fn series_coefficient(den: u32, r: u32) -> RatScalar {
    let base = &LaurentScalar::one(den) - &LaurentScalar::q_int(den, -2);
    let num: RatScalar = (&base.pow(r) * &LaurentScalar::q_int(den, (r * (r + 1) / 2) as i64)).into();
    let mut fact = LaurentScalar::one(den);
    for k in 1..=r {
        fact = &fact * &q_integer(den, k as i64);
    }
    &num / &RatScalar::from(fact)
}

/// The Cartan factor `B` on `rep ⊗ rep`.
pub fn cartan_factor(rep: &Rep) -> Result<PolyMatrix> {
    let d = rep.dim();
    let mut diag = Vec::with_capacity(d * d);
    for a in 0..d {
        for b in 0..d {
            let e = rep.weights[a].inner(&rep.weights[b])?;
            diag.push(LaurentScalar::q_pow(rep.den, &e)?.into());
        }
    }
    Ok(PolyMatrix::diagonal(diag, rep.den))
}

/// `B ∘ (T ⊗ T)(ℜ)` with each root's series cut at `E_β^{max_power}`
/// (`None` sums until nilpotency).
pub fn universal_r(rep: &Rep, max_power: Option<u32>) -> Result<PolyMatrix> {
    let den = rep.den;
    let d = rep.dim();
    let mut theta = PolyMatrix::identity(den, d * d);
    for (_, e, f) in root_vectors(rep)? {
        let mut factor = PolyMatrix::identity(den, d * d);
        let (mut ep, mut fp) = (e.clone(), f.clone());
        let mut r = 1;
        while max_power.is_none_or(|m| r <= m) && !(ep.is_zero() || fp.is_zero()) {
            factor = factor.add(&ep.kron(&fp)?.scale(&series_coefficient(den, r)))?;
            ep = ep.mat_mul(&e)?;
            fp = fp.mat_mul(&f)?;
            r += 1;
        }
        theta = theta.mat_mul(&factor)?;
    }
    cartan_factor(rep)?.mat_mul(&theta)
}

/// Universal R on the vector representation, operator layout.
pub fn universal_r_vector(n: usize) -> Result<PolyMatrix> {
    universal_r(&vector_rep(n)?, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_coefficient_is_q_minus_qinv() {
        let den = 6;
        let c = series_coefficient(den, 1);
        assert_eq!(c, (&LaurentScalar::q(den) - &LaurentScalar::q_int(den, -1)).into());
    }

    #[test]
    fn zero_truncation_is_cartan_factor() {
        let v = vector_rep(3).unwrap();
        assert_eq!(universal_r(&v, Some(0)).unwrap(), cartan_factor(&v).unwrap());
    }

    #[test]
    fn diagonal_on_lowest_vector() {
        let r = universal_r_vector(2).unwrap();
        let h = LaurentScalar::q_pow(4, &crate::exact::laurent::rat_frac(1, 2)).unwrap();
        assert_eq!(r.get(0, 0), h.into());
    }

    #[test]
    fn root_vectors_move_one_basis_vector() {
        let v = vector_rep(4).unwrap();
        for ((i, k), e, f) in root_vectors(&v).unwrap() {
            assert_eq!(e.nnz(), 1);
            assert!(e.get(k - 1, i - 1).is_one());
            assert!(f.get(i - 1, k - 1).is_one());
        }
    }
}
