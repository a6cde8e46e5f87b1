//! R-matrices of `sym²V` and `∧²V` by cabling the vector braiding.

use crate::error::{Error, Result};
use crate::exact::matrix::SparseVec;
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::qrep::{Rep, RepKind};

use super::star::vector_rmatrix_star;

/// Seed braid operator `Ř = P · q^{−1/n} R_★` on `V ⊗ V` (operator layout).
pub fn seed_braid(n: usize) -> Result<PolyMatrix> {
    let r = vector_rmatrix_star(n)?;
    let den = r.session();
    let scale = LaurentScalar::q_pow(den, &crate::exact::laurent::rat_frac(-1, n as i64))?;
    let rop = r.convert()?.scale_laurent(&scale);
    PolyMatrix::flip(den, n).mat_mul(&rop)
}

/// Eigenvalue of `Ř` on the embedded subspace; errors if `W` is not an eigenspace.
pub fn subspace_eigenvalue(braid: &PolyMatrix, rep: &Rep) -> Result<RatScalar> {
    let emb = rep
        .embedding
        .as_ref()
        .ok_or_else(|| Error::Unsupported(format!("{} has no tensor embedding", rep.kind)))?;
    let mut ev: Option<RatScalar> = None;
    for (a, w) in emb.vectors.iter().enumerate() {
        let img = braid.apply(w);
        let p = emb.pivots[a];
        let c = img.get(&p).cloned().unwrap_or_else(|| RatScalar::zero(rep.den));
        let mut scaled = SparseVec::new();
        crate::exact::matrix::axpy(&mut scaled, &c, w);
        if scaled != img {
            return Err(Error::Convention(format!(
                "{}: basis vector {} is not an eigenvector of the seed braiding",
                rep.kind, rep.labels[a]
            )));
        }
        match &ev {
            None => ev = Some(c),
            Some(e) if *e != c => {
                return Err(Error::Convention(format!(
                    "{}: seed braiding has eigenvalues {} and {} on the subspace",
                    rep.kind, e, c
                )))
            }
            _ => {}
        }
    }
    ev.ok_or_else(|| Error::Convention("empty subspace".into()))
}

fn kron_vec(a: &SparseVec, b: &SparseVec, dim_b: usize) -> SparseVec {
    let mut out = SparseVec::new();
    for (i, x) in a {
        for (j, y) in b {
            out.insert(i * dim_b + j, x * y);
        }
    }
    out
}

/// `R_VV` (operator layout) on `W ⊗ W` for `W = sym²V` or `∧²V`:
/// `P_WW · Ř_2 Ř_1 Ř_3 Ř_2` restricted to `W ⊗ W ⊂ V^{⊗4}`.
pub fn cable_rmatrix_op(rep: &Rep) -> Result<PolyMatrix> {
    if rep.kind == RepKind::Vector {
        return Err(Error::Unsupported("cabling needs sym2 or wedge2".into()));
    }
    let n = rep.n;
    let den = rep.den;
    let braid = seed_braid(n)?;
    subspace_eigenvalue(&braid, rep)?;
    let emb = rep.embedding.as_ref().unwrap();
    let id = PolyMatrix::identity(den, n);
    let id2 = PolyMatrix::identity(den, n * n);
    let b1 = braid.kron(&id2)?;
    let b2 = id.kron(&braid)?.kron(&id)?;
    let b3 = id2.kron(&braid)?;
    let dw = rep.dim();
    let nn = n * n;
    let mut entries = Vec::new();
    for a in 0..dw {
        for b in 0..dw {
            let x = kron_vec(&emb.vectors[a], &emb.vectors[b], nn);
            let y = b2.apply(&b1.apply(&b3.apply(&b2.apply(&x))));
            let mut back = SparseVec::new();
            for c in 0..dw {
                for d in 0..dw {
                    let coeff = match y.get(&(emb.pivots[c] * nn + emb.pivots[d])) {
                        Some(v) => v.clone(),
                        None => continue,
                    };
                    crate::exact::matrix::axpy(&mut back, &coeff, &kron_vec(&emb.vectors[c], &emb.vectors[d], nn));
                    // P_WW swaps the two W factors.
                    entries.push((d * dw + c, a * dw + b, coeff));
                }
            }
            if back != y {
                return Err(Error::Convention(format!(
                    "{}: cabled braiding leaves W ⊗ W at ({}, {})",
                    rep.kind, rep.labels[a], rep.labels[b]
                )));
            }
        }
    }
    PolyMatrix::from_entries(den, dw * dw, dw * dw, entries)
}

/// Checks `R(v_a ⊗ v_b)` has coefficient `q^{(μ_a, μ_b)}` on `v_a ⊗ v_b`.
pub fn check_cartan_diagonal(rop: &PolyMatrix, rep: &Rep) -> Result<()> {
    let d = rep.dim();
    for a in 0..d {
        for b in 0..d {
            let e = rep.weights[a].inner(&rep.weights[b])?;
            let want: RatScalar = LaurentScalar::q_pow(rep.den, &e)?.into();
            let got = rop.get(a * d + b, a * d + b);
            if got != want {
                return Err(Error::Convention(format!(
                    "{}: diagonal entry at ({}, {}) is {} but q^(μ,μ') = {}",
                    rep.kind, rep.labels[a], rep.labels[b], got, want
                )));
            }
        }
    }
    Ok(())
}
