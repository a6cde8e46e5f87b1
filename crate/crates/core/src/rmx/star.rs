//! The standard `sl_n` R-matrix in Majid's index layout.

use crate::error::Result;
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::qrep::session_den;

/// `R^{ij}_{kl} = q^{δ_ij} δ_ik δ_jl + (q − q⁻¹) δ_il δ_jk θ(j − i)`, stored
/// with row `(i, j)` and column `(k, l)`, index `(i−1)·n + (j−1)`.
pub fn vector_rmatrix_star(n: usize) -> Result<PolyMatrix> {
    let den = session_den(n);
    let q: RatScalar = LaurentScalar::q(den).into();
    let t: RatScalar = (&LaurentScalar::q(den) - &LaurentScalar::q_int(den, -1)).into();
    let one = RatScalar::one(den);
    let mut entries = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            entries.push((row, row, if i == j { q.clone() } else { one.clone() }));
            if j > i {
                entries.push((row, j * n + i, t.clone()));
            }
        }
    }
    PolyMatrix::from_entries(den, n * n, n * n, entries)
}

/// Majid entry `R^{ij}_{kl}` (1-based indices) of a Majid-layout matrix.
pub fn majid_entry(m: &PolyMatrix, d: usize, i: usize, j: usize, k: usize, l: usize) -> RatScalar {
    m.get((i - 1) * d + (j - 1), (k - 1) * d + (l - 1))
}
