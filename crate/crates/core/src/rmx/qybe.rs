//! Yang–Baxter type identities on `V^{⊗3}`, checked exactly.

use crate::error::{Error, Result};
use crate::exact::matrix::SparseVec;
use crate::exact::{PolyMatrix, RatScalar};
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Every standard basis vector of `V^{⊗3}`; allowed for `dim V ≤ 8`.
    Exhaustive,
    /// Sixteen standard basis vectors picked by a fixed stride.
    Probe,
}

pub const EXHAUSTIVE_MAX_DIM: usize = 8;
const PROBES: usize = 16;

impl CheckMode {
    pub fn auto(d: usize) -> Self {
        if d <= EXHAUSTIVE_MAX_DIM {
            CheckMode::Exhaustive
        } else {
            CheckMode::Probe
        }
    }
}

/// The three 2-leg embeddings `R_12`, `R_13`, `R_23` of a `d² × d²` matrix.
pub struct Legs {
    pub r12: PolyMatrix,
    pub r13: PolyMatrix,
    pub r23: PolyMatrix,
}

pub fn legs(r: &PolyMatrix) -> Result<Legs> {
    let d = r.tensor_side()?;
    let den = r.session();
    let id = PolyMatrix::identity(den, d);
    let r12 = r.kron(&id)?;
    let r23 = id.kron(r)?;
    let p23 = id.kron(&PolyMatrix::flip(den, d))?;
    let r13 = p23.mat_mul(&r12)?.mat_mul(&p23)?;
    Ok(Legs { r12, r13, r23 })
}

fn probe_indices(total: usize, mode: CheckMode, d: usize) -> Result<Vec<usize>> {
    match mode {
        CheckMode::Exhaustive if d > EXHAUSTIVE_MAX_DIM => Err(Error::Unsupported(format!(
            "exhaustive mode needs dim ≤ {EXHAUSTIVE_MAX_DIM}, got {d}"
        ))),
        CheckMode::Exhaustive => Ok((0..total).collect()),
        CheckMode::Probe => {
            let stride = (total / PROBES).max(1);
            let mut v: Vec<usize> = (0..PROBES.min(total)).map(|t| (t * stride + t) % total).collect();
            v.sort_unstable();
            v.dedup();
            Ok(v)
        }
    }
}

/// Applies `m_0 · m_1 ⋯ m_k` to `x` (rightmost factor first).
fn apply_product(ms: &[&PolyMatrix], x: &SparseVec) -> SparseVec {
    ms.iter().rev().fold(x.clone(), |acc, m| m.apply(&acc))
}

/// First probe where the two operator products disagree.
pub fn compare_products(
    lhs: &[&PolyMatrix],
    rhs: &[&PolyMatrix],
    probes: &[usize],
) -> Option<(usize, usize, RatScalar, RatScalar)> {
    let den = lhs[0].session();
    for &k in probes {
        let x: SparseVec = [(k, RatScalar::one(den))].into_iter().collect();
        let a = apply_product(lhs, &x);
        let b = apply_product(rhs, &x);
        if a != b {
            let keys: std::collections::BTreeSet<usize> = a.keys().chain(b.keys()).copied().collect();
            for i in keys {
                let u = a.get(&i).cloned().unwrap_or_else(|| RatScalar::zero(den));
                let v = b.get(&i).cloned().unwrap_or_else(|| RatScalar::zero(den));
                if u != v {
                    return Some((k, i, u, v));
                }
            }
        }
    }
    None
}

fn mismatch_check(name: &str, d: usize, res: Option<(usize, usize, RatScalar, RatScalar)>, probes: usize) -> Check {
    match res {
        None => Check::new(name, true, format!("{probes} probe vectors on dim {d}^3")),
        Some((k, i, a, b)) => Check::new(
            name,
            false,
            format!("column {} row {}: {} vs {}", triple(k, d), triple(i, d), a, b),
        ),
    }
}

fn triple(k: usize, d: usize) -> String {
    format!("({},{},{})", k / (d * d) + 1, (k / d) % d + 1, k % d + 1)
}

/// `R_12 R_13 R_23 = R_23 R_13 R_12`.
pub fn check_qybe(r: &PolyMatrix, mode: CheckMode) -> Result<Report> {
    let d = r.tensor_side()?;
    let l = legs(r)?;
    let probes = probe_indices(d * d * d, mode, d)?;
    let res = compare_products(&[&l.r12, &l.r13, &l.r23], &[&l.r23, &l.r13, &l.r12], &probes);
    let mut rep = Report::new();
    rep.push(mismatch_check("QYBE R12 R13 R23 = R23 R13 R12", d, res, probes.len()));
    Ok(rep)
}

/// Braid relation `Ř_1 Ř_2 Ř_1 = Ř_2 Ř_1 Ř_2` for `Ř = P·R`.
pub fn check_braid(r: &PolyMatrix, mode: CheckMode) -> Result<Report> {
    let d = r.tensor_side()?;
    let den = r.session();
    let rc = PolyMatrix::flip(den, d).mat_mul(r)?;
    let id = PolyMatrix::identity(den, d);
    let b1 = rc.kron(&id)?;
    let b2 = id.kron(&rc)?;
    let probes = probe_indices(d * d * d, mode, d)?;
    let res = compare_products(&[&b1, &b2, &b1], &[&b2, &b1, &b2], &probes);
    let mut rep = Report::new();
    rep.push(mismatch_check("braid relation", d, res, probes.len()));
    Ok(rep)
}

/// The three conditions tying a braiding `R` to the relation matrix `R′`:
/// (i) both mixed Yang–Baxter identities, (ii) `(PR + 1)(PR′ − 1) = 0`,
/// (iii) `R_21 R′_12 = R′_21 R_12`.
pub fn check_rprime_conditions(r: &PolyMatrix, rp: &PolyMatrix, mode: CheckMode) -> Result<Report> {
    let d = r.tensor_side()?;
    if rp.tensor_side()? != d {
        return Err(Error::Dimension(format!("R on dim {d}, R′ on dim {}", rp.tensor_side()?)));
    }
    let den = r.session();
    let l = legs(r)?;
    let lp = legs(rp)?;
    let probes = probe_indices(d * d * d, mode, d)?;
    let mut rep = Report::new();
    let a = compare_products(&[&l.r12, &l.r13, &lp.r23], &[&lp.r23, &l.r13, &l.r12], &probes);
    rep.push(mismatch_check("(i) R12 R13 R'23 = R'23 R13 R12", d, a, probes.len()));
    let b = compare_products(&[&lp.r12, &l.r13, &l.r23], &[&l.r23, &l.r13, &lp.r12], &probes);
    rep.push(mismatch_check("(i) R'12 R13 R23 = R23 R13 R'12", d, b, probes.len()));

    let p = PolyMatrix::flip(den, d);
    let id = PolyMatrix::identity(den, d * d);
    let lhs = p.mat_mul(r)?.add(&id)?.mat_mul(&p.mat_mul(rp)?.sub(&id)?)?;
    rep.push(match lhs.entries().next() {
        None => Check::pass("(ii) (PR + 1)(PR' - 1) = 0"),
        Some((i, j, x)) => Check::new("(ii) (PR + 1)(PR' - 1) = 0", false, format!("entry ({i}, {j}) = {x}")),
    });

    let r21 = r.convert()?;
    let rp21 = rp.convert()?;
    let left = r21.mat_mul(rp)?;
    let right = rp21.mat_mul(r)?;
    rep.push(match left.first_difference(&right) {
        None => Check::pass("(iii) R21 R'12 = R'21 R12"),
        Some((i, j, x, y)) => {
            Check::new("(iii) R21 R'12 = R'21 R12", false, format!("entry ({i}, {j}): {x} vs {y}"))
        }
    });
    Ok(rep)
}
