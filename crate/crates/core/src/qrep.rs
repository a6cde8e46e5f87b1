//! Weight-basis representations of `U_q(sl_n)`: the vector representation
//! and its quantum symmetric and exterior squares.
//!
//! Action matrices act on column vectors: entry `(b, a)` is the coefficient
//! of basis vector `b` in the image of basis vector `a`. The torus acts by
//! `K_i v_μ = q^{(α_i, μ)} v_μ`, and `V ⊗ V` carries the coproduct
//! `Δ(E) = E ⊗ K + 1 ⊗ E`, `Δ(F) = F ⊗ 1 + K⁻¹ ⊗ F`.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::laurent::rat;
use crate::exact::matrix::{axpy, SparseVec};
use crate::exact::{LaurentScalar, PolyMatrix, RatScalar};
use crate::lattice::{fundamental_weight, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepKind {
    Vector,
    Sym2,
    Wedge2,
}

impl RepKind {
    pub fn tag(self) -> &'static str {
        match self {
            RepKind::Vector => "vector",
            RepKind::Sym2 => "sym2",
            RepKind::Wedge2 => "wedge2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "vector" => Ok(RepKind::Vector),
            "sym2" => Ok(RepKind::Sym2),
            "wedge2" => Ok(RepKind::Wedge2),
            _ => Err(Error::Parse(format!("unknown representation {s:?} (expected vector, sym2 or wedge2)"))),
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            RepKind::Vector | RepKind::Sym2 => 2,
            RepKind::Wedge2 => 4,
        }
    }

    /// Rejects `n` below the supported range for this representation.
    pub fn check_n(self, n: usize) -> Result<()> {
        if n >= self.min_n() {
            return Ok(());
        }
        Err(match self {
            RepKind::Wedge2 => Error::Unsupported(format!(
                "wedge2 requires n ≥ 4 (∧²V ⊗ ∧²V splits into three irreducible summands only when n ≥ 4), got n = {n}"
            )),
            _ => Error::Unsupported(format!("{} requires n ≥ 2, got n = {n}", self.tag())),
        })
    }

    pub fn dim(self, n: usize) -> usize {
        match self {
            RepKind::Vector => n,
            RepKind::Sym2 => n * (n + 1) / 2,
            RepKind::Wedge2 => n * (n - 1) / 2,
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// How a basis of a subspace `W ⊂ V ⊗ V` sits inside `V ⊗ V`.
#[derive(Clone, Debug)]
pub struct TensorEmbedding {
    /// Expansion of each basis vector over `x_i ⊗ x_j ↦ i·n + j`.
    pub vectors: Vec<SparseVec>,
    /// Coordinate of `V ⊗ V` where each basis vector has coefficient 1 and
    /// every other basis vector has coefficient 0.
    pub pivots: Vec<usize>,
}

impl TensorEmbedding {
    /// Coordinates of `x ∈ W` in the basis; fails if `x ∉ W`.
    pub fn coordinates(&self, x: &SparseVec) -> Option<Vec<RatScalar>> {
        let den = self.vectors.iter().flat_map(|v| v.values()).next().map(RatScalar::session)?;
        let c: Vec<RatScalar> =
            self.pivots.iter().map(|p| x.get(p).cloned().unwrap_or_else(|| RatScalar::zero(den))).collect();
        let mut back = SparseVec::new();
        for (k, ck) in c.iter().enumerate() {
            axpy(&mut back, ck, &self.vectors[k]);
        }
        if &back == x {
            Some(c)
        } else {
            None
        }
    }
}

/// A finite-dimensional weight representation with exact actions.
#[derive(Clone, Debug)]
pub struct Rep {
    pub kind: RepKind,
    pub n: usize,
    pub den: u32,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    /// `act_e[i - 1]` is `E_i`.
    pub act_e: Vec<PolyMatrix>,
    pub act_f: Vec<PolyMatrix>,
    pub embedding: Option<TensorEmbedding>,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn e(&self, i: usize) -> &PolyMatrix {
        &self.act_e[i - 1]
    }

    pub fn f(&self, i: usize) -> &PolyMatrix {
        &self.act_f[i - 1]
    }

    /// `(α_i, μ)` for each basis weight `μ`.
    pub fn root_pairings(&self, i: usize) -> Result<Vec<BigRational>> {
        let a = Weight::simple_root(self.n - 1, i)?;
        self.weights.iter().map(|w| a.inner(w)).collect()
    }
}

/// Session denominator for base rank parameter `n`.
pub fn session_den(n: usize) -> u32 {
    (2 * n) as u32
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange(format!("simple index {i} for n = {n}")));
    }
    Ok(())
}

/// Weight of `x_j`: `−λ_1 + α_1 + ⋯ + α_{j−1}` (1-based `j`).
pub fn vector_weight(n: usize, j: usize) -> Result<Weight> {
    let mut w = -&fundamental_weight(n, 1)?;
    for k in 0..j - 1 {
        w.coords[k] += rat(1);
    }
    Ok(w)
}

/// The `n`-dimensional vector representation.
pub fn vector_rep(n: usize) -> Result<Rep> {
    RepKind::Vector.check_n(n)?;
    let den = session_den(n);
    let one = RatScalar::one(den);
    let mut act_e = Vec::new();
    let mut act_f = Vec::new();
    for i in 1..n {
        act_e.push(PolyMatrix::from_entries(den, n, n, [(i, i - 1, one.clone())])?);
        act_f.push(PolyMatrix::from_entries(den, n, n, [(i - 1, i, one.clone())])?);
    }
    Ok(Rep {
        kind: RepKind::Vector,
        n,
        den,
        labels: (1..=n).map(|j| format!("x{j}")).collect(),
        weights: (1..=n).map(|j| vector_weight(n, j)).collect::<Result<_>>()?,
        act_e,
        act_f,
        embedding: None,
    })
}

/// `K_i^c` as a diagonal matrix: `q^{c(α_i, μ)}` on a weight-`μ` vector.
pub fn torus_action(rep: &Rep, i: usize, c: &BigRational) -> Result<PolyMatrix> {
    check_index(rep.n, i)?;
    let diag = rep
        .root_pairings(i)?
        .into_iter()
        .map(|m| LaurentScalar::q_pow(rep.den, &(c * m)).map(RatScalar::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::diagonal(diag, rep.den))
}

/// `Π_i K_i^{c_i}` as a diagonal matrix (exponents indexed from `K_1`).
pub fn torus_product(rep: &Rep, exps: &[BigRational]) -> Result<PolyMatrix> {
    if exps.len() != rep.n - 1 {
        return Err(Error::Dimension(format!("{} torus exponents for n = {}", exps.len(), rep.n)));
    }
    let k = Weight::from_coords(exps.to_vec());
    // Π K_i^{c_i} acts on v_μ by q^{Σ c_i (α_i, μ)} = q^{(Σ c_i α_i, μ)}.
    let diag = rep
        .weights
        .iter()
        .map(|w| LaurentScalar::q_pow(rep.den, &k.inner(w)?).map(RatScalar::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::diagonal(diag, rep.den))
}

/// `Δ(E_i)` and `Δ(F_i)` on `V ⊗ V`.
pub fn tensor_square_actions(v: &Rep, i: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    let id = PolyMatrix::identity(v.den, v.dim());
    let k = torus_action(v, i, &BigRational::one())?;
    let kinv = torus_action(v, i, &-BigRational::one())?;
    let de = v.e(i).kron(&k)?.add(&id.kron(v.e(i))?)?;
    let df = v.f(i).kron(&id)?.add(&kinv.kron(v.f(i))?)?;
    Ok((de, df))
}

/// Restricts an operator on `V ⊗ V` to a stable subspace.
fn restrict(op: &PolyMatrix, emb: &TensorEmbedding, what: &str) -> Result<PolyMatrix> {
    let d = emb.vectors.len();
    let den = op.session();
    let mut entries = Vec::new();
    for (a, va) in emb.vectors.iter().enumerate() {
        let img = op.apply(va);
        let c = emb
            .coordinates(&img)
            .ok_or_else(|| Error::Convention(format!("{what} does not preserve the subspace (basis vector {a})")))?;
        for (b, cb) in c.into_iter().enumerate() {
            if !cb.is_zero() {
                entries.push((b, a, cb));
            }
        }
    }
    PolyMatrix::from_entries(den, d, d, entries)
}

fn square_rep(n: usize, kind: RepKind) -> Result<Rep> {
    let v = vector_rep(n)?;
    let den = v.den;
    let one = RatScalar::one(den);
    let qinv: RatScalar = LaurentScalar::q_int(den, -1).into();
    let q: RatScalar = LaurentScalar::q(den).into();
    let idx = |i: usize, j: usize| i * n + j;
    let mut vectors = Vec::new();
    let mut pivots = Vec::new();
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for i in 0..n {
        let start = if kind == RepKind::Sym2 { i } else { i + 1 };
        for j in start..n {
            let mut x = SparseVec::new();
            x.insert(idx(i, j), one.clone());
            if i != j {
                let c = if kind == RepKind::Sym2 { qinv.clone() } else { -&q };
                x.insert(idx(j, i), c);
            }
            vectors.push(x);
            pivots.push(idx(i, j));
            labels.push(if kind == RepKind::Sym2 {
                format!("x{}·x{}", i + 1, j + 1)
            } else {
                format!("x{}∧x{}", i + 1, j + 1)
            });
            weights.push(&v.weights[i] + &v.weights[j]);
        }
    }
    let emb = TensorEmbedding { vectors, pivots };
    let mut act_e = Vec::new();
    let mut act_f = Vec::new();
    for i in 1..n {
        let (de, df) = tensor_square_actions(&v, i)?;
        act_e.push(restrict(&de, &emb, &format!("E_{i}"))?);
        act_f.push(restrict(&df, &emb, &format!("F_{i}"))?);
    }
    for a in 0..weights.len() {
        for b in a + 1..weights.len() {
            if weights[a] == weights[b] {
                return Err(Error::Convention(format!("repeated weight {} in {}", weights[a], kind)));
            }
        }
    }
    Ok(Rep { kind, n, den, labels, weights, act_e, act_f, embedding: Some(emb) })
}

/// Quantum symmetric square, basis `x_m ⊗ x_m` and `x_i ⊗ x_j + q⁻¹ x_j ⊗ x_i`
/// (`i < j`), ordered lexicographically by `(i, j)`.
pub fn sym2_rep(n: usize) -> Result<Rep> {
    RepKind::Sym2.check_n(n)?;
    square_rep(n, RepKind::Sym2)
}

/// Quantum exterior square, basis `x_i ∧ x_j = x_i ⊗ x_j − q x_j ⊗ x_i`
/// (`i < j`), ordered lexicographically by `(i, j)`.
pub fn wedge2_rep(n: usize) -> Result<Rep> {
    RepKind::Wedge2.check_n(n)?;
    square_rep(n, RepKind::Wedge2)
}

/// Exterior square without the `n ≥ 4` restriction, for decomposition checks.
pub fn wedge2_rep_any(n: usize) -> Result<Rep> {
    RepKind::Vector.check_n(n)?;
    square_rep(n, RepKind::Wedge2)
}

pub fn build_rep(kind: RepKind, n: usize) -> Result<Rep> {
    match kind {
        RepKind::Vector => vector_rep(n),
        RepKind::Sym2 => sym2_rep(n),
        RepKind::Wedge2 => wedge2_rep(n),
    }
}

/// Basis index of the pair `(i, j)` (1-based, `i ≤ j` or `i < j`).
pub fn pair_index(kind: RepKind, n: usize, i: usize, j: usize) -> Option<usize> {
    let mut k = 0;
    for a in 1..=n {
        let start = if kind == RepKind::Sym2 { a } else { a + 1 };
        for b in start..=n {
            if (a, b) == (i, j) {
                return Some(k);
            }
            k += 1;
        }
    }
    None
}

#[derive(Serialize)]
struct RepJson<'a> {
    kind: &'static str,
    n: usize,
    labels: &'a [String],
    weights: &'a [Weight],
    e: &'a [PolyMatrix],
    f: &'a [PolyMatrix],
}

impl Serialize for Rep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RepJson {
            kind: self.kind.tag(),
            n: self.n,
            labels: &self.labels,
            weights: &self.weights,
            e: &self.act_e,
            f: &self.act_f,
        }
        .serialize(s)
    }
}

/// `[m]_q = (q^m − q^{−m}) / (q − q^{−1})` as a Laurent polynomial.
pub fn q_integer(den: u32, m: i64) -> LaurentScalar {
    let num = &LaurentScalar::q_int(den, m) - &LaurentScalar::q_int(den, -m);
    let d = &LaurentScalar::q(den) - &LaurentScalar::q_int(den, -1);
    num.div_exact(&d).expect("q-integers are Laurent polynomials")
}
