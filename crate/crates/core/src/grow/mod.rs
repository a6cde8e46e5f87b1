//! The growth step `A_{n−1} ⇒ B_n, C_n, D_n`: normalization constant,
//! new-root data, the extended Cartan matrix by two routes, the relation
//! instances behind it, and the tree of grown quantum groups.

pub mod mplus;
pub mod tree;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::laurent::{rat, rat_frac};
use crate::exact::{LaurentScalar, RatScalar};
use crate::lattice::{reference_cartan, RootDatum, Series, Weight};
use crate::nichols::quadratic_relations;
use crate::qrep::RepKind;
use crate::report::{Check, Report};
use crate::rmx::spectrum::normalization_exponent;
use crate::rmx::{full_bundle, RMatrixBundle, RPrime};

pub use mplus::{mplus_closed_form, verify_mplus_pairing, MPlusEntry, MPlusVerification, PairingConvention};
pub use tree::{build_tree, emit_diagram_dot, emit_tree_dot, EdgeStatus, Tree, TreeEdge};

/// Series reached from `A_{n−1}` through each representation.
pub fn target_series(kind: RepKind) -> Series {
    match kind {
        RepKind::Vector => Series::B,
        RepKind::Sym2 => Series::C,
        RepKind::Wedge2 => Series::D,
    }
}

/// `(α_n, α_n)` as displayed for each case.
pub fn expected_new_norm(kind: RepKind) -> BigRational {
    rat(match kind {
        RepKind::Vector => 1,
        RepKind::Sym2 => 4,
        RepKind::Wedge2 => 2,
    })
}

/// Exponent of `q_*` in the `[E_n, F_n]` denominator.
pub fn q_star_exponent(kind: RepKind) -> BigRational {
    match kind {
        RepKind::Vector => rat_frac(1, 2),
        RepKind::Sym2 => rat(2),
        RepKind::Wedge2 => rat(1),
    }
}

/// `λ = q^s` recomputed from the spectrum of `P·R_VV`; must agree with the bundle.
pub fn normalization_constant(b: &RMatrixBundle) -> Result<LaurentScalar> {
    let s = normalization_exponent(b.kind(), &b.spectrum()?.eigenvalues)?;
    let lambda = LaurentScalar::q_pow(b.den(), &s)?;
    if let Some(stored) = &b.lambda {
        if stored != &lambda {
            return Err(Error::Verification(format!("stored λ = {stored} but the spectrum gives {lambda}")));
        }
    }
    Ok(lambda)
}

/// Inner products of the new simple root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootData {
    /// K-exponents of `(m⁺)^p_p`, so `(m⁺)^p_p = K_μ`.
    pub mu: Weight,
    /// `(v, v)` with `λ = q^{−(v, v)}`.
    pub vnorm: BigRational,
    pub alpha_n: Weight,
    /// `(α_n, α_i)` for `i = 1, …, n − 1`.
    pub inner: Vec<BigRational>,
    /// `(α_n, α_n) = (μ, μ) + (v, v)`.
    pub norm: BigRational,
}

fn last_diagonal(entries: &[MPlusEntry], p: usize) -> Result<&MPlusEntry> {
    entries
        .iter()
        .find(|e| e.row == p && e.col == p)
        .ok_or_else(|| Error::Verification(format!("no closed form for (m+)^{p}_{p}")))
}

pub fn new_root_data(entries: &[MPlusEntry], p: usize, lambda: &LaurentScalar) -> Result<RootData> {
    let mu = last_diagonal(entries, p)?.kpart.clone();
    let s = lambda
        .q_exponent()
        .ok_or_else(|| Error::Verification(format!("λ = {lambda} is not a power of q")))?;
    let vnorm = -s;
    let alpha_n = mu.with_central(vnorm.clone());
    let r = mu.rank();
    let inner =
        (1..=r).map(|i| Weight::simple_root(r, i).and_then(|a| alpha_n.inner(&a))).collect::<Result<Vec<_>>>()?;
    let norm = &mu.inner(&mu)? + &vnorm;
    Ok(RootData { mu, vnorm, alpha_n, inner, norm })
}

fn to_int(x: &BigRational, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Verification(format!("{what} = {x} is not an integer")));
    }
    x.to_integer().to_i64().ok_or_else(|| Error::Verification(format!("{what} out of range")))
}

/// Extends the `A_{n−1}` Cartan matrix by `a_{i,n} = 2(α_i, α_n)/(α_i, α_i)`
/// and `a_{n,i} = 2(α_n, α_i)/(α_n, α_n)`.
pub fn extend_cartan(base: &RootDatum, inner: &[BigRational], norm: &BigRational) -> Result<Vec<Vec<i64>>> {
    if norm.is_zero() {
        return Err(Error::Verification("(α_n, α_n) = 0".into()));
    }
    let r = base.rank;
    let mut a: Vec<Vec<i64>> = base.cartan.iter().map(|row| row.iter().copied().chain([0]).collect()).collect();
    let mut last = vec![0; r + 1];
    for i in 0..r {
        a[i][r] = to_int(&(&inner[i] * rat(2) / &base.lengths[i]), &format!("a_({},{})", i + 1, r + 1))?;
        last[i] = to_int(&(&inner[i] * rat(2) / norm), &format!("a_({},{})", r + 1, i + 1))?;
    }
    last[r] = 2;
    a.push(last);
    Ok(a)
}

/// Exponent readout from the R-matrix alone: `(α_n, α_n)` from
/// `λ⁻¹ R_VV^{pp}_{pp}` and `(α_i, α_n)` from the diagonal entries
/// `R_VV^{ap}_{ap} = q^{(μ_a, μ_p)}` of a pair `a → b` joined by `E_i`.
pub fn route_b_inner(b: &RMatrixBundle) -> Result<(Vec<BigRational>, BigRational)> {
    let p = b.dim();
    let exp_of = |x: RatScalar, what: String| -> Result<BigRational> {
        x.as_laurent()
            .and_then(|l| l.q_exponent())
            .ok_or_else(|| Error::Verification(format!("{what} = {x} is not a power of q")))
    };
    let lam = b.lambda_exp()?;
    let norm = &exp_of(b.r_entry(p, p, p, p), format!("R_VV^{{{p}{p}}}_{{{p}{p}}}"))? - &lam;
    let mut inner = Vec::new();
    for i in 1..b.n() {
        let (bb, a, _) = b
            .rep
            .e(i)
            .entries()
            .next()
            .ok_or_else(|| Error::Verification(format!("E_{i} acts by zero")))?;
        let (a, bb) = (a + 1, bb + 1);
        let ea = exp_of(b.r_entry(a, p, a, p), format!("R_VV^{{{a}{p}}}_{{{a}{p}}}"))?;
        let eb = exp_of(b.r_entry(bb, p, bb, p), format!("R_VV^{{{bb}{p}}}_{{{bb}{p}}}"))?;
        inner.push(ea - eb);
    }
    Ok((inner, norm))
}

/// Outcome of a growth step.
#[derive(Clone, Debug)]
pub struct GrowthResult {
    pub kind: RepKind,
    pub n: usize,
    pub base: RootDatum,
    pub lambda: LaurentScalar,
    pub root: RootData,
    pub convention: Option<PairingConvention>,
    pub cartan: Vec<Vec<i64>>,
    pub cartan_route_b: Vec<Vec<i64>>,
    pub series: Series,
    pub q_star: BigRational,
    pub report: Report,
}

impl GrowthResult {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

fn symmetrizable(a: &[Vec<i64>], d: &[BigRational]) -> bool {
    let r = a.len();
    (0..r).all(|i| (0..r).all(|j| &d[i] * rat(a[i][j]) == &d[j] * rat(a[j][i])))
}

/// Runs the growth step for a bundle that already carries λ.
pub fn extended_cartan_from(b: &RMatrixBundle) -> Result<GrowthResult> {
    let kind = b.kind();
    let n = b.n();
    let base = RootDatum::type_a(n)?;
    let lambda = normalization_constant(b)?;
    let entries = mplus_closed_form(kind, n)?;
    let ver = verify_mplus_pairing(b, &entries)?;
    let mut report = Report::new();
    report.extend(ver.report.clone());
    let p = b.dim();
    let root = new_root_data(&entries, p, &lambda)?;

    // highest weight of T_V is −μ
    let hw = &b.rep.weights[p - 1];
    report.push(Check::new("highest weight is -mu", &(-&root.mu) == hw, format!("mu = {}", root.mu)));

    let cartan = extend_cartan(&base, &root.inner, &root.norm)?;
    let (inner_b, norm_b) = route_b_inner(b)?;
    let cartan_route_b = extend_cartan(&base, &inner_b, &norm_b)?;
    report.push(Check::new(
        "route A (weight formula) = route B (R-matrix exponents)",
        cartan == cartan_route_b,
        format!("A: {cartan:?}, B: {cartan_route_b:?}"),
    ));
    report.push(Check::new(
        "lambda-consistency: (mu, mu) + (v, v) = exponent of lambda^-1 R_VV^pp_pp",
        root.norm == norm_b,
        format!("{} vs {}", root.norm, norm_b),
    ));
    let series = target_series(kind);
    let reference = reference_cartan(series, n)?;
    report.push(Check::new(
        format!("extended Cartan matrix is {series}{n}"),
        cartan == reference,
        format!("{cartan:?}"),
    ));
    let mut d = vec![rat(1); n - 1];
    d.push(&root.norm / rat(2));
    report.push(Check::new("symmetrizable with d_i = (alpha_i, alpha_i)/2", symmetrizable(&cartan, &d), ""));
    let q_star = &root.norm / rat(2);
    report.push(Check::new(
        "q_* = q^((alpha_n, alpha_n)/2)",
        q_star == q_star_exponent(kind),
        format!("q^({q_star})"),
    ));
    Ok(GrowthResult {
        kind,
        n,
        base,
        lambda,
        root,
        convention: ver.convention,
        cartan,
        cartan_route_b,
        series,
        q_star,
        report,
    })
}

pub fn extended_cartan(kind: RepKind, n: usize) -> Result<GrowthResult> {
    kind.check_n(n)?;
    extended_cartan_from(&full_bundle(kind, n)?)
}

/// `K_n E_i = q^{x_i} E_i K_n` exponents as displayed (`x_i = −(μ, α_i)`),
/// indexed from `i = 1`.
pub fn displayed_kn_ei_table(kind: RepKind, n: usize) -> Vec<i64> {
    (1..n)
        .map(|i| match kind {
            RepKind::Vector if i == n - 1 => 1,
            RepKind::Sym2 if i == n - 1 => 2,
            RepKind::Wedge2 if i == n - 2 => 1,
            _ => 0,
        })
        .collect()
}

/// `E_n K_i = q^{y_i} K_i E_n` with `y_i = (μ_a − μ_b, μ_p)` as displayed.
pub fn displayed_en_ki_table(kind: RepKind, n: usize) -> Vec<i64> {
    displayed_kn_ei_table(kind, n).into_iter().map(|x| -x).collect()
}

/// Displayed q-Serre relations: `(x, y, degree of E_x, exponent of the bracket base)`.
pub fn displayed_serre(kind: RepKind, n: usize) -> Vec<(usize, usize, i64, BigRational)> {
    match kind {
        RepKind::Vector => vec![(n, n - 1, 3, rat_frac(1, 2)), (n - 1, n, 2, rat(1))],
        RepKind::Sym2 => vec![(n, n - 1, 2, rat(2)), (n - 1, n, 3, rat(1))],
        RepKind::Wedge2 => vec![(n, n - 2, 2, rat(1)), (n - 2, n, 2, rat(1))],
    }
}

fn exchange_exponent(kind: RepKind) -> Option<i64> {
    match kind {
        RepKind::Vector => None,
        RepKind::Sym2 => Some(2),
        RepKind::Wedge2 => Some(1),
    }
}

/// Checks the relation instances used to identify the grown algebra.
pub fn relation_instances(b: &RMatrixBundle, g: &GrowthResult) -> Result<Report> {
    let kind = b.kind();
    let n = b.n();
    let p = b.dim();
    let den = b.den();
    let mut rep = Report::new();

    // (a) E_n K_n = q^{(α_n, α_n)} K_n E_n
    let lam_inv = b.lambda()?.inv_monomial().expect("monomial");
    let lhs = b.r_entry(p, p, p, p).mul_laurent(&lam_inv);
    let want: RatScalar = LaurentScalar::q_pow(den, &expected_new_norm(kind))?.into();
    rep.push(Check::new(
        format!("(a) lambda^-1 R_VV^{{{p}{p}}}_{{{p}{p}}} = q^{}", expected_new_norm(kind)),
        lhs == want,
        format!("{lhs}"),
    ));

    // (b) K_n E_i from the K-exponents, E_n K_i from the R-matrix diagonal
    let kn: Vec<i64> = g.root.inner.iter().map(|x| to_int(&-x, "K_n E_i exponent")).collect::<Result<_>>()?;
    let table = displayed_kn_ei_table(kind, n);
    rep.push(Check::new("(b) K_n E_i exponents", kn == table, format!("computed {kn:?}, displayed {table:?}")));
    let (inner_b, _) = route_b_inner(b)?;
    let en: Vec<i64> = inner_b.iter().map(|x| to_int(x, "E_n K_i exponent")).collect::<Result<_>>()?;
    let table = displayed_en_ki_table(kind, n);
    rep.push(Check::new(
        "(b) E_n K_i exponents (mu_a - mu_b, mu_p)",
        en == table,
        format!("computed {en:?}, displayed {table:?}"),
    ));

    // (c) quadratic exchange between the two top generators
    match (&b.rprime, exchange_exponent(kind)) {
        (Some(RPrime::Matrix(rp)), Some(s)) => {
            let rel = quadratic_relations(&rp.convert()?)?;
            let c: RatScalar = LaurentScalar::q_int(den, s).into();
            rep.push(Check::new(
                format!("(c) e^{p} e^{} = q^{s} e^{} e^{p}", p - 1, p - 1),
                rel.implies_exchange(p, p - 1, &c),
                format!("{} relations", rel.relations.len()),
            ));
        }
        (Some(RPrime::Free), None) => {
            rep.push(Check::pass("(c) R' = P: free algebra, no quadratic relations"));
        }
        _ => return Err(Error::Verification("R′ missing or of the wrong kind".into())),
    }

    // (d) Serre degrees 1 − a_{xy} and bracket bases q^{(α_x, α_x)/2}
    for (x, y, deg, base) in displayed_serre(kind, n) {
        let a = g.cartan[x - 1][y - 1];
        let len = if x == n { g.root.norm.clone() } else { rat(2) };
        let ok = 1 - a == deg && &len / rat(2) == base;
        rep.push(Check::new(
            format!("(d) Serre relation of degree {deg} in E_{x} against E_{y}"),
            ok,
            format!("1 - a = {}, base q^({})", 1 - a, &len / rat(2)),
        ));
    }
    Ok(rep)
}

#[derive(Serialize)]
struct GrowthJson<'a> {
    rep: &'static str,
    n: usize,
    base: String,
    lambda: String,
    lambda_exact: &'a LaurentScalar,
    mu: &'a Weight,
    vnorm: String,
    alpha_n: &'a Weight,
    inner: Vec<String>,
    alpha_n_norm: String,
    convention: Option<&'a PairingConvention>,
    cartan: &'a [Vec<i64>],
    cartan_route_b: &'a [Vec<i64>],
    series: String,
    q_star: String,
    report: &'a Report,
}

impl Serialize for GrowthResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GrowthJson {
            rep: self.kind.tag(),
            n: self.n,
            base: format!("A{}", self.base.rank),
            lambda: self.lambda.to_string(),
            lambda_exact: &self.lambda,
            mu: &self.root.mu,
            vnorm: self.root.vnorm.to_string(),
            alpha_n: &self.root.alpha_n,
            inner: self.root.inner.iter().map(ToString::to_string).collect(),
            alpha_n_norm: self.root.norm.to_string(),
            convention: self.convention.as_ref(),
            cartan: &self.cartan,
            cartan_route_b: &self.cartan_route_b,
            series: format!("{}{}", self.series, self.n),
            q_star: format!("q^({})", self.q_star),
            report: &self.report,
        }
        .serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn growth_matrices() {
        for (k, n) in [(RepKind::Vector, 2), (RepKind::Vector, 3), (RepKind::Sym2, 2), (RepKind::Sym2, 3), (RepKind::Wedge2, 4)] {
            let g = extended_cartan(k, n).unwrap();
            assert!(g.passed(), "{k} n={n}: {}", g.report);
            assert_eq!(g.cartan, reference_cartan(target_series(k), n).unwrap());
        }
    }

    #[test]
    fn b2_and_c3_literal() {
        assert_eq!(extended_cartan(RepKind::Vector, 2).unwrap().cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(
            extended_cartan(RepKind::Sym2, 3).unwrap().cartan,
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
    }

    #[test]
    fn new_root_inner_products() {
        let g = extended_cartan(RepKind::Sym2, 3).unwrap();
        assert_eq!(g.root.norm, rat(4));
        assert_eq!(g.root.inner, vec![rat(0), rat(-2)]);
        let g = extended_cartan(RepKind::Vector, 3).unwrap();
        assert_eq!(g.root.norm, rat(1));
        assert_eq!(g.root.inner.last().unwrap(), &rat(-1));
        let g = extended_cartan(RepKind::Wedge2, 4).unwrap();
        assert_eq!(g.root.norm, rat(2));
        assert_eq!(g.root.inner, vec![rat(0), rat(-1), rat(0)]);
    }

    #[test]
    fn lambda_values() {
        for (k, n, e) in [(RepKind::Vector, 3, rat_frac(-1, 3)), (RepKind::Sym2, 3, rat_frac(-4, 3)), (RepKind::Wedge2, 4, rat(-1))] {
            let b = full_bundle(k, n).unwrap();
            assert_eq!(normalization_constant(&b).unwrap().q_exponent().unwrap(), e);
        }
    }

    #[test]
    fn relation_instances_hold() {
        for (k, n) in [(RepKind::Vector, 3), (RepKind::Sym2, 3), (RepKind::Wedge2, 4)] {
            let b = full_bundle(k, n).unwrap();
            let g = extended_cartan_from(&b).unwrap();
            let r = relation_instances(&b, &g).unwrap();
            assert!(r.passed(), "{k} n={n}: {r}");
        }
    }

    #[test]
    fn non_integer_entry_rejected() {
        let base = RootDatum::type_a(2).unwrap();
        assert!(extend_cartan(&base, &[rat_frac(1, 2)], &rat(2)).is_err());
    }
}
