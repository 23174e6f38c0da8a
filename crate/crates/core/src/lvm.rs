//! LVM configurations `Λ = (Λ₁,…,Λₙ) ⊂ ℂᵐ`: Siegel and weak hyperbolicity
//! tests, the solution space of
//!
//! ```text
//! Σ sᵢ Λᵢ = 0,   Σ sᵢ = 0      (sᵢ real)
//! ```
//!
//! its rationality, the Gale transform and the polytope it defines, the
//! removed coordinate strata, generic moment fibers and one-dimensional
//! orbifold weights.
//!
//! Complex numbers are `(re, im)` pairs of [`Scalar`]s; `Λᵢ` is embedded in
//! `ℝ^{2m}` as `(re₁, im₁, …, re_m, im_m)`. Indices are 0-based.

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, rational_basis, saturated_integer_basis};
use crate::polytope::{k_subsets, Facet, PolytopeError, SimplePolytope};
use crate::quotient::minimal_non_faces;
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LvmError {
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("solution space has dimension {found}, expected {expected}")]
    DegenerateSystem { expected: usize, found: usize },
    #[error("foliation directions span dimension {found}, expected {expected}")]
    DegenerateFoliation { expected: usize, found: usize },
    #[error("needs a solution space of dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("the solution space is not defined over the rationals")]
    IrrationalWeights,
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Field(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Complex {
    pub re: Scalar,
    pub im: Scalar,
}

impl Complex {
    pub fn new(re: Scalar, im: Scalar) -> Self {
        Complex { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Complex::new(Scalar::from_int(re), Scalar::from_int(im))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationSpec", into = "ConfigurationSpec")]
pub struct Configuration {
    m: usize,
    lambdas: Vec<Vec<Complex>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigurationSpec {
    pub m: usize,
    pub lambdas: Vec<Vec<Complex>>,
}

impl TryFrom<ConfigurationSpec> for Configuration {
    type Error = LvmError;
    fn try_from(s: ConfigurationSpec) -> Result<Self, LvmError> {
        Configuration::new(s.m, s.lambdas)
    }
}

impl From<Configuration> for ConfigurationSpec {
    fn from(c: Configuration) -> Self {
        ConfigurationSpec { m: c.m, lambdas: c.lambdas }
    }
}

impl Configuration {
    pub fn new(m: usize, lambdas: Vec<Vec<Complex>>) -> Result<Self, LvmError> {
        if m == 0 {
            return Err(LvmError::InvalidConfiguration("m must be positive".into()));
        }
        if lambdas.len() <= 2 * m {
            return Err(LvmError::InvalidConfiguration(format!(
                "need n > 2m, got n = {} and m = {m}",
                lambdas.len()
            )));
        }
        if let Some(bad) = lambdas.iter().position(|l| l.len() != m) {
            return Err(LvmError::InvalidConfiguration(format!("vector {bad} does not have {m} entries")));
        }
        Scalar::common_field(lambdas.iter().flatten().flat_map(|c| [&c.re, &c.im]))?;
        Ok(Configuration { m, lambdas })
    }

    /// `m = 1` configuration from complex numbers.
    pub fn planar(values: Vec<Complex>) -> Result<Self, LvmError> {
        Self::new(1, values.into_iter().map(|c| vec![c]).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[Vec<Complex>] {
        &self.lambdas
    }

    pub fn field(&self) -> u64 {
        Scalar::common_field(self.lambdas.iter().flatten().flat_map(|c| [&c.re, &c.im])).unwrap_or(0)
    }

    pub fn is_rational(&self) -> bool {
        self.field() == 0
    }

    /// `Λᵢ` as points of `ℝ^{2m}`.
    pub fn points(&self) -> Vec<Vec<Scalar>> {
        self.lambdas
            .iter()
            .map(|l| l.iter().flat_map(|c| [c.re.clone(), c.im.clone()]).collect())
            .collect()
    }

    /// The `2m` real directions `Re Λ^(k)`, `Im Λ^(k)` as vectors in `ℝⁿ`.
    pub fn direction_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = Vec::with_capacity(2 * self.m);
        for k in 0..self.m {
            rows.push(self.lambdas.iter().map(|l| l[k].re.clone()).collect());
            rows.push(self.lambdas.iter().map(|l| l[k].im.clone()).collect());
        }
        rows
    }

    fn system_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = self.direction_rows();
        rows.push(vec![Scalar::one(); self.n()]);
        rows
    }

    pub fn expected_solution_dim(&self) -> usize {
        self.n() - 2 * self.m - 1
    }
}

/// Whether the origin lies in the convex hull of `points`, decided exactly by
/// checking affinely independent subsets of size at most `dim + 1`.
pub fn origin_in_hull(points: &[Vec<Scalar>]) -> bool {
    let Some(dim) = points.first().map(Vec::len) else {
        return false;
    };
    for k in 1..=points.len().min(dim + 1) {
        for sub in k_subsets(points.len(), k) {
            let mut rows: Vec<Vec<Scalar>> = (0..dim)
                .map(|c| sub.iter().map(|&i| points[i][c].clone()).collect())
                .collect();
            rows.push(vec![Scalar::one(); k]);
            let mut rhs = vec![Scalar::zero(); dim];
            rhs.push(Scalar::one());
            let Ok(a) = linalg::ScalarMatrix::from_rows(&rows) else { continue };
            if let Ok(linalg::Solution::Unique(x)) = linalg::solve_exact(&a, &rhs) {
                if x.iter().all(|c| !c.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub siegel: bool,
    pub weak_hyperbolic: bool,
}

impl Admissibility {
    pub fn admissible(&self) -> bool {
        self.siegel && self.weak_hyperbolic
    }
}

pub fn check_admissible(cfg: &Configuration) -> Admissibility {
    let pts = cfg.points();
    let siegel = origin_in_hull(&pts);
    let weak_hyperbolic = k_subsets(pts.len(), 2 * cfg.m).iter().all(|sub| {
        let chosen: Vec<Vec<Scalar>> = sub.iter().map(|&i| pts[i].clone()).collect();
        !origin_in_hull(&chosen)
    });
    Admissibility { siegel, weak_hyperbolic }
}

/// Basis of the solution space; a saturated integer basis (Hermite form)
/// whenever the space is defined over `ℚ`, otherwise the reduced echelon basis.
pub fn solution_basis(cfg: &Configuration) -> Result<Vec<Vec<Scalar>>, LvmError> {
    let n = cfg.n();
    let ker = linalg::kernel(&cfg.system_rows(), n);
    let expected = cfg.expected_solution_dim();
    if ker.len() != expected {
        return Err(LvmError::DegenerateSystem { expected, found: ker.len() });
    }
    if ker.is_empty() {
        return Ok(ker);
    }
    Ok(match rational_basis(&ker) {
        Some(rows) => saturated_integer_basis(&rows, n)
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::from_bigint).collect())
            .collect(),
        None => {
            let mut rows = ker;
            linalg::rref(&mut rows);
            rows
        }
    })
}

/// Whether the solution space admits a basis of integer vectors.
pub fn condition_k(cfg: &Configuration) -> Result<bool, LvmError> {
    let ker = linalg::kernel(&cfg.system_rows(), cfg.n());
    let expected = cfg.expected_solution_dim();
    if ker.len() != expected {
        return Err(LvmError::DegenerateSystem { expected, found: ker.len() });
    }
    Ok(ker.is_empty() || rational_basis(&ker).is_some())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LeafType {
    CompactTori,
    DenseLeaves,
}

/// Decided from the span of `Re Λ`, `Im Λ` and `(1,…,1)`, whose orthogonal
/// complement is the solution space; a subspace is rational iff its complement is.
pub fn leaf_dichotomy(cfg: &Configuration) -> Result<LeafType, LvmError> {
    let rows = cfg.system_rows();
    let rank = linalg::rank(&rows);
    let expected = 2 * cfg.m + 1;
    if rank != expected {
        return Err(LvmError::DegenerateSystem {
            expected: cfg.expected_solution_dim(),
            found: cfg.n() - rank,
        });
    }
    Ok(if rational_basis(&rows).is_some() {
        LeafType::CompactTori
    } else {
        LeafType::DenseLeaves
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaleData {
    /// Row `i` is `vᵢ`, the `i`-th coordinates of the solution basis.
    pub v: Vec<Vec<Scalar>>,
    pub epsilons: Vec<Scalar>,
    pub basis: Vec<Vec<Scalar>>,
}

impl GaleData {
    pub fn zero_rows(&self) -> Vec<usize> {
        (0..self.v.len()).filter(|&i| self.v[i].iter().all(Scalar::is_zero)).collect()
    }
}

/// Gale transform with `εᵢ = 1` unless `epsilons` is given.
pub fn gale_transform(cfg: &Configuration, epsilons: Option<Vec<Scalar>>) -> Result<GaleData, LvmError> {
    let basis = solution_basis(cfg)?;
    let n = cfg.n();
    let epsilons = epsilons.unwrap_or_else(|| vec![Scalar::one(); n]);
    if epsilons.len() != n {
        return Err(LvmError::InvalidConfiguration(format!("expected {n} epsilons, got {}", epsilons.len())));
    }
    if epsilons.iter().any(|e| !e.is_positive()) {
        return Err(LvmError::InvalidConfiguration("epsilons must be positive".into()));
    }
    let v = (0..n).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    Ok(GaleData { v, epsilons, basis })
}

/// `P = {u : ⟨vᵢ, u⟩ ≥ −εᵢ}`.
pub fn polytope_from_gale(g: &GaleData) -> Result<SimplePolytope, LvmError> {
    let dim = g.basis.len();
    if dim == 0 {
        return Err(LvmError::WrongDimension { expected: 1, found: 0 });
    }
    let facets = g
        .v
        .iter()
        .zip(&g.epsilons)
        .map(|(v, e)| Facet::new(v.clone(), -e))
        .collect();
    Ok(SimplePolytope::new(dim, facets)?)
}

/// Vertices of `K = {r ≥ 0 : Σ rᵢΛᵢ = 0, Σ rᵢ = 1}`, empty when the Siegel condition fails.
pub fn siegel_vertices(cfg: &Configuration) -> Vec<Vec<Scalar>> {
    let pts = cfg.points();
    let n = cfg.n();
    let dim = 2 * cfg.m;
    let mut out: Vec<Vec<Scalar>> = Vec::new();
    for k in 1..=n.min(dim + 1) {
        for sub in k_subsets(n, k) {
            let mut rows: Vec<Vec<Scalar>> = (0..dim)
                .map(|c| sub.iter().map(|&i| pts[i][c].clone()).collect())
                .collect();
            rows.push(vec![Scalar::one(); k]);
            let mut rhs = vec![Scalar::zero(); dim];
            rhs.push(Scalar::one());
            let Ok(a) = linalg::ScalarMatrix::from_rows(&rows) else { continue };
            if let Ok(linalg::Solution::Unique(x)) = linalg::solve_exact(&a, &rhs) {
                if x.iter().all(|c| !c.is_negative()) {
                    let mut r = vec![Scalar::zero(); n];
                    for (&i, xi) in sub.iter().zip(x) {
                        r[i] = xi;
                    }
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

/// `ε` = barycenter of the vertices of `K`; with this choice the Gale polytope
/// is a translate of `K` itself. `None` when the Siegel condition fails.
pub fn siegel_epsilons(cfg: &Configuration) -> Option<Vec<Scalar>> {
    let verts = siegel_vertices(cfg);
    if verts.is_empty() {
        return None;
    }
    let count = Scalar::from_int(verts.len() as i64);
    let n = cfg.n();
    let eps: Vec<Scalar> = (0..n)
        .map(|i| verts.iter().fold(Scalar::zero(), |acc, v| acc + &v[i]) / count.clone())
        .collect();
    eps.iter().all(Scalar::is_positive).then_some(eps)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SiegelFamily {
    /// Every `J` (including `∅`) with `0 ∉ conv{Λⱼ : j ∈ J}`.
    pub avoiding: Vec<Vec<usize>>,
    /// Complements of the maximal such `J`: the minimal sets of vanishing coordinates removed from `ℂⁿ`.
    pub minimal_zero_sets: Vec<Vec<usize>>,
}

pub fn siegel_index_family(cfg: &Configuration) -> SiegelFamily {
    let pts = cfg.points();
    let n = cfg.n();
    let mut avoiding = Vec::new();
    for k in 0..=n {
        for sub in k_subsets(n, k) {
            let chosen: Vec<Vec<Scalar>> = sub.iter().map(|&i| pts[i].clone()).collect();
            if !origin_in_hull(&chosen) {
                avoiding.push(sub);
            }
        }
    }
    let maximal: Vec<&Vec<usize>> = avoiding
        .iter()
        .filter(|j| {
            !avoiding
                .iter()
                .any(|k| k.len() > j.len() && j.iter().all(|x| k.contains(x)))
        })
        .collect();
    let mut minimal_zero_sets: Vec<Vec<usize>> = maximal
        .iter()
        .map(|j| (0..n).filter(|i| !j.contains(i)).collect())
        .filter(|z: &Vec<usize>| !z.is_empty())
        .collect();
    minimal_zero_sets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    SiegelFamily {
        avoiding,
        minimal_zero_sets,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorSlope {
    pub indices: [usize; 2],
    pub slope: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub torus_rank: usize,
    pub foliation_subspace: Vec<Vec<Scalar>>,
    pub rational: bool,
    /// Slope on the factor with the smallest index, when the foliation splits into planar factors.
    pub slope: Option<Scalar>,
    pub factor_slopes: Vec<FactorSlope>,
}

/// The `ℂᵐ` phase directions in `ℝⁿ / ℝ·(1,…,1) ≅ ℝ^{n−1}` and, where the
/// Gale polytope has two-element minimal non-faces `{i, j}` on which the
/// directions have rank one, the Kronecker slope `wᵢ / wⱼ` on that factor.
pub fn generic_fiber(cfg: &Configuration) -> Result<FiberReport, LvmError> {
    let n = cfg.n();
    let rows = cfg.direction_rows();
    let projected: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|w| (0..n - 1).map(|i| &w[i] - &w[n - 1]).collect())
        .collect();
    let mut basis = projected;
    let rank = linalg::rref(&mut basis).len();
    if rank < 2 * cfg.m {
        return Err(LvmError::DegenerateFoliation {
            expected: 2 * cfg.m,
            found: rank,
        });
    }
    let rational = rational_basis(&basis).is_some();

    let mut factor_slopes = Vec::new();
    if let Ok(blocks) = planar_blocks(cfg) {
        for [i, j] in blocks {
            let restricted: Vec<Vec<Scalar>> = rows.iter().map(|w| vec![w[i].clone(), w[j].clone()]).collect();
            if linalg::rank(&restricted) != 1 {
                continue;
            }
            let w = restricted.iter().find(|r| r.iter().any(|x| !x.is_zero())).expect("rank one");
            if w[1].is_zero() {
                continue;
            }
            factor_slopes.push(FactorSlope {
                indices: [i, j],
                slope: &w[0] / &w[1],
            });
        }
    }
    Ok(FiberReport {
        torus_rank: n - 1,
        foliation_subspace: basis,
        rational,
        slope: factor_slopes.first().map(|f| f.slope.clone()),
        factor_slopes,
    })
}

/// Two-element minimal non-faces of the Gale polytope, sorted by smallest index.
fn planar_blocks(cfg: &Configuration) -> Result<Vec<[usize; 2]>, LvmError> {
    let eps = siegel_epsilons(cfg);
    let g = gale_transform(cfg, eps)?;
    let p = polytope_from_gale(&g)?;
    let mut blocks: Vec<[usize; 2]> = minimal_non_faces(p.family(), p.facet_count())
        .into_iter()
        .filter(|s| s.len() == 2)
        .map(|s| [s[0], s[1]])
        .collect();
    blocks.sort();
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Endpoint {
    pub position: Scalar,
    pub active_facets: Vec<usize>,
    #[serde(with = "crate::json::big_ints")]
    pub weights: Vec<BigInt>,
    /// `|weight|` when exactly one facet is active.
    #[serde(serialize_with = "ser_opt_int")]
    pub order: Option<BigInt>,
}

fn ser_opt_int<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(x) => crate::json::big_int::serialize(x, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbifoldWeights {
    #[serde(with = "crate::json::big_ints")]
    pub solution: Vec<BigInt>,
    pub epsilons: Vec<Scalar>,
    pub endpoints: [Endpoint; 2],
}

/// For `n − 2m − 1 = 1`: the interval `{u : wᵢu ≥ −εᵢ}` for the primitive
/// solution `w`, with `ε` from [`siegel_epsilons`] (or all 1 without the
/// Siegel condition), and the weights active at each end.
pub fn orbifold_weights_1d(cfg: &Configuration) -> Result<OrbifoldWeights, LvmError> {
    let k = cfg.expected_solution_dim();
    if k != 1 {
        return Err(LvmError::WrongDimension { expected: 1, found: k });
    }
    if !condition_k(cfg)? {
        return Err(LvmError::IrrationalWeights);
    }
    let basis = solution_basis(cfg)?;
    let w: Vec<BigInt> = basis[0].iter().map(|x| x.to_integer().expect("integer basis")).collect();
    let eps = siegel_epsilons(cfg).unwrap_or_else(|| vec![Scalar::one(); cfg.n()]);

    // wᵢ > 0 bounds u from below by −εᵢ/wᵢ, wᵢ < 0 from above
    let bound = |i: usize| -(&eps[i] / &Scalar::from_bigint(w[i].clone()));
    let lower: Vec<usize> = (0..w.len()).filter(|&i| w[i].is_positive()).collect();
    let upper: Vec<usize> = (0..w.len()).filter(|&i| w[i].is_negative()).collect();
    if lower.is_empty() || upper.is_empty() {
        return Err(LvmError::Polytope(PolytopeError::Unbounded));
    }
    let pick = |set: &[usize], want_max: bool| {
        let best = set
            .iter()
            .map(|&i| bound(i))
            .reduce(|a, b| if (b > a) == want_max { b } else { a })
            .expect("nonempty");
        let active: Vec<usize> = set.iter().copied().filter(|&i| bound(i) == best).collect();
        let weights: Vec<BigInt> = active.iter().map(|&i| w[i].clone()).collect();
        let order = (weights.len() == 1).then(|| weights[0].abs());
        Endpoint {
            position: best,
            active_facets: active,
            weights,
            order,
        }
    };
    let lo = pick(&lower, true);
    let hi = pick(&upper, false);
    if hi.position < lo.position {
        return Err(LvmError::Polytope(PolytopeError::Empty));
    }
    Ok(OrbifoldWeights {
        solution: w,
        epsilons: eps,
        endpoints: [lo, hi],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> Complex {
        Complex::from_ints(re, im)
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn five(l5: Complex) -> Configuration {
        Configuration::planar(vec![c(1, 0), c(0, 1), c(0, 1), c(1, 0), l5]).unwrap()
    }

    fn teardrop(p: i64) -> Configuration {
        Configuration::planar(vec![c(1, 0), c(0, 1), c(p, 0), c(-1, -1)]).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let a = check_admissible(&five(c(-2, -2)));
        assert!(a.siegel && a.weak_hyperbolic);
        assert!(!check_admissible(&Configuration::planar(vec![c(1, 0), c(2, 0), c(3, 0)]).unwrap()).siegel);
        let b = check_admissible(&Configuration::planar(vec![c(1, 0), c(-1, 0), c(0, 1)]).unwrap());
        assert!(!b.weak_hyperbolic);
    }

    #[test]
    fn solution_space_of_the_five_vector_example() {
        let basis = solution_basis(&five(c(2, -2))).unwrap();
        let ints = |v: &[i64]| v.iter().map(|&x| s(x)).collect::<Vec<_>>();
        assert_eq!(basis, vec![ints(&[1, 0, 0, -1, 0]), ints(&[0, 1, -1, 0, 0])]);
        assert!(condition_k(&five(c(2, -2))).unwrap());
        let g = gale_transform(&five(c(2, -2)), None).unwrap();
        assert_eq!(g.zero_rows(), vec![4]);
        let p = polytope_from_gale(&g).unwrap();
        assert_eq!(p.redundant_facets(), vec![4]);
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn zero_dimensional_solution_space() {
        let cfg = Configuration::planar(vec![c(1, 0), c(0, 1), c(-1, -1)]).unwrap();
        assert!(solution_basis(&cfg).unwrap().is_empty());
        let g = gale_transform(&cfg, None).unwrap();
        assert!(g.v.iter().all(Vec::is_empty));
        assert!(polytope_from_gale(&g).is_err());
    }

    #[test]
    fn irrational_perturbation() {
        let cfg = Configuration::planar(vec![
            Complex::new(Scalar::sqrt_of(2), s(0)),
            c(0, 1),
            c(0, 1),
            c(1, 0),
            c(2, -2),
        ])
        .unwrap();
        assert_eq!(solution_basis(&cfg).unwrap().len(), 2);
        assert!(!condition_k(&cfg).unwrap());
        assert_eq!(leaf_dichotomy(&cfg).unwrap(), LeafType::DenseLeaves);
        let ker = linalg::kernel(&cfg.system_rows(), 5);
        assert_eq!(linalg::rational_subspace_dim(&ker), 1);
    }

    #[test]
    fn siegel_strata_of_the_five_vector_example() {
        let fam = siegel_index_family(&five(c(-2, -2)));
        assert_eq!(fam.minimal_zero_sets, vec![vec![4], vec![0, 3], vec![1, 2]]);
        let tri = siegel_index_family(&Configuration::planar(vec![c(1, 0), c(0, 1), c(-1, -1)]).unwrap());
        assert_eq!(tri.avoiding.len(), 7);
    }

    #[test]
    fn teardrop_solution_vector() {
        for (p, l) in [(4, 1), (7, 2)] {
            let basis = solution_basis(&teardrop(p)).unwrap();
            let expected = [-2 * l - 1, l, 1, l];
            let v: Vec<Scalar> = expected.iter().map(|&x| s(x)).collect();
            let neg: Vec<Scalar> = v.iter().map(|x| -x).collect();
            assert!(basis[0] == v || basis[0] == neg);
        }
    }

    #[test]
    fn orbifold_orders() {
        let orders = |p: i64| {
            let w = orbifold_weights_1d(&teardrop(p)).unwrap();
            let mut o: Vec<BigInt> = w.endpoints.iter().map(|e| e.order.clone().unwrap()).collect();
            o.sort();
            o
        };
        assert_eq!(orders(4), vec![BigInt::from(1), BigInt::from(3)]);
        assert_eq!(orders(7), vec![BigInt::from(1), BigInt::from(5)]);
        assert_eq!(orders(5), vec![BigInt::from(3), BigInt::from(11)]);
    }

    #[test]
    fn fibers() {
        let f = generic_fiber(&five(c(-2, -2))).unwrap();
        assert!(f.rational);
        assert_eq!(f.torus_rank, 4);
        assert_eq!(f.slope, Some(s(1)));
        let irr = Configuration::planar(vec![
            Complex::new(Scalar::sqrt_of(2), s(0)),
            c(0, 1),
            c(0, 1),
            c(1, 0),
            c(-2, -2),
        ])
        .unwrap();
        let f = generic_fiber(&irr).unwrap();
        assert!(!f.rational);
        assert_eq!(f.slope, Some(Scalar::sqrt_of(2)));
    }
}
