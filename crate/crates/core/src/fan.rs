//! Simplicial cones and fans over `ℚ(√d)`.
//!
//! Rays are stored normalized: primitive integer vectors when the direction is
//! rational, otherwise scaled so the first nonzero entry is `±1`. Cones and fans
//! are kept in a canonical sorted order so equality is structural.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hj::{self, HjError};
use crate::linalg::{self, primitive_direction, IntMatrix};
use crate::polytope::{PolytopeError, SimplePolytope};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FanError {
    #[error("invalid cone input: {0}")]
    InvalidInput(String),
    #[error("cone is not simplicial of full dimension")]
    NotSimplicial,
    #[error("cone has an irrational ray")]
    NonRational,
    #[error("expected ambient dimension {expected}, found {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("fans live in different dimensions ({0} and {1})")]
    DimensionMismatch(usize, usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Field(#[from] ScalarError),
}

impl From<HjError> for FanError {
    fn from(e: HjError) -> Self {
        match e {
            HjError::Fan(f) => f,
            other => FanError::Unsupported(other.to_string()),
        }
    }
}

fn ray_cmp(a: &[Scalar], b: &[Scalar]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.structural_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Canonical representative of the ray through `v`.
pub fn normalize_ray(v: &[Scalar]) -> Option<Vec<Scalar>> {
    if let Some(p) = primitive_direction(v) {
        return Some(p.into_iter().map(Scalar::from_bigint).collect());
    }
    let lead = v.iter().find(|x| !x.is_zero())?.abs();
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|x| x * &inv).collect())
}

pub(crate) fn det2(a: &[Scalar], b: &[Scalar]) -> Scalar {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// A simplicial, hence strictly convex, cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone {
    dim: usize,
    rays: Vec<Vec<Scalar>>,
}

impl Ord for Cone {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.rays.len().cmp(&other.rays.len()))
            .then_with(|| {
                self.rays
                    .iter()
                    .zip(&other.rays)
                    .map(|(a, b)| ray_cmp(a, b))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
    }
}

impl PartialOrd for Cone {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Serialize)]
struct ConeWire<'a> {
    rays: &'a [Vec<Scalar>],
}

impl Serialize for Cone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConeWire { rays: &self.rays }.serialize(s)
    }
}

/// Input form of a cone; `dim` may be omitted when there is at least one ray.
#[derive(Clone, Debug, Deserialize)]
pub struct ConeSpec {
    #[serde(default)]
    pub dim: Option<usize>,
    pub rays: Vec<Vec<Scalar>>,
}

impl Cone {
    pub fn new(dim: usize, rays: Vec<Vec<Scalar>>) -> Result<Self, FanError> {
        for r in &rays {
            if r.len() != dim {
                return Err(FanError::WrongDimension { expected: dim, found: r.len() });
            }
        }
        Scalar::common_field(rays.iter().flatten())?;
        let mut norm = Vec::with_capacity(rays.len());
        for r in &rays {
            norm.push(normalize_ray(r).ok_or_else(|| FanError::InvalidInput("zero ray".into()))?);
        }
        norm.sort_by(|a, b| ray_cmp(a, b));
        norm.dedup();
        if linalg::rank(&norm) != norm.len() {
            return Err(FanError::NotSimplicial);
        }
        Ok(Cone { dim, rays: norm })
    }

    pub fn from_int_rays<R: AsRef<[i64]>>(rays: &[R]) -> Result<Self, FanError> {
        let dim = rays.first().map_or(0, |r| r.as_ref().len());
        let rays = rays
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        Self::new(dim, rays)
    }

    pub fn from_spec(spec: ConeSpec) -> Result<Self, FanError> {
        let dim = match (spec.dim, spec.rays.first()) {
            (Some(d), _) => d,
            (None, Some(r)) => r.len(),
            (None, None) => return Err(FanError::InvalidInput("cannot infer the dimension".into())),
        };
        Self::new(dim, spec.rays)
    }

    pub fn origin(dim: usize) -> Self {
        Cone { dim, rays: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<Scalar>] {
        &self.rays
    }

    pub fn is_rational(&self) -> bool {
        self.rays.iter().all(|r| r.iter().all(Scalar::is_rational))
    }

    pub fn integer_rays(&self) -> Option<Vec<Vec<BigInt>>> {
        self.rays
            .iter()
            .map(|r| r.iter().map(Scalar::to_integer).collect())
            .collect()
    }

    /// All faces, including the cone itself and the origin.
    pub fn faces(&self) -> Vec<Cone> {
        let k = self.rays.len();
        (0u64..1 << k)
            .map(|mask| Cone {
                dim: self.dim,
                rays: (0..k).filter(|i| mask >> i & 1 == 1).map(|i| self.rays[i].clone()).collect(),
            })
            .collect()
    }

    /// Whether `v` is a non-negative combination of the rays (exact).
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.iter().all(Scalar::is_zero) {
            return true;
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.rays.iter().map(|r| r[i].clone()).collect())
            .collect();
        let Ok(a) = linalg::ScalarMatrix::from_rows(&cols) else {
            return false;
        };
        if self.rays.is_empty() {
            return false;
        }
        match linalg::solve_exact(&a, v) {
            Ok(linalg::Solution::Unique(x)) => x.iter().all(|c| !c.is_negative()),
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "index")]
pub enum ConeClass {
    Smooth,
    Orbifold(#[serde(with = "crate::json::big_int")] BigInt),
    NonRational,
}

pub fn cone_classify(sigma: &Cone) -> Result<ConeClass, FanError> {
    if sigma.rays.len() != sigma.dim {
        return Err(FanError::NotSimplicial);
    }
    let Some(rays) = sigma.integer_rays() else {
        return Ok(ConeClass::NonRational);
    };
    let index = IntMatrix::from_big_rows(&rays, sigma.dim).det().abs();
    Ok(if index.is_one() {
        ConeClass::Smooth
    } else {
        ConeClass::Orbifold(index)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualCone2d {
    #[serde(with = "crate::json::big_int_rows")]
    pub rays: Vec<Vec<BigInt>>,
    #[serde(with = "crate::json::big_int_rows")]
    pub hilbert_basis: Vec<Vec<BigInt>>,
}

fn check_planar(sigma: &Cone) -> Result<Vec<Vec<BigInt>>, FanError> {
    if sigma.dim != 2 {
        return Err(FanError::WrongDimension { expected: 2, found: sigma.dim });
    }
    if sigma.rays.len() != 2 {
        return Err(FanError::NotSimplicial);
    }
    sigma.integer_rays().ok_or(FanError::NonRational)
}

fn big_det2(a: &[BigInt], b: &[BigInt]) -> BigInt {
    &a[0] * &b[1] - &a[1] * &b[0]
}

/// Minimal generators of `σ ∩ ℤ²`, ordered from one boundary ray to the other.
pub fn hilbert_basis_2d(sigma: &Cone) -> Result<Vec<Vec<BigInt>>, FanError> {
    check_planar(sigma)?;
    let res = hj::resolve_cone(sigma, None)?;
    let mut out = vec![res.first_ray()];
    out.extend(res.inserted_integer_rays());
    out.push(res.last_ray());
    Ok(out
        .into_iter()
        .map(|v| v.expect("rational resolution has integer rays"))
        .collect())
}

/// `σ^∨ = {w : ⟨v, w⟩ ≥ 0 for all v ∈ σ}` and the Hilbert basis of `σ^∨ ∩ ℤ²`.
pub fn dual_cone_2d(sigma: &Cone) -> Result<DualCone2d, FanError> {
    let rays = check_planar(sigma)?;
    let (a, b) = (&rays[0], &rays[1]);
    let perp = |v: &[BigInt], other: &[BigInt]| {
        let w = vec![-&v[1], v[0].clone()];
        if (&w[0] * &other[0] + &w[1] * &other[1]).is_negative() {
            w.into_iter().map(|x| -x).collect()
        } else {
            w
        }
    };
    let dual_rays = [perp(a, b), perp(b, a)];
    debug_assert!(!big_det2(&dual_rays[0], &dual_rays[1]).is_zero());
    let dual = Cone::new(
        2,
        dual_rays
            .iter()
            .map(|r| r.iter().cloned().map(Scalar::from_bigint).collect())
            .collect(),
    )?;
    let hilbert_basis = hilbert_basis_2d(&dual)?;
    Ok(DualCone2d {
        rays: dual.integer_rays().expect("rational"),
        hilbert_basis,
    })
}

/// A fan of simplicial cones, closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fan {
    dim: usize,
    cones: Vec<Cone>,
    complete: bool,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FanSpec {
    pub dim: usize,
    pub cones: Vec<ConeSpec>,
}

impl Fan {
    /// Builds the fan generated by `cones` and all their faces.
    pub fn new(dim: usize, cones: Vec<Cone>) -> Result<Self, FanError> {
        let mut all = vec![Cone::origin(dim)];
        for c in &cones {
            if c.dim != dim {
                return Err(FanError::WrongDimension { expected: dim, found: c.dim });
            }
            all.extend(c.faces());
        }
        all.sort();
        all.dedup();
        let complete = is_complete(dim, &all);
        Ok(Fan { dim, cones: all, complete })
    }

    pub fn from_spec(spec: FanSpec) -> Result<Self, FanError> {
        let dim = spec.dim;
        let cones = spec
            .cones
            .into_iter()
            .map(|c| Cone::new(c.dim.unwrap_or(dim), c.rays))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(dim, cones)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn rays(&self) -> Vec<Vec<Scalar>> {
        self.cones
            .iter()
            .filter(|c| c.rays.len() == 1)
            .map(|c| c.rays[0].clone())
            .collect()
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|d| d.rays.len() > c.rays.len() && c.rays.iter().all(|r| d.rays.contains(r)))
            })
            .collect()
    }

    pub fn cones_of_dim(&self, k: usize) -> Vec<&Cone> {
        self.cones.iter().filter(|c| c.rays.len() == k).collect()
    }

    pub fn contains_cone(&self, c: &Cone) -> bool {
        self.cones.binary_search(c).is_ok()
    }
}

/// Angular position in `[0, 2π)` as (half-plane, representative) for sorting.
fn angle_cmp(a: &[Scalar], b: &[Scalar]) -> Ordering {
    let half = |v: &[Scalar]| {
        if v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| match det2(a, b).signum() {
        Ordering::Greater => Ordering::Less,
        Ordering::Less => Ordering::Greater,
        Ordering::Equal => Ordering::Equal,
    })
}

fn is_complete(dim: usize, cones: &[Cone]) -> bool {
    let rays: Vec<&Vec<Scalar>> = cones.iter().filter(|c| c.rays.len() == 1).map(|c| &c.rays[0]).collect();
    match dim {
        0 => true,
        1 => rays.len() == 2,
        2 => {
            if rays.len() < 3 {
                return false;
            }
            let mut sorted = rays.clone();
            sorted.sort_by(|a, b| angle_cmp(a, b));
            (0..sorted.len()).all(|i| {
                let a = sorted[i];
                let b = sorted[(i + 1) % sorted.len()];
                det2(a, b).is_positive()
                    && Cone::new(2, vec![a.clone(), b.clone()])
                        .map(|c| cones.binary_search(&c).is_ok())
                        .unwrap_or(false)
            })
        }
        _ => {
            let top: Vec<&Cone> = cones.iter().filter(|c| c.rays.len() == dim).collect();
            if top.is_empty() {
                return false;
            }
            cones.iter().filter(|c| c.rays.len() == dim - 1).all(|f| {
                top.iter().filter(|t| f.rays.iter().all(|r| t.rays.contains(r))).count() == 2
            })
        }
    }
}

/// Fan over the faces of `P`, built from outer normals `−ρᵢ`.
pub fn normal_fan(p: &SimplePolytope) -> Result<Fan, FanError> {
    let outer: Vec<Vec<Scalar>> = p
        .facets()
        .iter()
        .map(|f| f.normal.iter().map(|x| -x).collect())
        .collect();
    let cones = p
        .family()
        .iter()
        .map(|set| Cone::new(p.dim(), set.iter().map(|&i| outer[i].clone()).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Fan::new(p.dim(), cones)
}

fn ray_in_planar_cone(v: &[Scalar], c: &Cone) -> bool {
    match c.rays.len() {
        0 => v.iter().all(Scalar::is_zero),
        1 => normalize_ray(v).as_ref() == Some(&c.rays[0]),
        _ => c.contains(v),
    }
}

/// Whether every cone of `coarse` is the union of the cones of `fine` inside it,
/// and every cone of `fine` lies in some cone of `coarse`. Exact in dimensions 1 and 2.
pub fn is_refinement(fine: &Fan, coarse: &Fan) -> Result<bool, FanError> {
    if fine.dim != coarse.dim {
        return Err(FanError::DimensionMismatch(fine.dim, coarse.dim));
    }
    match fine.dim {
        1 => Ok(coarse.cones.iter().all(|c| fine.contains_cone(c))
            && fine.cones.iter().all(|c| coarse.contains_cone(c))),
        2 => {
            let inside_some = fine
                .cones
                .iter()
                .all(|c| coarse.cones.iter().any(|d| c.rays.iter().all(|r| ray_in_planar_cone(r, d))));
            if !inside_some {
                return Ok(false);
            }
            let fine_rays = fine.rays();
            for c in &coarse.cones {
                match c.rays.len() {
                    0 => {}
                    1 => {
                        if !fine.contains_cone(c) {
                            return Ok(false);
                        }
                    }
                    _ => {
                        let (a, b) = (&c.rays[0], &c.rays[1]);
                        let orient = det2(a, b).signum();
                        let mut chain: Vec<&Vec<Scalar>> =
                            fine_rays.iter().filter(|r| c.contains(r)).collect();
                        chain.sort_by(|x, y| {
                            let s = det2(x, y).signum();
                            if s == Ordering::Equal {
                                Ordering::Equal
                            } else if s == orient {
                                Ordering::Less
                            } else {
                                Ordering::Greater
                            }
                        });
                        if chain.first() != Some(&a) || chain.last() != Some(&b) {
                            return Ok(false);
                        }
                        for w in chain.windows(2) {
                            let piece = Cone::new(2, vec![w[0].clone(), w[1].clone()])?;
                            if !fine.contains_cone(&piece) {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
            Ok(true)
        }
        d => Err(FanError::Unsupported(format!("refinement test in dimension {d}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn quadrant_fan() -> Fan {
        normal_fan(&SimplePolytope::unit_square()).unwrap()
    }

    #[test]
    fn square_fan_has_nine_cones() {
        let fan = quadrant_fan();
        assert_eq!(fan.cones().len(), 9);
        assert_eq!(fan.cones_of_dim(1).len(), 4);
        assert_eq!(fan.cones_of_dim(2).len(), 4);
        assert!(fan.is_complete());
        let q = Cone::from_int_rays(&[[1, 0], [0, 1]]).unwrap();
        assert!(fan.contains_cone(&q));
    }

    #[test]
    fn rectangle_has_the_same_fan() {
        let rect = SimplePolytope::boxed(&[(s(0), s(3)), (s(0), s(1))]).unwrap();
        assert_eq!(normal_fan(&rect).unwrap(), quadrant_fan());
    }

    #[test]
    fn interval_fan() {
        let fan = normal_fan(&SimplePolytope::cube(1, s(0), s(1)).unwrap()).unwrap();
        assert_eq!(fan.cones().len(), 3);
        assert!(fan.is_complete());
    }

    #[test]
    fn cube_fan_is_complete() {
        let fan = normal_fan(&SimplePolytope::cube(3, s(0), s(1)).unwrap()).unwrap();
        assert_eq!(fan.cones().len(), 27);
        assert!(fan.is_complete());
        let partial = Fan::new(3, vec![Cone::from_int_rays(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap()]).unwrap();
        assert!(!partial.is_complete());
    }

    #[test]
    fn classification() {
        assert_eq!(cone_classify(&Cone::from_int_rays(&[[1, 0], [0, 1]]).unwrap()), Ok(ConeClass::Smooth));
        assert_eq!(
            cone_classify(&Cone::from_int_rays(&[[0, 1], [2, -1]]).unwrap()),
            Ok(ConeClass::Orbifold(BigInt::from(2)))
        );
        let irr = Cone::new(2, vec![vec![s(1), s(0)], vec![s(1), Scalar::sqrt_of(2)]]).unwrap();
        assert_eq!(cone_classify(&irr), Ok(ConeClass::NonRational));
        let ray = Cone::from_int_rays(&[[1, 0]]).unwrap();
        assert_eq!(cone_classify(&ray), Err(FanError::NotSimplicial));
    }

    /// Lattice points of `cone` in a box that are not sums of two nonzero lattice points of the cone.
    fn brute_hilbert(rays: &[Vec<BigInt>], bound: i64) -> Vec<Vec<BigInt>> {
        let cone = Cone::new(
            2,
            rays.iter().map(|r| r.iter().cloned().map(Scalar::from_bigint).collect()).collect(),
        )
        .unwrap();
        let mut pts = Vec::new();
        for x in -bound..=bound {
            for y in -bound..=bound {
                if (x, y) != (0, 0) && cone.contains(&[s(x), s(y)]) {
                    pts.push((x, y));
                }
            }
        }
        let mut out: Vec<Vec<BigInt>> = pts
            .iter()
            .filter(|&&(x, y)| !pts.iter().any(|&(a, b)| pts.contains(&(x - a, y - b))))
            .map(|&(x, y)| vec![BigInt::from(x), BigInt::from(y)])
            .collect();
        out.sort();
        out
    }

    #[test]
    fn dual_cones_and_hilbert_bases() {
        let d = dual_cone_2d(&Cone::from_int_rays(&[[1, 0], [0, 1]]).unwrap()).unwrap();
        let mut hb = d.hilbert_basis.clone();
        hb.sort();
        assert_eq!(hb, vec![vec![BigInt::from(0), BigInt::from(1)], vec![BigInt::from(1), BigInt::from(0)]]);

        let d = dual_cone_2d(&Cone::from_int_rays(&[[1, 0], [1, 2]]).unwrap()).unwrap();
        let mut hb = d.hilbert_basis.clone();
        hb.sort();
        assert_eq!(hb, brute_hilbert(&d.rays, 6));
        assert_eq!(hb.len(), 3);

        let sigma = Cone::from_int_rays(&[[1, 0], [1, 3]]).unwrap();
        let d = dual_cone_2d(&sigma).unwrap();
        assert_eq!(d.hilbert_basis.len(), 3);
        assert_eq!(hilbert_basis_2d(&sigma).unwrap().len(), 4);
    }

    #[test]
    fn dual_rays_pair_non_negatively() {
        let sigma = Cone::from_int_rays(&[[2, 1], [-1, 3]]).unwrap();
        let d = dual_cone_2d(&sigma).unwrap();
        for v in sigma.integer_rays().unwrap() {
            for w in &d.rays {
                assert!(!(&v[0] * &w[0] + &v[1] * &w[1]).is_negative());
            }
        }
        let mut hb = d.hilbert_basis.clone();
        hb.sort();
        assert_eq!(hb, brute_hilbert(&d.rays, 12));
    }

    #[test]
    fn refinement_checks() {
        let square = quadrant_fan();
        assert_eq!(is_refinement(&square, &square), Ok(true));
        let diag = |v: &[[i64; 2]]| Cone::from_int_rays(v).unwrap();
        let coarse = Fan::new(
            2,
            vec![
                diag(&[[1, 1], [-1, 1]]),
                diag(&[[-1, 1], [-1, -1]]),
                diag(&[[-1, -1], [1, -1]]),
                diag(&[[1, -1], [1, 1]]),
            ],
        )
        .unwrap();
        assert!(coarse.is_complete());
        let eight = Fan::new(
            2,
            vec![
                diag(&[[1, 0], [1, 1]]),
                diag(&[[1, 1], [0, 1]]),
                diag(&[[0, 1], [-1, 1]]),
                diag(&[[-1, 1], [-1, 0]]),
                diag(&[[-1, 0], [-1, -1]]),
                diag(&[[-1, -1], [0, -1]]),
                diag(&[[0, -1], [1, -1]]),
                diag(&[[1, -1], [1, 0]]),
            ],
        )
        .unwrap();
        assert_eq!(is_refinement(&eight, &coarse), Ok(true));
        assert_eq!(is_refinement(&eight, &square), Ok(true));
        assert_eq!(is_refinement(&square, &coarse), Ok(false));
        assert_eq!(is_refinement(&coarse, &square), Ok(false));
    }
}
