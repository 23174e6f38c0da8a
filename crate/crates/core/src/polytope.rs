//! Simple convex polytopes given by halfspaces `⟨x, normal⟩ ≥ offset`.
//!
//! Normals point into the polytope. Construction enumerates vertices over all
//! `n`-subsets of facet equalities, flags redundant rows, checks simplicity and
//! builds the incidence family `F`. Facet indices are 0-based throughout.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, primitive_direction, IntMatrix};
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("invalid polytope input: {0}")]
    InvalidInput(String),
    #[error("the halfspaces do not cut out a bounded region")]
    Unbounded,
    #[error("the halfspaces have empty intersection")]
    Empty,
    #[error("the polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("vertex {0} lies on more facets than the dimension")]
    NotSimple(String),
    #[error("facet {0} has an irrational normal direction")]
    IrrationalNormals(usize),
    #[error(transparent)]
    Field(#[from] ScalarError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<Scalar>,
    pub offset: Scalar,
}

impl Facet {
    pub fn new(normal: Vec<Scalar>, offset: Scalar) -> Self {
        Facet { normal, offset }
    }

    fn slack(&self, x: &[Scalar]) -> Scalar {
        linalg::dot(&self.normal, x) - &self.offset
    }
}

/// Wire format of a polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeSpec {
    pub dim: usize,
    pub facets: Vec<Facet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DelzantClass {
    Irrational,
    RationalDelzant,
    IntegralDelzant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub point: Vec<Scalar>,
    /// Sorted indices of the non-redundant facets through this vertex.
    pub facets: Vec<usize>,
    /// `edges[j]` leaves `facets[j]` and stays on the others.
    pub edges: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolytopeSpec", into = "PolytopeSpec")]
pub struct SimplePolytope {
    dim: usize,
    facets: Vec<Facet>,
    redundant: Vec<bool>,
    vertices: Vec<Vertex>,
    family: BTreeSet<Vec<usize>>,
}

impl TryFrom<PolytopeSpec> for SimplePolytope {
    type Error = PolytopeError;
    fn try_from(spec: PolytopeSpec) -> Result<Self, Self::Error> {
        SimplePolytope::new(spec.dim, spec.facets)
    }
}

impl From<SimplePolytope> for PolytopeSpec {
    fn from(p: SimplePolytope) -> Self {
        PolytopeSpec { dim: p.dim, facets: p.facets }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k)
}

/// Dimension of the affine hull of `points`.
pub(crate) fn affine_dim(points: &[Vec<Scalar>]) -> Option<usize> {
    let first = points.first()?;
    let diffs: Vec<Vec<Scalar>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Some(if diffs.is_empty() { 0 } else { linalg::rank(&diffs) })
}

fn is_positive_multiple(a: &Facet, b: &Facet) -> bool {
    // a = c·b for some c > 0, normal and offset together
    let Some(k) = b.normal.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let c = &a.normal[k] / &b.normal[k];
    c.is_positive()
        && a.normal.iter().zip(&b.normal).all(|(x, y)| *x == &c * y)
        && a.offset == &c * &b.offset
}

impl SimplePolytope {
    pub fn new(dim: usize, facets: Vec<Facet>) -> Result<Self, PolytopeError> {
        if dim == 0 {
            return Err(PolytopeError::InvalidInput("dimension must be positive".into()));
        }
        if facets.is_empty() {
            return Err(PolytopeError::Unbounded);
        }
        for (i, f) in facets.iter().enumerate() {
            if f.normal.len() != dim {
                return Err(PolytopeError::InvalidInput(format!(
                    "facet {i} has a normal of length {} in dimension {dim}",
                    f.normal.len()
                )));
            }
        }
        Scalar::common_field(facets.iter().flat_map(|f| f.normal.iter().chain(std::iter::once(&f.offset))))?;

        let zero_normal: Vec<bool> = facets.iter().map(|f| f.normal.iter().all(Scalar::is_zero)).collect();
        for (f, &z) in facets.iter().zip(&zero_normal) {
            if z && f.offset.is_positive() {
                return Err(PolytopeError::Empty);
            }
        }
        let live: Vec<usize> = (0..facets.len()).filter(|&i| !zero_normal[i]).collect();
        let normals: Vec<Vec<Scalar>> = live.iter().map(|&i| facets[i].normal.clone()).collect();
        if linalg::rank(&normals) < dim {
            return Err(PolytopeError::Unbounded);
        }

        let mut points: Vec<Vec<Scalar>> = Vec::new();
        for sub in subsets(live.len(), dim) {
            let rows: Vec<Vec<Scalar>> = sub.iter().map(|&k| normals[k].clone()).collect();
            let Some(inv) = linalg::inverse(&rows) else { continue };
            let rhs: Vec<Scalar> = sub.iter().map(|&k| facets[live[k]].offset.clone()).collect();
            let x: Vec<Scalar> = inv.iter().map(|r| linalg::dot(r, &rhs)).collect();
            if facets.iter().all(|f| !f.slack(&x).is_negative()) && !points.contains(&x) {
                points.push(x);
            }
        }
        if points.is_empty() {
            return Err(PolytopeError::Empty);
        }
        // recession cone: extreme rays come from rank-(n-1) subsets of normals
        for sub in subsets(live.len(), dim - 1) {
            let rows: Vec<Vec<Scalar>> = sub.iter().map(|&k| normals[k].clone()).collect();
            let ker = linalg::kernel(&rows, dim);
            if ker.len() != 1 {
                continue;
            }
            let d = &ker[0];
            let neg: Vec<Scalar> = d.iter().map(|x| -x).collect();
            for dir in [d, &neg] {
                if normals.iter().all(|nrm| !linalg::dot(nrm, dir).is_negative()) {
                    return Err(PolytopeError::Unbounded);
                }
            }
        }
        if affine_dim(&points) != Some(dim) {
            return Err(PolytopeError::NotFullDimensional);
        }

        let mut redundant = zero_normal.clone();
        for &i in &live {
            let on: Vec<Vec<Scalar>> = points.iter().filter(|p| facets[i].slack(p).is_zero()).cloned().collect();
            if on.is_empty() || affine_dim(&on).is_some_and(|k| k + 1 < dim) {
                redundant[i] = true;
            }
        }
        for &i in &live {
            if (0..i).any(|j| !redundant[j] && is_positive_multiple(&facets[i], &facets[j])) {
                redundant[i] = true;
            }
        }

        let mut vertices = Vec::with_capacity(points.len());
        for p in points {
            let tight: Vec<usize> = (0..facets.len())
                .filter(|&i| !redundant[i] && facets[i].slack(&p).is_zero())
                .collect();
            if tight.len() != dim {
                return Err(PolytopeError::NotSimple(fmt_point(&p)));
            }
            let m: Vec<Vec<Scalar>> = tight.iter().map(|&i| facets[i].normal.clone()).collect();
            let inv = linalg::inverse(&m).ok_or_else(|| PolytopeError::NotSimple(fmt_point(&p)))?;
            let edges = (0..dim).map(|j| inv.iter().map(|r| r[j].clone()).collect()).collect();
            vertices.push(Vertex { point: p, facets: tight, edges });
        }
        vertices.sort_by(|a, b| a.facets.cmp(&b.facets));

        let mut family = BTreeSet::new();
        for v in &vertices {
            for k in 0..=dim {
                for sub in subsets(dim, k) {
                    family.insert(sub.iter().map(|&j| v.facets[j]).collect::<Vec<_>>());
                }
            }
        }
        Ok(SimplePolytope {
            dim,
            facets,
            redundant,
            vertices,
            family,
        })
    }

    pub fn from_spec(spec: PolytopeSpec) -> Result<Self, PolytopeError> {
        Self::new(spec.dim, spec.facets)
    }

    /// Polygon from its vertices listed counterclockwise.
    pub fn from_polygon_vertices(vertices: &[[Scalar; 2]]) -> Result<Self, PolytopeError> {
        let k = vertices.len();
        if k < 3 {
            return Err(PolytopeError::InvalidInput("a polygon needs at least 3 vertices".into()));
        }
        let facets = (0..k)
            .map(|i| {
                let [px, py] = &vertices[i];
                let [qx, qy] = &vertices[(i + 1) % k];
                let normal = vec![-(qy - py), qx - px];
                let offset = &normal[0] * px + &normal[1] * py;
                Facet::new(normal, offset)
            })
            .collect();
        Self::new(2, facets)
    }

    /// The box `∏ [lo, hi]` in dimension `dim`, facets ordered `x₁ ≥ lo, −x₁ ≥ −hi, x₂ ≥ lo, …`.
    pub fn cube(dim: usize, lo: Scalar, hi: Scalar) -> Result<Self, PolytopeError> {
        Self::boxed(&vec![(lo, hi); dim])
    }

    pub fn boxed(bounds: &[(Scalar, Scalar)]) -> Result<Self, PolytopeError> {
        let dim = bounds.len();
        let mut facets = Vec::with_capacity(2 * dim);
        for (k, (lo, hi)) in bounds.iter().enumerate() {
            let mut e = vec![Scalar::zero(); dim];
            e[k] = Scalar::one();
            let neg: Vec<Scalar> = e.iter().map(|x| -x).collect();
            facets.push(Facet::new(e, lo.clone()));
            facets.push(Facet::new(neg, -hi));
        }
        Self::new(dim, facets)
    }

    pub fn unit_square() -> Self {
        Self::cube(2, Scalar::zero(), Scalar::one()).expect("unit square")
    }

    /// `{x ≥ 0, Σx ≤ 1}` with the coordinate facets first.
    pub fn standard_simplex(dim: usize) -> Result<Self, PolytopeError> {
        let mut facets = Vec::with_capacity(dim + 1);
        for k in 0..dim {
            let mut e = vec![Scalar::zero(); dim];
            e[k] = Scalar::one();
            facets.push(Facet::new(e, Scalar::zero()));
        }
        facets.push(Facet::new(vec![-Scalar::one(); dim], -Scalar::one()));
        Self::new(dim, facets)
    }

    /// An affinely regular pentagon with vertices in `ℚ(√5)`.
    pub fn regular_pentagon() -> Self {
        let s5 = Scalar::sqrt_of(5);
        let c1 = (&s5 - &Scalar::one()) / Scalar::from_int(4);
        let c2 = -(&s5 + &Scalar::one()) / Scalar::from_int(4);
        let h = (&s5 - &Scalar::one()) / Scalar::from_int(2);
        let verts = [
            [Scalar::one(), Scalar::zero()],
            [c1.clone(), Scalar::one()],
            [c2.clone(), h.clone()],
            [c2, -&h],
            [c1, -Scalar::one()],
        ];
        Self::from_polygon_vertices(&verts).expect("regular pentagon")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_redundant(&self, i: usize) -> bool {
        self.redundant[i]
    }

    pub fn redundant_facets(&self) -> Vec<usize> {
        (0..self.facets.len()).filter(|&i| self.redundant[i]).collect()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_points(&self) -> Vec<Vec<Scalar>> {
        self.vertices.iter().map(|v| v.point.clone()).collect()
    }

    /// The family `F` of index sets of facets with nonempty common intersection.
    pub fn family(&self) -> &BTreeSet<Vec<usize>> {
        &self.family
    }

    pub fn vertices_and_incidence(&self) -> (Vec<Vec<Scalar>>, BTreeSet<Vec<usize>>) {
        (self.vertex_points(), self.family.clone())
    }

    pub fn field(&self) -> u64 {
        Scalar::common_field(self.facets.iter().flat_map(|f| f.normal.iter().chain(std::iter::once(&f.offset))))
            .unwrap_or(0)
    }

    pub fn translate(&self, t: &[Scalar]) -> Result<Self, PolytopeError> {
        if t.len() != self.dim {
            return Err(PolytopeError::InvalidInput("translation has the wrong length".into()));
        }
        Scalar::common_field(t.iter().chain(self.facets.iter().flat_map(|f| f.normal.iter())))?;
        let facets = self
            .facets
            .iter()
            .map(|f| Facet::new(f.normal.clone(), &f.offset + &linalg::dot(&f.normal, t)))
            .collect();
        Self::new(self.dim, facets)
    }

    pub fn dilate(&self, c: &Scalar) -> Result<Self, PolytopeError> {
        if !c.is_positive() {
            return Err(PolytopeError::InvalidInput("dilation factor must be positive".into()));
        }
        Scalar::common_field(std::iter::once(c).chain(self.facets.iter().map(|f| &f.offset)))?;
        let facets = self.facets.iter().map(|f| Facet::new(f.normal.clone(), &f.offset * c)).collect();
        Self::new(self.dim, facets)
    }

    /// Primitive integer edge vectors at each vertex, or `None` if some edge is irrational.
    pub fn integer_edges(&self) -> Option<Vec<Vec<Vec<BigInt>>>> {
        self.vertices
            .iter()
            .map(|v| v.edges.iter().map(|e| primitive_direction(e)).collect())
            .collect()
    }

    pub fn classify_delzant(&self) -> DelzantClass {
        let Some(edges) = self.integer_edges() else {
            return DelzantClass::Irrational;
        };
        let integral = edges.iter().all(|es| {
            let m = IntMatrix::from_big_rows(es, self.dim);
            m.det().abs().is_one()
        });
        if integral {
            DelzantClass::IntegralDelzant
        } else {
            DelzantClass::RationalDelzant
        }
    }

    /// `|det|` of the primitive edge vectors at each vertex (rational polytopes only).
    pub fn vertex_indices(&self) -> Option<Vec<BigInt>> {
        let edges = self.integer_edges()?;
        Some(
            edges
                .iter()
                .map(|es| IntMatrix::from_big_rows(es, self.dim).det().abs())
                .collect(),
        )
    }

    /// Primitive inward normals `ρ` and offsets `λ_P` with `P = {x : ⟨x, ρᵢ⟩ ≥ λᵢ}`.
    pub fn normal_data(&self) -> Result<(IntMatrix, Vec<Scalar>), PolytopeError> {
        let mut rows = Vec::with_capacity(self.facets.len());
        let mut lambda = Vec::with_capacity(self.facets.len());
        for (i, f) in self.facets.iter().enumerate() {
            if f.normal.iter().all(Scalar::is_zero) {
                rows.push(vec![BigInt::from(0); self.dim]);
                lambda.push(f.offset.clone());
                continue;
            }
            let rho = primitive_direction(&f.normal).ok_or(PolytopeError::IrrationalNormals(i))?;
            let k = rho.iter().position(|x| !x.is_zero()).expect("nonzero normal");
            let scale = &f.normal[k] / &Scalar::from_bigint(rho[k].clone());
            lambda.push(&f.offset / &scale);
            rows.push(rho);
        }
        Ok((IntMatrix::from_big_rows(&rows, self.dim), lambda))
    }

    /// `(f₋₁, f₀, …, f_{d−1})` of the dual simplicial polytope.
    pub fn face_counts(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.dim + 1];
        for s in &self.family {
            f[s.len()] += 1;
        }
        f
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.facets.iter().all(|f| !f.slack(x).is_negative())
    }

    /// Vertices of a polygon in counterclockwise order.
    pub fn polygon_cycle(&self) -> Option<Vec<Vec<Scalar>>> {
        if self.dim != 2 {
            return None;
        }
        let n = self.vertices.len();
        let mut order = vec![0usize];
        let mut prev: Option<usize> = None;
        while order.len() < n {
            let cur = *order.last().expect("nonempty");
            let next = (0..n).find(|&j| {
                Some(j) != prev
                    && j != cur
                    && self.vertices[j].facets.iter().any(|f| self.vertices[cur].facets.contains(f))
                    && !order.contains(&j)
            })?;
            prev = Some(cur);
            order.push(next);
        }
        let pts: Vec<Vec<Scalar>> = order.iter().map(|&i| self.vertices[i].point.clone()).collect();
        // orientation from the first three points
        let cross = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| {
            (&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])
        };
        if n >= 3 && cross(&pts[0], &pts[1], &pts[2]).is_negative() {
            let mut r = pts;
            r[1..].reverse();
            return Some(r);
        }
        Some(pts)
    }
}

fn fmt_point(p: &[Scalar]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
