//! Hochschild and truncated periodic cyclic homology of finite-dimensional
//! unital associative algebras over `ℚ`, given by structure constants.
//!
//! Chains of degree `k` are combinations of basis tensors `e_{i₀}⊗…⊗e_{i_k}`
//! (tensor length minus one). In the reduced complex the factors in positions
//! `1..=k` are taken modulo the unit: a pivot basis index `p` with nonzero unit
//! coefficient is eliminated through `e_p ≡ −Σ_{j≠p} (u_j/u_p) e_j`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::json::Rat;
use crate::linalg::sparse_rank;

/// Largest chain space the rank computations will build.
pub const MAX_CHAIN_DIM: usize = 200_000;
/// Largest degree accepted by [`hh_ranks`].
pub const MAX_DEGREE: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochschildError {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("product is not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit law fails on basis element {0}")]
    UnitLaw(usize),
    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),
    #[error("the boundary is not defined in degree 0")]
    DegreeZero,
    #[error("chain space in degree {degree} has dimension {dim}")]
    ComplexTooLarge { degree: usize, dim: u128 },
    #[error("truncation order must be at least 1")]
    InvalidTruncation,
    #[error("chain degree or mode mismatch")]
    ChainMismatch,
}

type Sparse = Vec<(usize, BigRational)>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    labels: Vec<String>,
    unit: Vec<BigRational>,
    c: Vec<Vec<Vec<BigRational>>>,
    table: Vec<Vec<Sparse>>,
    pivot: usize,
    /// `e_pivot` modulo the unit, in the remaining basis.
    pivot_rep: Sparse,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub dim: usize,
    #[serde(default)]
    pub labels: Vec<String>,
    pub unit: Vec<Rat>,
    pub c: Vec<Vec<Vec<Rat>>>,
}

impl TryFrom<AlgebraSpec> for FinDimAlgebra {
    type Error = HochschildError;
    fn try_from(s: AlgebraSpec) -> Result<Self, HochschildError> {
        if s.unit.len() != s.dim || s.c.len() != s.dim {
            return Err(HochschildError::InvalidAlgebra(format!("expected {} basis elements", s.dim)));
        }
        let labels = if s.labels.is_empty() {
            (0..s.dim).map(|i| format!("e{i}")).collect()
        } else {
            s.labels
        };
        let c = s
            .c
            .into_iter()
            .map(|m| m.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect())
            .collect();
        FinDimAlgebra::new(labels, s.unit.into_iter().map(|x| x.0).collect(), c)
    }
}

impl From<&FinDimAlgebra> for AlgebraSpec {
    fn from(a: &FinDimAlgebra) -> Self {
        AlgebraSpec {
            dim: a.dim(),
            labels: a.labels.clone(),
            unit: a.unit.iter().cloned().map(Rat).collect(),
            c: a.c
                .iter()
                .map(|m| m.iter().map(|r| r.iter().cloned().map(Rat).collect()).collect())
                .collect(),
        }
    }
}

impl Serialize for FinDimAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgebraSpec::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinDimAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        AlgebraSpec::deserialize(d)?
            .try_into()
            .map_err(serde::de::Error::custom)
    }
}

impl FinDimAlgebra {
    /// `c[i][j][k]` is the coefficient of `e_k` in `e_i·e_j`.
    pub fn new(
        labels: Vec<String>,
        unit: Vec<BigRational>,
        c: Vec<Vec<Vec<BigRational>>>,
    ) -> Result<Self, HochschildError> {
        let d = unit.len();
        if d == 0 {
            return Err(HochschildError::InvalidAlgebra("dimension must be positive".into()));
        }
        if labels.len() != d {
            return Err(HochschildError::InvalidAlgebra(format!("expected {d} labels, got {}", labels.len())));
        }
        if c.len() != d || c.iter().any(|m| m.len() != d || m.iter().any(|r| r.len() != d)) {
            return Err(HochschildError::InvalidAlgebra(format!("structure constants must be {d}×{d}×{d}")));
        }
        let table: Vec<Vec<Sparse>> = c
            .iter()
            .map(|m| {
                m.iter()
                    .map(|r| r.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect())
                    .collect()
            })
            .collect();
        let pivot = unit
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| HochschildError::InvalidAlgebra("unit is zero".into()))?;
        let pivot_rep = (0..d)
            .filter(|&j| j != pivot && !unit[j].is_zero())
            .map(|j| (j, -&unit[j] / &unit[pivot]))
            .collect();
        let alg = FinDimAlgebra {
            labels,
            unit,
            c,
            table,
            pivot,
            pivot_rep,
        };
        alg.validate()?;
        Ok(alg)
    }

    fn validate(&self) -> Result<(), HochschildError> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_basis(i, j);
                for k in 0..d {
                    let left = self.mul_vec_basis(&ij, k);
                    let jk = self.mul_basis(j, k);
                    let right = self.mul_basis_vec(i, &jk);
                    if left != right {
                        return Err(HochschildError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        let unit: Sparse = self.unit.iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
        for i in 0..d {
            let e: BTreeMap<usize, BigRational> = [(i, BigRational::one())].into();
            if self.mul_vec_basis(&unit, i) != e || self.mul_basis_vec(i, &unit) != e {
                return Err(HochschildError::UnitLaw(i));
            }
        }
        Ok(())
    }

    fn mul_basis(&self, i: usize, j: usize) -> Sparse {
        self.table[i][j].clone()
    }

    fn mul_vec_basis(&self, x: &Sparse, k: usize) -> BTreeMap<usize, BigRational> {
        let mut out = BTreeMap::new();
        for (a, xa) in x {
            for (b, cb) in &self.table[*a][k] {
                add_to(&mut out, *b, xa * cb);
            }
        }
        out
    }

    fn mul_basis_vec(&self, i: usize, x: &Sparse) -> BTreeMap<usize, BigRational> {
        let mut out = BTreeMap::new();
        for (a, xa) in x {
            for (b, cb) in &self.table[i][*a] {
                add_to(&mut out, *b, xa * cb);
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[BigRational] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<BigRational>>] {
        &self.c
    }

    /// Product of two coefficient vectors.
    pub fn multiply(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let d = self.dim();
        let mut out = vec![BigRational::zero(); d];
        for i in (0..d).filter(|&i| !x[i].is_zero()) {
            for j in (0..d).filter(|&j| !y[j].is_zero()) {
                for (k, c) in &self.table[i][j] {
                    out[*k] += &x[i] * &y[j] * c;
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.c[i][j] == self.c[j][i]))
    }

    /// Same algebra in the basis `f_a = Σ_b p[a][b] e_b`; `p` must be invertible.
    pub fn change_basis(&self, p: &[Vec<BigRational>]) -> Result<Self, HochschildError> {
        let d = self.dim();
        if p.len() != d || p.iter().any(|r| r.len() != d) {
            return Err(HochschildError::InvalidAlgebra(format!("basis change must be {d}×{d}")));
        }
        let inv = rational_inverse(p).ok_or_else(|| HochschildError::InvalidAlgebra("singular basis change".into()))?;
        let to_new = |v: &[BigRational]| -> Vec<BigRational> {
            (0..d).map(|l| (0..d).map(|k| &v[k] * &inv[k][l]).sum()).collect()
        };
        let c = (0..d)
            .map(|a| (0..d).map(|b| to_new(&self.multiply(&p[a], &p[b]))).collect())
            .collect();
        let labels = (0..d).map(|i| format!("f{i}")).collect();
        FinDimAlgebra::new(labels, to_new(&self.unit), c)
    }

    pub fn ground_field() -> Self {
        FinDimAlgebra::new(vec!["1".into()], vec![q(1)], vec![vec![vec![q(1)]]]).expect("valid")
    }

    /// `ℚ × … × ℚ` with orthogonal idempotents.
    pub fn product_of_fields(k: usize) -> Self {
        let c = (0..k)
            .map(|i| (0..k).map(|j| (0..k).map(|l| q((i == j && j == l) as i64)).collect()).collect())
            .collect();
        FinDimAlgebra::new((0..k).map(|i| format!("p{i}")).collect(), vec![q(1); k], c).expect("valid")
    }

    /// Group algebra of `ℤ/n` with basis `g⁰, …, g^{n−1}`.
    pub fn cyclic_group_algebra(n: usize) -> Self {
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|l| q(((i + j) % n == l) as i64)).collect()).collect())
            .collect();
        let mut unit = vec![q(0); n];
        unit[0] = q(1);
        FinDimAlgebra::new((0..n).map(|i| format!("g{i}")).collect(), unit, c).expect("valid")
    }

    /// `ℚ[x]/(xⁿ)` with basis `1, x, …, x^{n−1}`.
    pub fn truncated_polynomial(n: usize) -> Self {
        let c = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|l| q((i + j == l) as i64)).collect()).collect())
            .collect();
        let mut unit = vec![q(0); n];
        unit[0] = q(1);
        FinDimAlgebra::new((0..n).map(|i| format!("x{i}")).collect(), unit, c).expect("valid")
    }

    /// `n×n` matrices with matrix units `E_{ij}` ordered row by row.
    pub fn matrix_algebra(n: usize) -> Self {
        let d = n * n;
        let c = (0..d)
            .map(|a| {
                (0..d)
                    .map(|b| {
                        let (i, j, k, l) = (a / n, a % n, b / n, b % n);
                        (0..d).map(|t| q((j == k && t == i * n + l) as i64)).collect()
                    })
                    .collect()
            })
            .collect();
        let unit = (0..d).map(|a| q((a / n == a % n) as i64)).collect();
        let labels = (0..d).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
        FinDimAlgebra::new(labels, unit, c).expect("valid")
    }

    /// Upper triangular `2×2` matrices, basis `E11, E12, E22`.
    pub fn upper_triangular_2() -> Self {
        let mut c = vec![vec![vec![q(0); 3]; 3]; 3];
        c[0][0][0] = q(1);
        c[0][1][1] = q(1);
        c[1][2][1] = q(1);
        c[2][2][2] = q(1);
        FinDimAlgebra::new(vec!["E11".into(), "E12".into(), "E22".into()], vec![q(1), q(0), q(1)], c).expect("valid")
    }
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, BigRational>, k: K, v: BigRational) {
    if v.is_zero() {
        return;
    }
    let entry = map.entry(k);
    match entry {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(v);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn rational_inverse(p: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = p.len();
    let mut a: Vec<Vec<BigRational>> = p
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| q((i == j) as i64)));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let prow = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// A finite groupoid given by arrow tables. `compose[b][g]` is `b∘g`, defined
/// exactly when `source[b] == target[g]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroupoid {
    pub objects: usize,
    pub labels: Vec<String>,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub compose: Vec<Vec<Option<usize>>>,
    pub inverse: Vec<usize>,
}

impl FiniteGroupoid {
    pub fn validate(&self) -> Result<(), HochschildError> {
        let bad = |m: String| Err(HochschildError::InvalidGroupoid(m));
        let n = self.source.len();
        if self.target.len() != n || self.inverse.len() != n || self.labels.len() != n || self.compose.len() != n {
            return bad("arrow tables have different lengths".into());
        }
        if self.compose.iter().any(|r| r.len() != n) {
            return bad("composition table must be square".into());
        }
        if self.source.iter().chain(&self.target).any(|&o| o >= self.objects) {
            return bad("object index out of range".into());
        }
        for b in 0..n {
            for g in 0..n {
                let composable = self.source[b] == self.target[g];
                match self.compose[b][g] {
                    None if composable => return bad(format!("{b}∘{g} should be defined")),
                    Some(_) if !composable => return bad(format!("{b}∘{g} should be undefined")),
                    Some(a) if a >= n || self.source[a] != self.source[g] || self.target[a] != self.target[b] => {
                        return bad(format!("{b}∘{g} has the wrong endpoints"));
                    }
                    _ => {}
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(ab), Some(bc)) = (self.compose[a][b], self.compose[b][c]) {
                        if self.compose[ab][c] != self.compose[a][bc] {
                            return bad(format!("composition is not associative on ({a}, {b}, {c})"));
                        }
                    }
                }
            }
        }
        for o in 0..self.objects {
            self.identity(o).ok_or_else(|| HochschildError::InvalidGroupoid(format!("object {o} has no identity")))?;
        }
        for a in 0..n {
            let i = self.inverse[a];
            if i >= n {
                return bad(format!("inverse of {a} out of range"));
            }
            let id_s = self.identity(self.source[a]);
            let id_t = self.identity(self.target[a]);
            if self.compose[i][a] != id_s || self.compose[a][i] != id_t {
                return bad(format!("arrow {i} is not inverse to {a}"));
            }
        }
        Ok(())
    }

    /// Identity arrow at object `o`.
    pub fn identity(&self, o: usize) -> Option<usize> {
        let n = self.source.len();
        (0..n).find(|&e| {
            self.source[e] == o
                && self.target[e] == o
                && (0..n).all(|g| self.target[g] != o || self.compose[e][g] == Some(g))
                && (0..n).all(|b| self.source[b] != o || self.compose[b][e] == Some(b))
        })
    }

    /// One arrow `j → i` for every ordered pair of objects; arrow index `i·n + j`.
    pub fn pair(n: usize) -> Self {
        let arrows = n * n;
        let target = (0..arrows).map(|a| a / n).collect();
        let source = (0..arrows).map(|a| a % n).collect();
        let compose = (0..arrows)
            .map(|b| (0..arrows).map(|g| (b % n == g / n).then(|| (b / n) * n + g % n)).collect())
            .collect();
        let inverse = (0..arrows).map(|a| (a % n) * n + a / n).collect();
        let labels = (0..arrows).map(|a| format!("{}<-{}", a / n, a % n)).collect();
        FiniteGroupoid {
            objects: n,
            labels,
            source,
            target,
            compose,
            inverse,
        }
    }

    /// `ℤ/n` on a single object.
    pub fn cyclic_group(n: usize) -> Self {
        FiniteGroupoid {
            objects: 1,
            labels: (0..n).map(|i| format!("g{i}")).collect(),
            source: vec![0; n],
            target: vec![0; n],
            compose: (0..n).map(|b| (0..n).map(|g| Some((b + g) % n)).collect()).collect(),
            inverse: (0..n).map(|a| (n - a) % n).collect(),
        }
    }

    /// `n` objects with identity arrows only.
    pub fn discrete(n: usize) -> Self {
        FiniteGroupoid {
            objects: n,
            labels: (0..n).map(|i| format!("id{i}")).collect(),
            source: (0..n).collect(),
            target: (0..n).collect(),
            compose: (0..n).map(|b| (0..n).map(|g| (b == g).then_some(b)).collect()).collect(),
            inverse: (0..n).collect(),
        }
    }
}

/// Basis = arrows, `δ_b * δ_g = δ_{b∘g}` when composable, unit = sum of identities.
pub fn convolution_algebra(g: &FiniteGroupoid) -> Result<FinDimAlgebra, HochschildError> {
    g.validate()?;
    let n = g.source.len();
    let c = (0..n)
        .map(|b| {
            (0..n)
                .map(|h| (0..n).map(|a| q((g.compose[b][h] == Some(a)) as i64)).collect())
                .collect()
        })
        .collect();
    let ids: BTreeSet<usize> = (0..g.objects).filter_map(|o| g.identity(o)).collect();
    let unit = (0..n).map(|a| q(ids.contains(&a) as i64)).collect();
    FinDimAlgebra::new(g.labels.clone(), unit, c)
}

/// Formal combination of basis tensors of a fixed degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainElement {
    degree: usize,
    reduced: bool,
    terms: BTreeMap<Vec<usize>, BigRational>,
}

impl ChainElement {
    pub fn zero(degree: usize, reduced: bool) -> Self {
        ChainElement {
            degree,
            reduced,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff · e_{t₀}⊗…⊗e_{t_k}`; in reduced mode the result is normalized.
    pub fn basis(a: &FinDimAlgebra, tensor: &[usize], coeff: BigRational, reduced: bool) -> Result<Self, HochschildError> {
        if tensor.is_empty() || tensor.iter().any(|&i| i >= a.dim()) {
            return Err(HochschildError::InvalidAlgebra(format!("bad tensor {tensor:?}")));
        }
        let mut x = ChainElement::zero(tensor.len() - 1, false);
        add_to(&mut x.terms, tensor.to_vec(), coeff);
        Ok(if reduced { normalize(a, &x) } else { x })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, tensor: &[usize]) -> BigRational {
        self.terms.get(tensor).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &ChainElement) -> Result<ChainElement, HochschildError> {
        if self.degree != other.degree || self.reduced != other.reduced {
            return Err(HochschildError::ChainMismatch);
        }
        let mut out = self.clone();
        for (t, c) in &other.terms {
            add_to(&mut out.terms, t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &BigRational) -> ChainElement {
        let mut out = ChainElement::zero(self.degree, self.reduced);
        for (t, c) in &self.terms {
            add_to(&mut out.terms, t.clone(), c * s);
        }
        out
    }
}

/// Projection onto the reduced complex.
pub fn normalize(a: &FinDimAlgebra, x: &ChainElement) -> ChainElement {
    let mut out = ChainElement::zero(x.degree, true);
    for (t, c) in &x.terms {
        for (nt, nc) in normalize_tensor(a, t) {
            add_to(&mut out.terms, nt, nc * c);
        }
    }
    out
}

fn normalize_tensor(a: &FinDimAlgebra, t: &[usize]) -> Vec<(Vec<usize>, BigRational)> {
    let mut acc: Vec<(Vec<usize>, BigRational)> = vec![(vec![t[0]], BigRational::one())];
    for &f in &t[1..] {
        let choices: Vec<(usize, BigRational)> = if f == a.pivot {
            a.pivot_rep.clone()
        } else {
            vec![(f, BigRational::one())]
        };
        let mut next = Vec::with_capacity(acc.len() * choices.len());
        for (prefix, c) in &acc {
            for (j, cj) in &choices {
                let mut p = prefix.clone();
                p.push(*j);
                next.push((p, c * cj));
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    acc
}

fn boundary_tensor(a: &FinDimAlgebra, t: &[usize], out: &mut BTreeMap<Vec<usize>, BigRational>, scale: &BigRational) {
    let n = t.len() - 1;
    for i in 0..n {
        let sign = if i % 2 == 0 { scale.clone() } else { -scale };
        for (k, c) in &a.table[t[i]][t[i + 1]] {
            let mut nt = Vec::with_capacity(n);
            nt.extend_from_slice(&t[..i]);
            nt.push(*k);
            nt.extend_from_slice(&t[i + 2..]);
            add_to(out, nt, &sign * c);
        }
    }
    let sign = if n.is_multiple_of(2) { scale.clone() } else { -scale };
    for (k, c) in &a.table[t[n]][t[0]] {
        let mut nt = Vec::with_capacity(n);
        nt.push(*k);
        nt.extend_from_slice(&t[1..n]);
        add_to(out, nt, &sign * c);
    }
}

fn boundary_unchecked(a: &FinDimAlgebra, x: &ChainElement) -> ChainElement {
    if x.degree == 0 {
        return ChainElement::zero(0, x.reduced);
    }
    let mut out = ChainElement::zero(x.degree - 1, false);
    for (t, c) in &x.terms {
        boundary_tensor(a, t, &mut out.terms, c);
    }
    if x.reduced {
        normalize(a, &out)
    } else {
        out
    }
}

/// `∂(a₀⊗…⊗aₙ) = Σ_{i<n} (−1)ⁱ a₀⊗…⊗aᵢaᵢ₊₁⊗…⊗aₙ + (−1)ⁿ aₙa₀⊗a₁⊗…⊗aₙ₋₁`.
pub fn hochschild_boundary(a: &FinDimAlgebra, x: &ChainElement) -> Result<ChainElement, HochschildError> {
    if x.degree == 0 {
        return Err(HochschildError::DegreeZero);
    }
    Ok(boundary_unchecked(a, x))
}

fn connes_tensor(a: &FinDimAlgebra, t: &[usize], out: &mut BTreeMap<Vec<usize>, BigRational>, scale: &BigRational) {
    let n = t.len() - 1;
    for i in 0..=n {
        let sign = if (n * i).is_multiple_of(2) { scale.clone() } else { -scale };
        let rotated: Vec<usize> = t[i..].iter().chain(&t[..i]).copied().collect();
        for (u, cu) in a.unit.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let mut nt = Vec::with_capacity(n + 2);
            nt.push(u);
            nt.extend_from_slice(&rotated);
            add_to(out, nt, &sign * cu);
        }
    }
}

/// `B(a₀⊗…⊗aₙ) = Σᵢ (−1)^{n·i} 1⊗aᵢ⊗…⊗aₙ⊗a₀⊗…⊗aᵢ₋₁` on the reduced complex.
/// Unreduced input is normalized first.
pub fn connes_b(a: &FinDimAlgebra, x: &ChainElement) -> ChainElement {
    let x = if x.reduced { x.clone() } else { normalize(a, x) };
    let mut out = ChainElement::zero(x.degree + 1, false);
    for (t, c) in &x.terms {
        connes_tensor(a, t, &mut out.terms, c);
    }
    normalize(a, &out)
}

/// Basis of the degree-`k` chain space, full or reduced, with index lookup.
struct ChainSpace {
    d: usize,
    pivot: usize,
    reduced: bool,
    degree: usize,
    dim: usize,
}

impl ChainSpace {
    fn new(a: &FinDimAlgebra, degree: usize, reduced: bool) -> Result<Self, HochschildError> {
        let d = a.dim() as u128;
        let tail = if reduced { d - 1 } else { d };
        let dim = tail.checked_pow(degree as u32).and_then(|x| x.checked_mul(d)).unwrap_or(u128::MAX);
        if dim > MAX_CHAIN_DIM as u128 {
            return Err(HochschildError::ComplexTooLarge { degree, dim });
        }
        Ok(ChainSpace {
            d: a.dim(),
            pivot: a.pivot,
            reduced,
            degree,
            dim: dim as usize,
        })
    }

    fn tail_base(&self) -> usize {
        if self.reduced {
            self.d - 1
        } else {
            self.d
        }
    }

    fn tensor(&self, mut idx: usize) -> Vec<usize> {
        let base = self.tail_base();
        let mut t = vec![0; self.degree + 1];
        for pos in (1..=self.degree).rev() {
            let mut j = idx % base;
            idx /= base;
            if self.reduced && j >= self.pivot {
                j += 1;
            }
            t[pos] = j;
        }
        t[0] = idx;
        t
    }

    fn index(&self, t: &[usize]) -> usize {
        let base = self.tail_base();
        let mut idx = t[0];
        for &j in &t[1..] {
            let j = if self.reduced && j > self.pivot { j - 1 } else { j };
            idx = idx * base + j;
        }
        idx
    }
}

fn boundary_rows(a: &FinDimAlgebra, space: &ChainSpace, target: &ChainSpace, offset: usize) -> Vec<BTreeMap<usize, BigRational>> {
    (0..space.dim)
        .map(|i| {
            let x = ChainElement {
                degree: space.degree,
                reduced: space.reduced,
                terms: [(space.tensor(i), BigRational::one())].into(),
            };
            boundary_unchecked(a, &x)
                .terms
                .into_iter()
                .map(|(t, c)| (offset + target.index(&t), c))
                .collect()
        })
        .collect()
}

/// Ranks of `HH_0, …, HH_{up_to}` on the full complex.
pub fn hh_ranks(a: &FinDimAlgebra, up_to: usize) -> Result<Vec<usize>, HochschildError> {
    complex_ranks(a, up_to, false)
}

/// Same ranks computed on the reduced complex.
pub fn hh_ranks_reduced(a: &FinDimAlgebra, up_to: usize) -> Result<Vec<usize>, HochschildError> {
    complex_ranks(a, up_to, true)
}

fn complex_ranks(a: &FinDimAlgebra, up_to: usize, reduced: bool) -> Result<Vec<usize>, HochschildError> {
    if up_to > MAX_DEGREE {
        return Err(HochschildError::ComplexTooLarge {
            degree: up_to,
            dim: (a.dim() as u128).saturating_pow(up_to as u32 + 1),
        });
    }
    let spaces = (0..=up_to + 1)
        .map(|k| ChainSpace::new(a, k, reduced))
        .collect::<Result<Vec<_>, _>>()?;
    // rank of ∂_k : C_k → C_{k−1}
    let mut bd = vec![0usize; up_to + 2];
    for k in 1..=up_to + 1 {
        bd[k] = sparse_rank(boundary_rows(a, &spaces[k], &spaces[k - 1], 0));
    }
    Ok((0..=up_to).map(|k| spaces[k].dim - bd[k] - bd[k + 1]).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HpStep {
    pub truncation: usize,
    /// Homology ranks of the total complex in degrees `0..=window`.
    pub degree_ranks: Vec<usize>,
    pub even: usize,
    pub odd: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HpReport {
    pub truncation: usize,
    pub window: usize,
    pub even: usize,
    pub odd: usize,
    /// One entry per truncation order `1..=truncation`.
    pub history: Vec<HpStep>,
    /// The last two truncation orders agree.
    pub stabilized: bool,
}

/// Total degree `n` of `(C̄[u]/uᴺ, ∂ + uB)` is `⊕_{0≤j<N} u^j C̄_{n+2j}`.
struct TotalSpace {
    blocks: Vec<(usize, ChainSpace, usize)>,
    dim: usize,
}

fn total_space(a: &FinDimAlgebra, n: i64, big_n: usize) -> Result<TotalSpace, HochschildError> {
    let mut blocks = Vec::new();
    let mut offset = 0;
    for j in 0..big_n {
        let deg = n + 2 * j as i64;
        if deg < 0 {
            continue;
        }
        let space = ChainSpace::new(a, deg as usize, true)?;
        let dim = space.dim;
        blocks.push((j, space, offset));
        offset += dim;
    }
    if offset > MAX_CHAIN_DIM {
        return Err(HochschildError::ComplexTooLarge {
            degree: n.max(0) as usize,
            dim: offset as u128,
        });
    }
    Ok(TotalSpace { blocks, dim: offset })
}

fn total_rank(a: &FinDimAlgebra, src: &TotalSpace, dst: &TotalSpace) -> usize {
    let find = |j: usize| dst.blocks.iter().find(|(jj, _, _)| *jj == j);
    let mut rows = Vec::with_capacity(src.dim);
    for (j, space, _) in &src.blocks {
        for i in 0..space.dim {
            let x = ChainElement {
                degree: space.degree,
                reduced: true,
                terms: [(space.tensor(i), BigRational::one())].into(),
            };
            let mut row = BTreeMap::new();
            if space.degree > 0 {
                if let Some((_, tsp, off)) = find(*j) {
                    for (t, c) in boundary_unchecked(a, &x).terms {
                        add_to(&mut row, off + tsp.index(&t), c);
                    }
                }
            }
            if let Some((_, tsp, off)) = find(j + 1) {
                for (t, c) in connes_b(a, &x).terms {
                    add_to(&mut row, off + tsp.index(&t), c);
                }
            }
            rows.push(row);
        }
    }
    sparse_rank(rows)
}

fn hp_step(a: &FinDimAlgebra, big_n: usize, window: usize) -> Result<HpStep, HochschildError> {
    let spaces = (-1..=window as i64 + 1)
        .map(|n| total_space(a, n, big_n))
        .collect::<Result<Vec<_>, _>>()?;
    // spaces[n + 1] is total degree n; ranks[n + 1] is the rank of d_n : Tot_n → Tot_{n−1}
    let ranks: Vec<usize> = (0..spaces.len())
        .map(|i| if i == 0 { 0 } else { total_rank(a, &spaces[i], &spaces[i - 1]) })
        .collect();
    let degree_ranks: Vec<usize> = (0..=window)
        .map(|n| spaces[n + 1].dim - ranks[n + 1] - ranks[n + 2])
        .collect();
    let even = degree_ranks.iter().step_by(2).sum();
    let odd = degree_ranks.iter().skip(1).step_by(2).sum();
    Ok(HpStep {
        truncation: big_n,
        degree_ranks,
        even,
        odd,
    })
}

/// Even and odd homology ranks of the truncated reduced bicomplex in total
/// degrees `0..=window`, for every truncation order up to `truncation`.
pub fn hp_truncated(a: &FinDimAlgebra, truncation: usize, window: usize) -> Result<HpReport, HochschildError> {
    if truncation == 0 {
        return Err(HochschildError::InvalidTruncation);
    }
    if window > MAX_DEGREE {
        return Err(HochschildError::ComplexTooLarge {
            degree: window,
            dim: u128::MAX,
        });
    }
    let history = (1..=truncation)
        .map(|n| hp_step(a, n, window))
        .collect::<Result<Vec<_>, _>>()?;
    let last = history.last().expect("nonempty");
    let stabilized = history.len() >= 2 && {
        let prev = &history[history.len() - 2];
        (prev.even, prev.odd) == (last.even, last.odd)
    };
    Ok(HpReport {
        truncation,
        window,
        even: last.even,
        odd: last.odd,
        stabilized,
        history,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(a: &FinDimAlgebra, t: &[usize], reduced: bool) -> ChainElement {
        ChainElement::basis(a, t, q(1), reduced).unwrap()
    }

    fn from_terms(degree: usize, reduced: bool, terms: &[(&[usize], i64)]) -> ChainElement {
        let mut x = ChainElement::zero(degree, reduced);
        for (t, c) in terms {
            add_to(&mut x.terms, t.to_vec(), q(*c));
        }
        x
    }

    #[test]
    fn groupoid_algebras() {
        let m = convolution_algebra(&FiniteGroupoid::pair(2)).unwrap();
        assert_eq!(m.dim(), 4);
        assert!(!m.is_commutative());
        // arrow i·2 + j is the matrix unit E_{ij}
        let e = |i: usize| {
            let mut v = vec![q(0); 4];
            v[i] = q(1);
            v
        };
        assert_eq!(m.multiply(&e(1), &e(2)), e(0));
        assert_eq!(m.multiply(&e(2), &e(1)), e(3));
        assert_eq!(m.multiply(&e(1), &e(1)), vec![q(0); 4]);
        let g = convolution_algebra(&FiniteGroupoid::cyclic_group(2)).unwrap();
        assert!(g.is_commutative());
        assert_eq!(g.dim(), 2);
        let d = convolution_algebra(&FiniteGroupoid::discrete(2)).unwrap();
        assert_eq!(d, FinDimAlgebra::new(vec!["id0".into(), "id1".into()], vec![q(1), q(1)], FinDimAlgebra::product_of_fields(2).c.clone()).unwrap());
    }

    #[test]
    fn invalid_inputs() {
        let mut g = FiniteGroupoid::pair(2);
        g.inverse[1] = 1;
        assert!(matches!(convolution_algebra(&g), Err(HochschildError::InvalidGroupoid(_))));
        let mut c = FinDimAlgebra::truncated_polynomial(2).c.clone();
        c[1][1][1] = q(1);
        // x² = x is still associative, but x is not a unit
        assert!(FinDimAlgebra::new(vec!["a".into(), "b".into()], vec![q(0), q(1)], c).is_err());
    }

    #[test]
    fn boundary_examples() {
        let g = FinDimAlgebra::cyclic_group_algebra(2);
        assert!(hochschild_boundary(&g, &chain(&g, &[1, 1], false)).unwrap().is_zero());
        let m = FinDimAlgebra::matrix_algebra(2);
        let b = hochschild_boundary(&m, &chain(&m, &[1, 2], false)).unwrap();
        assert_eq!(b, from_terms(0, false, &[(&[0], 1), (&[3], -1)]));
        let b = hochschild_boundary(&g, &chain(&g, &[0, 1, 1], false)).unwrap();
        assert_eq!(b, from_terms(1, false, &[(&[1, 1], 2), (&[0, 0], -1)]));
        assert_eq!(hochschild_boundary(&g, &chain(&g, &[0], false)), Err(HochschildError::DegreeZero));
    }

    #[test]
    fn connes_examples() {
        let a = FinDimAlgebra::truncated_polynomial(3);
        assert_eq!(connes_b(&a, &chain(&a, &[2], true)), from_terms(1, true, &[(&[0, 2], 1)]));
        assert_eq!(
            connes_b(&a, &chain(&a, &[1, 2], true)),
            from_terms(2, true, &[(&[0, 1, 2], 1), (&[0, 2, 1], -1)])
        );
        assert!(connes_b(&a, &chain(&a, &[0, 1], true)).is_zero());
    }

    #[test]
    fn reduction_with_non_basis_unit() {
        let m = FinDimAlgebra::matrix_algebra(2);
        // the pivot is E11, and E11 ≡ −E22 modulo the unit
        let x = chain(&m, &[1, 0], true);
        assert_eq!(x, from_terms(1, true, &[(&[1, 3], -1)]));
        let b = connes_b(&m, &chain(&m, &[0], true));
        assert_eq!(b, from_terms(1, true, &[(&[0, 3], -1), (&[3, 3], -1)]));
    }

    #[test]
    fn ranks_of_small_algebras() {
        assert_eq!(hh_ranks(&FinDimAlgebra::ground_field(), 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(hh_ranks(&FinDimAlgebra::product_of_fields(2), 3).unwrap(), vec![2, 0, 0, 0]);
        let pair = convolution_algebra(&FiniteGroupoid::pair(2)).unwrap();
        assert_eq!(hh_ranks(&pair, 3).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(hh_ranks_reduced(&pair, 3).unwrap(), vec![1, 0, 0, 0]);
        // dual numbers: HH_k = 1 for every k ≥ 1 over ℚ, 2 in degree 0
        let dual = FinDimAlgebra::truncated_polynomial(2);
        assert_eq!(hh_ranks(&dual, 3).unwrap(), vec![2, 1, 1, 1]);
        assert_eq!(hh_ranks_reduced(&dual, 3).unwrap(), vec![2, 1, 1, 1]);
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            hh_ranks(&FinDimAlgebra::ground_field(), 7),
            Err(HochschildError::ComplexTooLarge { .. })
        ));
        assert!(matches!(
            hh_ranks(&FinDimAlgebra::matrix_algebra(3), 6),
            Err(HochschildError::ComplexTooLarge { .. })
        ));
    }

    #[test]
    fn periodic_truncations() {
        for n in 1..=3 {
            let r = hp_truncated(&FinDimAlgebra::ground_field(), n, 1).unwrap();
            assert_eq!((r.even, r.odd), (1, 0));
        }
        let r = hp_truncated(&FinDimAlgebra::cyclic_group_algebra(2), 3, 1).unwrap();
        assert_eq!((r.even, r.odd, r.stabilized), (2, 0, true));
        let r = hp_truncated(&FinDimAlgebra::product_of_fields(2), 3, 1).unwrap();
        assert_eq!((r.even, r.odd), (2, 0));
        assert_eq!(hp_truncated(&FinDimAlgebra::ground_field(), 0, 1), Err(HochschildError::InvalidTruncation));
    }

    #[test]
    fn basis_change_round_trip() {
        let a = FinDimAlgebra::upper_triangular_2();
        let p = vec![vec![q(1), q(2), q(0)], vec![q(0), q(1), q(0)], vec![q(1), q(0), q(1)]];
        let b = a.change_basis(&p).unwrap();
        assert_eq!(hh_ranks(&a, 2).unwrap(), hh_ranks(&b, 2).unwrap());
        let text = serde_json::to_string(&b).unwrap();
        let back: FinDimAlgebra = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
    }
}
