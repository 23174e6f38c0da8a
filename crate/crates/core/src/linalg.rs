//! Exact integer and scalar linear algebra: Smith and Hermite normal forms,
//! saturated integer kernels, Gaussian elimination over `ℚ(√d)`, and the
//! Galois-stability test that decides whether a subspace is defined over `ℚ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::json;
use crate::scalar::{Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix has {rows}x{cols} shape but {len} entries")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Field(#[from] ScalarError),
}

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl TryFrom<Vec<Vec<BigInt>>> for IntMatrix {
    type Error = LinalgError;
    fn try_from(rows: Vec<Vec<BigInt>>) -> Result<Self, Self::Error> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        IntMatrix::new(n, cols, rows.into_iter().flatten().collect())
    }
}

impl From<IntMatrix> for Vec<Vec<BigInt>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        json::big_int_rows::serialize(&self.to_rows(), s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = json::big_int_rows::deserialize(d)?;
        IntMatrix::try_from(rows).map_err(serde::de::Error::custom)
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape { rows, cols, len: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds from small integer rows; panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.as_ref().len(), cols, "ragged rows");
            data.extend(r.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_big_rows(rows: &[Vec<BigInt>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] -= v;
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `U·A·V = S` with `U`, `V` unimodular and `S` diagonal, `s₁ | s₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries of `S`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            // smallest nonzero entry of the trailing block goes to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if s[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, s, v };
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = s[(i, t)].div_floor(&s[(t, t)]);
                s.sub_row(i, t, &q);
                u.sub_row(i, t, &q);
                dirty |= !s[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = s[(t, j)].div_floor(&s[(t, t)]);
                s.sub_col(j, t, &q);
                v.sub_col(j, t, &q);
                dirty |= !s[(t, j)].is_zero();
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    s.sub_row(t, i, &minus_one);
                    u.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, s, v }
}

/// Row-style Hermite normal form of the lattice spanned by `rows`; zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(cols) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let m = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&x, &y| a[x][c].abs().cmp(&a[y][c].abs()));
            let Some(p) = best else { break };
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                done &= a[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = a[r].clone();
        for row in a.iter_mut().take(r) {
            let q = row[c].div_floor(&pivot_row[c]);
            if q.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// A `ℤ`-basis of `{v ∈ ℤ^cols : A·v = 0}`, in Hermite normal form.
pub fn integer_kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let basis: Vec<Vec<BigInt>> = (rank..a.cols).map(|j| snf.v.column(j)).collect();
    hermite_normal_form(&basis)
}

/// Dense matrix of scalars sharing one quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape { rows, cols, len: data.len() });
        }
        Scalar::common_field(&data)?;
        Ok(ScalarMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<Scalar>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Self::new(rows.len(), cols, rows.iter().flatten().cloned().collect())
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        ScalarMatrix {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().cloned().map(Scalar::from_bigint).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> u64 {
        Scalar::common_field(&self.data).unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        ScalarMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{} columns against a vector of length {}",
                self.cols,
                v.len()
            )));
        }
        Scalar::common_field(self.data.iter().chain(v))?;
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Determinant, for square matrices only.
    pub fn det(&self) -> Option<Scalar> {
        (self.rows == self.cols).then(|| det(&self.to_rows()))
    }

    pub fn rank(&self) -> usize {
        rank(&self.to_rows())
    }

    /// Basis of the right kernel over the scalar field.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        kernel(&self.to_rows(), self.cols)
    }
}

impl std::ops::Index<(usize, usize)> for ScalarMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let Some(cols) = rows.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x - &(&f * y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub(crate) fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : rows·x = 0}`; one vector per free column.
pub(crate) fn kernel(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Outcome of [`solve_exact`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    Family {
        particular: Vec<Scalar>,
        kernel: Vec<Vec<Scalar>>,
    },
    Infeasible,
}

/// Exact Gaussian elimination for `A·x = b`.
pub fn solve_exact(a: &ScalarMatrix, b: &[Scalar]) -> Result<Solution, LinalgError> {
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch(format!(
            "{} rows against right-hand side of length {}",
            a.rows,
            b.len()
        )));
    }
    Scalar::common_field(a.data.iter().chain(b))?;
    let n = a.cols;
    let mut aug: Vec<Vec<Scalar>> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = if aug.is_empty() { Vec::new() } else { rref(&mut aug) };
    if pivots.contains(&n) {
        return Ok(Solution::Infeasible);
    }
    let mut particular = vec![Scalar::zero(); n];
    for (row, &p) in aug.iter().zip(&pivots) {
        particular[p] = row[n].clone();
    }
    let coeff_rows: Vec<Vec<Scalar>> = aug.iter().map(|r| r[..n].to_vec()).collect();
    let ker = kernel(&coeff_rows, n);
    if ker.is_empty() {
        Ok(Solution::Unique(particular))
    } else {
        Ok(Solution::Family { particular, kernel: ker })
    }
}

/// Inverse of a square scalar matrix, `None` when singular.
pub(crate) fn inverse(rows: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = rows.len();
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut r = r.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub(crate) fn det(rows: &[Vec<Scalar>]) -> Scalar {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut acc = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        acc = &acc * &m[c][c];
        let inv = m[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            let (top, rest) = m.split_at_mut(i);
            for (x, p) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x = &*x - &(&f * p);
            }
        }
    }
    acc
}

fn split_parts(v: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    (
        v.iter().map(|x| Scalar::from_rational(x.rational_part().clone())).collect(),
        v.iter().map(|x| Scalar::from_rational(x.irrational_part().clone())).collect(),
    )
}

/// Dimension of `W ∩ W̄`, the largest subspace of `W = span(basis)` defined over `ℚ`.
pub fn rational_subspace_dim(basis: &[Vec<Scalar>]) -> usize {
    let dim = rank(basis);
    let mut parts = Vec::with_capacity(2 * basis.len());
    for v in basis {
        let (a, b) = split_parts(v);
        parts.push(a);
        parts.push(b);
    }
    2 * dim - rank(&parts)
}

/// A rational basis (reduced echelon rows) of `span(basis)` when the span is
/// Galois-stable, i.e. defined over `ℚ`; `None` otherwise.
pub fn rational_basis(basis: &[Vec<Scalar>]) -> Option<Vec<Vec<BigRational>>> {
    let dim = rank(basis);
    let mut parts = Vec::with_capacity(2 * basis.len());
    for v in basis {
        let (a, b) = split_parts(v);
        parts.push(a);
        parts.push(b);
    }
    let pivots = rref(&mut parts);
    (pivots.len() == dim).then(|| {
        parts
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_rational().expect("rational row")).collect())
            .collect()
    })
}

/// Clears denominators and divides by the content, keeping the sign.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// The primitive integer vector pointing along `v`, when `v` is a positive
/// multiple of a rational vector; `None` for irrational directions or `v = 0`.
pub fn primitive_direction(v: &[Scalar]) -> Option<Vec<BigInt>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    let ratios: Option<Vec<BigRational>> = v.iter().map(|x| (x * &inv).to_rational()).collect();
    let mut p = primitive_integer_vector(&ratios?);
    if lead.is_negative() {
        for x in p.iter_mut() {
            *x = -&*x;
        }
    }
    Some(p)
}

/// `ℤ`-basis (Hermite form) of `span_ℝ(rows) ∩ ℤⁿ` for rational `rows`.
pub fn saturated_integer_basis(rows: &[Vec<BigRational>], n: usize) -> Vec<Vec<BigInt>> {
    let scal: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(Scalar::from_rational).collect())
        .collect();
    let complement = kernel(&scal, n);
    if complement.is_empty() {
        return IntMatrix::identity(n).to_rows();
    }
    let int_rows: Vec<Vec<BigInt>> = complement
        .iter()
        .map(|v| primitive_integer_vector(&v.iter().map(|x| x.to_rational().expect("rational")).collect::<Vec<_>>()))
        .collect();
    integer_kernel_basis(&IntMatrix::from_big_rows(&int_rows, n))
}

/// Rank over `ℚ` of a sparse matrix given as rows of `(column, value)` pairs.
pub fn sparse_rank(rows: Vec<BTreeMap<usize, BigRational>>) -> usize {
    let mut rows: Vec<BTreeMap<usize, BigRational>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    // shortest rows first keeps fill-in small
    rows.sort_by_key(BTreeMap::len);
    for mut row in rows {
        while let Some((&lead, _)) = row.iter().next() {
            let Some(prow) = pivots.get(&lead) else {
                let inv = row[&lead].recip();
                for v in row.values_mut() {
                    *v *= &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            let f = row[&lead].clone();
            for (c, v) in prow {
                let entry = row.entry(*c).or_insert_with(BigRational::zero);
                *entry -= &f * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
    pivots.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_smith(a: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(a);
        assert_eq!(f.u.mul(a).unwrap().mul(&f.v).unwrap(), f.s);
        assert!(f.s.is_diagonal());
        assert_eq!(f.u.det().abs(), BigInt::one());
        assert_eq!(f.v.det().abs(), BigInt::one());
        let d = f.invariant_factors();
        for w in d.windows(2) {
            assert!(!w[0].is_negative());
            assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
        }
        f
    }

    #[test]
    fn smith_of_two_by_two() {
        let f = check_smith(&IntMatrix::from_rows(&[[2, 4], [6, 8]]));
        assert_eq!(f.invariant_factors(), big(&[2, 4]));
    }

    #[test]
    fn smith_of_identity_and_zero() {
        let f = check_smith(&IntMatrix::identity(3));
        assert_eq!(f.s, IntMatrix::identity(3));
        let z = check_smith(&IntMatrix::from_rows(&[[0]]));
        assert_eq!(z.s, IntMatrix::from_rows(&[[0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(integer_kernel_basis(&IntMatrix::from_rows(&[[1, 1]])), vec![big(&[1, -1])]);
        assert!(integer_kernel_basis(&IntMatrix::identity(2)).is_empty());
        // inward normals of the unit square as columns
        let rho = IntMatrix::from_rows(&[[1, -1, 0, 0], [0, 0, 1, -1]]);
        assert_eq!(integer_kernel_basis(&rho), vec![big(&[1, 1, 0, 0]), big(&[0, 0, 1, 1])]);
    }

    #[test]
    fn kernel_of_non_primitive_lattice_is_saturated() {
        // 2x + 4y = 0 has kernel generated by (2, -1)
        let k = integer_kernel_basis(&IntMatrix::from_rows(&[[2, 4]]));
        assert_eq!(k, vec![big(&[2, -1])]);
    }

    #[test]
    fn hermite_form_is_canonical() {
        let a = hermite_normal_form(&[big(&[0, 0, 1, 1]), big(&[1, 1, 1, 1])]);
        assert_eq!(a, vec![big(&[1, 1, 0, 0]), big(&[0, 0, 1, 1])]);
        let b = hermite_normal_form(&[big(&[2, 3]), big(&[4, 1])]);
        assert_eq!(b, vec![big(&[2, 3]), big(&[0, 5])]);
    }

    #[test]
    fn solve_examples() {
        let id = ScalarMatrix::from_int(&IntMatrix::identity(2));
        let sol = solve_exact(&id, &[Scalar::from_int(1), Scalar::from_int(2)]).unwrap();
        assert_eq!(sol, Solution::Unique(vec![Scalar::from_int(1), Scalar::from_int(2)]));

        let a = ScalarMatrix::from_rows(&[vec![Scalar::one(), Scalar::sqrt_of(2)]]).unwrap();
        let Solution::Family { kernel, .. } = solve_exact(&a, &[Scalar::zero()]).unwrap() else {
            panic!("expected a family");
        };
        assert_eq!(kernel, vec![vec![-Scalar::sqrt_of(2), Scalar::one()]]);

        let tall = ScalarMatrix::from_int(&IntMatrix::from_rows(&[[1], [1]]));
        assert_eq!(
            solve_exact(&tall, &[Scalar::zero(), Scalar::one()]).unwrap(),
            Solution::Infeasible
        );
    }

    #[test]
    fn solve_rejects_mixed_fields() {
        let a = ScalarMatrix::from_rows(&[vec![Scalar::sqrt_of(2)]]).unwrap();
        assert!(matches!(
            solve_exact(&a, &[Scalar::sqrt_of(3)]),
            Err(LinalgError::Field(ScalarError::FieldMismatch(2, 3)))
        ));
    }

    #[test]
    fn galois_stability() {
        let s2 = Scalar::sqrt_of(2);
        // span{(1, √2)} is not rational
        assert!(rational_basis(&[vec![Scalar::one(), s2.clone()]]).is_none());
        // span{(1, √2), (0, 1)} = ℝ² is
        let w = vec![vec![Scalar::one(), s2.clone()], vec![Scalar::zero(), Scalar::one()]];
        assert_eq!(rational_subspace_dim(&w), 2);
        assert!(rational_basis(&w).is_some());
        // √2·(1, 2) spans a rational line
        assert!(rational_basis(&[vec![s2.clone(), &s2 * &Scalar::from_int(2)]]).is_some());
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        let rows = vec![
            BTreeMap::from([(0, q(1)), (1, q(2))]),
            BTreeMap::from([(0, q(2)), (1, q(4))]),
            BTreeMap::from([(2, q(1))]),
            BTreeMap::new(),
        ];
        assert_eq!(sparse_rank(rows), 2);
    }
}
