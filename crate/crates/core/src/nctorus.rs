//! Kronecker foliations of the 2-torus and non-commutative tori `T²_θ`:
//! leaf classification, regular continued fractions of quadratic irrationals,
//! integer Möbius action and Morita equivalence via continued-fraction tails.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::hj::PERIOD_SEARCH_BOUND;
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NcTorusError {
    #[error("{0} is rational")]
    RationalInput(String),
    #[error("the denominator vanishes at {0}")]
    PoleAtInput(String),
    #[error("no repetition of complete quotients within {0} steps")]
    PeriodNotFound(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LeafType {
    ClosedLeaves,
    DenseLeaves,
}

pub fn kronecker_classify(theta: &Scalar) -> LeafType {
    if theta.is_rational() {
        LeafType::ClosedLeaves
    } else {
        LeafType::DenseLeaves
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CfExpansion {
    #[serde(with = "crate::json::big_ints")]
    pub preperiod: Vec<BigInt>,
    #[serde(with = "crate::json::big_ints")]
    pub period: Vec<BigInt>,
}

/// Complete quotients `x₀ = θ, x_{i+1} = 1/(xᵢ − ⌊xᵢ⌋)` until the first repeat.
struct CfStates {
    states: Vec<Scalar>,
    digits: Vec<BigInt>,
    period_start: usize,
}

fn cf_states(theta: &Scalar) -> Result<CfStates, NcTorusError> {
    if theta.is_rational() {
        return Err(NcTorusError::RationalInput(theta.to_string()));
    }
    let mut seen: HashMap<Scalar, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut digits = Vec::new();
    let mut x = theta.clone();
    for step in 0..PERIOD_SEARCH_BOUND {
        if let Some(&start) = seen.get(&x) {
            return Ok(CfStates {
                states,
                digits,
                period_start: start,
            });
        }
        seen.insert(x.clone(), step);
        let a = x.floor();
        states.push(x.clone());
        x = (&x - &Scalar::from_bigint(a.clone())).inv().expect("irrational remainder");
        digits.push(a);
    }
    Err(NcTorusError::PeriodNotFound(PERIOD_SEARCH_BOUND))
}

pub fn cf_expand(theta: &Scalar) -> Result<CfExpansion, NcTorusError> {
    let st = cf_states(theta)?;
    Ok(CfExpansion {
        preperiod: st.digits[..st.period_start].to_vec(),
        period: st.digits[st.period_start..].to_vec(),
    })
}

/// A 2×2 integer matrix `[[a, b], [c, d]]`.
pub type Mat2 = [[BigInt; 2]; 2];

pub fn mat2(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
    [[a.into(), b.into()], [c.into(), d.into()]]
}

pub fn mat2_det(m: &Mat2) -> BigInt {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

fn mat2_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &x[i][0] * &y[0][j] + &x[i][1] * &y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Inverse of a matrix with determinant `±1`.
fn mat2_unimodular_inverse(m: &Mat2) -> Mat2 {
    let det = mat2_det(m);
    [
        [&m[1][1] * &det, -&m[0][1] * &det],
        [-&m[1][0] * &det, &m[0][0] * &det],
    ]
}

/// `θ ↦ (aθ + b)/(cθ + d)`.
pub fn mobius_apply(m: &Mat2, theta: &Scalar) -> Result<Scalar, NcTorusError> {
    let big = |x: &BigInt| Scalar::from_bigint(x.clone());
    let num = &big(&m[0][0]) * theta + big(&m[0][1]);
    let den = &big(&m[1][0]) * theta + big(&m[1][1]);
    num.checked_div(&den)
        .map_err(|_| NcTorusError::PoleAtInput(theta.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoritaResult {
    pub equivalent: bool,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Mat2>,
    /// Tails coincide but only through a determinant −1 transformation.
    pub gl2_only_certificate: bool,
}

fn ser_witness<S: serde::Serializer>(w: &Option<Mat2>, s: S) -> Result<S::Ok, S::Error> {
    match w {
        Some(m) => {
            let rows: Vec<Vec<BigInt>> = m.iter().map(|r| r.to_vec()).collect();
            crate::json::big_int_rows::serialize(&rows, s)
        }
        None => s.serialize_none(),
    }
}

/// Products `M_i = ∏_{k<i} [[a_k, 1], [1, 0]]`, so that `θ = M_i · x_i`.
fn prefix_matrices(digits: &[BigInt], count: usize) -> Vec<Mat2> {
    let mut out = vec![mat2(1, 0, 0, 1)];
    for a in digits.iter().take(count.saturating_sub(1)) {
        let step: Mat2 = [[a.clone(), BigInt::one()], [BigInt::one(), BigInt::zero()]];
        let next = mat2_mul(out.last().expect("nonempty"), &step);
        out.push(next);
    }
    out
}

/// Unrolls the eventually periodic quotients to `len` states.
fn unrolled(st: &CfStates, len: usize) -> (Vec<Scalar>, Vec<BigInt>) {
    let p = st.states.len() - st.period_start;
    let pick = |i: usize| {
        if i < st.states.len() {
            i
        } else {
            st.period_start + (i - st.period_start) % p
        }
    };
    (
        (0..len).map(|i| st.states[pick(i)].clone()).collect(),
        (0..len).map(|i| st.digits[pick(i)].clone()).collect(),
    )
}

/// Decides whether `θ′ = (aθ+b)/(cθ+d)` for an integer matrix of determinant `±1`,
/// searching tail alignments for a determinant `+1` witness. `search_bound`
/// caps the number of complete quotients examined on each side.
pub fn morita_equivalent(
    theta: &Scalar,
    theta2: &Scalar,
    search_bound: Option<usize>,
) -> Result<MoritaResult, NcTorusError> {
    let s1 = cf_states(theta)?;
    let s2 = cf_states(theta2)?;
    if theta.field() != theta2.field() {
        return Ok(MoritaResult {
            equivalent: false,
            witness: None,
            gl2_only_certificate: false,
        });
    }
    let natural = 2 * s1.states.len().max(s2.states.len()) + 2;
    let len = search_bound.map_or(natural, |b| b.max(1));
    let (x1, d1) = unrolled(&s1, len);
    let (x2, d2) = unrolled(&s2, len);
    let m1 = prefix_matrices(&d1, len);
    let m2 = prefix_matrices(&d2, len);

    // smallest witness (by entry size) over all even-offset alignments
    let mut parity_odd_match = false;
    let mut best: Option<(BigInt, Mat2)> = None;
    for i in 0..len {
        for j in 0..len {
            if x1[i] != x2[j] {
                continue;
            }
            if (i + j) % 2 == 1 {
                parity_odd_match = true;
                continue;
            }
            let w = mat2_mul(&m2[j], &mat2_unimodular_inverse(&m1[i]));
            debug_assert!(mat2_det(&w).is_one());
            if mobius_apply(&w, theta).ok().as_ref() != Some(theta2) {
                continue;
            }
            let size: BigInt = w.iter().flatten().map(|x| x.abs()).sum();
            if best.as_ref().is_none_or(|(b, bw)| (&size, &w) < (b, bw)) {
                best = Some((size, w));
            }
        }
    }
    Ok(match best {
        Some((_, w)) => MoritaResult {
            equivalent: true,
            witness: Some(w),
            gl2_only_certificate: false,
        },
        None => MoritaResult {
            equivalent: parity_odd_match,
            witness: None,
            gl2_only_certificate: parity_odd_match,
        },
    })
}
