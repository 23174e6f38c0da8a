//! Quotient-construction data of a rational simple polytope: the coordinate
//! strata removed from `ℂᴺ`, the kernel lattice of `ρ`, and the moment vector
//! `ν_P = Bᵀ·(−λ_P)` in the chosen kernel basis `B`.
//!
//! The moment map normalization constant is taken to be 1.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{self, integer_kernel_basis, IntMatrix};
use crate::polytope::{PolytopeError, SimplePolytope};
use crate::scalar::Scalar;

/// Factor multiplying the standard torus moment map; fixed to 1.
pub const MOMENT_NORMALIZATION: i64 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuotientError {
    #[error("facet {0} alone is a forbidden stratum")]
    CodimensionOne(usize),
    #[error("normal matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

/// Inclusion-minimal index sets in `{0..n}` that are not in the subset-closed `family`.
pub fn minimal_non_faces(family: &BTreeSet<Vec<usize>>, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for k in 1..=n {
        for set in crate::polytope::k_subsets(n, k) {
            if family.contains(&set) {
                continue;
            }
            let minimal = (0..set.len()).all(|drop| {
                let mut smaller = set.clone();
                smaller.remove(drop);
                family.contains(&smaller)
            });
            if minimal {
                out.push(set);
            }
        }
    }
    out
}

/// Minimal forbidden strata; every one must have at least two indices.
pub fn forbidden_strata(family: &BTreeSet<Vec<usize>>, n: usize) -> Result<Vec<Vec<usize>>, QuotientError> {
    let strata = minimal_non_faces(family, n);
    if let Some(s) = strata.iter().find(|s| s.len() == 1) {
        return Err(QuotientError::CodimensionOne(s[0]));
    }
    Ok(strata)
}

/// `ℤ`-basis of `ker(ρᵀ) ⊂ ℤᴺ`, where the rows of `ρ` are the facet normals.
pub fn kernel_lattice(rho: &IntMatrix) -> Result<Vec<Vec<BigInt>>, QuotientError> {
    let rank = crate::linalg::smith_normal_form(rho).rank();
    if rank != rho.cols() {
        return Err(QuotientError::RankDeficient { rank, expected: rho.cols() });
    }
    Ok(integer_kernel_basis(&rho.transpose()))
}

fn apply_basis(basis: &[Vec<BigInt>], x: &[Scalar]) -> Vec<Scalar> {
    basis
        .iter()
        .map(|b| {
            let row: Vec<Scalar> = b.iter().cloned().map(Scalar::from_bigint).collect();
            linalg::dot(&row, x)
        })
        .collect()
}

/// `ν_P` in the basis returned by [`kernel_lattice`].
pub fn moment_vector(p: &SimplePolytope) -> Result<Vec<Scalar>, QuotientError> {
    Ok(quotient_data(p)?.nu_p)
}

/// `xⱼ = ⟨u, ρⱼ⟩ − λⱼ`, the slack of `u` against each facet.
pub fn slack_vector(p: &SimplePolytope, u: &[Scalar]) -> Result<Vec<Scalar>, QuotientError> {
    let (rho, lambda) = p.normal_data()?;
    Ok((0..rho.rows())
        .map(|j| {
            let r: Vec<Scalar> = rho.row(j).iter().cloned().map(Scalar::from_bigint).collect();
            linalg::dot(&r, u) - &lambda[j]
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientData {
    pub facet_count: usize,
    pub forbidden_strata: Vec<Vec<usize>>,
    #[serde(with = "crate::json::big_int_rows")]
    pub kernel_basis: Vec<Vec<BigInt>>,
    #[serde(rename = "nu_P")]
    pub nu_p: Vec<Scalar>,
}

pub fn quotient_data(p: &SimplePolytope) -> Result<QuotientData, QuotientError> {
    let (rho, lambda) = p.normal_data()?;
    let forbidden = forbidden_strata(p.family(), p.facet_count())?;
    let basis = kernel_lattice(&rho)?;
    let neg: Vec<Scalar> = lambda.iter().map(|x| -x).collect();
    let nu_p = apply_basis(&basis, &neg);
    Ok(QuotientData {
        facet_count: p.facet_count(),
        forbidden_strata: forbidden,
        kernel_basis: basis,
        nu_p,
    })
}
