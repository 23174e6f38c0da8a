//! f-, h- and g-vectors of simplicial polytopes, Dehn–Sommerville symmetry,
//! the Macaulay shadow operator and the M-vector test.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FvecError {
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("f₋₁ must be 1, found {0}")]
    BadLeadingEntry(BigInt),
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn check_f(f: &[BigInt], d: usize) -> Result<(), FvecError> {
    if f.len() != d + 1 {
        return Err(FvecError::LengthMismatch { expected: d + 1, found: f.len() });
    }
    if !f[0].is_one() {
        return Err(FvecError::BadLeadingEntry(f[0].clone()));
    }
    Ok(())
}

/// `hᵢ = Σⱼ C(d−j, d−i)(−1)^{i−j} f_{j−1}` for `i = 0..d`; `f[0]` is `f₋₁`.
pub fn h_from_f(f: &[BigInt], d: usize) -> Result<Vec<BigInt>, FvecError> {
    check_f(f, d)?;
    let d = d as i64;
    Ok((0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let term = binomial(d - j, d - i) * &f[j as usize];
                    if (i - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect())
}

/// Inverse transform: `f_{j−1} = Σ_{i≤j} C(d−i, d−j) hᵢ`.
pub fn f_from_h(h: &[BigInt], d: usize) -> Result<Vec<BigInt>, FvecError> {
    if h.len() != d + 1 {
        return Err(FvecError::LengthMismatch { expected: d + 1, found: h.len() });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|j| (0..=j).map(|i| binomial(d - i, d - j) * &h[i as usize]).sum())
        .collect())
}

pub fn check_dehn_sommerville(h: &[BigInt]) -> bool {
    h.iter().eq(h.iter().rev())
}

/// `g₀ = h₀`, `gᵢ = hᵢ − hᵢ₋₁` for `i ≤ ⌊d/2⌋`.
pub fn g_from_h(h: &[BigInt]) -> Vec<BigInt> {
    let d = h.len().saturating_sub(1);
    (0..=d / 2)
        .map(|i| if i == 0 { h[0].clone() } else { &h[i] - &h[i - 1] })
        .collect()
}

/// Terms `(nₖ, k)` of the decreasing expansion `l = C(n_i, i) + C(n_{i−1}, i−1) + …`.
pub fn binomial_expansion(l: &BigInt, i: usize) -> Vec<(i64, i64)> {
    let mut rest = l.clone();
    let mut out = Vec::new();
    let mut k = i as i64;
    while k >= 1 && rest.is_positive() {
        let mut n = k;
        while binomial(n + 1, k) <= rest {
            n += 1;
        }
        rest -= binomial(n, k);
        out.push((n, k));
        k -= 1;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum ShadowRule {
    /// `l^⟨i⟩ = Σ C(nₖ+1, k+1)`.
    #[default]
    Macaulay,
    /// `Σ C(nₖ, k+1)`, without the shifts; kept for comparison only.
    Unshifted,
}

pub fn shadow(l: &BigInt, i: usize) -> BigInt {
    shadow_with(l, i, ShadowRule::Macaulay)
}

pub fn shadow_with(l: &BigInt, i: usize, rule: ShadowRule) -> BigInt {
    let shift = match rule {
        ShadowRule::Macaulay => 1,
        ShadowRule::Unshifted => 0,
    };
    binomial_expansion(l, i)
        .into_iter()
        .map(|(n, k)| binomial(n + shift, k + 1))
        .sum()
}

pub fn is_m_vector(l: &[BigInt]) -> bool {
    is_m_vector_with(l, ShadowRule::Macaulay)
}

pub fn is_m_vector_with(l: &[BigInt], rule: ShadowRule) -> bool {
    if l.first().is_none_or(|x| !x.is_one()) {
        return false;
    }
    if l.iter().any(Signed::is_negative) {
        return false;
    }
    (1..l.len().saturating_sub(1)).all(|i| l[i + 1] <= shadow_with(&l[i], i, rule))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GTheoremCheck {
    #[serde(with = "crate::json::big_ints")]
    pub h: Vec<BigInt>,
    #[serde(with = "crate::json::big_ints")]
    pub g: Vec<BigInt>,
    pub ds: bool,
    pub h0: bool,
    pub m_vector: bool,
    pub pass: bool,
}

pub fn g_theorem_necessity(f: &[BigInt], d: usize) -> Result<GTheoremCheck, FvecError> {
    g_theorem_necessity_with(f, d, ShadowRule::Macaulay)
}

pub fn g_theorem_necessity_with(f: &[BigInt], d: usize, rule: ShadowRule) -> Result<GTheoremCheck, FvecError> {
    let h = h_from_f(f, d)?;
    let g = g_from_h(&h);
    let ds = check_dehn_sommerville(&h);
    let h0 = h[0].is_one();
    let m_vector = is_m_vector_with(&g, rule);
    Ok(GTheoremCheck {
        pass: ds && h0 && m_vector,
        h,
        g,
        ds,
        h0,
        m_vector,
    })
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
