//! Hirzebruch–Jung continued fractions `x = a₁ − 1/(a₂ − 1/(…))` and the
//! resolution of two-dimensional cones they drive.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::fan::{det2, Cone, Fan, FanError};
use crate::linalg::IntMatrix;
use crate::scalar::{Scalar, ScalarError};

/// Maximum number of states searched for a repetition.
pub const PERIOD_SEARCH_BOUND: usize = 10_000;
/// Digits returned for irrational sources when no depth is given.
pub const DEFAULT_DEPTH: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HjError {
    #[error("value {0} is not greater than 1")]
    OutOfRange(String),
    #[error("digit list evaluates through a division by zero")]
    DivisionByZero,
    #[error("invalid digit list: {0}")]
    InvalidDigits(String),
    #[error("cone cannot be brought to standard form: {0}")]
    NotNormalizable(String),
    #[error(transparent)]
    Fan(#[from] FanError),
    #[error(transparent)]
    Field(#[from] ScalarError),
}

/// Lazy digit stream; single consumer.
#[derive(Clone, Debug)]
pub struct HjDigits {
    state: Option<Scalar>,
}

impl Iterator for HjDigits {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let x = self.state.take()?;
        let a = x.ceil();
        let rest = Scalar::from_bigint(a.clone()) - &x;
        if !rest.is_zero() {
            self.state = Some(rest.inv().expect("nonzero"));
        }
        Some(a)
    }
}

pub fn hj_stream(x: &Scalar) -> Result<HjDigits, HjError> {
    if *x <= Scalar::one() {
        return Err(HjError::OutOfRange(x.to_string()));
    }
    Ok(HjDigits { state: Some(x.clone()) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HjExpansion {
    pub source: Scalar,
    /// All digits for rational sources, the first `depth` otherwise.
    #[serde(with = "crate::json::big_ints")]
    pub digits: Vec<BigInt>,
    pub finite: bool,
    /// Digits before the repeating block, when a repetition was found.
    #[serde(with = "opt_ints")]
    pub prefix: Option<Vec<BigInt>>,
    #[serde(with = "opt_ints")]
    pub period: Option<Vec<BigInt>>,
    /// Set when an irrational source showed no repetition within the search bound.
    pub period_search_exhausted: bool,
}

mod opt_ints {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(xs) => crate::json::big_ints::serialize(xs, s),
            None => s.serialize_none(),
        }
    }
}

pub fn hj_expand(x: &Scalar, depth: Option<usize>) -> Result<HjExpansion, HjError> {
    let stream = hj_stream(x)?;
    if x.is_rational() {
        return Ok(HjExpansion {
            source: x.clone(),
            digits: stream.collect(),
            finite: true,
            prefix: None,
            period: None,
            period_search_exhausted: false,
        });
    }
    let depth = depth.unwrap_or(DEFAULT_DEPTH);
    let mut seen: HashMap<Scalar, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut cur = x.clone();
    let mut cycle = None;
    for step in 0..PERIOD_SEARCH_BOUND {
        if let Some(&first) = seen.get(&cur) {
            cycle = Some((first, step));
            break;
        }
        seen.insert(cur.clone(), step);
        let a = cur.ceil();
        states.push(a.clone());
        cur = (Scalar::from_bigint(a) - &cur).inv()?;
    }
    let (digits, prefix, period) = match cycle {
        Some((start, end)) => {
            let prefix = states[..start].to_vec();
            let period = states[start..end].to_vec();
            let digits = (0..depth)
                .map(|i| {
                    if i < start {
                        prefix[i].clone()
                    } else {
                        period[(i - start) % period.len()].clone()
                    }
                })
                .collect();
            (digits, Some(prefix), Some(period))
        }
        None => (hj_stream(x)?.take(depth).collect(), None, None),
    };
    Ok(HjExpansion {
        source: x.clone(),
        digits,
        finite: false,
        period_search_exhausted: cycle.is_none(),
        prefix,
        period,
    })
}

/// Exact value of `a₁ − 1/(a₂ − … − 1/a_r)`.
pub fn hj_evaluate(digits: &[BigInt]) -> Result<Scalar, HjError> {
    let (last, rest) = digits
        .split_last()
        .ok_or_else(|| HjError::InvalidDigits("empty digit list".into()))?;
    let mut v = Scalar::from_bigint(last.clone());
    for a in rest.iter().rev() {
        let inv = v.inv().map_err(|_| HjError::DivisionByZero)?;
        v = Scalar::from_bigint(a.clone()) - inv;
    }
    Ok(v)
}

/// Subdivision of a planar cone by the rays of its Hirzebruch–Jung resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    /// Boundary ray, inserted rays, boundary ray, in angular order.
    pub rays: Vec<Vec<Scalar>>,
    #[serde(with = "crate::json::big_ints")]
    pub digits: Vec<BigInt>,
    /// Unimodular map sending the first ray to `(0,1)` and the second into `{x > 0}`,
    /// so the cone becomes `cone((0,1), (m,−k))`.
    pub frame: IntMatrix,
    /// Irrational case: the last wedge is left unresolved.
    pub truncated: bool,
    pub fan: Fan,
}

impl Resolution {
    pub fn inserted(&self) -> &[Vec<Scalar>] {
        &self.rays[1..self.rays.len() - 1]
    }

    pub fn inserted_count(&self) -> usize {
        self.rays.len() - 2
    }

    pub fn first_ray(&self) -> Option<Vec<BigInt>> {
        to_ints(&self.rays[0])
    }

    pub fn last_ray(&self) -> Option<Vec<BigInt>> {
        to_ints(self.rays.last().expect("two boundary rays"))
    }

    pub fn inserted_integer_rays(&self) -> impl Iterator<Item = Option<Vec<BigInt>>> + '_ {
        self.inserted().iter().map(|r| to_ints(r))
    }

    /// Determinants of consecutive ray pairs.
    pub fn wedge_determinants(&self) -> Vec<Scalar> {
        self.rays.windows(2).map(|w| det2(&w[0], &w[1])).collect()
    }
}

fn to_ints(v: &[Scalar]) -> Option<Vec<BigInt>> {
    v.iter().map(Scalar::to_integer).collect()
}

fn big(x: &BigInt) -> Scalar {
    Scalar::from_bigint(x.clone())
}

/// Resolves `σ`. Rational cones are resolved completely; cones with one
/// irrational ray get `depth` (default [`DEFAULT_DEPTH`]) inserted rays.
pub fn resolve_cone(sigma: &Cone, depth: Option<usize>) -> Result<Resolution, HjError> {
    if sigma.dim() != 2 || sigma.rays().len() != 2 {
        return Err(HjError::NotNormalizable("need a two-dimensional cone with two rays".into()));
    }
    let r = sigma.rays();
    let (mut a, mut b) = match (to_ints(&r[0]), to_ints(&r[1])) {
        (Some(a), Some(_)) => (a, r[1].clone()),
        (Some(a), None) => (a, r[1].clone()),
        (None, Some(b)) => (b, r[0].clone()),
        (None, None) => return Err(HjError::NotNormalizable("both rays are irrational".into())),
    };
    let rational = b.iter().all(Scalar::is_rational);
    let a_s: Vec<Scalar> = a.iter().map(big).collect();
    if rational && det2(&b, &a_s).is_negative() {
        let old_a = a_s.clone();
        a = to_ints(&b).expect("rational");
        b = old_a;
    }
    let a_s: Vec<Scalar> = a.iter().map(big).collect();

    // c with det(c, a) = 1
    let e = a[1].extended_gcd(&a[0]);
    debug_assert!(e.gcd.is_one());
    let mut c = vec![e.x.clone(), -e.y.clone()];
    let mut c_s: Vec<Scalar> = c.iter().map(big).collect();
    if det2(&b, &a_s).is_negative() {
        c = c.into_iter().map(|x| -x).collect();
        c_s = c.iter().map(big).collect();
    }
    let dca = det2(&c_s, &a_s);
    let p = det2(&b, &a_s) / dca.clone();
    let q = det2(&c_s, &b) / dca;
    let t = (&q / &p).floor() + BigInt::one();
    let c: Vec<BigInt> = vec![&c[0] + &t * &a[0], &c[1] + &t * &a[1]];
    let q = q - &p * &big(&t);
    let det_ca = &c[0] * &a[1] - &c[1] * &a[0];
    // frame = [c a]^{-1}, integral because det = ±1
    let frame = IntMatrix::from_big_rows(
        &[
            vec![&a[1] * &det_ca, -&a[0] * &det_ca],
            vec![-&c[1] * &det_ca, &c[0] * &det_ca],
        ],
        2,
    );

    let (digits, truncated) = if rational {
        let m = p.to_integer().expect("integral");
        let k = -q.to_integer().expect("integral");
        if m.is_one() {
            (Vec::new(), false)
        } else {
            let x = Scalar::from_rational(num_rational::BigRational::new(m, k));
            (hj_stream(&x)?.collect::<Vec<_>>(), false)
        }
    } else {
        let x = -(&p / &q);
        let d = depth.unwrap_or(DEFAULT_DEPTH);
        (hj_stream(&x)?.take(d).collect(), true)
    };

    // u₀ = (0,1), u₁ = (1,0), u_{i+1} = a_i·u_i − u_{i−1}
    let r = digits.len();
    let mut frame_rays: Vec<(BigInt, BigInt)> = vec![(BigInt::zero(), BigInt::one())];
    if r > 0 {
        frame_rays.push((BigInt::one(), BigInt::zero()));
    }
    for i in 1..r {
        let (x1, y1) = &frame_rays[i];
        let (x0, y0) = &frame_rays[i - 1];
        let next = (&digits[i - 1] * x1 - x0, &digits[i - 1] * y1 - y0);
        frame_rays.push(next);
    }
    let mut rays: Vec<Vec<Scalar>> = frame_rays
        .iter()
        .map(|(x, y)| vec![big(&(x * &c[0] + y * &a[0])), big(&(x * &c[1] + y * &a[1]))])
        .collect();
    rays.push(b.clone());
    let cones = rays
        .windows(2)
        .map(|w| Cone::new(2, w.to_vec()))
        .collect::<Result<Vec<_>, _>>()?;
    let fan = Fan::new(2, cones)?;
    let rays = rays
        .into_iter()
        .map(|r| crate::fan::normalize_ray(&r).expect("nonzero ray"))
        .collect();
    Ok(Resolution {
        rays,
        digits,
        frame,
        truncated,
        fan,
    })
}

/// Digits as machine integers, for display and tests.
pub fn digits_i64(d: &[BigInt]) -> Option<Vec<i64>> {
    d.iter().map(ToPrimitive::to_i64).collect()
}
