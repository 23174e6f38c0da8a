#![allow(dead_code)]

use std::collections::BTreeSet;

use nctoric::hochschild::{ChainElement, FinDimAlgebra};
use nctoric::linalg::{IntMatrix, ScalarMatrix};
use nctoric::lvm::{Complex, Configuration};
use nctoric::Scalar;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::Rng;

pub fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn phi() -> Scalar {
    (Scalar::one() + Scalar::sqrt_of(5)) / Scalar::from_int(2)
}

pub fn c(re: i64, im: i64) -> Complex {
    Complex::from_ints(re, im)
}

pub fn base_algebras() -> Vec<FinDimAlgebra> {
    vec![
        FinDimAlgebra::ground_field(),
        FinDimAlgebra::product_of_fields(2),
        FinDimAlgebra::product_of_fields(3),
        FinDimAlgebra::truncated_polynomial(2),
        FinDimAlgebra::truncated_polynomial(3),
        FinDimAlgebra::cyclic_group_algebra(2),
        FinDimAlgebra::cyclic_group_algebra(3),
        FinDimAlgebra::upper_triangular_2(),
    ]
}

/// A base algebra of dimension ≤ 3 in a random invertible integer basis.
pub fn random_algebra(rng: &mut StdRng) -> FinDimAlgebra {
    let bases = base_algebras();
    let a = &bases[rng.gen_range(0..bases.len())];
    let d = a.dim();
    loop {
        let p: Vec<Vec<BigRational>> = (0..d)
            .map(|_| (0..d).map(|_| q(rng.gen_range(-2..=2))).collect())
            .collect();
        if let Ok(b) = a.change_basis(&p) {
            return b;
        }
    }
}

pub fn random_reduced_chain(a: &FinDimAlgebra, degree: usize, rng: &mut StdRng) -> ChainElement {
    let mut x = ChainElement::zero(degree, true);
    for _ in 0..rng.gen_range(1..=3) {
        let t: Vec<usize> = (0..=degree).map(|_| rng.gen_range(0..a.dim())).collect();
        let term = ChainElement::basis(a, &t, q(rng.gen_range(-3..=3)), true).unwrap();
        x = x.add(&term).unwrap();
    }
    x
}

/// `dim A − rank span{ab − ba}` from the multiplication table alone.
pub fn commutator_quotient_dim(a: &FinDimAlgebra) -> usize {
    let d = a.dim();
    let e = |i: usize| (0..d).map(|j| q((i == j) as i64)).collect::<Vec<_>>();
    let mut rows = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let ab = a.multiply(&e(i), &e(j));
            let ba = a.multiply(&e(j), &e(i));
            rows.push(ab.iter().zip(&ba).map(|(x, y)| Scalar::from_rational(x - y)).collect::<Vec<_>>());
        }
    }
    d - ScalarMatrix::from_rows(&rows).unwrap().rank()
}

pub fn random_scalar(rng: &mut StdRng) -> Scalar {
    let a = Scalar::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=9));
    if rng.gen_bool(0.5) {
        return a;
    }
    let d = [2u64, 3, 5, 7][rng.gen_range(0..4)];
    let b = Scalar::from_ratio(rng.gen_range(1..=9), rng.gen_range(1..=5));
    let b = if rng.gen_bool(0.5) { b } else { -b };
    a + b * Scalar::sqrt_of(d)
}

/// Random product of `S` and powers of `T`; determinant 1.
pub fn random_sl2(rng: &mut StdRng) -> [[i64; 2]; 2] {
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..rng.gen_range(1..=5) {
        let step = if rng.gen_bool(0.5) {
            [[0, -1], [1, 0]]
        } else {
            let k = rng.gen_range(-3..=3);
            [[1, k], [0, 1]]
        };
        m = [
            [m[0][0] * step[0][0] + m[0][1] * step[1][0], m[0][0] * step[0][1] + m[0][1] * step[1][1]],
            [m[1][0] * step[0][0] + m[1][1] * step[1][0], m[1][0] * step[0][1] + m[1][1] * step[1][1]],
        ];
    }
    m
}

/// Planar configuration with `n` points, optionally perturbed in `ℚ(√2)`;
/// not necessarily admissible.
pub fn random_planar_configuration(n: usize, irrational: bool, rng: &mut StdRng) -> Option<Configuration> {
    let pts = (0..n)
        .map(|_| {
            let mut re = s(rng.gen_range(-4..=4));
            let im = s(rng.gen_range(-4..=4));
            if irrational && rng.gen_bool(0.4) {
                re = re + Scalar::sqrt_of(2) * s(rng.gen_range(-1..=1));
            }
            Complex::new(re, im)
        })
        .collect();
    Configuration::planar(pts).ok()
}

/// f-vector of the boundary of `conv(points)` for points in general
/// position in `ℝ⁴`, by testing every 4-subset as a supporting hyperplane.
pub fn simplicial_f_vector_4d(points: &[[i64; 4]]) -> Vec<BigInt> {
    let n = points.len();
    let orient = |sub: &[usize], other: usize| -> BigInt {
        let rows: Vec<Vec<i64>> = sub
            .iter()
            .chain(std::iter::once(&other))
            .map(|&i| std::iter::once(1).chain(points[i]).collect())
            .collect();
        IntMatrix::from_rows(&rows).det()
    };
    let mut facets: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let sub = [a, b, c, d];
                    let signs: BTreeSet<i32> = (0..n)
                        .filter(|i| !sub.contains(i))
                        .map(|i| {
                            let v = orient(&sub, i);
                            if v > BigInt::from(0) {
                                1
                            } else if v < BigInt::from(0) {
                                -1
                            } else {
                                0
                            }
                        })
                        .collect();
                    if signs.len() == 1 && !signs.contains(&0) {
                        facets.push(sub.to_vec());
                    }
                }
            }
        }
    }
    let mut faces: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); 4];
    for f in &facets {
        for mask in 1u32..16 {
            let sub: Vec<usize> = (0..4).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
            faces[sub.len() - 1].insert(sub);
        }
    }
    std::iter::once(BigInt::from(1))
        .chain(faces.iter().map(|s| BigInt::from(s.len())))
        .collect()
}

/// Points `(t, t², t³, t⁴)`, `t = 0..n`.
pub fn moment_curve(n: i64) -> Vec<[i64; 4]> {
    (0..n).map(|t| [t, t * t, t * t * t, t * t * t * t]).collect()
}

/// Facet count `n(n−3)/2` of the cyclic 4-polytope with `n` vertices.
pub fn cyclic_facets_4d(n: i64) -> BigInt {
    BigInt::from(n * (n - 3) / 2)
}
