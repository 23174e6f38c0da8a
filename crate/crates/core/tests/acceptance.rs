//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every comparison is exact. The run fails if the set of failing criteria
//! differs from `EXPECTED_FAILURES`.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use common::*;
use nctoric::fan::{normal_fan, Cone};
use nctoric::fvec::{check_dehn_sommerville, g_theorem_necessity, h_from_f, is_m_vector, to_big};
use nctoric::hj::{hj_evaluate, hj_expand, resolve_cone};
use nctoric::hochschild::{
    connes_b, convolution_algebra, hh_ranks, hochschild_boundary, hp_truncated, FinDimAlgebra, FiniteGroupoid,
};
use nctoric::lvm::{self, Configuration, LeafType};
use nctoric::nctorus::{kronecker_classify, mat2, mobius_apply, morita_equivalent, LeafType as Kronecker};
use nctoric::polytope::SimplePolytope;
use nctoric::quotient::quotient_data;
use nctoric::Scalar;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// All checks are exact: no numeric tolerance anywhere.
const TOLERANCE: i64 = 0;
const SEED: u64 = 0x006e_6374_6f72_6963;
const TIME_BUDGET_SECS: u64 = 60;
const HJ_MAX_DENOMINATOR: i64 = 50;
const HJ_IRRATIONAL_DEPTH: usize = 5;
const RANDOM_ALGEBRAS: usize = 20;
const RANDOM_CHAINS: usize = 1000;
const RANDOM_SCALARS: usize = 100;
const RANDOM_SL2: usize = 50;
const RANDOM_CONFIGURATIONS: usize = 200;

/// The literal five-vector configuration of criterion 3 violates the Siegel
/// condition (0 is not in the convex hull of 1, i, 2−2i), so "admissible"
/// cannot hold.
const EXPECTED_FAILURES: &[usize] = &[3];

struct Report {
    failures: Vec<usize>,
}

impl Report {
    fn record(&mut self, n: usize, title: &str, checks: Vec<(&str, bool)>) {
        let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        if failed.is_empty() {
            println!("criterion {n:>2}: PASS  {title}");
        } else {
            println!("criterion {n:>2}: FAIL  {title}  [failed: {}]", failed.join(", "));
            self.failures.push(n);
        }
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    to_big(v)
}

fn criterion_1() -> Vec<(&'static str, bool)> {
    let square = SimplePolytope::unit_square();
    let fan = normal_fan(&square).unwrap();
    let rect = SimplePolytope::boxed(&[(s(0), s(3)), (s(0), s(1))]).unwrap();
    let rect_fan = normal_fan(&rect).unwrap();
    vec![
        ("9 cones", fan.cones().len() == 9),
        ("1 origin", fan.cones_of_dim(0).len() == 1),
        ("4 rays", fan.cones_of_dim(1).len() == 4),
        ("4 quadrants", fan.cones_of_dim(2).len() == 4),
        ("complete", fan.is_complete()),
        ("rectangle fan identical", rect_fan == fan),
    ]
}

fn criterion_2() -> Vec<(&'static str, bool)> {
    let q = quotient_data(&SimplePolytope::unit_square()).unwrap();
    // facets 0..3 are x ≥ 0, x ≤ 1, y ≥ 0, y ≤ 1
    vec![
        ("forbidden strata {0,1},{2,3}", q.forbidden_strata == vec![vec![0, 1], vec![2, 3]]),
        ("kernel rank 2", q.kernel_basis.len() == 2),
        ("nu_P = (1,1)", q.nu_p == vec![s(1), s(1)]),
    ]
}

fn five(l5: nctoric::lvm::Complex) -> Configuration {
    Configuration::planar(vec![c(1, 0), c(0, 1), c(0, 1), c(1, 0), l5]).unwrap()
}

fn lvm_rational_checks(cfg: &Configuration) -> Vec<(&'static str, bool)> {
    let adm = lvm::check_admissible(cfg);
    let gale = lvm::gale_transform(cfg, None).unwrap();
    let poly = lvm::polytope_from_gale(&gale).unwrap();
    let fiber = lvm::generic_fiber(cfg).unwrap();
    vec![
        ("admissible", adm.admissible()),
        ("condition K", lvm::condition_k(cfg) == Ok(true)),
        ("compact tori", lvm::leaf_dichotomy(cfg) == Ok(LeafType::CompactTori)),
        ("square with one redundant row", poly.vertices().len() == 4 && poly.redundant_facets().len() == 1),
        ("rational fiber", fiber.rational),
        ("slope 1", fiber.slope == Some(s(1))),
    ]
}

fn criterion_3() -> Vec<(&'static str, bool)> {
    lvm_rational_checks(&five(c(2, -2)))
}

fn criterion_4() -> Vec<(&'static str, bool)> {
    let cfg = Configuration::planar(vec![
        nctoric::lvm::Complex::new(Scalar::sqrt_of(2), s(0)),
        c(0, 1),
        c(0, 1),
        c(1, 0),
        c(2, -2),
    ])
    .unwrap();
    let fiber = lvm::generic_fiber(&cfg).unwrap();
    vec![
        ("condition K false", lvm::condition_k(&cfg) == Ok(false)),
        ("dense leaves", lvm::leaf_dichotomy(&cfg) == Ok(LeafType::DenseLeaves)),
        ("fiber not rational", !fiber.rational),
        ("slope sqrt(2)", fiber.slope == Some(Scalar::sqrt_of(2))),
    ]
}

fn teardrop_orders(p: i64) -> BTreeSet<BigInt> {
    let cfg = Configuration::planar(vec![c(1, 0), c(0, 1), c(p, 0), c(-1, -1)]).unwrap();
    let w = lvm::orbifold_weights_1d(&cfg).unwrap();
    w.endpoints.iter().filter_map(|e| e.order.clone()).collect()
}

fn criterion_5() -> Vec<(&'static str, bool)> {
    let singular = |p: i64| teardrop_orders(p).into_iter().max();
    vec![
        ("p=4 order 3", singular(4) == Some(BigInt::from((2 * 4 + 1) / 3))),
        ("p=7 order 5", singular(7) == Some(BigInt::from((2 * 7 + 1) / 3))),
        ("p=5 orders {3,11}", teardrop_orders(5) == [BigInt::from(3), BigInt::from(11)].into()),
    ]
}

fn criterion_6() -> Vec<(&'static str, bool)> {
    let (mut round_trip, mut counts, mut smooth) = (true, true, true);
    for m in 2..=HJ_MAX_DENOMINATOR {
        for k in 1..m {
            if num_integer::gcd(m, k) != 1 {
                continue;
            }
            let x = Scalar::from_ratio(m, k);
            let e = hj_expand(&x, None).unwrap();
            round_trip &= hj_evaluate(&e.digits).unwrap() == x;
            let r = resolve_cone(&Cone::from_int_rays(&[[0, 1], [m, -k]]).unwrap(), None).unwrap();
            counts &= r.inserted_count() == e.digits.len();
            smooth &= r.wedge_determinants().iter().all(|d| d.abs() == Scalar::one());
        }
    }
    let sigma = Cone::new(2, vec![vec![s(0), s(1)], vec![Scalar::sqrt_of(2), s(-1)]]).unwrap();
    let r = resolve_cone(&sigma, Some(HJ_IRRATIONAL_DEPTH)).unwrap();
    vec![
        ("evaluate . expand = id", round_trip),
        ("inserted rays = digit count", counts),
        ("adjacent determinants ±1", smooth),
        ("sqrt(2) depth 5 digits [2,2,4,2,4]", r.digits == ints(&[2, 2, 4, 2, 4]) && r.truncated),
    ]
}

fn criterion_7() -> Vec<(&'static str, bool)> {
    let oct = g_theorem_necessity(&ints(&[1, 6, 12, 8]), 3).unwrap();
    let bad = g_theorem_necessity(&ints(&[1, 6, 12, 7]), 3).unwrap();
    let cyclic_f = simplicial_f_vector_4d(&moment_curve(7));
    let cyclic = g_theorem_necessity(&cyclic_f, 4).unwrap();
    let simplex_f: Vec<BigInt> = (0..=4).map(|i| nctoric::fvec::binomial(5, i)).collect();
    let mut sums = true;
    for (f, d) in [(ints(&[1, 6, 12, 8]), 3), (cyclic_f.clone(), 4), (simplex_f, 4)] {
        let h = h_from_f(&f, d).unwrap();
        sums &= h.iter().sum::<BigInt>() == f[d] && h[d] == BigInt::from(1);
    }
    vec![
        ("octahedron h = (1,3,3,1)", oct.h == ints(&[1, 3, 3, 1])),
        ("octahedron Dehn-Sommerville", check_dehn_sommerville(&oct.h)),
        ("g = (1,2) M-vector", oct.g == ints(&[1, 2]) && is_m_vector(&oct.g)),
        ("octahedron passes", oct.pass),
        ("(1,6,12,7) fails", !bad.pass),
        ("C(4,7) oracle f = (1,7,21,28,14)", cyclic_f == ints(&[1, 7, 21, 28, 14]) && cyclic_f[4] == cyclic_facets_4d(7)),
        ("C(4,7) passes", cyclic.pass && cyclic.h == ints(&[1, 3, 6, 3, 1])),
        ("sum h = f_(d-1) and h_d = 1", sums),
    ]
}

fn criterion_8(rng: &mut StdRng) -> Vec<(&'static str, bool)> {
    let (mut dd, mut bb, mut db, mut hh0) = (true, true, true, true);
    let per_algebra = RANDOM_CHAINS / RANDOM_ALGEBRAS;
    for _ in 0..RANDOM_ALGEBRAS {
        let a = random_algebra(rng);
        for _ in 0..per_algebra {
            let degree = rng.gen_range(1..=3);
            let x = random_reduced_chain(&a, degree, rng);
            let bx = connes_b(&a, &x);
            bb &= connes_b(&a, &bx).is_zero();
            let dx = hochschild_boundary(&a, &x).unwrap();
            if degree >= 2 {
                dd &= hochschild_boundary(&a, &dx).unwrap().is_zero();
            }
            let anti = hochschild_boundary(&a, &bx).unwrap().add(&connes_b(&a, &dx)).unwrap();
            db &= anti.is_zero();
        }
        hh0 &= hh_ranks(&a, 0).unwrap()[0] == commutator_quotient_dim(&a);
    }
    vec![
        ("d^2 = 0", dd),
        ("B^2 = 0", bb),
        ("dB + Bd = 0", db),
        ("HH_0 = dim A/[A,A]", hh0),
    ]
}

fn criterion_9() -> Vec<(&'static str, bool)> {
    let field = FinDimAlgebra::ground_field();
    let pair = convolution_algebra(&FiniteGroupoid::pair(2)).unwrap();
    let two_points = convolution_algebra(&FiniteGroupoid::discrete(2)).unwrap();
    let stable = |a: &FinDimAlgebra, expected: (usize, usize)| {
        let r = hp_truncated(a, 3, 1).unwrap();
        r.stabilized && r.history.iter().all(|h| (h.even, h.odd) == expected)
    };
    vec![
        ("pair groupoid HH_0..3 = field", hh_ranks(&pair, 3).unwrap() == hh_ranks(&field, 3).unwrap()),
        ("field HH = (1,0,0,0)", hh_ranks(&field, 3).unwrap() == vec![1, 0, 0, 0]),
        ("field HP stable (1,0)", stable(&field, (1, 0))),
        ("two-point groupoid HP stable (2,0)", stable(&two_points, (2, 0))),
    ]
}

fn criterion_10(rng: &mut StdRng) -> Vec<(&'static str, bool)> {
    let classify = (0..RANDOM_SCALARS).all(|_| {
        let x = random_scalar(rng);
        let expected = if x.is_rational() { Kronecker::ClosedLeaves } else { Kronecker::DenseLeaves };
        kronecker_classify(&x) == expected
    });
    let thetas = [Scalar::sqrt_of(2), Scalar::sqrt_of(3), phi()];
    let mut sl2 = true;
    for _ in 0..RANDOM_SL2 {
        let m = random_sl2(rng);
        let m = mat2(m[0][0], m[0][1], m[1][0], m[1][1]);
        for t in &thetas {
            let image = mobius_apply(&m, t).unwrap();
            let r = morita_equivalent(t, &image, None).unwrap();
            sl2 &= r.equivalent && r.witness.is_some_and(|w| mobius_apply(&w, t).unwrap() == image);
        }
    }
    let distinct = !morita_equivalent(&Scalar::sqrt_of(2), &Scalar::sqrt_of(3), None).unwrap().equivalent;
    let sample = [
        Scalar::sqrt_of(2),
        Scalar::one() + Scalar::sqrt_of(2),
        Scalar::sqrt_of(2) / s(2),
        Scalar::sqrt_of(3),
        s(2) + Scalar::sqrt_of(3),
        phi(),
    ];
    let rel = |a: &Scalar, b: &Scalar| morita_equivalent(a, b, None).unwrap().equivalent;
    let table: Vec<Vec<bool>> = sample.iter().map(|a| sample.iter().map(|b| rel(a, b)).collect()).collect();
    let n = sample.len();
    let reflexive = (0..n).all(|i| table[i][i]);
    let symmetric = (0..n).all(|i| (0..n).all(|j| table[i][j] == table[j][i]));
    let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(table[i][j] && table[j][k]) || table[i][k])));
    vec![
        ("classification matches rationality", classify),
        ("SL2(Z) images equivalent", sl2),
        ("sqrt(2) !~ sqrt(3)", distinct),
        ("reflexive", reflexive),
        ("symmetric", symmetric),
        ("transitive", transitive),
    ]
}

fn criterion_11(rng: &mut StdRng) -> Vec<(&'static str, bool)> {
    let (mut tested, mut agree) = (0, true);
    let (mut compact, mut dense) = (0, 0);
    while tested < RANDOM_CONFIGURATIONS {
        let irrational = tested % 2 == 1;
        let n = rng.gen_range(4..=6);
        let Some(cfg) = random_planar_configuration(n, irrational, rng) else { continue };
        if !lvm::check_admissible(&cfg).admissible() {
            continue;
        }
        let (Ok(k), Ok(leaf)) = (lvm::condition_k(&cfg), lvm::leaf_dichotomy(&cfg)) else { continue };
        tested += 1;
        agree &= k == (leaf == LeafType::CompactTori);
        if leaf == LeafType::CompactTori {
            compact += 1;
        } else {
            dense += 1;
        }
    }
    vec![
        ("condition K <=> compact tori on all samples", agree),
        ("both outcomes sampled", compact > 0 && dense > 0),
    ]
}

fn cli_invocations() -> Vec<Vec<String>> {
    let d = |n: &str| data(n).display().to_string();
    let v = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    vec![
        v(&["fan", "of-polytope", &d("square.json")]),
        v(&["fan", "of-polytope", &d("rectangle.json")]),
        v(&["fan", "classify", &d("cone_1_3.json")]),
        v(&["fan", "svg", &d("square.json")]),
        v(&["polytope", "info", &d("square.json")]),
        v(&["quotient", "data", "--polytope", &d("square.json")]),
        v(&["lvm", "check", &d("lvm_rational.json")]),
        v(&["lvm", "dichotomy", &d("lvm_rational.json")]),
        v(&["lvm", "fiber", &d("lvm_rational.json")]),
        v(&["lvm", "gale", &d("lvm_rational.json")]),
        v(&["lvm", "polytope", &d("lvm_rational.json")]),
        v(&["lvm", "dichotomy", &d("lvm_irrational.json")]),
        v(&["lvm", "fiber", &d("lvm_irrational.json")]),
        v(&["lvm", "strata", &d("lvm_siegel.json")]),
        v(&["lvm", "orbifold", &d("teardrop4.json")]),
        v(&["lvm", "orbifold", &d("teardrop7.json")]),
        v(&["lvm", "orbifold", &d("teardrop5.json")]),
        v(&["hj", "expand", "--value", "7/5"]),
        v(&["hj", "expand", "--value", "sqrt(2)", "--depth", "5"]),
        v(&["hj", "resolve", "--cone", &d("cone_1_3.json")]),
        v(&["hj", "resolve", "--cone", &d("cone_sqrt2.json"), "--depth", "5"]),
        v(&["nctorus", "classify", "--theta", "1/2+1/2*sqrt(5)"]),
        v(&["nctorus", "morita", "--theta1", "sqrt(2)", "--theta2", "1+sqrt(2)"]),
        v(&["nctorus", "morita", "--theta1", "sqrt(2)", "--theta2", "sqrt(3)"]),
        v(&["gvec", "--f", "1,6,12,8", "--d", "3"]),
        v(&["gvec", "--f", "1,6,12,7", "--d", "3"]),
        v(&["hh", "ranks", "--algebra", &d("pair2.json"), "--upto", "3"]),
        v(&["hh", "hp", "--algebra", &d("fields2.json"), "--N", "3"]),
        v(&["hh", "hp", "--N", "3"]),
        v(&["hj", "expand", "--value", "1/2"]),
    ]
}

fn criterion_12() -> Vec<(&'static str, bool)> {
    let bin = env!("CARGO_BIN_EXE_nctoric");
    let run = |args: &[String]| Command::new(bin).args(args).output().expect("binary runs");
    let mut identical = true;
    let mut clean_exits = true;
    for args in cli_invocations() {
        let (a, b) = (run(&args), run(&args));
        identical &= a.stdout == b.stdout && a.status.code() == b.status.code();
        clean_exits &= matches!(a.status.code(), Some(0 | 4)) && !a.stdout.is_empty();
    }
    vec![("byte-identical output across runs", identical), ("expected exit codes", clean_exits)]
}

fn main() {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut report = Report { failures: Vec::new() };
    println!("acceptance suite (exact arithmetic, tolerance {TOLERANCE}, seed {SEED:#x})");
    report.record(1, "square normal fan has 9 cones; 3x1 rectangle has the same fan", criterion_1());
    report.record(2, "unit square quotient data", criterion_2());
    report.record(3, "rational five-vector LVM configuration", criterion_3());
    let corrected = lvm_rational_checks(&five(c(-2, -2)));
    let all = corrected.iter().all(|(_, ok)| *ok);
    println!(
        "    note: with the fifth vector -2-2i every check of criterion 3 {}",
        if all { "holds" } else { "still fails" }
    );
    report.record(4, "irrational perturbation gives dense leaves and slope sqrt(2)", criterion_4());
    report.record(5, "teardrop orbifold orders", criterion_5());
    report.record(6, "Hirzebruch-Jung expansions and resolutions", criterion_6());
    report.record(7, "g-theorem necessity machinery", criterion_7());
    report.record(8, "Hochschild identities on random reduced chains", criterion_8(&mut rng));
    report.record(9, "Morita smoke tests for HH and truncated HP", criterion_9());
    report.record(10, "Kronecker classification and Morita equivalence", criterion_10(&mut rng));
    report.record(11, "condition K agrees with the leaf dichotomy", criterion_11(&mut rng));
    report.record(12, "deterministic CLI output", criterion_12());
    let elapsed = start.elapsed();
    println!("elapsed {:.2}s (budget {TIME_BUDGET_SECS}s)", elapsed.as_secs_f64());

    let expected: BTreeSet<usize> = EXPECTED_FAILURES.iter().copied().collect();
    let actual: BTreeSet<usize> = report.failures.iter().copied().collect();
    let unexpected: Vec<_> = actual.difference(&expected).collect();
    let recovered: Vec<_> = expected.difference(&actual).collect();
    if !recovered.is_empty() {
        println!("criteria expected to fail now pass: {recovered:?}");
    }
    if !unexpected.is_empty() || !recovered.is_empty() || !all {
        println!("acceptance: unexpected outcome");
        std::process::exit(1);
    }
    println!(
        "acceptance: {} of 12 criteria pass; known failures {:?}",
        12 - actual.len(),
        EXPECTED_FAILURES
    );
}
