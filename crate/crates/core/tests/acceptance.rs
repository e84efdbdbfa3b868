//! One PASS/FAIL line per acceptance criterion. Tolerances are fixed here.
//! Runs without the libtest harness so the report is always printed.

use std::collections::BTreeMap;
use std::f64::consts::{PI, TAU};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use planepart::asymptotics::{
    normalization_sup, oscillation_model, over_main_term, ratio_report, theta12, trace_main_term,
    wright_pp_main_term, MainTermEstimate,
};
use planepart::circle_diag::{
    f1, f2, g_jk, saddle_deviation, lattice_check, loglog_slope, phi, SaddleCase, LATTICE_GRID,
};
use planepart::exact_qseries::{
    build_trace_table, enumerate_plane_partitions, over_table_from, residue_counts_direct,
    residue_counts_via_roots, CoeffTable, RootOfUnity,
};
use planepart::polylog_unit::{
    arg_gap, dominance_l, f_k, gap_coefficient_difference, inverse_power_difference, li,
    li3_rational, li3_unit, re_cbrt_gap, re_cbrt_li3, solve_theta1, solve_theta12, PrecisionSpec,
    Rotation, CONSTANTS,
};

const FIVE_DIGIT_TOL: f64 = 5e-4;
const ANGLE_TOL: f64 = 1e-5;
const LI3_TOL: f64 = 1e-12;
const LEMMA42_TOL: f64 = 1e-8;
const JSUM_TOL: f64 = 1e-10;
const SLOPE_RANGE: (f64, f64) = (-1.0, -0.4);
const GRID_POINTS: usize = 10_000;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn timed(f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let o = f();
    (o, start.elapsed())
}

fn root(a: i64, b: u64) -> RootOfUnity {
    RootOfUnity::new(a, b).unwrap()
}

fn p() -> PrecisionSpec {
    PrecisionSpec::default()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let four = enumerate_plane_partitions(4).unwrap();
    let mut hist = BTreeMap::new();
    for pp in &four {
        *hist.entry(pp.trace()).or_insert(0u64) += 1;
    }
    let poly_ok = four.len() == 13 && hist == BTreeMap::from([(1, 4), (2, 6), (3, 2), (4, 1)]);
    let t = build_trace_table(8).unwrap();
    let mut table_ok = true;
    for n in 0..=8 {
        let mut counts = vec![0u64; n + 1];
        for pp in enumerate_plane_partitions(n).unwrap() {
            counts[pp.trace() as usize] += 1;
        }
        for (m, &c) in counts.iter().enumerate() {
            table_ok &= *t.coeff(m, n) == BigUint::from(c);
        }
    }
    let fast = start.elapsed() < Duration::from_secs(10);
    outcome(poly_ok && table_ok && fast, format!("13 partitions of 4 with trace polynomial ζ⁴+2ζ³+6ζ²+4ζ: {poly_ok}; table equals enumeration for n <= 8: {table_ok}"))
}

fn criterion_2() -> Outcome {
    let spec = PrecisionSpec::new(1e-12).unwrap();
    let start = Instant::now();
    let a = solve_theta12(spec).unwrap();
    let ta = start.elapsed();
    let start = Instant::now();
    let x = solve_theta1(spec).unwrap();
    let tb = start.elapsed();
    let pass = (a - 0.47585).abs() <= ANGLE_TOL
        && (x - 0.23792).abs() <= ANGLE_TOL
        && ta < Duration::from_secs(5)
        && tb < Duration::from_secs(5);
    outcome(pass, format!("θ₁₂ = {a:.10} ({ta:.2?}), θ₁ = {x:.10} ({tb:.2?}), tolerance {ANGLE_TOL:e}"))
}

fn criterion_3() -> Outcome {
    let t12 = solve_theta12(PrecisionSpec::new(1e-13).unwrap()).unwrap();
    let checks = [
        ("f₁(1/4)", f_k(1, 0.25), 0.8391145),
        ("f₂(0)", f_k(2, 0.0), 0.531632),
        ("f₁(θ₁₂)", f_k(1, t12), 0.5212),
        ("f₃(0)", f_k(3, 0.0), 0.3544),
        ("L(1/3)", dominance_l(Rotation::new(1.0 / 3.0).unwrap(), 20).unwrap().0, 0.7304),
        ("L(1/2)", dominance_l(Rotation::new(0.5).unwrap(), 20).unwrap().0, 0.5316),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, got, want) in checks {
        let ok = (got - want).abs() <= FIVE_DIGIT_TOL;
        pass &= ok;
        parts.push(format!("{name} = {got:.7}"));
    }
    let target = -0.75 * CONSTANTS.zeta3;
    let (hz, _) = li3_rational(RootOfUnity::MINUS_ONE, p()).unwrap();
    let fast = li3_unit(Rotation::new(0.5).unwrap());
    let li_err = (hz - target).norm().max((fast - target).norm());
    pass &= li_err <= LI3_TOL;
    parts.push(format!("|Li₃(-1) + 3ζ(3)/4| = {li_err:.1e}"));
    outcome(pass, parts.join(", "))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let m = oscillation_model(1, 4, 5, p()).unwrap();
    let elapsed = start.elapsed();
    // α is compared modulo 2π
    let d_alpha = ((m.alpha - (-1.41897)).rem_euclid(TAU) + PI).rem_euclid(TAU) - PI;
    let pass = (m.big_b - 0.19971).abs() <= FIVE_DIGIT_TOL
        && d_alpha.abs() <= FIVE_DIGIT_TOL
        && (m.lambda1 - 0.89873).abs() <= FIVE_DIGIT_TOL
        && (m.lambda2 - 0.44610).abs() <= FIVE_DIGIT_TOL
        && elapsed < Duration::from_secs(5);
    outcome(
        pass,
        format!(
            "B = {:.6}, α = {:.6} (≡ {:.6}), λ₁ = {:.6}, λ₂ = {:.6} ({elapsed:.2?})",
            m.big_b,
            m.alpha,
            m.alpha - TAU,
            m.lambda1,
            m.lambda2
        ),
    )
}

fn criterion_5(t400: &planepart::exact_qseries::TraceTable, build: Duration) -> Outcome {
    let m = oscillation_model(1, 4, 5, p()).unwrap();
    let early = normalization_sup(&m, t400, -2.0 / 3.0, 50..=100).unwrap();
    let late = normalization_sup(&m, t400, -2.0 / 3.0, 300..=400).unwrap();
    // The caption's n^{-3/4} normalization, reported for comparison only.
    let early34 = normalization_sup(&m, t400, -0.75, 50..=100).unwrap();
    let late34 = normalization_sup(&m, t400, -0.75, 300..=400).unwrap();
    outcome(
        late < early,
        format!(
            "sup on [300,400] = {late:.4e} < sup on [50,100] = {early:.4e} (table build {build:.2?}); with n^(-3/4): {late34:.3e} vs {early34:.3e}"
        ),
    )
}

fn convergence_row<T: CoeffTable>(name: &str, table: &T, z: RootOfUnity, est: &MainTermEstimate) -> (bool, String) {
    let rows = ratio_report(table, z, est, &[100, 200, 400]).unwrap();
    let d: Vec<f64> = rows.iter().map(|r| r.deviation).collect();
    let ok = d[0] > d[1] && d[1] > d[2] && d[2] < 0.5;
    (ok, format!("{name}: {:.4} {:.4} {:.4}", d[0], d[1], d[2]))
}

fn criterion_6(t400: &planepart::exact_qseries::TraceTable) -> Outcome {
    let over = over_table_from(t400);
    let z5 = root(1, 5);
    let z3 = root(1, 3);
    let m1 = RootOfUnity::MINUS_ONE;
    let results = [
        convergence_row("T(ζ₅)", t400, z5, &trace_main_term(z5, p()).unwrap()),
        convergence_row("T(-1)", t400, m1, &trace_main_term(m1, p()).unwrap()),
        convergence_row("pp", t400, RootOfUnity::ONE, &wright_pp_main_term()),
        convergence_row("A(-1)", &over, m1, &over_main_term(m1, p()).unwrap()),
        convergence_row("A(ζ₃)", &over, z3, &over_main_term(z3, p()).unwrap()),
    ];
    let pass = results.iter().all(|r| r.0);
    let detail: Vec<String> = results.into_iter().map(|r| r.1).collect();
    outcome(pass, format!("|ratio - 1| at n = 100, 200, 400: {}", detail.join("; ")))
}

/// Whether `f` is strictly monotone on the open grid `k/(2(N+1))`, `k = 1..=N`.
fn strictly_monotone(f: impl Fn(f64) -> f64, increasing: bool) -> bool {
    let mut prev = None;
    for i in 1..=GRID_POINTS {
        let theta = i as f64 / (2.0 * (GRID_POINTS + 1) as f64);
        let v = f(theta);
        if let Some(p) = prev {
            if (increasing && v <= p) || (!increasing && v >= p) {
                return false;
            }
        }
        prev = Some(v);
    }
    true
}

fn criterion_7() -> Outcome {
    let rot = |t: f64| Rotation::new(t).unwrap();
    let abs_li3 = strictly_monotone(|t| li3_unit(rot(t)).norm(), false);
    let cbrt_li3 = strictly_monotone(|t| re_cbrt_li3(rot(t)), false);
    let arg = strictly_monotone(|t| arg_gap(rot(t)).unwrap(), true);
    let cbrt_gap = strictly_monotone(|t| re_cbrt_gap(rot(t)), true);
    let mut inverse_cubes = true;
    for m in 0..=4 {
        for n in 1..=1000u64 {
            inverse_cubes &= inverse_power_difference(3, m, n) > num_rational::BigRational::from_integer(0.into());
        }
    }
    let mut gap_coeffs = true;
    for m in 0..=4 {
        gap_coeffs &= gap_coefficient_difference(m, 1000, 2000).unwrap().iter().all(|iv| iv.lo > 0.0);
    }
    let pass = abs_li3 && cbrt_li3 && arg && cbrt_gap && inverse_cubes && gap_coeffs;
    outcome(
        pass,
        format!(
            "{GRID_POINTS}-point grids: |Li₃| ↓ {abs_li3}, Re Li₃^(1/3) ↓ {cbrt_li3}, Arg gap ↑ {arg}, Re gap^(1/3) ↑ {cbrt_gap}; Δ^m n^(-3) > 0 {inverse_cubes}; certified Δ^m A_n > 0 {gap_coeffs}"
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut worst42: f64 = 0.0;
    for c in &LATTICE_GRID {
        let (_, r) = lattice_check(c, 1e-12, p()).unwrap();
        worst42 = worst42.max(r);
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst_j: f64 = 0.0;
    let mut worst_phi: f64 = 0.0;
    for _ in 0..2000 {
        let k: u64 = rng.gen_range(1..=8);
        let m: u64 = rng.gen_range(1..=64);
        let h: u64 = loop {
            let h = rng.gen_range(0..k.max(2));
            if num_integer::gcd(h, k) == 1 {
                break h;
            }
        };
        let arg = rng.gen_range(-(PI / 2.0 - 0.1)..=(PI / 2.0 - 0.1));
        let w = Complex64::from_polar(rng.gen_range(0.05..20.0), arg);
        let c = m * h % k;
        let sum: Complex64 = (1..=k)
            .map(|j| Complex64::from_polar(1.0, TAU * ((c * j % k) as f64 / k as f64)) * g_jk(j, k, w).unwrap())
            .sum();
        let closed = if c == 0 { f1(k, w).unwrap() } else { f2(k, c, w).unwrap() };
        worst_j = worst_j.max((sum - closed).norm());
        let j = rng.gen_range(1..=k);
        let lhs = phi(j as f64 / k as f64, w).unwrap();
        worst_phi = worst_phi.max((lhs - w * g_jk(j, k, w).unwrap()).norm() / lhs.norm().max(1.0));
    }
    let cases = [
        (SaddleCase::Primary, root(1, 3)),
        (SaddleCase::One, RootOfUnity::ONE),
        (SaddleCase::Doubled, root(12, 25)),
        (SaddleCase::MinusOne, RootOfUnity::MINUS_ONE),
    ];
    let mut saddle_ok = true;
    let mut slopes = Vec::new();
    for (case, z) in cases {
        let rows: Vec<_> =
            [1000, 10_000, 100_000].iter().map(|&n| saddle_deviation(case, z, n, 0.0, p()).unwrap()).collect();
        let slope = loglog_slope(&rows);
        saddle_ok &= rows[0].deviation > rows[1].deviation
            && rows[1].deviation > rows[2].deviation
            && (SLOPE_RANGE.0..=SLOPE_RANGE.1).contains(&slope);
        slopes.push(format!("({}) {slope:.3}", case.number()));
    }
    let pass = worst42 < LEMMA42_TOL && worst_j < JSUM_TOL && worst_phi < JSUM_TOL && saddle_ok;
    outcome(
        pass,
        format!(
            "max lattice residual {worst42:.2e}; max j-sum error {worst_j:.2e}; max φ/g error {worst_phi:.2e}; E_(h,k) slopes {}",
            slopes.join(" ")
        ),
    )
}

fn criterion_9() -> Outcome {
    let t = build_trace_table(200).unwrap();
    let mut counts_ok = true;
    for b in 1..=12 {
        counts_ok &= residue_counts_via_roots(&t, b, 128).unwrap() == residue_counts_direct(&t, b).unwrap();
    }
    let oracle = PrecisionSpec::new(2e-13).unwrap();
    let mut worst: f64 = 0.0;
    let mut roots = 0;
    for b in 1..=24u64 {
        for a in 0..b {
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            let z = root(a as i64, b);
            let (fast, _) = li3_rational(z, p()).unwrap();
            let direct = li(3, Rotation::from(z), oracle).unwrap();
            worst = worst.max((fast - direct).norm());
            roots += 1;
        }
    }
    outcome(
        counts_ok && worst <= LI3_TOL,
        format!("orthogonality counts equal direct counts for b <= 12, n <= 200: {counts_ok}; max |Li₃ Hurwitz - direct| over {roots} roots = {worst:.2e}"),
    )
}

fn main() {
    let _ = theta12();
    let mut failed = 0;
    let mut report = |i: u32, (o, d): (Outcome, Duration)| {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {i}: {status}: {} [{d:.2?}]", o.detail);
        if !o.pass {
            failed += 1;
        }
    };
    report(1, timed(criterion_1));
    report(2, timed(criterion_2));
    report(3, timed(criterion_3));
    report(4, timed(criterion_4));
    let start = Instant::now();
    let t400 = build_trace_table(400).unwrap();
    let build = start.elapsed();
    report(5, timed(|| criterion_5(&t400, build)));
    report(6, timed(|| criterion_6(&t400)));
    report(7, timed(criterion_7));
    report(8, timed(criterion_8));
    report(9, timed(criterion_9));
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
