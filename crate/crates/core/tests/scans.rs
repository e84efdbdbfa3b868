//! Exhaustive scans over all reduced fractions with small denominators.

use planepart::asymptotics::{over_main_term, theta12, trace_case, TraceCase};
use planepart::polylog_unit::{dominance_l, PrecisionSpec, Rotation};
use planepart::exact_qseries::RootOfUnity;

fn reduced(b_max: u64) -> impl Iterator<Item = RootOfUnity> {
    (2..=b_max).flat_map(|b| {
        (1..b).filter(move |a| num_integer::gcd(*a, b) == 1).map(move |a| RootOfUnity::new(a as i64, b).unwrap())
    })
}

#[test]
fn case_selection_follows_the_dominant_branch() {
    for z in reduced(50) {
        let case = trace_case(z).unwrap();
        let upper = if z.in_upper_half() { z } else { z.conj() };
        let (_, k) = dominance_l(Rotation::from(upper), 20).unwrap();
        let expected = if k == 1 { TraceCase::Primary } else { TraceCase::Doubled };
        if case == TraceCase::MinusOne {
            assert_eq!(k, 2, "{z}");
        } else {
            assert_eq!(case, expected, "{z}");
        }
    }
}

#[test]
fn dominant_branch_switches_at_the_transition() {
    let t12 = theta12();
    for i in 1..2000 {
        let theta = i as f64 / 4000.0;
        if (theta - t12).abs() < 1e-4 {
            continue;
        }
        let (_, k) = dominance_l(Rotation::new(theta).unwrap(), 20).unwrap();
        assert_eq!(k, if theta < t12 { 1 } else { 2 }, "θ = {theta}");
    }
}

#[test]
fn overpartition_growth_is_positive() {
    let p = PrecisionSpec::default();
    for z in reduced(50) {
        let e = over_main_term(z, p).unwrap();
        assert!(e.exp_coeff.re > 0.0, "{z}");
    }
}
