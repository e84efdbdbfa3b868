//! Exact values against the main terms for T_n(ζ) and pp(n).
//!
//!     cargo run --release --example asymptotic_ratios -- 1 5 800

use planepart::asymptotics::{ratio_report, trace_main_term, wright_pp_main_term};
use planepart::exact_qseries::{build_trace_table, RootOfUnity};
use planepart::polylog_unit::PrecisionSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);
    let b: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let n_max: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(400);

    let z = RootOfUnity::new(a, b)?;
    let t = build_trace_table(n_max as usize)?;
    let grid: Vec<u64> = (1..=8).map(|i| i * n_max / 8).collect();

    let est = trace_main_term(z, PrecisionSpec::default())?;
    println!("T_n(e^(2πi {z})):");
    for r in ratio_report(&t, z, &est, &grid)? {
        println!("  n = {:>5}  ratio = {:.6}  |ratio - 1| = {:.2e}", r.n, r.ratio, r.deviation);
    }
    println!("pp(n):");
    for r in ratio_report(&t, RootOfUnity::ONE, &wright_pp_main_term(), &grid)? {
        println!("  n = {:>5}  ratio = {:.6}  |ratio - 1| = {:.2e}", r.n, r.ratio.re, r.deviation);
    }
    Ok(())
}
