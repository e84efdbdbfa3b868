//! The circle-method pieces for T_n(ζ): the Farey arcs, the error term on the
//! major arc against its limit, the lattice rewrite of the error term, and the
//! major-arc integral compared with the exact value and the main term.
//!
//!     cargo run --release --example circle_diagnostics -- 1 5 300

use planepart::asymptotics::trace_main_term;
use planepart::circle_diag::{
    farey, saddle_deviation, lattice_check, major_arc_quadrature, SaddleCase, LATTICE_GRID,
};
use planepart::exact_qseries::{build_trace_table, eval_trace_c64, RootOfUnity};
use planepart::polylog_unit::PrecisionSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a: i64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(1);
    let b: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let n: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(300);
    let z = RootOfUnity::new(a, b)?;
    let p = PrecisionSpec::default();

    let order = ((n as f64).cbrt() as i64).max(2);
    let arcs = farey(order)?;
    let widest = arcs.iter().map(|a| a.theta_lo + a.theta_hi).max().expect("nonempty");
    println!("Farey order {order}: {} arcs, widest {widest}", arcs.len());

    let case = SaddleCase::of(z)?;
    for m in [1_000, 10_000, 100_000] {
        let r = saddle_deviation(case, z, m, 0.0, p)?;
        println!("case {} n = {m:>6}: E = {:.8}, limit = {:.8}, deviation {:.2e}", case.number(), r.value, r.limit, r.deviation);
    }

    let worst = LATTICE_GRID
        .iter()
        .map(|c| lattice_check(c, 1e-12, p).map(|(_, r)| r))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("lattice rewrite: max residual {worst:.2e} over {} cases", LATTICE_GRID.len());

    let t = build_trace_table(n as usize)?;
    let exact = eval_trace_c64(&t, n as usize, z)?;
    let quad = major_arc_quadrature(z, n, order, p)?;
    let main = trace_main_term(z, p)?.eval(n);
    println!("T_{n}: exact {exact:.6e}");
    println!("  arc integral  {:.6e}  relative error {:.2e}", quad.value, ((quad.value - exact) / exact).norm());
    println!("  main term     {main:.6e}  relative error {:.2e}", ((main - exact) / exact).norm());
    Ok(())
}
