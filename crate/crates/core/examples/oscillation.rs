//! Exact differences pp(a1, b, n) - pp(a2, b, n), normalized by the growth
//! envelope, next to the predicted cosine. Output is CSV ready for plotting.
//!
//!     cargo run --release --example oscillation -- 1 4 5 400

use planepart::asymptotics::oscillation_model;
use planepart::exact_qseries::{build_trace_table, difference_series};
use planepart::polylog_unit::PrecisionSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|s| s.parse()).collect::<Result<_, _>>()?;
    let [a1, a2, b, n_max] = match args.as_slice() {
        [] => [1, 4, 5, 400],
        [a1, a2, b, n] => [*a1, *a2, *b, *n],
        _ => return Err("expected a1 a2 b n_max".into()),
    };
    let m = oscillation_model(a1, a2, b, PrecisionSpec::default())?;
    println!("# B = {:.6}, alpha = {:.6}, lambda = {:.6} + {:.6}i", m.big_b, m.alpha, m.lambda1, m.lambda2);

    let t = build_trace_table(n_max as usize)?;
    let diffs = difference_series(&t, a1, a2, b, 1..=n_max as usize)?;
    println!("n,normalized,cos");
    for (i, d) in diffs.iter().enumerate() {
        let n = i as u64 + 1;
        let x: f64 = d.to_string().parse()?;
        println!("{n},{:.6},{:.6}", x / m.envelope(n, -2.0 / 3.0), m.cosine(n));
    }
    Ok(())
}
