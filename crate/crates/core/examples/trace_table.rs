//! Builds the exact trace table and prints `T_n(ζ)` and `pp(n)` for small n,
//! then the size of the largest coefficient at the requested order.
//!
//!     cargo run --release --example trace_table -- 400

use std::time::Instant;

use planepart::exact_qseries::build_trace_table;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(60);

    let start = Instant::now();
    let t = build_trace_table(max_n)?;
    let elapsed = start.elapsed();

    for n in 0..=max_n.min(6) {
        let terms: Vec<String> = t
            .row(n)?
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| c.bits() > 0)
            .map(|(m, c)| format!("{c} z^{m}"))
            .collect();
        println!("T_{n}(z) = {}", if terms.is_empty() { "0".into() } else { terms.join(" + ") });
    }

    let pp = t.pp(max_n)?;
    println!("pp({max_n}) = {pp}");
    println!("pp({max_n}) has {} bits", pp.bits());
    println!("built order {max_n} in {elapsed:.2?}");
    Ok(())
}
