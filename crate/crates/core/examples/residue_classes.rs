//! Counts plane partitions of n by trace modulo b, once by summing
//! coefficients and once through the values at b-th roots of unity.
//!
//!     cargo run --release --example residue_classes -- 5 100

use planepart::exact_qseries::{build_trace_table, residue_counts_direct, residue_counts_via_roots};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let b: u64 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(100);

    let t = build_trace_table(n)?;
    let direct = residue_counts_direct(&t, b)?;
    let roots = residue_counts_via_roots(&t, b, 128)?;
    for a in 0..b {
        println!("pp({a}, {b}, {n}) = {}", direct.count(a, n));
    }
    println!("pp({n}) = {}", t.pp(n)?);
    println!("orthogonality route agrees: {}", direct == roots);
    Ok(())
}
