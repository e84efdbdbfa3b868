//! Lists every plane partition of n with its trace.
//!
//!     cargo run --example enumerate -- 4

use planepart::exact_qseries::enumerate_plane_partitions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let all = enumerate_plane_partitions(n)?;
    for p in &all {
        println!("{:<24} trace {}", p.to_string(), p.trace());
    }
    println!("{} plane partitions of {n}", all.len());
    Ok(())
}
