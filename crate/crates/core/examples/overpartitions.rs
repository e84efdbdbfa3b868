//! Plane overpartitions: the first counts, and A_n(ζ) against its main term.

use planepart::asymptotics::{over_main_term, ratio_report};
use planepart::exact_qseries::{build_over_table, RootOfUnity};
use planepart::polylog_unit::PrecisionSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = build_over_table(400)?;
    let counts: Vec<String> = (0..=12).map(|n| t.overpartitions(n).map(|c| c.to_string())).collect::<Result<_, _>>()?;
    println!("plane overpartitions: {}", counts.join(", "));

    for z in [RootOfUnity::MINUS_ONE, RootOfUnity::new(1, 3)?, RootOfUnity::new(2, 7)?] {
        let est = over_main_term(z, PrecisionSpec::default())?;
        println!("A_n(e^(2πi {z})):");
        for r in ratio_report(&t, z, &est, &[50, 100, 200, 400])? {
            println!("  n = {:>3}  |ratio - 1| = {:.3e}", r.n, r.deviation);
        }
    }
    Ok(())
}
