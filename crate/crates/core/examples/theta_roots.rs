//! The transition angle θ₁₂ where the k = 1 and k = 2 branches swap, the
//! overpartition angle θ₁, and the dominant branch at a few rotations.

use planepart::polylog_unit::{dominance_l, f_k, solve_theta1, solve_theta12, PrecisionSpec, Rotation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = PrecisionSpec::new(1e-14)?;
    let t12 = solve_theta12(p)?;
    println!("theta12 = {t12:.14}  (f1 = f2 = {:.10})", f_k(1, t12));
    println!("theta1  = {:.14} rad", solve_theta1(p)?);
    for theta in [0.1, 0.25, 1.0 / 3.0, 0.45, 0.48, 0.5] {
        let (l, k) = dominance_l(Rotation::new(theta)?, 20)?;
        println!("L({theta:.4}) = {l:.7} from k = {k}");
    }
    Ok(())
}
