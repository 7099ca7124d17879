//! Trace of the distance sweep: feasibility at each distinct threshold, and
//! the first infeasible one, which is the optimal dispersion.
//!
//!     cargo run --example threshold_sweep

use maxdisp::{feasibility_profile, solve_full, CardinalityConstraint, PointSet};

fn main() -> maxdisp::Result<()> {
    let points = PointSet::from_line(&[0.0, 1.0, 3.0, 6.0, 10.0, 11.0])?;
    let constraint = CardinalityConstraint::new(3, 3);

    for (d2, feasible) in feasibility_profile(&points, constraint)? {
        println!(
            "threshold {:>6.3}  {}",
            d2.sqrt(),
            if feasible { "colorable" } else { "infeasible" }
        );
    }
    let result = solve_full(&points, constraint)?;
    println!(
        "optimal dispersion {} with groups {:?} ({} thresholds examined)",
        result.dispersion,
        result.assignment.labels(),
        result.iterations_used
    );
    Ok(())
}
