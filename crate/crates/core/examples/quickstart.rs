//! Split a handful of points into two groups so that points sharing a group
//! are as far apart as possible.
//!
//!     cargo run --example quickstart

use maxdisp::cli::generate_normal;
use maxdisp::{dispersion_of, solve, CardinalityConstraint, PointSet, Variant};

fn main() -> maxdisp::Result<()> {
    let points = PointSet::from_line(&[0.0, 1.0, 3.0])?;
    let result = solve(&points, CardinalityConstraint::new(2, 1), Variant::Auto)?;
    println!(
        "line {{0, 1, 3}} with sizes (2, 1): dispersion {} groups {:?}",
        result.dispersion,
        result.assignment.labels()
    );

    let points = generate_normal(1_000, 2, 42)?;
    let constraint = CardinalityConstraint::new(400, 600);
    let result = solve(&points, constraint, Variant::Auto)?;
    println!(
        "1000 normal points, sizes (400, 600): dispersion {} after {} thresholds ({})",
        result.dispersion, result.iterations_used, result.variant
    );
    assert_eq!(
        dispersion_of(&points, &result.assignment)?,
        result.dispersion
    );
    Ok(())
}
