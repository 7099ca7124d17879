//! Read points from CSV, solve, write the assignment, and read it back.
//!
//!     cargo run --example csv_pipeline

use std::fs;

use maxdisp::cli::{ingest_csv, read_assignment_csv, write_assignment_csv};
use maxdisp::{dispersion_of, solve, CardinalityConstraint, Variant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("maxdisp-csv-example");
    fs::create_dir_all(&dir)?;
    let input = dir.join("points.csv");
    fs::write(
        &input,
        "height,weight\n1.62,58\n1.75,71\n1.80,90\n1.55,49\n1.68,65\n1.91,88\n",
    )?;

    let points = ingest_csv(&input)?;
    let constraint = CardinalityConstraint::new(3, 3);
    let result = solve(&points, constraint, Variant::Auto)?;

    let output = dir.join("assignment.csv");
    write_assignment_csv(fs::File::create(&output)?, &result.assignment)?;
    print!("{}", fs::read_to_string(&output)?);

    let back = read_assignment_csv(fs::File::open(&output)?)?;
    println!(
        "dispersion {} (recomputed {})",
        result.dispersion,
        dispersion_of(&points, &back)?
    );
    Ok(())
}
