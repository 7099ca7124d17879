//! Exact two-group maximum dispersion partitioning under cardinality
//! constraints.
//!
//! Given `n` points and group sizes `c1 + c2 = n`, find the split that
//! maximizes the smallest Euclidean distance between two points placed in the
//! same group. The solver sweeps pairwise distances in ascending order and,
//! at each distinct value, asks whether the graph of all closer-or-equal pairs
//! still has a proper 2-coloring with exactly `c1` vertices of color 1. That
//! question reduces to a subset-sum over per-component imbalances, which are
//! bounded by `n`, so the whole solve is polynomial.
//!
//! ```
//! use maxdisp::{solve, CardinalityConstraint, Dispersion, PointSet, Variant};
//!
//! let points = PointSet::from_line(&[0.0, 1.0, 3.0]).unwrap();
//! let result = solve(&points, CardinalityConstraint::new(2, 1), Variant::Auto).unwrap();
//! assert_eq!(result.dispersion, Dispersion::Finite(3.0));
//! assert_eq!(result.assignment.labels(), vec![1, 2, 1]);
//! ```
//!
//! Runnable walkthroughs live in the crate's `examples/` directory.

pub mod cli;
pub mod colcc;
pub mod dispersion;
pub mod distance;
pub mod error;
pub mod graph;
pub mod memory;
pub mod oracle;
pub mod types;

pub use colcc::{solve_2colcc, AdjustedTargets, Infeasible, SubsetSumTable, TableLink};
pub use dispersion::{feasibility_profile, solve, solve_full, solve_heap, SweepState};
pub use distance::{all_distances_sorted, smallest_n_distances, SortedDistanceList};
pub use error::{Error, Result};
pub use graph::{BipartitionComponent, ThresholdGraph};
pub use types::{
    dispersion_of, validate_instance, Assignment, CardinalityConstraint, Dispersion,
    DispersionResult, DistanceEntry, Group, PointSet, Variant, VariantUsed,
};
