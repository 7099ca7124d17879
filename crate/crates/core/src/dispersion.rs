//! Threshold sweep for the optimal two-group dispersion.
//!
//! Distances are visited in ascending order. At each distinct value every
//! pair at that distance becomes an edge, and the graph is checked for a
//! cardinality-exact proper 2-coloring. The first value at which no such
//! coloring exists is the optimal dispersion: every partition then has a
//! same-group pair at that distance, while the last feasible coloring
//! separates every closer pair.

use crate::colcc::solve_2colcc;
use crate::distance::{all_distances_sorted, smallest_n_distances, PairDistances};
use crate::error::Result;
use crate::graph::ThresholdGraph;
use crate::types::{
    min_intra_group_squared, validate_instance, Assignment, CardinalityConstraint, Dispersion,
    DispersionResult, DistanceEntry, PointSet, Variant, VariantUsed,
};

/// Mutable state of one sweep.
#[derive(Debug, Clone)]
pub struct SweepState {
    pub graph: ThresholdGraph,
    /// Coloring found at the last feasible threshold, if any.
    pub last_feasible_assignment: Option<Assignment>,
    pub current_threshold: Option<f64>,
    pub distinct_values_processed: usize,
    constraint: CardinalityConstraint,
}

impl SweepState {
    pub fn new(n: usize, constraint: CardinalityConstraint) -> Self {
        Self {
            graph: ThresholdGraph::new(n),
            last_feasible_assignment: None,
            current_threshold: None,
            distinct_values_processed: 0,
            constraint,
        }
    }

    /// Adds one batch of equal-distance edges and re-solves the coloring.
    /// Returns `false` once the graph admits no valid coloring.
    pub fn advance(&mut self, batch: &[DistanceEntry]) -> Result<bool> {
        self.graph.add_edges(batch)?;
        self.current_threshold = batch.first().map(|e| e.d2);
        self.distinct_values_processed += 1;
        match solve_2colcc(&self.graph, self.constraint) {
            Ok(assignment) => {
                self.last_feasible_assignment = Some(assignment);
                Ok(true)
            }
            Err(_) => Ok(false),
        }
    }
}

enum SweepEnd {
    /// First infeasible squared threshold.
    Break(f64),
    Exhausted,
}

fn sweep<'a>(
    state: &mut SweepState,
    batches: impl Iterator<Item = &'a [DistanceEntry]>,
) -> Result<SweepEnd> {
    for batch in batches {
        if !state.advance(batch)? {
            return Ok(SweepEnd::Break(batch[0].d2));
        }
    }
    Ok(SweepEnd::Exhausted)
}

fn finish(
    points: &PointSet,
    constraint: CardinalityConstraint,
    state: SweepState,
    end: SweepEnd,
    variant: VariantUsed,
    held: usize,
) -> DispersionResult {
    let iterations_used = state.distinct_values_processed;
    // Infeasible already at the smallest distance: every partition ties.
    let assignment = state
        .last_feasible_assignment
        .unwrap_or_else(|| Assignment::canonical(constraint));
    let dispersion = match end {
        SweepEnd::Break(d2) => Dispersion::from_squared(d2),
        SweepEnd::Exhausted => min_intra_group_squared(points, &assignment)
            .map(Dispersion::from_squared)
            .unwrap_or(Dispersion::Infinite),
    };
    DispersionResult {
        dispersion,
        assignment,
        iterations_used,
        variant,
        fallback_triggered: false,
        distance_entries_held: held,
    }
}

/// Sweeps over the fully sorted list of all pairwise distances.
pub fn solve_full(
    points: &PointSet,
    constraint: CardinalityConstraint,
) -> Result<DispersionResult> {
    validate_instance(points, constraint)?;
    let list = all_distances_sorted(points);
    let mut state = SweepState::new(points.len(), constraint);
    let end = sweep(&mut state, list.batches())?;
    Ok(finish(
        points,
        constraint,
        state,
        end,
        VariantUsed::FullSort,
        list.len(),
    ))
}

/// Sweeps over only the `n` smallest distances, selected with a bounded
/// max-heap from a stream of pairs. If no infeasible threshold shows up among
/// them, falls back to [`solve_full`].
///
/// Ties at the heap boundary may be cut off. That is harmless: a break inside
/// the retained entries is final because adding edges never restores
/// feasibility, and every value below the boundary is complete.
pub fn solve_heap(
    points: &PointSet,
    constraint: CardinalityConstraint,
) -> Result<DispersionResult> {
    validate_instance(points, constraint)?;
    let list = smallest_n_distances(points);
    let mut state = SweepState::new(points.len(), constraint);
    match sweep(&mut state, list.batches())? {
        end @ SweepEnd::Break(_) => Ok(finish(
            points,
            constraint,
            state,
            end,
            VariantUsed::HeapOnly,
            list.len(),
        )),
        SweepEnd::Exhausted => {
            let held = list.len();
            drop(list);
            drop(state);
            let mut result = solve_full(points, constraint)?;
            result.variant = VariantUsed::HeapThenFallback;
            result.fallback_triggered = true;
            result.distance_entries_held = result.distance_entries_held.max(held);
            Ok(result)
        }
    }
}

/// Validates, handles single-group constraints directly, and dispatches to
/// the requested sweep. `Auto` runs the heap variant.
pub fn solve(
    points: &PointSet,
    constraint: CardinalityConstraint,
    variant: Variant,
) -> Result<DispersionResult> {
    validate_instance(points, constraint)?;
    if constraint.c1 == 0 || constraint.c2 == 0 {
        let min_d2 = PairDistances::new(points)
            .map(|e| e.d2)
            .min_by(f64::total_cmp);
        return Ok(DispersionResult {
            dispersion: min_d2
                .map(Dispersion::from_squared)
                .unwrap_or(Dispersion::Infinite),
            assignment: Assignment::canonical(constraint),
            iterations_used: 0,
            variant: match variant {
                Variant::Full => VariantUsed::FullSort,
                Variant::Heap | Variant::Auto => VariantUsed::HeapOnly,
            },
            fallback_triggered: false,
            distance_entries_held: 0,
        });
    }
    match variant {
        Variant::Full => solve_full(points, constraint),
        Variant::Heap | Variant::Auto => solve_heap(points, constraint),
    }
}

/// Feasibility at every distinct squared threshold, without stopping at the
/// first infeasible one. Meant for checking that feasibility never returns.
pub fn feasibility_profile(
    points: &PointSet,
    constraint: CardinalityConstraint,
) -> Result<Vec<(f64, bool)>> {
    validate_instance(points, constraint)?;
    let list = all_distances_sorted(points);
    let mut state = SweepState::new(points.len(), constraint);
    list.batches()
        .map(|batch| Ok((batch[0].d2, state.advance(batch)?)))
        .collect()
}
