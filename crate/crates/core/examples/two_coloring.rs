//! Cardinality-constrained 2-coloring on a small graph, step by step:
//! BFS sides, imbalances, the adjusted target, and the final coloring.
//!
//!     cargo run --example two_coloring

use maxdisp::{
    solve_2colcc, AdjustedTargets, CardinalityConstraint, SubsetSumTable, ThresholdGraph,
};

fn main() -> maxdisp::Result<()> {
    // a 3-leaf star, a path on 4 vertices, an edge, and an isolated vertex
    let graph = ThresholdGraph::from_edges(
        11,
        &[(0, 1), (0, 2), (0, 3), (4, 5), (5, 6), (6, 7), (8, 9)],
    )?;
    let constraint = CardinalityConstraint::new(6, 5);

    let components = graph.bipartition_components().expect("graph is bipartite");
    for c in &components {
        println!(
            "component {}: P={:?} Q={:?} imbalance {}",
            c.component_id, c.p, c.q, c.imbalance
        );
    }
    let targets = AdjustedTargets::from_components(&components, constraint);
    println!("c1' = {}, c2' = {}", targets.c1_prime, targets.c2_prime);

    let imbalances: Vec<usize> = components
        .iter()
        .map(|c| c.imbalance)
        .filter(|&s| s > 0)
        .collect();
    let table = SubsetSumTable::new(&imbalances);
    println!(
        "reachable sums of {:?}: {:?}",
        imbalances,
        table.reachable_sums().collect::<Vec<_>>()
    );

    match solve_2colcc(&graph, constraint) {
        Ok(coloring) => println!("coloring {:?}", coloring.labels()),
        Err(why) => println!("infeasible: {why}"),
    }
    // every component puts its smaller side in each class: 1 + 2 + 1 = 4 > 1
    match solve_2colcc(&graph, CardinalityConstraint::new(1, 10)) {
        Ok(coloring) => println!("coloring {:?}", coloring.labels()),
        Err(why) => println!("sizes (1, 10) infeasible: {why}"),
    }
    Ok(())
}
