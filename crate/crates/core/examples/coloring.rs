//! Exact chromatic numbers, vertex-criticality and join partitions.

use clique_immersion::coloring::{chromatic_number, find_join_partition, is_vertex_critical};
use clique_immersion::graph::Graph;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::cycle(5)?;
    let graphs = [
        ("C5", c5.clone()),
        ("Petersen", Graph::petersen()),
        ("complement of Petersen", Graph::petersen().complement()),
        ("C5 join C5", Graph::join(&c5, &c5)?),
        ("K3,3", Graph::complete_bipartite(3, 3)?),
    ];
    for (name, g) in &graphs {
        let (chi, coloring) = chromatic_number(g);
        println!("{name}: chi={chi} colors={:?}", coloring.colors);
        println!("  vertex-critical: {}", is_vertex_critical(g, chi));
        match find_join_partition(g)? {
            Some(jp) => println!("  join of {:?} and {:?}", jp.x1.to_vec(), jp.x2.to_vec()),
            None => println!("  complement connected, not a join"),
        }
    }
    Ok(())
}
