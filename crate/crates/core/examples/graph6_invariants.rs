//! Parse graph6 words and print basic invariants.
//!
//! cargo run --example graph6_invariants -- Dhc IheA@GUAo

use clique_immersion::graph::{encode_graph6, parse_graph6, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut words: Vec<String> = std::env::args().skip(1).collect();
    if words.is_empty() {
        words = vec!["Dhc".into(), encode_graph6(&Graph::petersen())];
    }
    for w in &words {
        let g = parse_graph6(w)?;
        println!("{w}: n={} m={}", g.n(), g.edge_count());
        println!("  alpha={} witness {:?}", g.independence_number(), g.maximum_independent_set().to_vec());
        println!("  omega={} witness {:?}", g.clique_number(), g.maximum_clique().to_vec());
        println!("  connected={} triangle-free={}", g.is_connected(), g.is_triangle_free());
        println!("  complement {}", g.complement().to_graph6());
    }
    Ok(())
}
