//! Support classification over a join and the short odd paths from a vertex
//! outside the supports.

use clique_immersion::coloring::find_join_partition;
use clique_immersion::constructive::{build_type_paths, classify_support, ExtensionState};
use clique_immersion::graph::Graph;
use clique_immersion::immersion::ImmersionFlags;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // C5 plus a pendant vertex on each side, joined to a copy of itself.
    let side = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (6, 2), (5, 6)])?;
    let g = Graph::join(&side, &side)?;
    let jp = find_join_partition(&g)?.expect("a join");
    let js = classify_support(&g, &jp, ImmersionFlags::STRONG_ODD)?;
    for (i, s) in js.sides.iter().enumerate() {
        println!(
            "side {}: t={} T={:?} B={:?} C={:?} Z={:?}",
            i + 1,
            s.t,
            s.terminals.to_vec(),
            s.b.to_vec(),
            s.c.to_vec(),
            s.z.to_vec()
        );
    }
    for v in js.sides[0].z.union(js.sides[1].z) {
        let state = build_type_paths(&js, v, ExtensionState::new(&js, v)?)?;
        println!("v={v}: {} paths, unresolved {:?}", state.solved_paths.len(), state.unresolved.to_vec());
        for p in &state.solved_paths {
            println!("  {:?}", p.vertices());
        }
    }
    Ok(())
}
