//! Exact clique-immersion search under each flag combination.

use clique_immersion::graph::Graph;
use clique_immersion::immersion::{find_clique_immersion, max_clique_immersion, minimize_support, ImmersionFlags};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("C5", Graph::cycle(5)?),
        ("K3,3", Graph::complete_bipartite(3, 3)?),
        ("Petersen", Graph::petersen()),
        ("complement of Petersen", Graph::petersen().complement()),
    ];
    for (name, g) in &graphs {
        println!("{name}:");
        for flags in ImmersionFlags::ALL {
            let (t, cert) = max_clique_immersion(g, flags)?;
            let support = minimize_support(g, t, flags)?;
            println!("  {flags:>10}: t_max={t} terminals={:?} minimal support {:?}", cert.terminals, support.to_vec());
        }
    }

    // C4 has no odd triangle immersion but a plain one.
    let c4 = Graph::cycle(4)?;
    println!("C4, t=3, odd: {:?}", find_clique_immersion(&c4, 3, ImmersionFlags::ODD)?.map(|c| c.terminals));
    let plain = find_clique_immersion(&c4, 3, ImmersionFlags::PLAIN)?.expect("C4 immerses K3");
    println!("C4, t=3, plain: {}", plain.to_json(ImmersionFlags::PLAIN));
    Ok(())
}
