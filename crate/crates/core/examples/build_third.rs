//! Strong odd K_ceil(n/3) immersions in graphs with independence number at
//! most 2, with the recursion trace.
//!
//! cargo run --example build_third -- [n] [count] [seed]

use clique_immersion::constructive::build_third_immersion_traced;
use clique_immersion::harness::family::sample_alpha_le2;
use clique_immersion::immersion::{verify_certificate, ImmersionFlags};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let n = args.first().copied().unwrap_or(14) as usize;
    let count = args.get(1).copied().unwrap_or(3) as usize;
    let seed = args.get(2).copied().unwrap_or(1);

    for g in sample_alpha_le2(n, count, seed)? {
        let (cert, trace) = build_third_immersion_traced(&g)?;
        let ok = verify_certificate(&g, &cert, ImmersionFlags::STRONG_ODD)?.accepted;
        println!("{} n={n}: t={} (need {}), verified={ok}", g.to_graph6(), cert.t(), n.div_ceil(3));
        for step in &trace {
            println!("  {step}");
        }
        println!("  {}", cert.to_json(ImmersionFlags::STRONG_ODD));
    }
    Ok(())
}
