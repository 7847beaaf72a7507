//! Isomorphism-class enumeration, canonical forms and the seeded sampler.

use clique_immersion::harness::canon::canonical_form;
use clique_immersion::harness::family::{enumerate_all, enumerate_alpha_eq3, enumerate_alpha_le2, sample_alpha_le2};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:>2} {:>7} {:>9} {:>9}", "n", "all", "alpha<=2", "alpha=3");
    for n in 1..=7 {
        println!(
            "{n:>2} {:>7} {:>9} {:>9}",
            enumerate_all(n)?.len(),
            enumerate_alpha_le2(n)?.len(),
            enumerate_alpha_eq3(n)?.len()
        );
    }
    for g in enumerate_alpha_le2(4)? {
        println!("alpha<=2, n=4: {} canonical {}", g.to_graph6(), canonical_form(&g).to_graph6());
    }
    for g in sample_alpha_le2(16, 3, 42)? {
        println!("sample n=16: {} alpha={}", g.to_graph6(), g.independence_number());
    }
    Ok(())
}
