//! Certificate JSON round trip and the verifier's violation reports.

use clique_immersion::graph::Graph;
use clique_immersion::immersion::{verify_certificate, ImmersionCertificate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = Graph::cycle(5)?;
    let text = r#"{"t":3,"terminals":[0,1,2],"paths":{"0,1":[0,1],"0,2":[0,4,3,2],"1,2":[1,2]},"flags":{"strong":true,"odd":true}}"#;
    let (cert, flags) = ImmersionCertificate::from_json(text)?;
    let report = verify_certificate(&c5, &cert, flags)?;
    println!("C5, {flags}: accepted={}", report.accepted);

    // Same terminals, but route 0-2 the even way round through 1.
    let bad = r#"{"t":3,"terminals":[0,1,2],"paths":{"0,1":[0,1],"0,2":[0,1,2],"1,2":[1,2]},"flags":{"strong":true,"odd":true}}"#;
    let (cert, flags) = ImmersionCertificate::from_json(bad)?;
    let report = verify_certificate(&c5, &cert, flags)?;
    println!("C5, {flags}: accepted={}", report.accepted);
    for v in &report.violations {
        println!("  {v}");
    }
    println!("{}", serde_json::to_string_pretty(&report)?);

    match ImmersionCertificate::from_json(r#"{"t":2,"terminals":[0,1],"paths":{"1,0":[1,0]}}"#) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("malformed: {e}"),
    }
    Ok(())
}
