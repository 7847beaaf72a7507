//! Run the bound checks over an exhaustive family and print the CSV.
//!
//! cargo run --release --example sweep -- alpha2:n=7 main,appendix,vergara 4

use clique_immersion::harness::{parse_checks, run_batch, BatchConfig, BatchInput};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let family = args.next().unwrap_or_else(|| "alpha2:n=6".into());
    let checks = args.next().unwrap_or_else(|| "main,appendix,vergara".into());
    let workers = args.next().map(|w| w.parse()).transpose()?.unwrap_or(2);

    let mut cfg = BatchConfig::new(BatchInput::Family(family.parse()?), parse_checks(&checks)?);
    cfg.workers = workers;
    let summary = run_batch(&cfg)?;
    eprintln!("{} rows, {} with a failed check", summary.reports.len(), summary.failures);
    std::process::exit(summary.exit_code());
}
