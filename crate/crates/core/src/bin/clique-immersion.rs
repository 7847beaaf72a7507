use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use clique_immersion::coloring::chromatic_number;
use clique_immersion::constructive::build_third_immersion_traced;
use clique_immersion::error::{Error, Result};
use clique_immersion::graph::{parse_graph6, Graph};
use clique_immersion::harness::{parse_checks, run_batch, BatchConfig, BatchInput, FamilySpec, OutputFormat};
use clique_immersion::immersion::{
    find_clique_immersion, max_clique_immersion, verify_certificate, ImmersionCertificate, ImmersionFlags,
};

/// Clique immersions, chromatic numbers and bound checks on small graphs.
///
/// Graphs are given as graph6 words. Exit status is 0 on success, 1 when a
/// check fails or a certificate is rejected or absent, 2 on bad input.
#[derive(Parser)]
#[command(name = "clique-immersion", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number with an optimal coloring.
    Chromatic { graph6: String },
    /// Independence number with a maximum independent set.
    Alpha { graph6: String },
    /// Search for clique immersions.
    #[command(subcommand)]
    Immersion(ImmersionCommand),
    /// Strong odd immersion of K_ceil(n/3) for a graph with independence number at most 2.
    BuildThird {
        /// Print one line per recursion level to stderr.
        #[arg(short, long)]
        verbose: bool,
        graph6: String,
    },
    /// Check an immersion certificate (JSON) against a graph.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        graph6: String,
    },
    /// Run bound checks over a graph family or a graph6 file.
    Sweep(SweepArgs),
}

#[derive(Subcommand)]
enum ImmersionCommand {
    /// Find a K_t immersion; prints its certificate.
    Find {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        flags: FlagArgs,
        graph6: String,
    },
    /// Largest t with a K_t immersion; prints a witness certificate.
    Max {
        #[command(flatten)]
        flags: FlagArgs,
        graph6: String,
    },
}

#[derive(Args)]
struct FlagArgs {
    /// No terminal may be interior to a path.
    #[arg(long)]
    strong: bool,
    /// Every path must have odd length.
    #[arg(long)]
    odd: bool,
}

impl FlagArgs {
    fn flags(&self) -> ImmersionFlags {
        ImmersionFlags { strong: self.strong, odd: self.odd }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// Family: alpha2, alpha3, all or random-alpha2.
    #[arg(long, required_unless_present = "input", conflicts_with = "input")]
    family: Option<String>,
    /// Number of vertices for --family.
    #[arg(long, requires = "family")]
    n: Option<usize>,
    /// Sample size for random-alpha2.
    #[arg(long)]
    count: Option<usize>,
    /// Seed for random-alpha2.
    #[arg(long)]
    seed: Option<u64>,
    /// graph6 file, one graph per line, instead of a family.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated subset of main, appendix, vergara, alpha3.
    #[arg(long, default_value = "main,appendix,vergara")]
    checks: String,
    /// Results file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Certificates of failing rows; defaults to <out>.quarantine.json.
    #[arg(long)]
    quarantine: Option<PathBuf>,
    /// Add wall-clock timings (output is then not reproducible).
    #[arg(long)]
    timings: bool,
}

fn graph(word: &str) -> Result<Graph> {
    parse_graph6(word.trim())
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn family_spec(a: &SweepArgs) -> Result<FamilySpec> {
    let name = a.family.as_deref().expect("checked by clap");
    let n = a.n.ok_or_else(|| Error::Input("--family needs --n".into()))?;
    let mut spec = format!("{name}:n={n}");
    if let Some(c) = a.count {
        spec.push_str(&format!(",count={c}"));
    }
    if let Some(s) = a.seed {
        spec.push_str(&format!(",seed={s}"));
    }
    spec.parse()
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Chromatic { graph6 } => {
            let (chi, coloring) = chromatic_number(&graph(&graph6)?);
            print_json(&json!({ "chi": chi, "colors": coloring.colors }));
        }
        Command::Alpha { graph6 } => {
            let g = graph(&graph6)?;
            print_json(
                &json!({ "alpha": g.independence_number(), "independent_set": g.maximum_independent_set().to_vec() }),
            );
        }
        Command::Immersion(ImmersionCommand::Find { t, flags, graph6 }) => {
            let flags = flags.flags();
            match find_clique_immersion(&graph(&graph6)?, t, flags)? {
                Some(cert) => println!("{}", cert.to_json(flags)),
                None => {
                    eprintln!("no {flags} K_{t} immersion");
                    return Ok(1);
                }
            }
        }
        Command::Immersion(ImmersionCommand::Max { flags, graph6 }) => {
            let flags = flags.flags();
            let (_, cert) = max_clique_immersion(&graph(&graph6)?, flags)?;
            println!("{}", cert.to_json(flags));
        }
        Command::BuildThird { verbose, graph6 } => {
            let (cert, trace) = build_third_immersion_traced(&graph(&graph6)?)?;
            if verbose {
                for step in &trace {
                    eprintln!("{step}");
                }
            }
            println!("{}", cert.to_json(ImmersionFlags::STRONG_ODD));
        }
        Command::Verify { cert, graph6 } => {
            let g = graph(&graph6)?;
            let text = std::fs::read_to_string(&cert).map_err(|e| Error::Input(format!("{}: {e}", cert.display())))?;
            let (c, flags) = ImmersionCertificate::from_json(&text)?;
            let report = verify_certificate(&g, &c, flags)?;
            print_json(&report);
            if !report.accepted {
                return Ok(1);
            }
        }
        Command::Sweep(a) => {
            let input = match &a.input {
                Some(path) => BatchInput::Graph6File(path.clone()),
                None => BatchInput::Family(family_spec(&a)?),
            };
            let mut cfg = BatchConfig::new(input, parse_checks(&a.checks)?);
            cfg.workers = a.workers;
            cfg.out = a.out;
            cfg.format = a.format.parse::<OutputFormat>()?;
            cfg.quarantine = a.quarantine;
            cfg.timings = a.timings;
            let summary = run_batch(&cfg)?;
            eprintln!("{} graphs, {} with a failed check", summary.reports.len(), summary.failures);
            if let Some(q) = &summary.quarantine {
                eprintln!("failing rows written to {}", q.display());
            }
            return Ok(summary.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
