use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use binedge::graph::Family;
use binedge::harness::{analyze, enumerate_to_dir, verify, AnalyzeOptions, HarnessError, Theorem, VerifyOptions};
use binedge::{Fp, Graph};

#[derive(Parser)]
#[command(name = "binedge", version, about = "Invariants of binomial edge ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full invariant report for one graph.
    Analyze {
        /// Graph as JSON `{"n": .., "edges": [[i, j], ..]}` or an edge list.
        graph: PathBuf,
        #[arg(long, default_value_t = binedge::field::DEFAULT_PRIME)]
        prime: u32,
        /// Skip Betti numbers of J_G itself.
        #[arg(long)]
        skip_koszul: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a statement over every graph of its family up to a size.
    Verify {
        theorem: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        labelings: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check this many random graphs on max-n + 1 vertices.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = binedge::field::DEFAULT_PRIME)]
        prime: u32,
    },
    /// Write one JSON file per isomorphism class of a family.
    Enumerate {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
}

fn field(prime: u32) -> Result<Fp, HarnessError> {
    Ok(Fp::new(prime)?)
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), HarnessError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| HarnessError::Io {
            path: path.clone(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, HarnessError> {
    match cli.command {
        Command::Analyze {
            graph,
            prime,
            skip_koszul,
            out,
        } => {
            let text = std::fs::read_to_string(&graph).map_err(|source| HarnessError::Io {
                path: graph.clone(),
                source,
            })?;
            let g = Graph::parse(&text)?;
            let options = AnalyzeOptions {
                field: field(prime)?,
                skip_koszul,
            };
            write_output(&analyze(&g, options)?.to_json(), out.as_ref())?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            max_n,
            labelings,
            seed,
            random,
            prime,
        } => {
            let theorem: Theorem = theorem.parse()?;
            let options = VerifyOptions {
                max_n,
                labelings,
                seed,
                field: field(prime)?,
                random,
            };
            let verdict = verify(theorem, options)?;
            println!("{}", serde_json::to_string_pretty(&verdict).expect("verdict serializes"));
            Ok(if verdict.pass { 0 } else { 1 })
        }
        Command::Enumerate { family, n, out_dir } => {
            let family: Family = family.parse()?;
            let paths = enumerate_to_dir(family, n, &out_dir)?;
            for p in &paths {
                println!("{}", p.display());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
