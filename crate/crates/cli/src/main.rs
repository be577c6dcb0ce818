use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use latmat_cli::{
    cmd_infosys, cmd_lattice, cmd_reducts, InfosysOptions, LatticeOptions, Output, ReductsOptions,
    DEFAULT_MAX_ATTRS, DEFAULT_MAX_ELEMS, EXIT_PARSE,
};

#[derive(Parser)]
#[command(
    name = "latmat",
    version,
    about = "Lattices of flats and reducts from set families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the lattice of flats of a covering's transversal matroid.
    Lattice {
        /// JSON document with `universe` and `blocks`.
        file: PathBuf,
        /// Emit the Hasse diagram as DOT.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// Emit the lattice as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMS)]
        max_elems: usize,
    },
    /// Hyperplanes, their complements, and all reducts.
    Reducts {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMS)]
        max_elems: usize,
    },
    /// Partitions, the R0 quotient, the condition check, and reducts of a CSV table.
    Infosys {
        file: PathBuf,
        /// Always use the exhaustive reduct scan.
        #[arg(long)]
        force_brute: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ATTRS)]
        max_attrs: usize,
        /// Column to exclude from the condition attributes.
        #[arg(long)]
        decision: Option<String>,
    },
}

fn read(path: &PathBuf) -> Result<String, Output> {
    std::fs::read_to_string(path).map_err(|e| Output {
        code: EXIT_PARSE,
        stdout: String::new(),
        stderr: format!("error: cannot read {}: {e}\n", path.display()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Lattice {
            file,
            dot,
            json,
            max_elems,
        } => read(&file).map(|t| {
            cmd_lattice(
                &t,
                LatticeOptions {
                    dot,
                    json,
                    max_elems,
                },
            )
        }),
        Command::Reducts {
            file,
            json,
            max_elems,
        } => read(&file).map(|t| cmd_reducts(&t, ReductsOptions { json, max_elems })),
        Command::Infosys {
            file,
            force_brute,
            json,
            max_attrs,
            decision,
        } => read(&file).map(|t| {
            cmd_infosys(
                &t,
                &InfosysOptions {
                    force_brute,
                    json,
                    max_attrs,
                    decision,
                },
            )
        }),
    };
    let out = out.unwrap_or_else(|e| e);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code as u8)
}
