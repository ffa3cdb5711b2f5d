use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use hypercube_layout::layout::build_netlist;
use hypercube_layout::render::RenderSpec;
use hypercube_layout::report::{self, OutputFormat};
use hypercube_layout::{Error, HypercubeRow, PlacementScheme, TerminalMode};

const EXIT_USAGE: u8 = 1;
const EXIT_INVARIANT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Wire density, track counts and routed pictures for one row of a
/// hypercube layout.
#[derive(Parser)]
#[command(name = "hyperlayout", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RowArgs {
    /// Node count N (a power of two).
    #[arg(long = "n")]
    n: u64,
    #[arg(long, default_value = "normal")]
    placement: PlacementScheme,
    #[arg(long, default_value = "free")]
    mode: TerminalMode,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Write to FILE instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Density at every cut, with its maximum and maximizers.
    Density {
        #[command(flatten)]
        row: RowArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Left-edge route a row and draw it.
    Route {
        #[command(flatten)]
        row: RowArgs,
        #[command(flatten)]
        out: OutArgs,
        #[arg(long, default_value_t = 48)]
        cell_width: u32,
        #[arg(long, default_value_t = 24)]
        cell_height: u32,
        /// Label track rows (text) or draw track guides (svg).
        #[arg(long)]
        show_tracks: bool,
    },
    /// Normal vs gray-code placement side by side.
    Compare {
        #[arg(long = "n")]
        n: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Cross-check every closed form against the brute-force oracle.
    Check {
        #[arg(long = "max-n")]
        max_n: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit the wire list in its line-oriented text form.
    Netlist {
        #[command(flatten)]
        row: RowArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Invariant(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        match err {
            Error::Internal(msg) => Failure::Internal(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Density { row, out } => {
            let r = HypercubeRow::new(row.n)?;
            let text = report::density_report(r, row.placement, row.mode)?.render(out.format)?;
            emit(&text, &out.out)
        }
        Command::Route {
            row,
            out,
            cell_width,
            cell_height,
            show_tracks,
        } => {
            let spec = RenderSpec {
                cell_width,
                cell_height,
                show_tracks,
            };
            let r = HypercubeRow::new(row.n)?;
            let text = report::route(r, row.placement, row.mode, out.format, &spec)?;
            emit(&text, &out.out)
        }
        Command::Compare { n, out } => {
            let text = report::compare(HypercubeRow::new(n)?)?.render(out.format)?;
            emit(&text, &out.out)
        }
        Command::Check { max_n, out } => {
            let result = report::check(HypercubeRow::new(max_n)?)?;
            emit(&result.render(out.format)?, &out.out)?;
            if result.passed() {
                Ok(())
            } else {
                Err(Failure::Invariant("invariant check failed".into()))
            }
        }
        Command::Netlist { row, out } => {
            let net = build_netlist(HypercubeRow::new(row.n)?, row.placement, row.mode);
            emit(&net.to_text(), &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INVARIANT)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(EXIT_INTERNAL)
        }
    }
}
