use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use covolume::commands::{self, CommandResult};
use covolume::selfcheck;
use covolume::{Format, Output};
use covolume_core::ExactValues;

/// Minimal covolumes of nonuniform arithmetic lattices in PU(n,1).
///
/// Exact rationals are printed as "num/den" strings in every format.
#[derive(Parser)]
#[command(name = "covolume", version)]
struct Cli {
    /// Output format; defaults to `table` on a terminal and `json` otherwise.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Covolume record for the field Q(sqrt(-d)) in dimension n.
    Nu {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        n: u32,
    },
    /// One record per imaginary quadratic field with Disc <= max-disc.
    Scan {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max_disc: u64,
    },
    /// Field of smallest covolume in dimension n, or the smallest over all n.
    Minimal {
        #[arg(long, required_unless_present = "overall", conflicts_with = "overall")]
        n: Option<u32>,
        /// Scan 2 <= n <= n-max for the dimension of smallest covolume.
        #[arg(long)]
        overall: bool,
        #[arg(long, default_value_t = 30, requires = "overall")]
        n_max: u32,
        /// Include the candidate certificate (or growth ratios with --overall).
        #[arg(long)]
        verbose: bool,
    },
    /// Ratios nu(n+1)/nu(n) over a range of n.
    Growth {
        #[arg(long, default_value_t = 3)]
        d: i64,
        #[arg(long, default_value_t = 2)]
        n_from: u32,
        #[arg(long, default_value_t = 30)]
        n_to: u32,
    },
    /// Volume lower bound for cusped complex hyperbolic manifolds.
    Hwang {
        #[arg(long)]
        n: u32,
        /// Last dimension of the range; defaults to n.
        #[arg(long)]
        n_to: Option<u32>,
        /// Number of cusps.
        #[arg(long, default_value_t = 1)]
        k: u64,
    },
    /// Reduced forms and torsion of the class group of Q(sqrt(-d)).
    Classgroup {
        #[arg(long)]
        d: i64,
        /// Report the number of classes killed by m (repeatable).
        #[arg(long = "torsion", value_name = "M")]
        torsion: Vec<u64>,
    },
    /// Compare exact covolumes with the numeric volume formula.
    Selfcheck {
        /// Only Q(sqrt(-3)) at n = 2, 3, 9.
        #[arg(long)]
        quick: bool,
    },
}

fn emit(out: &Output, format: Format) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(out.render(format).as_bytes()).and_then(|_| stdout.flush()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}

fn run(command: Command, format: Format) -> CommandResult<ExitCode> {
    let out = match command {
        Command::Nu { d, n } => commands::nu(d, n)?,
        Command::Scan { n, max_disc } => commands::scan(n, max_disc)?,
        Command::Minimal { overall: true, n_max, verbose, .. } => commands::overall(n_max, verbose)?,
        Command::Minimal { n, verbose, .. } => commands::minimal(n.expect("clap requires n"), verbose)?,
        Command::Growth { d, n_from, n_to } => commands::growth(d, n_from, n_to)?,
        Command::Hwang { n, n_to, k } => commands::hwang(n, n_to.unwrap_or(n), k)?,
        Command::Classgroup { d, torsion } => commands::classgroup(d, &torsion)?,
        Command::Selfcheck { quick } => {
            let tolerance = selfcheck::tolerance_from_env().map_err(commands::InputError)?;
            let (report, out) = commands::selfcheck(&ExactValues, quick, tolerance);
            let code = emit(&out, format);
            if !report.passed() {
                for line in report.failures() {
                    let what = match (line.discrepancy, &line.error) {
                        (Some(g), _) => format!("relative discrepancy {g:.3e} exceeds {:.1e}", line.tolerance),
                        (None, Some(e)) => e.clone(),
                        (None, None) => "no value".into(),
                    };
                    eprintln!("selfcheck failed for d={} n={}: {what}", line.d, line.n);
                }
                return Ok(ExitCode::from(1));
            }
            eprintln!("selfcheck: {} checks passed", report.lines.len());
            return Ok(code);
        }
    };
    Ok(emit(&out, format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format.unwrap_or(if std::io::stdout().is_terminal() { Format::Table } else { Format::Json });
    match run(cli.command, format) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
