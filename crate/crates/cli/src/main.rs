use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use supercong::report::{write_reports, write_summary, Format};
use supercong::special::{parse_fraction, query_special, Kind};
use supercong::{parse_prime_range, run_sweep, run_wz, CheckSelection, CliError, SweepConfig};
use supercong_core::{registry_list, CheckKind};

#[derive(Parser)]
#[command(name = "supercong", version, about = "Check supercongruences and WZ-pair identities exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep congruence checks over a prime range.
    Verify {
        /// Comma-separated check IDs, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Inclusive prime range `lo..hi` with 3 < lo <= hi.
        #[arg(long)]
        primes: String,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write records here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run the exact WZ grids.
    Wz {
        #[arg(long)]
        grid: u64,
        #[arg(long)]
        telescope: u64,
    },
    /// Print a Euler/Bernoulli number or polynomial value modulo p.
    Special {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Rational argument `a/b` for the polynomials.
        #[arg(long)]
        x: Option<String>,
    },
    /// Print the check catalog.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether everything passed.
fn run(cmd: Command) -> Result<bool, CliError> {
    match cmd {
        Command::Verify { checks, primes, jobs, format, out } => {
            let (prime_lo, prime_hi) = parse_prime_range(&primes)?;
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let cfg = SweepConfig { checks: CheckSelection::parse(&checks)?, prime_lo, prime_hi, jobs };
            let outcome = run_sweep(&cfg)?;
            match out {
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    write_reports(&mut w, &outcome.reports, format)?;
                    w.flush()?;
                }
                None => {
                    let mut w = BufWriter::new(io::stdout().lock());
                    write_reports(&mut w, &outcome.reports, format)?;
                    w.flush()?;
                }
            }
            write_summary(&mut io::stderr(), &outcome.summary)?;
            Ok(outcome.summary.fail == 0)
        }
        Command::Wz { grid, telescope } => {
            let s = run_wz(grid, telescope)?;
            for f in &s.families {
                let status = if f.failures.is_empty() { "pass" } else { "FAIL" };
                println!("{:<18} {:<22} {:>6} points  {status}", f.id.as_str(), f.range, f.points);
                for fail in &f.failures {
                    println!("    failed at {fail}");
                }
            }
            Ok(s.failures() == 0)
        }
        Command::Special { kind, p, n, x } => {
            let x = x.as_deref().map(parse_fraction).transpose()?;
            let v = query_special(kind, p, n, x)?;
            println!("{} mod {} = {}", v.label, v.p, v.residue);
            if let Some(exact) = v.exact {
                println!("{} = {}", v.label, exact);
            }
            Ok(true)
        }
        Command::List => {
            let mut w = BufWriter::new(io::stdout().lock());
            for d in registry_list() {
                let scope = match d.kind {
                    CheckKind::Congruence => {
                        format!("p > {}, mod p^{}", d.min_prime_exclusive, d.exponent.unwrap_or(0))
                    }
                    CheckKind::ExactIdentity => format!("exact, {}", d.range_param.unwrap_or("")),
                };
                writeln!(w, "{:<24} {:<40} {}", d.id.as_str(), scope, d.statement)?;
            }
            w.flush()?;
            Ok(true)
        }
    }
}
