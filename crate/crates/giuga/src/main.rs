use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use giuga::commands::{self, FindTarget, VerifyTarget};
use giuga::report::Format;
use giuga::runner::ScanOptions;
use giuga_core::bernoulli::Method;

#[derive(Parser)]
#[command(name = "giuga", version, about = "Exact checks around the Giuga-Agoh primality criterion")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads for scans (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Stirling,
    Worpitzky,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernoulli number B_n
    Bernoulli {
        n: u64,
        /// Compute by one route only; by default both are computed and compared
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
    },
    /// Sweep a congruence over a grid of parameters
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        n_max: Option<u64>,
        /// Largest modulus (theorem2 only)
        #[arg(long)]
        m_max: Option<u64>,
    },
    /// Classify every integer of a range against the criterion
    Scan {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
        /// Checkpoint file, created or resumed
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Number of blocks the remaining range is split into
        #[arg(long, default_value_t = 16)]
        blocks: usize,
        /// Stop after this many blocks (resume later from the checkpoint)
        #[arg(long)]
        max_blocks: Option<usize>,
    },
    /// List Giuga, Carmichael or Butske numbers up to a bound
    Find {
        #[arg(value_enum)]
        target: FindTarget,
        #[arg(long)]
        max: u64,
    },
    /// Report every structural condition for one integer
    Check { n: u64 },
}

fn run(cli: &Cli) -> giuga::Result<giuga::report::RunReport> {
    match &cli.command {
        Command::Bernoulli { n, method } => {
            let method = method.map(|m| match m {
                MethodArg::Stirling => Method::Stirling,
                MethodArg::Worpitzky => Method::Worpitzky,
            });
            commands::bernoulli(*n, method)
        }
        Command::Verify { target, n_max, m_max } => commands::verify(*target, *n_max, *m_max),
        Command::Scan { from, to, checkpoint, blocks, max_blocks } => {
            if *blocks == 0 {
                return Err(giuga::Error::Usage("--blocks must be positive".into()));
            }
            let threads = cli
                .threads
                .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let options = ScanOptions { blocks: *blocks, threads, max_blocks: *max_blocks };
            commands::scan(*from, *to, checkpoint.as_deref(), &options)
        }
        Command::Find { target, max } => commands::find(*target, *max),
        Command::Check { n } => commands::check(*n),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if cli.threads == Some(0) {
        eprintln!("error: --threads must be positive");
        return ExitCode::from(1);
    }
    let started = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.elapsed_ms = started.elapsed().as_millis() as u64;
            print!("{}", report.render(cli.format));
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
