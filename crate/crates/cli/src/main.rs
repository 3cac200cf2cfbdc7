use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Parser, Subcommand};
use fracsum::classify::DEFAULT_D_MAX;
use fracsum::groups::DEFAULT_CAP;
use fracsum_cli::{run, Command, Format, RunConfig, DEFAULT_ORACLE_D_MAX, DEFAULT_SEED};

/// Fractional-part sums, Hermitian forms and finite monodromy.
#[derive(Parser)]
#[command(name = "fracsum", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide SS, STAR and anisotropy for one tuple.
    Check {
        #[arg(long)]
        d: u32,
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<u32>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// List the equivalence classes of (n+1)-tuples satisfying the condition.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_D_MAX)]
        dmax: u32,
    },
    /// Emit Table 1, 2, 3 or 4.
    Tables {
        #[arg(long)]
        which: u8,
        #[arg(long, default_value_t = DEFAULT_D_MAX)]
        dmax: u32,
    },
    /// Cross-check triples against the matrix-group closure.
    Oracle {
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, value_delimiter = ',')]
        ks: Option<Vec<u32>>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_D_MAX)]
        dmax: u32,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        /// Close up to the cap without infinite-order certificates.
        #[arg(long)]
        literal: bool,
    },
    /// Run the acceptance suite.
    Verify,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Command {
        match c {
            Cmd::Check { d, ks, cap } => Command::Check { d, ks, cap },
            Cmd::Enumerate { n, dmax } => Command::Enumerate { n, d_max: dmax },
            Cmd::Tables { which, dmax } => Command::Tables { which, d_max: dmax },
            Cmd::Oracle {
                d,
                ks,
                dmax,
                cap,
                literal,
            } => Command::Oracle {
                d,
                ks,
                d_max: dmax,
                cap,
                literal,
            },
            Cmd::Verify => Command::Verify,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        command: cli.command.into(),
        format: cli.format,
        out: cli.out,
        seed: cli.seed,
    };
    if let Err(e) = config.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match execute(&config) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn execute(config: &RunConfig) -> anyhow::Result<u8> {
    let outcome = run(config)?;
    match &config.out {
        Some(path) => std::fs::write(path, &outcome.output).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", outcome.output),
    }
    Ok(outcome.status.code() as u8)
}
