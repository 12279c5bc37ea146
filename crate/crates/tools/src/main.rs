use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quintic_core::analysis::DEFAULT_MINIMALITY_BUDGET;
use quintic_core::distribution::DEFAULT_ENUMERATION_BUDGET;
use quintic_tools::commands::{self, Format, Mode};
use quintic_tools::VerifyOptions;

/// Trace codes over F_{2^m}[v]/(v^5 - 1): weight distributions and checks.
#[derive(Parser)]
#[command(name = "quintic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Write to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Operation budget for exhaustive work.
    #[arg(long, global = true, value_name = "OPS")]
    budget: Option<u128>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the embedded modulus table.
    FieldTable,
    /// Lee weight distribution of C(m,2,L).
    Distribution {
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value = "theoretical")]
        mode: Mode,
    },
    /// Run every applicable check for m.
    Verify {
        #[arg(long)]
        m: u32,
    },
    /// Griesmer optimality at d + 1.
    Griesmer {
        #[arg(long)]
        m: u32,
    },
    /// Dual distance of the Gray image.
    Dual {
        #[arg(long)]
        m: u32,
    },
    /// Ashikhmin-Barg condition and brute-force minimal codewords.
    Minimal {
        #[arg(long)]
        m: u32,
    },
    /// Massey secret sharing.
    Sss {
        #[command(subcommand)]
        action: SssAction,
    },
}

#[derive(Subcommand)]
enum SssAction {
    /// Deal a secret, recover it from two coalitions, and classify the scheme.
    Demo {
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 1)]
        secret: u8,
    },
}

/// What a command produced: the document, whether every check passed, and
/// lines for stderr.
struct Outcome {
    text: String,
    success: bool,
    diagnostics: Vec<String>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            success: true,
            diagnostics: Vec::new(),
        }
    }
}

fn execute(cli: Cli) -> anyhow::Result<Outcome> {
    let c = &cli.common;
    let pool = quintic_tools::parallel::pool(c.jobs)?;
    pool.install(|| {
        let text = match cli.command {
            Command::FieldTable => commands::field_table(c.format)?,
            Command::Distribution { m, mode } => commands::distribution(
                m,
                mode,
                c.format,
                c.budget.unwrap_or(DEFAULT_ENUMERATION_BUDGET),
                c.seed,
            )?,
            Command::Verify { m } => {
                let mut opts = VerifyOptions::new(m);
                opts.seed = c.seed;
                if let Some(b) = c.budget {
                    opts.enumeration_budget = b;
                    opts.minimality_budget = b;
                }
                let (report, timings) = commands::verify_report(&opts)?;
                let mut diagnostics: Vec<String> = timings
                    .iter()
                    .map(|(name, secs)| format!("{name:<31} {secs:>8.3}s"))
                    .collect();
                let failed: Vec<_> = report.failed().map(|f| f.name.as_str()).collect();
                if !failed.is_empty() {
                    diagnostics.push(format!("failed checks: {}", failed.join(", ")));
                }
                return Ok(Outcome {
                    text: commands::render_verification(&report, c.format)?,
                    success: failed.is_empty(),
                    diagnostics,
                });
            }
            Command::Griesmer { m } => commands::griesmer(m, c.format)?,
            Command::Dual { m } => commands::dual(m, c.format)?,
            Command::Minimal { m } => {
                commands::minimal(m, c.format, c.budget.unwrap_or(DEFAULT_MINIMALITY_BUDGET))?
            }
            Command::Sss {
                action: SssAction::Demo { m, secret },
            } => commands::render_sss(&commands::sss_demo(m, secret, c.seed)?, c.format)?,
        };
        Ok(Outcome::ok(text))
    })
}

fn emit(out: Option<&PathBuf>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.common.out.clone();
    let result = execute(cli).and_then(|o| {
        for line in &o.diagnostics {
            eprintln!("{line}");
        }
        emit(out.as_ref(), &o.text)?;
        Ok(o.success)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
