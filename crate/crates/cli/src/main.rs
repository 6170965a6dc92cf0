mod commands;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact formal group laws and Hirzebruch genera.
#[derive(Parser)]
#[command(name = "genusforge", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect and check formal group laws.
    #[command(subcommand)]
    Fgl(FglCommand),
    /// Evaluate genera on projective spaces and Chern-number tables.
    #[command(subcommand)]
    Genus(GenusCommand),
    /// Expand the Witten series and run its checks.
    Witten(WittenArgs),
    /// Run the identity checks and report PASS/FAIL per check.
    Verify(VerifyArgs),
    /// exp, log or revert a univariate series given as JSON.
    Series(SeriesArgs),
}

#[derive(Subcommand)]
enum FglCommand {
    /// List the law catalog.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print the coefficients of a law.
    Series(LawArgs),
    /// Check the unit, commutativity and associativity axioms.
    Check(LawArgs),
    /// Canonical strict isomorphism `exp_G ∘ log_F` and its verification.
    Iso {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct LawArgs {
    #[arg(long)]
    law: String,
    #[arg(long)]
    order: Option<usize>,
    /// Generator specialization, e.g. `delta=-1/8`; repeatable.
    #[arg(long = "param", value_name = "NAME=P/Q")]
    params: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum GenusCommand {
    /// Genus of `CP^n`, for one `n` or for `1..=max-n`.
    Cpn {
        #[command(flatten)]
        series: SeriesChoice,
        #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Genus of a manifold given by its Chern numbers.
    Chern {
        #[command(flatten)]
        series: SeriesChoice,
        /// e.g. `c1^2=9,c2=3`.
        #[arg(long)]
        chern: String,
    },
    /// Genus of `CP^0, …, CP^max-n`.
    Table {
        #[command(flatten)]
        series: SeriesChoice,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Args)]
struct SeriesChoice {
    /// A genus series (todd, ahat, gamma, gamma_raw, gamma_normalized) or a catalog law.
    #[arg(long)]
    series: String,
    /// Presentation of the Γ-genus when `--series gamma`.
    #[arg(long, default_value = "raw")]
    presentation: String,
}

#[derive(Args)]
struct WittenArgs {
    #[arg(long, default_value_t = 10)]
    x_order: usize,
    #[arg(long, default_value_t = 8)]
    q_order: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Fgl,
    Gamma,
    Witten,
    Universal,
    Iso,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(value_enum)]
    op: SeriesOp,
    /// JSON file `{"order":n,"coeffs":[…]}`; standard input when absent.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    Exp,
    Log,
    Revert,
}

/// Failure surfaced to the user with an exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<genusforge_core::Error> for CliError {
    fn from(e: genusforge_core::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

/// What a command prints on stdout and whether its checks passed.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

/// `GENUSFORGE_ORDER` if set, else `fallback`.
fn default_order(fallback: usize) -> Result<usize, CliError> {
    match std::env::var("GENUSFORGE_ORDER") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("GENUSFORGE_ORDER={v:?} is not an order"))),
        Err(_) => Ok(fallback),
    }
}

fn resolve_order(flag: Option<usize>, fallback: usize) -> Result<usize, CliError> {
    let order = match flag {
        Some(o) => o,
        None => default_order(fallback)?,
    };
    if order < 2 {
        return Err(CliError::usage(format!(
            "order {order} is below the minimum 2"
        )));
    }
    Ok(order)
}

fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Fgl(FglCommand::List { json }) => commands::fgl_list(json),
        Command::Fgl(FglCommand::Series(a)) => {
            commands::fgl_series(&a.law, resolve_order(a.order, 10)?, &a.params, a.json)
        }
        Command::Fgl(FglCommand::Check(a)) => {
            commands::fgl_check(&a.law, resolve_order(a.order, 10)?, &a.params, a.json)
        }
        Command::Fgl(FglCommand::Iso {
            from,
            to,
            order,
            json,
        }) => commands::fgl_iso(&from, &to, resolve_order(order, 10)?, json),
        Command::Genus(GenusCommand::Cpn { series, n, max_n }) => {
            commands::genus_cpn(&series.series, &series.presentation, n, max_n)
        }
        Command::Genus(GenusCommand::Chern { series, chern }) => {
            commands::genus_chern(&series.series, &series.presentation, &chern)
        }
        Command::Genus(GenusCommand::Table { series, max_n }) => {
            commands::genus_table(&series.series, &series.presentation, max_n)
        }
        Command::Witten(a) => commands::witten(a.x_order, a.q_order),
        Command::Verify(a) => verify::run(resolve_order(a.order, 12)?, a.suite),
        Command::Series(a) => commands::series_op(
            match a.op {
                SeriesOp::Exp => commands::RawOp::Exp,
                SeriesOp::Log => commands::RawOp::Log,
                SeriesOp::Revert => commands::RawOp::Revert,
            },
            a.input.as_deref(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error for a report printer
            let _ = writeln!(stdout, "{}", out.text);
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
