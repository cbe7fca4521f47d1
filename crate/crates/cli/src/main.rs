//! `cobweb`: command-line front end to the cobweb poset engine.

mod commands;
mod render;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cobweb_core::verify::Suite;
use cobweb_core::{Error, Limits};
use render::Format;

#[derive(Parser)]
#[command(
    name = "cobweb",
    version,
    about = "Fibonacci cobweb poset and Fibonomial coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Lift every size guard.
    #[arg(long, global = true)]
    unsafe_limits: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Product,
    RecA,
    RecB,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Order,
    Explicit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// F_s positions on level k+s.
    Aligned,
    /// The sizes F_1..F_m in any order across the levels.
    Permuted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// Elementary symmetric: distinct indices.
    C,
    /// Complete homogeneous: indices may repeat.
    S,
}

#[derive(Subcommand)]
enum Command {
    /// (n k)_F, or the triangle of rows 0..=R.
    Fibonomial {
        n: Option<usize>,
        k: Option<usize>,
        #[arg(long, value_name = "R", conflicts_with_all = ["n", "k"])]
        triangle: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Product)]
        method: Method,
    },
    /// Incidence matrix zeta of the poset with N levels.
    Zeta {
        n: usize,
        #[arg(long, conflicts_with = "order")]
        explicit: bool,
        #[arg(long)]
        order: bool,
        /// Build both ways and compare.
        #[arg(long)]
        check: bool,
    },
    /// Mobius matrix mu = zeta^-1.
    Mobius { n: usize },
    /// Maximal chains from <j,k> up to level n.
    Chains {
        k: usize,
        n: usize,
        /// Position j of the start vertex on level k.
        #[arg(long, default_value_t = 1)]
        vertex: usize,
        /// List every chain, one per line.
        #[arg(long)]
        enumerate: bool,
    },
    /// Tile the chains above <r,k> with height-m copies.
    Tiling {
        k: usize,
        r: usize,
        m: usize,
        #[arg(long, value_enum, default_value_t = Model::Aligned)]
        model: Model,
        /// Count every tiling instead of printing one.
        #[arg(long)]
        count_all: bool,
    },
    /// Sum of binomial determinants N(R) over k-subsets of {0..n}.
    Gv {
        n: usize,
        k: usize,
        /// Also list each N(R).
        #[arg(long)]
        terms: bool,
    },
    /// Weighted binomial coefficient C or S.
    Konvalina {
        #[arg(value_enum)]
        kind: Kind,
        /// Comma-separated weights, or ones:N, arithmetic:N, geometric:N:Q.
        weights: String,
        k: usize,
        /// Sort the weights instead of rejecting unsorted input.
        #[arg(long)]
        sort: bool,
    },
    /// Order ideals of the m-element fence.
    Fence { m: usize },
    /// Hasse diagram of the poset with N levels.
    Hasse { n: usize },
    /// Run the self-verification suites.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Flip entry ROW,COL of the order-built zeta (debug hook).
        #[arg(long, hide = true, value_name = "ROW,COL", value_parser = parse_pair)]
        inject_zeta_fault: Option<(usize, usize)>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected ROW,COL")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Guard(String),
    Verification(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
            Error::GuardExceeded { .. } => CliError::Guard(format!("{e}; rerun with --unsafe-limits to lift it")),
            Error::NegativePathCount { .. } => CliError::Verification(e.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Guard(m) | CliError::Verification(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Guard(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

fn dispatch(cmd: Command, limits: &Limits) -> Result<render::Report, CliError> {
    use commands as c;
    match cmd {
        Command::Fibonomial { n, k, triangle, method } => c::fibonomial(n, k, triangle, method),
        Command::Zeta {
            n,
            explicit,
            order: _,
            check,
        } => {
            let how = if explicit {
                Construction::Explicit
            } else {
                Construction::Order
            };
            c::zeta(n, how, check, limits)
        }
        Command::Mobius { n } => c::mobius(n, limits),
        Command::Chains {
            k,
            n,
            vertex,
            enumerate,
        } => c::chains(k, n, vertex, enumerate, limits),
        Command::Tiling {
            k,
            r,
            m,
            model,
            count_all,
        } => c::tiling(k, r, m, model, count_all, limits),
        Command::Gv { n, k, terms } => c::gv(n, k, terms, limits),
        Command::Konvalina { kind, weights, k, sort } => c::konvalina(kind, &weights, k, sort),
        Command::Fence { m } => c::fence(m, limits),
        Command::Hasse { n } => c::hasse(n),
        Command::Verify {
            suite,
            inject_zeta_fault,
        } => c::verify(suite, inject_zeta_fault),
    }
}

fn run(cli: Cli) -> Result<Option<String>, CliError> {
    let limits = if cli.unsafe_limits {
        eprintln!("warning: --unsafe-limits lifts every size guard; this may run for a very long time");
        Limits::unlimited()
    } else {
        Limits::default()
    };
    let report = dispatch(cli.command, &limits)?;
    let body = report.render(cli.format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => {
            let mut out = std::io::stdout().lock();
            // a closed pipe (e.g. `| head`) is not an error
            let _ = out.write_all(body.as_bytes()).and_then(|_| out.flush());
        }
    }
    Ok(report.failure)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(failure)) => {
            eprintln!("verification failed: {failure}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
