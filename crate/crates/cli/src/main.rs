mod commands;
mod instance;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rigged_core::DEFAULT_VERTEX_CAP;

use crate::render::Style;

/// Unrestricted rigged configurations: crystal closure, Stembridge verification,
/// fermionic formulas and promotion.
#[derive(Debug, Parser)]
#[command(name = "rigged", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Instance file (JSON), or `-` for standard input
    pub instance: PathBuf,
    /// Print results as JSON
    #[arg(long)]
    pub json: bool,
    /// Show vacancy numbers next to each string
    #[arg(long)]
    pub vacancies: bool,
    /// One line per rigged configuration instead of diagrams
    #[arg(long)]
    pub compact: bool,
}

impl Common {
    pub fn style(&self) -> Style {
        Style { vacancies: self.vacancies, compact: self.compact }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the highest-weight rigged configurations, of the instance weight if given
    Hw(Common),
    /// Generate RC(L) and print the size of every weight fiber
    Closure(Common),
    /// Export a crystal graph: the component of `element`, or of the `--component`-th
    /// highest-weight element of `weight`, or all of RC(L)
    Graph {
        #[command(flatten)]
        common: Common,
        /// Write DOT instead of JSON
        #[arg(long)]
        dot: bool,
        /// Component index
        #[arg(long)]
        component: Option<usize>,
    },
    /// Check the Stembridge axioms on every component and all invariants
    Verify {
        #[command(flatten)]
        common: Common,
        /// Skip the type-A, path-oracle and promotion checks
        #[arg(long)]
        axioms_only: bool,
    },
    /// Check the Stembridge axioms on a graph file (JSON or DOT)
    VerifyGraph {
        graph: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Fermionic formula for M(L, lambda) (type A)
    Fermionic {
        #[command(flatten)]
        common: Common,
        /// Also compute M(L, lambda) from RC(L) and require equality
        #[arg(long)]
        both: bool,
    },
    /// M(L, lambda) summed over the generated weight fiber (type A)
    Direct(Common),
    /// Membership of `element` in the extended set, with a witness tableau (type A)
    Extended(Common),
    /// Promotion of `element` (type A)
    Promote {
        #[command(flatten)]
        common: Common,
        /// Show the lifted configuration and every rho pass
        #[arg(long)]
        trace: bool,
    },
    /// Affine operator f_0 on `element` (type A)
    F0(Common),
    /// Affine operator e_0 on `element` (type A)
    E0(Common),
    /// Compare RC(L) with the tableau-path crystal (type A)
    Oracle(Common),
}

/// Failure kinds, mapped to exit codes 1 (a check failed) and 2 (bad input).
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] rigged_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(rigged_core::Error::Promotion(_)) => 1,
            _ => 2,
        }
    }
}

/// Vertex cap for crystal generation, overridable by `RIGGED_MAX_VERTICES`.
fn vertex_cap() -> Result<usize, CliError> {
    match std::env::var("RIGGED_MAX_VERTICES") {
        Err(_) => Ok(DEFAULT_VERTEX_CAP),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("RIGGED_MAX_VERTICES={v} is not a vertex count"))),
    }
}

fn run(cli: Cli) -> Result<commands::Output, CliError> {
    let cap = vertex_cap()?;
    match cli.command {
        Command::Hw(c) => commands::hw(&c),
        Command::Closure(c) => commands::closure(&c, cap),
        Command::Graph { common, dot, component } => commands::graph(&common, dot, component, cap),
        Command::Verify { common, axioms_only } => commands::verify(&common, axioms_only, cap),
        Command::VerifyGraph { graph, json } => commands::verify_graph(&graph, json),
        Command::Fermionic { common, both } => commands::fermionic(&common, both, cap),
        Command::Direct(c) => commands::direct(&c, cap),
        Command::Extended(c) => commands::extended(&c),
        Command::Promote { common, trace } => commands::promote(&common, trace, cap),
        Command::F0(c) => commands::affine_op(&c, commands::AffineOp::F0, cap),
        Command::E0(c) => commands::affine_op(&c, commands::AffineOp::E0, cap),
        Command::Oracle(c) => commands::oracle(&c, cap),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
