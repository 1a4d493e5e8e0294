//! Library side of the `fuzzcover` binary: workspace parsing, command
//! execution and report rendering. [`run`] never touches the process, so
//! tests can drive it directly.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fuzzcover::Budget;

mod commands;
pub mod workspace;

pub use workspace::{parse_workspace, Claim, ParseError, Workspace};

/// Version of the machine-readable document layout.
pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_THEOREM: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "fuzzcover",
    version,
    about = "Verify fuzzy subgroups and their F-inverse covers"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest candidate space an enumeration may examine.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT.limit())]
    pub budget: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate every block of a workspace file.
    Check { file: PathBuf },
    /// Build and describe the F-inverse cover of each fuzzy subgroup.
    Cover {
        file: PathBuf,
        /// Comma-separated sections: elements, table, idempotents, order, sigma, green, levels.
        #[arg(long, value_delimiter = ',')]
        report: Option<Vec<Section>>,
    },
    /// Level subsets and the H-classes of the idempotents.
    Levels { file: PathBuf },
    /// Check that Ω is bijective on hom-sets. Without `--grid` the fuzzy
    /// blocks are used; with it, every fuzzy subgroup of every declared group.
    Embed {
        source: PathBuf,
        target: Option<PathBuf>,
        /// Use the k largest levels of {1/4, 1/2, 3/4, 1}.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        grid: Option<u8>,
    },
    /// Enumerate fuzzy subgroups of each declared group two ways and compare.
    Enumerate {
        file: PathBuf,
        /// Use the k largest levels of {1/4, 1/2, 3/4, 1}.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4), default_value_t = 4)]
        grid: u8,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Section {
    Elements,
    Table,
    Idempotents,
    Order,
    Sigma,
    Green,
    Levels,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => commands::execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_PARSE,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            }
        }
    }
}
