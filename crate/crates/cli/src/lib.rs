//! Spec-file front end for the lftop kernel.

pub mod commands;
pub mod model;
pub mod report;
pub mod spec;

use clap::{Parser, Subcommand, ValueEnum};
use commands::{Action, FilterAction, Options, Target};
use lftop_core::Limits;
use std::ffi::OsString;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "lftop", version, about = "Check lattice-valued fuzzy topologies, filters and compactness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output style.
    #[arg(long, global = true, value_enum, default_value = "human")]
    pub format: Format,
    /// Restrict to this space (repeatable; order gives product factors).
    #[arg(long, global = true)]
    pub space: Vec<String>,
    /// Restrict to this map (repeatable).
    #[arg(long, global = true)]
    pub map: Vec<String>,
    /// Restrict to this filter (repeatable).
    #[arg(long, global = true)]
    pub filter: Vec<String>,
    #[arg(long, global = true)]
    pub max_subsets: Option<u64>,
    #[arg(long, global = true)]
    pub max_powerset: Option<usize>,
    #[arg(long, global = true)]
    pub max_filters: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ValidateTarget {
    Lattice,
    Glmonoid,
    CoGlmonoid,
    Cqm,
    Topology,
    Interior,
    Nbhd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FiltersTarget {
    Enumerate,
    Check,
    Ultrafilters,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run an axiom battery.
    Validate { what: ValidateTarget, spec: PathBuf },
    /// Print the residuum table.
    Residuum { spec: PathBuf },
    /// Print the co-implication table.
    Coimpl { spec: PathBuf },
    /// Report Heyting / MV tags.
    Classify { spec: PathBuf },
    /// Enumerate, check or classify filters.
    Filters { what: FiltersTarget, spec: PathBuf },
    /// Smallest filter above each declared filter table.
    Saturate { spec: PathBuf },
    /// Decide compactness.
    Compact { spec: PathBuf },
    /// Build the product of the selected spaces.
    Product { spec: PathBuf },
    /// Compare factor and product compactness.
    Tychonoff { spec: PathBuf },
    /// Check continuity of declared maps.
    Continuity { spec: PathBuf },
}

impl Command {
    fn split(&self) -> (Action, &PathBuf) {
        match self {
            Command::Validate { what, spec } => (
                Action::Validate(match what {
                    ValidateTarget::Lattice => Target::Lattice,
                    ValidateTarget::Glmonoid => Target::GlMonoid,
                    ValidateTarget::CoGlmonoid => Target::CoGlMonoid,
                    ValidateTarget::Cqm => Target::Cqm,
                    ValidateTarget::Topology => Target::Topology,
                    ValidateTarget::Interior => Target::Interior,
                    ValidateTarget::Nbhd => Target::Nbhd,
                }),
                spec,
            ),
            Command::Residuum { spec } => (Action::Residuum, spec),
            Command::Coimpl { spec } => (Action::Coimpl, spec),
            Command::Classify { spec } => (Action::Classify, spec),
            Command::Filters { what, spec } => (
                Action::Filters(match what {
                    FiltersTarget::Enumerate => FilterAction::Enumerate,
                    FiltersTarget::Check => FilterAction::Check,
                    FiltersTarget::Ultrafilters => FilterAction::Ultrafilters,
                }),
                spec,
            ),
            Command::Saturate { spec } => (Action::Saturate, spec),
            Command::Compact { spec } => (Action::Compact, spec),
            Command::Product { spec } => (Action::Product, spec),
            Command::Tychonoff { spec } => (Action::Tychonoff, spec),
            Command::Continuity { spec } => (Action::Continuity, spec),
        }
    }
}

/// What a run printed and how it exited.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit codes: 0 every check passed, 1 some check failed, 2 usage, parse or kernel error.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let fail = |msg: String| Outcome {
        code: 2,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    };
    let (action, path) = cli.command.split();
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(format!("{}: {e}", path.display())),
    };
    let doc = match spec::parse_spec(&text) {
        Ok(d) => d,
        Err(e) => return fail(format!("{}:{e}", path.display())),
    };
    let mut limits = Limits::default();
    if let Some(v) = cli.max_subsets {
        limits.max_subsets = v;
    }
    if let Some(v) = cli.max_powerset {
        limits.max_powerset = v;
    }
    if let Some(v) = cli.max_filters {
        limits.max_filters = v;
    }
    let opts = Options {
        spaces: cli.space,
        maps: cli.map,
        filters: cli.filter,
        limits,
    };
    let report = match model::Model::new(doc).and_then(|m| commands::run_command(&m, action, &opts)) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    let stdout = match cli.format {
        Format::Human => report.to_string(),
        Format::Machine => report.to_machine(),
    };
    Outcome {
        code: if report.passed() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}
