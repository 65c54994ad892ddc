//! Command-line front end: argument handling and dispatch.

pub mod commands;
pub mod parse;
pub mod report;

use clap::{Parser, Subcommand, ValueEnum};
use seshadri_core::factory::{DEFAULT_COEFF_BOUND, DEFAULT_MAX_ATTEMPTS};
use seshadri_core::seshadri::ThreefoldCase;

use commands::{CliError, Common, ConstructArgs, EnumerateFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    B,
    C,
}

#[derive(Debug, Parser)]
#[command(name = "seshadri", version, about = "Construct and certify Seshadri-constant examples of hyperplane bundles")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub output: OutputFormat,
    /// Prime for modular checks; also turns on modular pre-screening.
    #[arg(long, global = true)]
    pub modulus: Option<u64>,
    /// Reduction-step budget for each Groebner basis computation.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, clap::Args)]
pub struct Construct {
    #[arg(long)]
    pub d: u32,
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_COEFF_BOUND)]
    pub coeff_bound: u32,
    #[arg(long, default_value_t = DEFAULT_MAX_ATTEMPTS)]
    pub max_attempts: usize,
}

impl Construct {
    fn args(&self) -> ConstructArgs {
        ConstructArgs { d: self.d, m: self.m, seed: self.seed, coeff_bound: self.coeff_bound, max_attempts: self.max_attempts }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicity, tangent cone, lines and lemma checks of a hypersurface at a point.
    Analyze {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Build and verify a surface with exact Seshadri constant d/(d-1).
    ConstructSurface(Construct),
    /// Build and verify a threefold containing such a surface as its tangent section.
    ConstructThreefold(Construct),
    /// List the values a/b permitted by the lemma bounds.
    Enumerate {
        #[arg(long)]
        d: u64,
        #[arg(long, conflicts_with = "case")]
        surface_m: Option<u64>,
        #[arg(long, value_enum)]
        case: Option<CaseArg>,
    },
    /// Certificate for the Seshadri constant at a point.
    Certify {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Offer the tangent-cone slice curve as a witness.
        #[arg(long)]
        slice: bool,
    },
}

/// Runs a parsed command line; returns the rendered output and the exit code.
pub fn run(cli: &Cli) -> Result<(String, i32), CliError> {
    let common = Common { modulus: cli.modulus, budget: cli.budget, timing: cli.timing };
    let outcome = match &cli.command {
        Command::Analyze { file, point } => commands::analyze(file, point, &common)?,
        Command::ConstructSurface(c) => commands::construct_surface(&c.args(), &common)?,
        Command::ConstructThreefold(c) => commands::construct_threefold(&c.args(), &common)?,
        Command::Enumerate { d, surface_m, case } => {
            let family = match (surface_m, case) {
                (Some(m), None) => EnumerateFamily::Surface { m: *m },
                (None, Some(CaseArg::B)) => EnumerateFamily::Threefold(ThreefoldCase::B),
                (None, Some(CaseArg::C)) => EnumerateFamily::Threefold(ThreefoldCase::C),
                _ => return Err(CliError::Usage("enumerate needs exactly one of --surface-m or --case".into())),
            };
            commands::enumerate(*d, family, &common)?
        }
        Command::Certify { file, point, slice } => commands::certify(file, point, *slice, &common)?,
    };
    let text = match cli.output {
        OutputFormat::Json => outcome.report.to_json(),
        OutputFormat::Text => outcome.report.to_text(),
    };
    Ok((text, outcome.exit_code()))
}

/// Parses `args` (including the program name) and runs them, as the binary does.
pub fn run_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 { (text, String::new(), 0) } else { (String::new(), text, 2) };
        }
    };
    match run(&cli) {
        Ok((out, code)) => (out, String::new(), code),
        Err(e) => (String::new(), format!("error: {e}\n"), e.exit_code()),
    }
}
