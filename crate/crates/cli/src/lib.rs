//! Command-line front end: manifests in, check reports out.

pub mod commands;
pub mod demos;
pub mod locate;
pub mod manifest;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use hopfkit::exactalg::FieldSpec;

use commands::{run_file, CliError, FileCommand, Options};
use report::Format;

#[derive(Debug, Parser)]
#[command(name = "hopfkit", version, about = "Exact checks for bialgebras, Hopf monads, Hopf modules and bialgebroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Number of probe objects for bimonad sweeps.
    #[arg(long, global = true)]
    pub probes: Option<usize>,
    /// Seed for random probe objects.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Field override: Q or Fp for a prime p.
    #[arg(long, global = true)]
    pub field: Option<FieldSpec>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the axioms of the structure in a manifest.
    Check { file: PathBuf },
    /// Compute the fusion operator and, when it is invertible, the antipode.
    Antipode { file: PathBuf },
    /// Bimonad axioms, fusion identities and Hopf verdicts of A ⊗ -.
    HopfCheck { file: PathBuf },
    /// Bosonize a bialgebra in Yetter–Drinfeld modules.
    Bosonize {
        file: PathBuf,
        /// Write the bosonization as a manifest.
        #[arg(long)]
        emit_manifest: Option<PathBuf>,
    },
    /// Decompose a Hopf algebra with a projection.
    Radford { file: PathBuf },
    /// Smash product of a module algebra with its Hopf algebra.
    Smash { file: PathBuf },
    /// Induce a module along a bialgebra morphism.
    CrossQuotient { file: PathBuf },
    /// Coinvariants and the Sweedler decomposition of a Hopf module.
    HopfmodDecompose { file: PathBuf },
    /// Bialgebroid axioms, Galois maps and the bimonad on bimodules.
    AlgebroidCheck { file: PathBuf },
    /// Run a built-in example.
    Demo {
        name: String,
        /// Write the demo's main object as a manifest.
        #[arg(long)]
        emit_manifest: Option<PathBuf>,
    },
    /// List the built-in examples.
    ListDemos,
}

/// What a run printed and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn execute(cli: Cli) -> Execution {
    let mut opts = Options { probes: cli.probes, seed: cli.seed, field: cli.field, emit_manifest: None };
    let file = |c, f: PathBuf, opts: &Options| run_file(c, &f, opts);
    let outcome = match cli.command {
        Command::Check { file: f } => file(FileCommand::Check, f, &opts),
        Command::Antipode { file: f } => file(FileCommand::Antipode, f, &opts),
        Command::HopfCheck { file: f } => file(FileCommand::HopfCheck, f, &opts),
        Command::Bosonize { file: f, emit_manifest } => {
            opts.emit_manifest = emit_manifest;
            file(FileCommand::Bosonize, f, &opts)
        }
        Command::Radford { file: f } => file(FileCommand::Radford, f, &opts),
        Command::Smash { file: f } => file(FileCommand::Smash, f, &opts),
        Command::CrossQuotient { file: f } => file(FileCommand::CrossQuotient, f, &opts),
        Command::HopfmodDecompose { file: f } => file(FileCommand::HopfmodDecompose, f, &opts),
        Command::AlgebroidCheck { file: f } => file(FileCommand::AlgebroidCheck, f, &opts),
        Command::Demo { name, emit_manifest } => {
            opts.emit_manifest = emit_manifest;
            demos::run(&name, &opts)
        }
        Command::ListDemos => Ok(demos::list()),
    };
    match outcome {
        Ok(report) => Execution { stdout: report.render(cli.format), stderr: String::new(), code: report.exit_code },
        Err(e) => {
            let mut stderr = match &e {
                CliError::Input(input) => format!("error: {} problem(s) in input\n", input.diagnostics.len()),
                CliError::Invalid(_) => "error: ".to_string(),
            };
            stderr.push_str(&e.to_string());
            stderr.push('\n');
            Execution { stdout: String::new(), stderr, code: 2 }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Execution { stdout: text, stderr: String::new(), code }
            } else {
                Execution { stdout: String::new(), stderr: text, code }
            }
        }
    }
}
