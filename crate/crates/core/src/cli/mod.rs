//! Command-line front end: load a JSON workspace, run one command, print a
//! line-oriented report. Exit codes: 0 pass, 1 a law failed, 2 bad input.

mod commands;
pub mod report;
pub mod workspace;

use std::ffi::OsString;

use clap::{Parser, Subcommand};

pub use commands::{run_command, Command, Options};
use report::Report;
pub use workspace::{parse_workspace, LoadError, Workspace};

#[derive(Parser, Debug)]
#[command(name = "corings", about = "Exact checks for corings and their extensions")]
struct Cli {
    /// Workspace JSON file.
    #[arg(long, global = true)]
    workspace: Option<String>,
    /// Print the report as a JSON object instead of `key: value` lines.
    #[arg(long, global = true)]
    json_report: bool,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the constructed object as a standalone workspace.
    #[arg(long, global = true)]
    dump: Option<String>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check the axioms of a named object.
    Check { name: String },
    /// Tensor product of two corings over the ground field.
    Tensor {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Tensor product of two extensions.
    ExtendTensor {
        left: String,
        right: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Composite `g • f` of two morphisms.
    Compose {
        g: String,
        f: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// The base ring extension of a corings morphism.
    BaseExtend {
        morphism: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Monoidal structure of `ext` or `corings` on the built-in corpus.
    VerifyMonoidal { category: String },
    /// Dimensions of a named object.
    Dims { name: String },
    /// Sampled naturality of the interchange map `eta`.
    EtaNaturality {
        left: String,
        right: String,
        #[arg(long, default_value_t = 25)]
        samples: usize,
    },
}

impl From<Cmd> for Command {
    fn from(cmd: Cmd) -> Command {
        match cmd {
            Cmd::Check { name } => Command::Check { name },
            Cmd::Tensor { left, right, out } => Command::Tensor { left, right, out },
            Cmd::ExtendTensor { left, right, out } => Command::ExtendTensor { left, right, out },
            Cmd::Compose { g, f, out } => Command::Compose { g, f, out },
            Cmd::BaseExtend { morphism, out } => Command::BaseExtend { morphism, out },
            Cmd::VerifyMonoidal { category } => Command::VerifyMonoidal { category },
            Cmd::Dims { name } => Command::Dims { name },
            Cmd::EtaNaturality { left, right, samples } => Command::EtaNaturality { left, right, samples },
        }
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Check { .. } => "check",
        Cmd::Tensor { .. } => "tensor",
        Cmd::ExtendTensor { .. } => "extend-tensor",
        Cmd::Compose { .. } => "compose",
        Cmd::BaseExtend { .. } => "base-extend",
        Cmd::VerifyMonoidal { .. } => "verify-monoidal",
        Cmd::Dims { .. } => "dims",
        Cmd::EtaNaturality { .. } => "eta-naturality",
    }
}

/// Runs the command line `args` (program name first) without touching the process.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome {
                stdout: String::new(),
                stderr: e.render().to_string(),
                code,
            };
        }
    };
    let render = |r: &Report| {
        if cli.json_report {
            r.render_json()
        } else {
            r.render_text()
        }
    };
    let name = command_name(&cli.command);
    let loaded = match &cli.workspace {
        None => Ok(Workspace::new(crate::exactla::Field::Rationals)),
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => parse_workspace(&text),
            Err(e) => {
                let mut r = Report::new(name);
                r.error("io-error", format!("{path}: {e}"));
                return Outcome {
                    stdout: render(&r),
                    stderr: String::new(),
                    code: 2,
                };
            }
        },
    };
    let ws = match loaded {
        Ok(ws) => ws,
        Err(e) => {
            let mut r = Report::new(name);
            r.error(e.kind(), &e);
            return Outcome {
                stdout: render(&r),
                stderr: String::new(),
                code: 2,
            };
        }
    };
    let options = Options {
        seed: cli.seed,
        dump: cli.dump.clone(),
    };
    let (report, dump) = run_command(&ws, &cli.command.into(), &options);
    let mut stderr = String::new();
    if let (Some(path), Some(text)) = (&options.dump, dump) {
        if let Err(e) = std::fs::write(path, text) {
            stderr = format!("could not write {path}: {e}\n");
        }
    }
    Outcome {
        stdout: render(&report),
        stderr,
        code: report.status().exit_code(),
    }
}

/// Runs on the process arguments, prints, and returns the exit code.
pub fn main_with_args() -> i32 {
    let outcome = run(std::env::args_os());
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}
