//! `mg`: command-line front end for the marked-groups library.
//!
//! Exit status is 0 whenever a computation completed (verdicts are printed,
//! never encoded in the status), 1 on usage errors and 2 when the
//! computation itself failed.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const DEFAULT_MAX_RADIUS: usize = 12;
pub const DEFAULT_CAP: usize = 1_000_000;
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Parser, Debug)]
#[command(name = "mg", version, about = "Exact computation with finitely generated marked groups")]
pub struct Cli {
    /// Print a machine-readable JSON envelope instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Limits {
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the C'(λ) small cancellation condition of a presentation file.
    CheckSc {
        #[arg(long)]
        file: String,
        #[arg(long, default_value = "1/6")]
        lambda: String,
    },
    /// Decide whether a word is trivial with Dehn's algorithm.
    Wp {
        #[arg(long)]
        file: String,
        #[arg(long)]
        word: String,
    },
    /// Radius-R Cayley ball with representatives and transitions.
    Ball {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Radius-R ball signature (no representatives).
    Signature {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Largest radius at which two marked groups have isomorphic balls.
    Similar {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
        max_radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Marked distance 2^-r between two marked groups.
    Dist {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
        max_radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Apply Nielsen moves (`swap:i,j`, `invert:i`, `rmul:i,j,+|-`, `stab`, `destab:i`).
    Nielsen {
        #[arg(long)]
        group: String,
        #[arg(long)]
        moves: String,
        /// Also print the ball signature size of the new marking up to this radius.
        #[arg(long)]
        radius: Option<usize>,
        #[command(flatten)]
        limits: Limits,
    },
    /// Reduced words of length at most L that evaluate to the identity.
    Kernel {
        #[arg(long)]
        group: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Membership of the kernel in the basic open set U(Y, Z).
    Chabauty {
        #[arg(long)]
        group: String,
        /// Words that must be in the kernel, comma separated (repeatable).
        #[arg(long = "in")]
        inside: Vec<String>,
        /// Words that must not be in the kernel, comma separated (repeatable).
        #[arg(long = "out")]
        outside: Vec<String>,
    },
    /// Injectivity radius of the marked epimorphism src -> dst.
    InjRadius {
        #[arg(long)]
        src: String,
        #[arg(long)]
        dst: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
        max_radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Check a finite prefix of a lacunary hyperbolicity certificate.
    LhCheck {
        /// JSON file with `stages` (group specs), `radii` and `deltas`.
        #[arg(long)]
        sequence: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
        max_radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Build a group family and describe it or emit its presentation.
    Family {
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "summary")]
        emit: commands::Emit,
    },
    /// Evaluate a sentence on a finite multiplication table.
    Modelcheck {
        #[arg(long)]
        table: String,
        /// `psi:P`, `phi:P`, `zeta`, or a formula file.
        #[arg(long)]
        formula: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Ball test for the neighbourhood U_p of H_p.
    UpCheck {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Existential sentence describing the radius-R ball.
    PatternSentence {
        #[arg(long)]
        group: String,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
    /// Ball sizes for radii 0..=R.
    Growth {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = DEFAULT_MAX_RADIUS)]
        max_radius: usize,
        #[command(flatten)]
        limits: Limits,
    },
}

/// Failure classes mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Compute(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Compute(m) => m,
        }
    }
}

/// A completed computation: text for humans and a JSON result body.
pub struct Report {
    pub inputs: Value,
    pub result: Value,
    pub warnings: Vec<String>,
    pub text: String,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckSc { .. } => "check-sc",
        Command::Wp { .. } => "wp",
        Command::Ball { .. } => "ball",
        Command::Signature { .. } => "signature",
        Command::Similar { .. } => "similar",
        Command::Dist { .. } => "dist",
        Command::Nielsen { .. } => "nielsen",
        Command::Kernel { .. } => "kernel",
        Command::Chabauty { .. } => "chabauty",
        Command::InjRadius { .. } => "inj-radius",
        Command::LhCheck { .. } => "lh-check",
        Command::Family { .. } => "family",
        Command::Modelcheck { .. } => "modelcheck",
        Command::UpCheck { .. } => "up-check",
        Command::PatternSentence { .. } => "pattern-sentence",
        Command::Growth { .. } => "growth",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 1 } else { 0 });
        }
    };
    let name = command_name(&cli.command);
    match commands::run(&cli.command) {
        Ok(report) => {
            if cli.json {
                let envelope = json!({
                    "command": name,
                    "inputs": report.inputs,
                    "result": report.result,
                    "warnings": report.warnings,
                });
                println!("{}", serde_json::to_string_pretty(&envelope).expect("JSON values serialize"));
            } else {
                for w in &report.warnings {
                    eprintln!("warning: {w}");
                }
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("mg {name}: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
