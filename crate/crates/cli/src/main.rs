mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use liaison_core::{Degree, Execution};

use report::{Report, Status};

/// Numerical liaison invariants of space curves.
///
/// Input is one JSON class description: {"minimal": {"delta2": …, "h1": …},
/// "buchsbaum_dims": …, "t1": …, "kernel": …}, or a bare curve object.
#[derive(Parser, Debug)]
#[command(name = "liaison", version)]
struct Cli {
    /// Read the class from FILE instead of stdin
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Emit the report as JSON
    #[arg(long, global = true)]
    json: bool,

    /// Run searches on one thread
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant table, equal-cohomology verdicts and generator degree bounds
    Analyze,
    /// Build a chain of basic double links from the minimal curve
    Construct {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Equal cohomology in the last R places only (eqcoh mode)
        #[arg(long, value_name = "R")]
        places: Option<i64>,
    },
    /// List the equal-cohomology curves at one height above the minimal curve
    Enumerate {
        #[arg(long, value_name = "N")]
        shift: usize,
    },
    /// Necessary conditions for an integral curve with a maximal generator
    CheckIntegral,
    /// Generator degree bound and obstruction screens
    Bound,
    /// Compare the criteria against exhaustive chain search
    Oracle {
        #[arg(long, value_name = "H")]
        height: usize,
        #[arg(long, value_name = "D")]
        cap: Degree,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Eqcoh,
    MaxGenerator,
}

fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Analyze => "analyze",
        Command::Construct { .. } => "construct",
        Command::Enumerate { .. } => "enumerate",
        Command::CheckIntegral => "check-integral",
        Command::Bound => "bound",
        Command::Oracle { .. } => "oracle",
    }
}

fn run(cli: &Cli) -> Report {
    let mut rep = Report::new(name(&cli.command));
    let input = match input::read(cli.input.as_deref()) {
        Ok(i) => i,
        Err(e) => {
            rep.fail(Status::Invalid, format!("{e:#}"));
            return rep;
        }
    };
    rep.input = Some(input.clone());
    let violations = input.minimal.validate();
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
        rep.fail(Status::Invalid, msgs.join("; "));
        return rep;
    }
    if let Err(e) = input.class().validate() {
        rep.fail(Status::Invalid, e.to_string());
        return rep;
    }
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let outcome = match &cli.command {
        Command::Analyze => commands::analyze(&input, &mut rep),
        Command::Construct { mode: Mode::Eqcoh, places } => {
            commands::construct_eqcoh(&input, *places, &mut rep)
        }
        Command::Construct { mode: Mode::MaxGenerator, .. } => {
            commands::construct_max_gen(&input, &mut rep)
        }
        Command::Enumerate { shift } => commands::enumerate(&input, *shift, exec, &mut rep),
        Command::CheckIntegral => commands::check_integral(&input, &mut rep),
        Command::Bound => commands::bound(&input, &mut rep),
        Command::Oracle { height, cap } => {
            commands::oracle(&input, *height, *cap, exec, &mut rep)
        }
    };
    if let Err(e) = outcome {
        rep.fail(Status::of_error(&e), e.to_string());
    }
    rep
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rep = run(&cli);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&rep).expect("report serializes"));
    } else {
        print!("{}", rep.render_text());
    }
    ExitCode::from(rep.status.exit_code() as u8)
}
