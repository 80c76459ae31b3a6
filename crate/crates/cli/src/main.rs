//! `ialc`: batch front end over the ialc library. Every invocation prints
//! exactly one `RESULT:` line on standard output and exits with 0 (success),
//! 1 (negative verdict), 2 (usage or input error) or 3 (internal error).

mod commands;
mod demo;
mod report;

use std::io::Write;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use report::{Exit, Format};

#[derive(Parser, Debug)]
#[command(name = "ialc", version, about = "Intuitionistic ALC and KD deontic logic toolkit")]
struct Cli {
    /// Output style: a human report, or one `key=value` record per line.
    #[arg(long, value_enum, global = true, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a concept, statement or sequent and print it back.
    Parse { expr: String },
    /// Check a model's frame and heredity conditions.
    LintModel {
        file: PathBuf,
        /// Close atom extensions upward before linting.
        #[arg(long)]
        close: bool,
    },
    /// Print the extension of a concept in a model.
    Eval {
        file: PathBuf,
        concept: String,
        #[arg(long)]
        close: bool,
    },
    /// Decide whether a model satisfies a statement.
    Sat {
        file: PathBuf,
        statement: String,
        #[arg(long)]
        close: bool,
    },
    /// Decide whether a sequent is valid on a model.
    Valid {
        file: PathBuf,
        sequent: String,
        #[arg(long)]
        close: bool,
    },
    /// Search for a falsifying model with at most `--max` entities.
    Countermodel {
        sequent: String,
        #[arg(long)]
        max: usize,
        /// Also write the witness `.ikm` to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a `.ipf` proof.
    CheckProof { file: PathBuf },
    /// Search for a proof of depth at most `--depth`.
    Prove {
        sequent: String,
        #[arg(long)]
        depth: usize,
        /// Also write the `.ipf` proof to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Standard deontic logic tools.
    Sdl {
        #[command(subcommand)]
        command: SdlCommand,
    },
    /// Run a bundled worked example end to end.
    Demo { name: DemoName },
}

#[derive(Subcommand, Debug)]
enum SdlCommand {
    /// Check a `.sdt` derivation trace.
    Check { file: PathBuf },
    /// Search for a serial Kripke model of `;`-separated formulas.
    Sat {
        formulas: String,
        #[arg(long)]
        max: usize,
        /// Drop the seriality requirement (plain K).
        #[arg(long)]
        non_serial: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DemoName {
    Chisholm,
    FreeChoice,
    Axioms,
}

fn dispatch(cli: Cli) -> Result<report::Report, report::Failure> {
    use commands::*;
    match cli.command {
        Command::Parse { expr } => parse(&expr),
        Command::LintModel { file, close } => lint_model(&file, close),
        Command::Eval { file, concept, close } => eval(&file, &concept, close),
        Command::Sat { file, statement, close } => sat(&file, &statement, close),
        Command::Valid { file, sequent, close } => valid(&file, &sequent, close),
        Command::Countermodel { sequent, max, out } => countermodel(&sequent, max, out.as_deref()),
        Command::CheckProof { file } => check_proof(&file),
        Command::Prove { sequent, depth, out } => prove(&sequent, depth, out.as_deref()),
        Command::Sdl { command: SdlCommand::Check { file } } => sdl_check(&file),
        Command::Sdl { command: SdlCommand::Sat { formulas, max, non_serial } } => sdl_sat(&formulas, max, !non_serial),
        Command::Demo { name } => Ok(demo::run(name)),
    }
}

fn finish(stdout: &str, exit: Exit) -> ExitCode {
    let mut lock = std::io::stdout().lock();
    // A closed pipe leaves nothing useful to do with the error.
    let _ = lock.write_all(stdout.as_bytes());
    let _ = lock.flush();
    ExitCode::from(exit as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let exit = if e.use_stderr() { Exit::Usage } else { Exit::Ok };
            if e.use_stderr() {
                eprint!("{e}");
                return finish("RESULT: usage-error\n", exit);
            }
            return finish(&format!("{e}RESULT: help\n"), exit);
        }
    };
    let format = cli.format;
    match panic::catch_unwind(|| dispatch(cli)) {
        Ok(Ok(report)) => finish(&report.render(format), report.exit),
        Ok(Err(failure)) => {
            eprintln!("error: {}", failure.message);
            let word = if failure.exit == Exit::Internal { "internal-error" } else { "error" };
            finish(&format!("RESULT: {word}\n"), failure.exit)
        }
        Err(_) => finish("RESULT: internal-error\n", Exit::Internal),
    }
}
