//! Command-line front end.
//!
//! ```text
//! cxr eval [--notation N] [--trace] [N] PROGRAM TREE
//! cxr translate [--from N] --to N PROGRAM
//! cxr loc OP LOCATOR TREE [VALUE]
//! ```
//!
//! Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 access error, 2 syntax error in a program, locator or tree, 3 usage
//! error. A `TREE` of `-` is read from stdin.

use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};

use clap::{Parser, Subcommand};

use crate::classic::{run as run_program, trace};
use crate::error::{AccessError, SyntaxError};
use crate::locator::{self, parse_locator, LocOp};
use crate::notation::{translate, Notation};
use crate::tree::{parse_sexpr, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success,
    AccessError,
    SyntaxError,
    Usage,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        match self {
            ExitStatus::Success => 0,
            ExitStatus::AccessError => 1,
            ExitStatus::SyntaxError => 2,
            ExitStatus::Usage => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "cxr",
    version,
    about = "Run and translate CAR/CDR tree access programs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an access program on a tree and print the result.
    #[command(allow_negative_numbers = true)]
    Eval {
        /// classic, ltr or star. Detected from the program text when omitted.
        #[arg(long)]
        notation: Option<Notation>,
        /// Print the execution table before the result.
        #[arg(long)]
        trace: bool,
        /// [NOTATION] PROGRAM TREE
        #[arg(value_name = "ARGS", required = true)]
        args: Vec<String>,
    },
    /// Rewrite a program in another notation.
    Translate {
        #[arg(long)]
        from: Option<Notation>,
        #[arg(long)]
        to: Notation,
        program: String,
    },
    /// Apply a locator operation (read, write, suffix, prefix) to a list.
    #[command(allow_negative_numbers = true)]
    Loc {
        /// read (r), write (w!), suffix (s) or prefix (p)
        op: LocOp,
        /// A locator such as `*5n`.
        locator: String,
        tree: String,
        /// New element; required by `write` only.
        value: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Syntax(&'static str, SyntaxError),
    Access(AccessError),
}

impl Failure {
    fn status(&self) -> ExitStatus {
        match self {
            Failure::Usage(_) => ExitStatus::Usage,
            Failure::Syntax(..) => ExitStatus::SyntaxError,
            Failure::Access(_) => ExitStatus::AccessError,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "usage error: {msg}"),
            Failure::Syntax(what, e) => {
                write!(
                    f,
                    "syntax error in {what} at position {}: {}",
                    e.position, e.message
                )
            }
            Failure::Access(e) => e.fmt(f),
        }
    }
}

impl From<AccessError> for Failure {
    fn from(e: AccessError) -> Failure {
        Failure::Access(e)
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return ExitStatus::Success;
            }
            let _ = write!(err, "{}", e.render());
            return ExitStatus::Usage;
        }
    };
    match execute(cli.command, stdin, out) {
        Ok(()) => ExitStatus::Success,
        Err(failure) => {
            let _ = writeln!(err, "cxr: {failure}");
            failure.status()
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Eval {
            notation,
            trace,
            args,
        } => eval(notation, trace, &args, stdin, out),
        Command::Translate { from, to, program } => {
            let program = parse_program_text(from, &program)?;
            emit(out, &translate(&program, to));
            Ok(())
        }
        Command::Loc {
            op,
            locator,
            tree,
            value,
        } => {
            if op.takes_value() != value.is_some() {
                return Err(Failure::Usage(if op.takes_value() {
                    format!("`{op}` needs a VALUE argument")
                } else {
                    format!("`{op}` does not take a VALUE argument")
                }));
            }
            let loc = parse_locator(&locator).map_err(|e| Failure::Syntax("locator", e))?;
            let tree = read_tree("tree", &tree, stdin)?;
            let value = value
                .map(|text| read_tree("value", &text, stdin))
                .transpose()?;
            let result = locator::apply(op, loc, &tree, value)?;
            emit(out, &result.to_string());
            Ok(())
        }
    }
}

fn eval(
    flag: Option<Notation>,
    with_trace: bool,
    args: &[String],
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (notation, program_text, tree_text) = match args {
        [program, tree] => (flag, program, tree),
        [notation, program, tree] => {
            let named: Notation = notation
                .parse()
                .map_err(|e| Failure::Usage(format!("{e}")))?;
            if flag.is_some_and(|f| f != named) {
                return Err(Failure::Usage(format!(
                    "--notation {} conflicts with positional notation {named}",
                    flag.unwrap()
                )));
            }
            (Some(named), program, tree)
        }
        _ => {
            return Err(Failure::Usage(format!(
                "eval takes [NOTATION] PROGRAM TREE, got {} argument(s)",
                args.len()
            )))
        }
    };
    let program = parse_program_text(notation, program_text)?;
    let tree = read_tree("tree", tree_text, stdin)?;
    if with_trace {
        let table = trace(&program, &tree);
        for step in &table.steps {
            emit(out, &step.to_string());
        }
        let value = table.outcome?;
        emit(out, &value.to_string());
    } else {
        let value = run_program(&program, &tree)?;
        emit(out, &value.to_string());
    }
    Ok(())
}

fn parse_program_text(
    notation: Option<Notation>,
    text: &str,
) -> Result<crate::classic::Program, Failure> {
    let parsed = match notation {
        Some(n) => n.parse(text),
        None => crate::notation::parse_program(text),
    };
    parsed.map_err(|e| Failure::Syntax("program", e))
}

fn read_tree(what: &'static str, text: &str, stdin: &mut dyn Read) -> Result<Tree, Failure> {
    if text == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read {what} from stdin: {e}")))?;
        return parse_sexpr(&buf).map_err(|e| Failure::Syntax(what, e));
    }
    parse_sexpr(text).map_err(|e| Failure::Syntax(what, e))
}

fn emit(out: &mut dyn Write, line: &str) {
    let _ = writeln!(out, "{line}");
}
