//! Access programs and the classic `c[ad]+r` accessor symbols.
//!
//! An accessor symbol is a program written right to left between two
//! capstones: `r` (run) on the right and `c` (complete) on the left. The
//! letters in between execute starting next to the `r`, so `cadadr` drops,
//! accesses, drops and accesses, in the same order as
//! `(car (cdr (car (cdr x))))` applies its functions.

use std::fmt;

use crate::error::{AccessError, SyntaxError};
use crate::notation::{Notation, StarToken};
use crate::tree::{car, cdr, Tree};

/// An executable statement. The capstones are syntax and never appear here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statement {
    /// `a`: take the head cell (`car`).
    Access,
    /// `d`: drop the head cell (`cdr`).
    Drop,
}

impl Statement {
    pub fn letter(self) -> char {
        match self {
            Statement::Access => 'a',
            Statement::Drop => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Statement> {
        match c {
            'a' => Some(Statement::Access),
            'd' => Some(Statement::Drop),
            _ => None,
        }
    }

    pub fn apply(self, tree: &Tree) -> Result<&Tree, AccessError> {
        match self {
            Statement::Access => car(tree),
            Statement::Drop => cdr(tree),
        }
    }

    fn action(self) -> Action {
        match self {
            Statement::Access => Action::Access,
            Statement::Drop => Action::Drop,
        }
    }
}

/// A parsed access program.
///
/// The body is kept run-length encoded and maximally merged, so two
/// programs have the same body exactly when their `runs()` are equal,
/// whatever notation they were written in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    runs: Vec<StarToken>,
    len: usize,
    notation: Notation,
    source: String,
}

impl Program {
    /// Builds a program from statements in execution order. Returns `None`
    /// for an empty body.
    pub fn from_statements<I>(statements: I, notation: Notation) -> Option<Program>
    where
        I: IntoIterator<Item = Statement>,
    {
        Program::from_runs(statements.into_iter().map(StarToken::single), notation)
            .ok()
            .flatten()
    }

    /// Merges adjacent runs of the same statement. Fails only if the total
    /// length overflows.
    pub(crate) fn from_runs<I>(tokens: I, notation: Notation) -> Result<Option<Program>, usize>
    where
        I: IntoIterator<Item = StarToken>,
    {
        let mut runs: Vec<StarToken> = Vec::new();
        let mut len = 0usize;
        for token in tokens {
            len = len.checked_add(token.count()).ok_or(len)?;
            match runs.last_mut() {
                Some(last) if last.statement() == token.statement() => last.extend(token.count()),
                _ => runs.push(token),
            }
        }
        if runs.is_empty() {
            return Ok(None);
        }
        let mut program = Program {
            runs,
            len,
            notation,
            source: String::new(),
        };
        program.source = program.render(notation);
        Ok(Some(program))
    }

    pub(crate) fn with_source(mut self, source: &str) -> Program {
        self.source = source.to_owned();
        self
    }

    pub fn notation(&self) -> Notation {
        self.notation
    }

    /// The text the program was parsed from.
    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn runs(&self) -> &[StarToken] {
        &self.runs
    }

    /// Number of statements executed by a successful run.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Statements in execution order.
    pub fn statements(&self) -> impl Iterator<Item = Statement> + '_ {
        self.runs
            .iter()
            .flat_map(|run| std::iter::repeat_n(run.statement(), run.count()))
    }

    pub fn body(&self) -> Vec<Statement> {
        self.statements().collect()
    }

    /// Canonical text of this program in `notation`.
    pub fn render(&self, notation: Notation) -> String {
        notation.render_runs(&self.runs)
    }

    /// The program left after `consumed` statements have run, rendered in
    /// the program's own notation with its closing capstone.
    pub fn remaining_text(&self, consumed: usize) -> String {
        let mut skip = consumed;
        let mut rest = Vec::new();
        for run in &self.runs {
            if skip >= run.count() {
                skip -= run.count();
                continue;
            }
            rest.push(StarToken::new(run.count() - skip, run.statement()).expect("count >= 1"));
            skip = 0;
        }
        self.notation.render_remaining(&rest)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

/// True iff `name` is `c`, one or more of `a`/`d`, then `r`.
pub fn is_access_symbol(name: &str) -> bool {
    name.len() >= 3
        && name.starts_with('c')
        && name.ends_with('r')
        && name[1..name.len() - 1]
            .bytes()
            .all(|b| b == b'a' || b == b'd')
}

/// Compiles a classic accessor symbol such as `cadadr`.
pub fn compile_classic(name: &str) -> Result<Program, SyntaxError> {
    let mut chars = name.chars().enumerate();
    match chars.next() {
        Some((_, 'c')) => {}
        Some((_, c)) => return Err(SyntaxError::new(0, format!("expected 'c', found {c:?}"))),
        None => return Err(SyntaxError::new(0, "empty program")),
    }
    let mut letters = Vec::new();
    let mut closed = None;
    for (pos, c) in chars {
        if closed.is_some() {
            return Err(SyntaxError::new(
                pos,
                "unexpected input after the closing 'r'",
            ));
        }
        match c {
            'r' => closed = Some(pos),
            c => match Statement::from_letter(c) {
                Some(statement) => letters.push(statement),
                None => {
                    return Err(SyntaxError::new(
                        pos,
                        format!("expected 'a', 'd' or 'r', found {c:?}"),
                    ));
                }
            },
        }
    }
    let Some(close) = closed else {
        return Err(SyntaxError::new(
            name.chars().count(),
            "missing closing 'r'",
        ));
    };
    Program::from_statements(letters.into_iter().rev(), Notation::Classic)
        .map(|p| p.with_source(name))
        .ok_or_else(|| SyntaxError::new(close, "an accessor needs at least one 'a' or 'd'"))
}

/// Runs `program` on `tree`.
pub fn run(program: &Program, tree: &Tree) -> Result<Tree, AccessError> {
    let mut current = tree.clone();
    for (index, statement) in program.statements().enumerate() {
        current = match statement.apply(&current) {
            Ok(next) => next.clone(),
            Err(e) => return Err(e.annotate(index + 1, program.remaining_text(index))),
        };
    }
    Ok(current)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Action {
    Drop,
    Access,
    Complete,
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Drop => "drop",
            Action::Access => "access",
            Action::Complete => "complete",
        })
    }
}

/// One row of an execution table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    /// 1-based.
    pub step: usize,
    pub remaining_program: String,
    pub current_tree: Tree,
    pub action: Action,
    /// For [`Action::Complete`] this is the final value.
    pub result: Tree,
}

/// Tab-separated: step, remaining program, current tree, `action → result`.
/// The complete row has no arrow.
impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}",
            self.step, self.remaining_program, self.current_tree, self.action
        )?;
        if self.action != Action::Complete {
            write!(f, " → {}", self.result)?;
        }
        Ok(())
    }
}

/// Rows produced by [`trace`]. On failure `steps` holds the rows that
/// completed before the error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace {
    pub steps: Vec<TraceStep>,
    pub outcome: Result<Tree, AccessError>,
}

/// Runs `program` on `tree`, recording one row per statement plus a final
/// `complete` row.
pub fn trace(program: &Program, tree: &Tree) -> Trace {
    let mut steps = Vec::new();
    let mut current = tree.clone();
    for (index, statement) in program.statements().enumerate() {
        let remaining = program.remaining_text(index);
        let next = match statement.apply(&current) {
            Ok(next) => next.clone(),
            Err(e) => {
                return Trace {
                    steps,
                    outcome: Err(e.annotate(index + 1, remaining)),
                }
            }
        };
        steps.push(TraceStep {
            step: index + 1,
            remaining_program: remaining,
            current_tree: std::mem::replace(&mut current, next.clone()),
            action: statement.action(),
            result: next,
        });
    }
    steps.push(TraceStep {
        step: steps.len() + 1,
        remaining_program: program.remaining_text(program.len()),
        current_tree: current.clone(),
        action: Action::Complete,
        result: current.clone(),
    });
    Trace {
        steps,
        outcome: Ok(current),
    }
}
