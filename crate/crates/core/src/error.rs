//! Error channel for the access language.
//!
//! Walking off the end of a tree is never encoded as a value inside the
//! tree. A symbol such as `EOT` is an ordinary symbol that a user may store,
//! print and pass around, so failures travel beside the result instead.

use std::fmt;

use crate::tree::Tree;

/// Why a `car`/`cdr` step could not proceed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AccessKind {
    /// The step was applied to a symbol or an integer.
    AtomEncountered,
    /// The step was applied to `()`.
    EndOfList,
}

impl AccessKind {
    pub fn name(self) -> &'static str {
        match self {
            AccessKind::AtomEncountered => "AtomEncountered",
            AccessKind::EndOfList => "EndOfList",
        }
    }
}

impl fmt::Display for AccessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A runtime failure of an access program or locator.
///
/// `step` and `remaining_program` are filled in by the interpreter; a bare
/// [`car`](crate::tree::car) or [`cdr`](crate::tree::cdr) leaves them empty.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct AccessError {
    pub kind: AccessKind,
    /// 1-based index of the statement that failed.
    pub step: Option<usize>,
    /// The not-yet-consumed program, including its closing capstone.
    pub remaining_program: String,
    /// `()` for [`AccessKind::EndOfList`], the atom for
    /// [`AccessKind::AtomEncountered`].
    pub offending_subtree: Tree,
}

impl AccessError {
    /// Error for applying `car`/`cdr` to a non-cons value.
    pub(crate) fn at(value: &Tree) -> AccessError {
        let kind = match value {
            Tree::Nil => AccessKind::EndOfList,
            _ => AccessKind::AtomEncountered,
        };
        AccessError {
            kind,
            step: None,
            remaining_program: String::new(),
            offending_subtree: value.clone(),
        }
    }

    pub(crate) fn annotate(mut self, step: usize, remaining_program: String) -> AccessError {
        self.step = Some(step);
        self.remaining_program = remaining_program;
        self
    }
}

impl fmt::Display for AccessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(step) => write!(
                f,
                "{} at step {}, remaining {} (offending subtree: {})",
                self.kind, step, self.remaining_program, self.offending_subtree
            ),
            None => write!(f, "{} on {}", self.kind, self.offending_subtree),
        }
    }
}

/// Malformed program, locator or S-expression text.
///
/// `position` is the 0-based character offset where the problem was found.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {position}: {message}")]
pub struct SyntaxError {
    pub position: usize,
    pub message: String,
}

impl SyntaxError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            position,
            message: message.into(),
        }
    }
}

/// Flat classification across both error types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    AtomEncountered,
    EndOfList,
    SyntaxError,
}

impl From<AccessKind> for ErrorKind {
    fn from(kind: AccessKind) -> ErrorKind {
        match kind {
            AccessKind::AtomEncountered => ErrorKind::AtomEncountered,
            AccessKind::EndOfList => ErrorKind::EndOfList,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Access(#[from] AccessError),
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Access(e) => e.kind.into(),
            Error::Syntax(_) => ErrorKind::SyntaxError,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
