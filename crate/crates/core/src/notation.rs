//! Left-to-right and star notations, and translation between notations.
//!
//! | notation | `car` | `cadadr` | reads      |
//! |----------|-------|----------|------------|
//! | classic  | `car` | `cadadr` | right to left, `c…r` |
//! | ltr      | `rac` | `rdadac` | left to right, `r…c` |
//! | star     | `*a`  | `*dada`  | left to right after `*`, with repeat counts |
//!
//! In star notation a decimal count applies to the single letter after it:
//! `*5da` is five drops and one access. Canonical star text compresses
//! every maximal run of two or more identical letters.

use std::fmt;
use std::str::FromStr;

use crate::classic::{compile_classic, Program, Statement};
use crate::error::SyntaxError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Notation {
    Classic,
    Ltr,
    Star,
}

impl Notation {
    pub const ALL: [Notation; 3] = [Notation::Classic, Notation::Ltr, Notation::Star];

    pub fn name(self) -> &'static str {
        match self {
            Notation::Classic => "classic",
            Notation::Ltr => "ltr",
            Notation::Star => "star",
        }
    }

    /// Guesses the notation from the opening character.
    pub fn detect(text: &str) -> Option<Notation> {
        match text.chars().next()? {
            'c' => Some(Notation::Classic),
            'r' => Some(Notation::Ltr),
            '*' => Some(Notation::Star),
            _ => None,
        }
    }

    pub fn parse(self, text: &str) -> Result<Program, SyntaxError> {
        match self {
            Notation::Classic => compile_classic(text),
            Notation::Ltr => parse_ltr(text),
            Notation::Star => parse_star(text),
        }
    }

    pub(crate) fn render_runs(self, runs: &[StarToken]) -> String {
        let mut out = String::new();
        match self {
            Notation::Classic => {
                out.push('c');
                for run in runs.iter().rev() {
                    push_repeated(&mut out, run.statement().letter(), run.count());
                }
                out.push('r');
            }
            Notation::Ltr => {
                out.push('r');
                for run in runs {
                    push_repeated(&mut out, run.statement().letter(), run.count());
                }
                out.push('c');
            }
            Notation::Star => {
                out.push('*');
                for run in runs {
                    out.push_str(&run.to_string());
                }
            }
        }
        out
    }

    /// Like [`Notation::render_runs`] but without the leading `r` capstone,
    /// which has already been consumed once a program starts running.
    pub(crate) fn render_remaining(self, runs: &[StarToken]) -> String {
        let mut text = self.render_runs(runs);
        match self {
            Notation::Classic => {
                text.pop();
            }
            Notation::Ltr => {
                text.remove(0);
            }
            Notation::Star => {}
        }
        text
    }
}

fn push_repeated(out: &mut String, c: char, count: usize) {
    out.extend(std::iter::repeat_n(c, count));
}

impl fmt::Display for Notation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown notation {0:?} (expected classic, ltr or star)")]
pub struct UnknownNotation(pub String);

impl FromStr for Notation {
    type Err = UnknownNotation;

    fn from_str(s: &str) -> Result<Notation, UnknownNotation> {
        Notation::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| UnknownNotation(s.to_owned()))
    }
}

/// A statement with a repeat count of at least one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarToken {
    count: usize,
    statement: Statement,
}

impl StarToken {
    pub fn new(count: usize, statement: Statement) -> Option<StarToken> {
        (count >= 1).then_some(StarToken { count, statement })
    }

    pub fn single(statement: Statement) -> StarToken {
        StarToken {
            count: 1,
            statement,
        }
    }

    pub fn count(self) -> usize {
        self.count
    }

    pub fn statement(self) -> Statement {
        self.statement
    }

    pub(crate) fn extend(&mut self, by: usize) {
        self.count += by;
    }
}

/// `a`, `d`, or a count of two or more followed by the letter.
impl fmt::Display for StarToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.count > 1 {
            write!(f, "{}", self.count)?;
        }
        write!(f, "{}", self.statement.letter())
    }
}

/// Parses left-to-right notation such as `rdadac`.
pub fn parse_ltr(text: &str) -> Result<Program, SyntaxError> {
    let mut chars = text.chars().enumerate();
    match chars.next() {
        Some((_, 'r')) => {}
        Some((_, c)) => return Err(SyntaxError::new(0, format!("expected 'r', found {c:?}"))),
        None => return Err(SyntaxError::new(0, "empty program")),
    }
    let mut letters = Vec::new();
    let mut closed = None;
    for (pos, c) in chars {
        if closed.is_some() {
            return Err(SyntaxError::new(
                pos,
                "unexpected input after the closing 'c'",
            ));
        }
        match c {
            'c' => closed = Some(pos),
            c => match Statement::from_letter(c) {
                Some(statement) => letters.push(statement),
                None => {
                    return Err(SyntaxError::new(
                        pos,
                        format!("expected 'a', 'd' or 'c', found {c:?}"),
                    ));
                }
            },
        }
    }
    let Some(close) = closed else {
        return Err(SyntaxError::new(
            text.chars().count(),
            "missing closing 'c'",
        ));
    };
    Program::from_statements(letters, Notation::Ltr)
        .map(|p| p.with_source(text))
        .ok_or_else(|| SyntaxError::new(close, "a program needs at least one 'a' or 'd'"))
}

/// Parses star notation such as `*dada` or `*5da`. Trailing whitespace is
/// accepted as the terminator.
pub fn parse_star(text: &str) -> Result<Program, SyntaxError> {
    let body_text = text.trim_end();
    let mut chars = body_text.chars().enumerate().peekable();
    match chars.next() {
        Some((_, '*')) => {}
        Some((_, c)) => return Err(SyntaxError::new(0, format!("expected '*', found {c:?}"))),
        None => return Err(SyntaxError::new(0, "empty program")),
    }
    let mut tokens = Vec::new();
    while let Some((start, c)) = chars.next() {
        let mut next = Some((start, c));
        let mut count: Option<usize> = None;
        while let Some((_, digit @ '0'..='9')) = next {
            let value = count.unwrap_or(0);
            count = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(digit as usize - '0' as usize));
            if count.is_none() {
                return Err(SyntaxError::new(start, "repeat count is too large"));
            }
            next = chars.next();
        }
        let Some((pos, c)) = next else {
            return Err(SyntaxError::new(
                body_text.chars().count(),
                "repeat count is not followed by 'a' or 'd'",
            ));
        };
        let Some(statement) = Statement::from_letter(c) else {
            return Err(SyntaxError::new(
                pos,
                format!("expected a count, 'a' or 'd', found {c:?}"),
            ));
        };
        let token = StarToken::new(count.unwrap_or(1), statement)
            .ok_or_else(|| SyntaxError::new(start, "repeat count must be at least 1"))?;
        tokens.push(token);
    }
    match Program::from_runs(tokens, Notation::Star) {
        Ok(Some(program)) => Ok(program.with_source(text)),
        Ok(None) => Err(SyntaxError::new(
            1,
            "a program needs at least one 'a' or 'd'",
        )),
        Err(_) => Err(SyntaxError::new(0, "program is too long")),
    }
}

/// Parses `text` in whichever notation its first character announces.
pub fn parse_program(text: &str) -> Result<Program, SyntaxError> {
    match Notation::detect(text) {
        Some(notation) => notation.parse(text),
        None => Err(SyntaxError::new(
            0,
            "not an access program (expected 'c…r', 'r…c' or '*…')",
        )),
    }
}

/// Renders `program` in `target` notation. Star output is fully compressed.
pub fn translate(program: &Program, target: Notation) -> String {
    program.render(target)
}

/// Expands and maximally re-compresses a star program.
pub fn normalize_star(text: &str) -> Result<String, SyntaxError> {
    parse_star(text).map(|p| translate(&p, Notation::Star))
}
