//! Locators: finding a cell separately from operating on it.
//!
//! `*5n` takes five `next` steps along a list spine and so locates the 6th
//! element. An operation is then applied at that cell:
//!
//! | letter | operation | result                                   |
//! |--------|-----------|------------------------------------------|
//! | `r`    | read      | the located element                      |
//! | `w!`   | write     | a copy of the list with the element replaced |
//! | `s`    | suffix    | the sublist starting at the located element |
//! | `p`    | prefix    | the elements before the located element  |
//!
//! Writes are persistent updates: the input list is shared, never mutated.
//! Locators only walk the spine; they never descend into elements.

use std::fmt;
use std::str::FromStr;

use crate::error::{AccessError, SyntaxError};
use crate::tree::{cdr, Tree};

/// Number of `next` moves from the head of a list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Locator {
    pub steps: usize,
}

impl Locator {
    pub fn new(steps: usize) -> Locator {
        Locator { steps }
    }

    fn remaining_text(self, taken: usize) -> String {
        format!("*{}n", self.steps - taken)
    }
}

impl fmt::Display for Locator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}n", self.steps)
    }
}

impl FromStr for Locator {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Locator, SyntaxError> {
        parse_locator(text)
    }
}

/// Splits `*` and an optional count off the front of `text`. Returns the
/// count (1 when absent) and the character offset just after it.
fn parse_count_prefix(text: &str) -> Result<(usize, usize), SyntaxError> {
    let mut chars = text.chars();
    match chars.next() {
        Some('*') => {}
        Some(c) => return Err(SyntaxError::new(0, format!("expected '*', found {c:?}"))),
        None => return Err(SyntaxError::new(0, "empty locator")),
    }
    let digits: String = chars.take_while(char::is_ascii_digit).collect();
    let count = if digits.is_empty() {
        1
    } else {
        digits
            .parse()
            .map_err(|_| SyntaxError::new(1, "step count is too large"))?
    };
    Ok((count, 1 + digits.len()))
}

/// Parses `*Nn`. A missing count means one step; `*0n` locates the head.
pub fn parse_locator(text: &str) -> Result<Locator, SyntaxError> {
    let (steps, offset) = parse_count_prefix(text.trim_end())?;
    let mut rest = text.trim_end().chars().skip(offset);
    match rest.next() {
        Some('n') => {}
        Some(c) => {
            return Err(SyntaxError::new(
                offset,
                format!("expected 'n', found {c:?}"),
            ))
        }
        None => return Err(SyntaxError::new(offset, "missing 'n'")),
    }
    if rest.next().is_some() {
        return Err(SyntaxError::new(offset + 1, "unexpected input after 'n'"));
    }
    Ok(Locator { steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocOp {
    Read,
    Write,
    Suffix,
    Prefix,
}

impl LocOp {
    pub const ALL: [LocOp; 4] = [LocOp::Read, LocOp::Write, LocOp::Suffix, LocOp::Prefix];

    pub fn name(self) -> &'static str {
        match self {
            LocOp::Read => "read",
            LocOp::Write => "write",
            LocOp::Suffix => "suffix",
            LocOp::Prefix => "prefix",
        }
    }

    /// Spelling after a locator, as in `*5nw!`.
    pub fn letter(self) -> &'static str {
        match self {
            LocOp::Read => "r",
            LocOp::Write => "w!",
            LocOp::Suffix => "s",
            LocOp::Prefix => "p",
        }
    }

    pub fn takes_value(self) -> bool {
        self == LocOp::Write
    }
}

impl fmt::Display for LocOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown locator operation {0:?} (expected read, write, suffix or prefix)")]
pub struct UnknownLocOp(pub String);

/// Accepts either the word (`write`) or the letter form (`w!`).
impl FromStr for LocOp {
    type Err = UnknownLocOp;

    fn from_str(s: &str) -> Result<LocOp, UnknownLocOp> {
        LocOp::ALL
            .into_iter()
            .find(|op| op.name() == s || op.letter() == s)
            .ok_or_else(|| UnknownLocOp(s.to_owned()))
    }
}

/// Parses a locator with its operation attached, such as `*5ns` or `*5nw!`.
pub fn parse_locator_expr(text: &str) -> Result<(Locator, LocOp), SyntaxError> {
    let text = text.trim_end();
    let (steps, offset) = parse_count_prefix(text)?;
    let rest: String = text.chars().skip(offset).collect();
    let Some(op_text) = rest.strip_prefix('n') else {
        return Err(SyntaxError::new(offset, "missing 'n'"));
    };
    let op = LocOp::ALL
        .into_iter()
        .find(|op| op.letter() == op_text)
        .ok_or_else(|| {
            SyntaxError::new(
                offset + 1,
                format!("expected r, w!, s or p after 'n', found {op_text:?}"),
            )
        })?;
    Ok((Locator { steps }, op))
}

/// The cell a locator landed on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatedCell {
    /// The cons whose head is the located element.
    pub target: Tree,
    /// Elements passed over, in list order.
    pub prefix_elements: Vec<Tree>,
}

impl LocatedCell {
    pub fn element(&self) -> &Tree {
        self.target.head().expect("located target is a cons")
    }
}

/// Walks `loc.steps` tails down `list`.
///
/// Step `i` (1-based) is the `i`-th `cdr`; step `steps + 1` is the check
/// that a cell exists at the destination.
pub fn locate(loc: Locator, list: &Tree) -> Result<LocatedCell, AccessError> {
    let mut prefix_elements = Vec::with_capacity(loc.steps.min(1024));
    let mut current = list;
    for taken in 0..loc.steps {
        let head = current.head().cloned();
        current = cdr(current).map_err(|e| e.annotate(taken + 1, loc.remaining_text(taken)))?;
        prefix_elements.extend(head);
    }
    if !current.is_cons() {
        return Err(AccessError::at(current).annotate(loc.steps + 1, loc.remaining_text(loc.steps)));
    }
    Ok(LocatedCell {
        target: current.clone(),
        prefix_elements,
    })
}

/// `r`: the located element.
pub fn read(loc: Locator, list: &Tree) -> Result<Tree, AccessError> {
    locate(loc, list).map(|cell| cell.element().clone())
}

/// `w!`: `list` with the located element replaced by `value`. The tail after
/// the located cell is shared with the input.
pub fn write(loc: Locator, list: &Tree, value: Tree) -> Result<Tree, AccessError> {
    let cell = locate(loc, list)?;
    let rest = cell
        .target
        .tail()
        .expect("located target is a cons")
        .clone();
    Ok(Tree::list_with_tail(
        cell.prefix_elements,
        Tree::cons(value, rest),
    ))
}

/// `s`: the sublist starting at the located element.
pub fn suffix(loc: Locator, list: &Tree) -> Result<Tree, AccessError> {
    locate(loc, list).map(|cell| cell.target)
}

/// `p`: a fresh list of the elements before the located element.
pub fn prefix(loc: Locator, list: &Tree) -> Result<Tree, AccessError> {
    locate(loc, list).map(|cell| Tree::list(cell.prefix_elements))
}

/// Applies `op` at `loc`. `value` is used only by [`LocOp::Write`], where a
/// missing value writes `()`.
pub fn apply(
    op: LocOp,
    loc: Locator,
    list: &Tree,
    value: Option<Tree>,
) -> Result<Tree, AccessError> {
    match op {
        LocOp::Read => read(loc, list),
        LocOp::Write => write(loc, list, value.unwrap_or_default()),
        LocOp::Suffix => suffix(loc, list),
        LocOp::Prefix => prefix(loc, list),
    }
}
