//! Cons-cell trees and their S-expression text form.
//!
//! A cons cell is a pair: the head locates the list item and the tail
//! locates the next cell. Lists end in `()`; a cons whose tail is an atom is
//! a dotted pair and is printed as `(a . b)`.
//!
//! Unlike Common Lisp, `car` and `cdr` of `()` are errors rather than `()`.
//! Reaching the end of a tree is reported on the error channel so that no
//! in-tree value has to be reserved as an end marker.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{AccessError, SyntaxError};

/// Immutable cons-cell tree. Cloning is cheap: cells are shared.
#[derive(Clone, Default)]
pub enum Tree {
    #[default]
    Nil,
    Integer(i64),
    Symbol(Symbol),
    Cons(Arc<Pair>),
}

/// The two fields of a cons cell.
pub struct Pair {
    pub head: Tree,
    pub tail: Tree,
}

// Long spines would otherwise be freed recursively, one stack frame per cell.
impl Drop for Pair {
    fn drop(&mut self) {
        let mut pending = vec![
            std::mem::take(&mut self.head),
            std::mem::take(&mut self.tail),
        ];
        while let Some(tree) = pending.pop() {
            if let Tree::Cons(pair) = tree {
                if let Some(mut pair) = Arc::into_inner(pair) {
                    pending.push(std::mem::take(&mut pair.head));
                    pending.push(std::mem::take(&mut pair.tail));
                }
            }
        }
    }
}

impl PartialEq for Tree {
    fn eq(&self, other: &Tree) -> bool {
        let mut pending = vec![(self, other)];
        while let Some((a, b)) = pending.pop() {
            match (a, b) {
                (Tree::Nil, Tree::Nil) => {}
                (Tree::Integer(x), Tree::Integer(y)) if x == y => {}
                (Tree::Symbol(x), Tree::Symbol(y)) if x == y => {}
                (Tree::Cons(x), Tree::Cons(y)) => {
                    if !Arc::ptr_eq(x, y) {
                        pending.push((&x.tail, &y.tail));
                        pending.push((&x.head, &y.head));
                    }
                }
                _ => return false,
            }
        }
        true
    }
}

impl Eq for Tree {}

impl Hash for Tree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let mut pending = vec![self];
        while let Some(tree) = pending.pop() {
            std::mem::discriminant(tree).hash(state);
            match tree {
                Tree::Nil => {}
                Tree::Integer(n) => n.hash(state),
                Tree::Symbol(s) => s.hash(state),
                Tree::Cons(pair) => {
                    pending.push(&pair.tail);
                    pending.push(&pair.head);
                }
            }
        }
    }
}

/// A validated, case-sensitive symbol name.
///
/// Names are non-empty, contain no whitespace, parentheses or quote, do not
/// start with a digit, and never read back as something else (`.` or an
/// integer such as `-5`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Result<Symbol, SyntaxError> {
        validate_symbol(name, 0)?;
        Ok(Symbol(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_delimiter(c: char) -> bool {
    c.is_whitespace() || c == '(' || c == ')' || c == '\''
}

fn looks_like_integer(text: &str) -> bool {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn validate_symbol(name: &str, position: usize) -> Result<(), SyntaxError> {
    let Some(first) = name.chars().next() else {
        return Err(SyntaxError::new(position, "empty symbol name"));
    };
    if let Some((offset, c)) = name.char_indices().find(|&(_, c)| is_delimiter(c)) {
        let at = position + name[..offset].chars().count();
        return Err(SyntaxError::new(
            at,
            format!("character {c:?} is not allowed in a symbol"),
        ));
    }
    if first.is_ascii_digit() {
        return Err(SyntaxError::new(
            position,
            format!("symbol {name:?} starts with a digit"),
        ));
    }
    if name == "." || looks_like_integer(name) {
        return Err(SyntaxError::new(
            position,
            format!("{name:?} is not a symbol name"),
        ));
    }
    Ok(())
}

impl Tree {
    pub fn cons(head: Tree, tail: Tree) -> Tree {
        Tree::Cons(Arc::new(Pair { head, tail }))
    }

    pub fn int(value: i64) -> Tree {
        Tree::Integer(value)
    }

    pub fn symbol(name: &str) -> Result<Tree, SyntaxError> {
        Symbol::new(name).map(Tree::Symbol)
    }

    /// Proper list of `items`.
    pub fn list<I>(items: I) -> Tree
    where
        I: IntoIterator<Item = Tree>,
        I::IntoIter: DoubleEndedIterator,
    {
        Tree::list_with_tail(items, Tree::Nil)
    }

    /// `items` consed in order onto `tail`.
    pub fn list_with_tail<I>(items: I, tail: Tree) -> Tree
    where
        I: IntoIterator<Item = Tree>,
        I::IntoIter: DoubleEndedIterator,
    {
        items
            .into_iter()
            .rev()
            .fold(tail, |acc, item| Tree::cons(item, acc))
    }

    pub fn is_nil(&self) -> bool {
        matches!(self, Tree::Nil)
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Tree::Integer(_) | Tree::Symbol(_))
    }

    pub fn is_cons(&self) -> bool {
        matches!(self, Tree::Cons(..))
    }

    pub fn head(&self) -> Option<&Tree> {
        match self {
            Tree::Cons(pair) => Some(&pair.head),
            _ => None,
        }
    }

    pub fn tail(&self) -> Option<&Tree> {
        match self {
            Tree::Cons(pair) => Some(&pair.tail),
            _ => None,
        }
    }

    pub fn is_proper_list(&self) -> bool {
        let mut cur = self;
        while let Tree::Cons(pair) = cur {
            cur = &pair.tail;
        }
        cur.is_nil()
    }

    /// Elements of a proper list, or `None` for atoms and dotted lists.
    pub fn list_elements(&self) -> Option<Vec<Tree>> {
        let mut items = Vec::new();
        let mut cur = self;
        while let Tree::Cons(pair) = cur {
            items.push(pair.head.clone());
            cur = &pair.tail;
        }
        cur.is_nil().then_some(items)
    }

    /// True if `pred` holds for this node or any node below it.
    pub fn any(&self, pred: &mut impl FnMut(&Tree) -> bool) -> bool {
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            if pred(node) {
                return true;
            }
            if let Tree::Cons(pair) = node {
                stack.push(&pair.tail);
                stack.push(&pair.head);
            }
        }
        false
    }
}

/// Head of a cons cell.
pub fn car(value: &Tree) -> Result<&Tree, AccessError> {
    match value {
        Tree::Cons(pair) => Ok(&pair.head),
        other => Err(AccessError::at(other)),
    }
}

/// Tail of a cons cell.
pub fn cdr(value: &Tree) -> Result<&Tree, AccessError> {
    match value {
        Tree::Cons(pair) => Ok(&pair.tail),
        other => Err(AccessError::at(other)),
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Nil => f.write_str("()"),
            Tree::Integer(n) => write!(f, "{n}"),
            Tree::Symbol(s) => f.write_str(s.as_str()),
            Tree::Cons(pair) => {
                write!(f, "({}", pair.head)?;
                let mut cur = &pair.tail;
                loop {
                    match cur {
                        Tree::Nil => break,
                        Tree::Cons(pair) => {
                            write!(f, " {}", pair.head)?;
                            cur = &pair.tail;
                        }
                        atom => {
                            write!(f, " . {atom}")?;
                            break;
                        }
                    }
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = SyntaxError;

    fn from_str(text: &str) -> Result<Tree, SyntaxError> {
        parse_sexpr(text)
    }
}

/// Canonical text of `value`: single spaces, `()` for nil, `(a . b)` for
/// dotted tails.
pub fn print_sexpr(value: &Tree) -> String {
    value.to_string()
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Open,
    Close,
    Dot,
    Quote,
    Atom(Tree),
}

/// Splits `text` into `(position, token)` pairs. Positions are character
/// offsets.
fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().enumerate().peekable();
    while let Some((pos, (byte, c))) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '(' => Token::Open,
            ')' => Token::Close,
            '\'' => Token::Quote,
            _ => {
                let mut end = byte + c.len_utf8();
                while let Some(&(_, (b, c))) = chars.peek() {
                    if is_delimiter(c) {
                        break;
                    }
                    end = b + c.len_utf8();
                    chars.next();
                }
                read_atom(&text[byte..end], pos)?
            }
        };
        tokens.push((pos, token));
    }
    Ok(tokens)
}

fn read_atom(word: &str, pos: usize) -> Result<Token, SyntaxError> {
    if word == "." {
        return Ok(Token::Dot);
    }
    if looks_like_integer(word) {
        let digits = word.strip_prefix('+').unwrap_or(word);
        return digits
            .parse::<i64>()
            .map(|n| Token::Atom(Tree::Integer(n)))
            .map_err(|_| SyntaxError::new(pos, format!("integer {word} is out of range")));
    }
    validate_symbol(word, pos)?;
    Ok(Token::Atom(Tree::Symbol(Symbol(Arc::from(word)))))
}

enum Tail {
    Proper,
    Expecting,
    Done(Tree),
}

struct OpenList {
    items: Vec<Tree>,
    tail: Tail,
}

/// Reads exactly one S-expression.
///
/// Accepts integers, symbols, proper lists, dotted pairs and a `'` prefix,
/// which is discarded. Surrounding whitespace is ignored; anything else
/// after the first datum is an error.
pub fn parse_sexpr(text: &str) -> Result<Tree, SyntaxError> {
    let end = text.chars().count();
    let tokens = tokenize(text)?;
    let mut stack: Vec<OpenList> = Vec::new();
    let mut result: Option<Tree> = None;
    let mut pending_quote: Option<usize> = None;

    for (pos, token) in tokens {
        if result.is_some() {
            return Err(SyntaxError::new(
                pos,
                "unexpected input after the expression",
            ));
        }
        if let Some(q) = pending_quote {
            if matches!(token, Token::Close | Token::Dot) {
                return Err(SyntaxError::new(
                    q,
                    "quote is not followed by an expression",
                ));
            }
        }
        let datum = match token {
            Token::Quote => {
                pending_quote = Some(pos);
                continue;
            }
            Token::Open => {
                stack.push(OpenList {
                    items: Vec::new(),
                    tail: Tail::Proper,
                });
                pending_quote = None;
                continue;
            }
            Token::Dot => {
                let Some(top) = stack.last_mut() else {
                    return Err(SyntaxError::new(pos, "'.' outside of a list"));
                };
                if top.items.is_empty() {
                    return Err(SyntaxError::new(pos, "'.' with no element before it"));
                }
                if !matches!(top.tail, Tail::Proper) {
                    return Err(SyntaxError::new(pos, "unexpected '.'"));
                }
                top.tail = Tail::Expecting;
                continue;
            }
            Token::Close => {
                let Some(list) = stack.pop() else {
                    return Err(SyntaxError::new(pos, "unbalanced ')'"));
                };
                let tail = match list.tail {
                    Tail::Proper => Tree::Nil,
                    Tail::Expecting => {
                        return Err(SyntaxError::new(pos, "expected an expression after '.'"));
                    }
                    Tail::Done(tail) => tail,
                };
                Tree::list_with_tail(list.items, tail)
            }
            Token::Atom(atom) => atom,
        };
        pending_quote = None;
        match stack.last_mut() {
            None => result = Some(datum),
            Some(top) => match top.tail {
                Tail::Proper => top.items.push(datum),
                Tail::Expecting => top.tail = Tail::Done(datum),
                Tail::Done(_) => {
                    return Err(SyntaxError::new(pos, "more than one expression after '.'"));
                }
            },
        }
    }

    if pending_quote.is_some() {
        return Err(SyntaxError::new(
            end,
            "quote is not followed by an expression",
        ));
    }
    if !stack.is_empty() {
        return Err(SyntaxError::new(end, "unbalanced '(': missing ')'"));
    }
    result.ok_or_else(|| SyntaxError::new(end, "empty input"))
}
