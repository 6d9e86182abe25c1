//! The CAR/CDR tree access language.
//!
//! Accessor symbols like `cadadr` are small programs: the letters between
//! the `c` and the `r` are statements (`a` accesses the head, `d` drops it)
//! that run right to left over a cons-cell tree. This crate parses those
//! symbols, runs them with an optional step-by-step trace, translates them
//! to left-to-right (`rdadac`) and star (`*dada`, `*5da`) notations, and
//! implements `*Nn` locators with read, write, suffix and prefix operations.
//!
//! ```
//! use cxr::{compile_classic, parse_sexpr, run, Tree};
//!
//! let program = compile_classic("cadadr").unwrap();
//! let tree = parse_sexpr("'(0 (1 2 3) 4 5)").unwrap();
//! assert_eq!(run(&program, &tree).unwrap(), Tree::int(2));
//! ```
//!
//! Failures, including walking off the end of a list, come back as
//! [`AccessError`] values and never as a sentinel inside the tree.

pub mod classic;
pub mod cli;
pub mod error;
pub mod locator;
pub mod notation;
pub mod tree;

pub use classic::{
    compile_classic, is_access_symbol, run, trace, Action, Program, Statement, Trace, TraceStep,
};
pub use error::{AccessError, AccessKind, Error, ErrorKind, SyntaxError};
pub use locator::{locate, parse_locator, parse_locator_expr, LocOp, LocatedCell, Locator};
pub use notation::{
    normalize_star, parse_ltr, parse_program, parse_star, translate, Notation, StarToken,
};
pub use tree::{car, cdr, parse_sexpr, print_sexpr, Pair, Symbol, Tree};
