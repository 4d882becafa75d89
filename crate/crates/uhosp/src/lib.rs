//! Expression parser, verification suites and command-line interface on top
//! of `uhosp-core`.

pub mod cli;
pub mod eval;
pub mod expr;
pub mod report;
pub mod suites;

pub use eval::{evaluate, EvalError};
pub use expr::{parse, Expr, ParseError};
