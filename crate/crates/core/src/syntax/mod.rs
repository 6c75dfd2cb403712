//! Terms and formulas over the inversive (`x^-1`) and divisive (`x/y`)
//! meadow notations.

mod ast;
mod parser;
mod printer;
mod translate;

pub use ast::{Formula, Notation, Term};
pub use parser::{parse_formula, parse_term};
pub use printer::{print_formula, print_term};
pub use translate::{formula_to_divisive, formula_to_inversive, to_divisive, to_inversive};
