//! Komori fields (non-trivial cancellation meadows) of rational numbers.
//!
//! * [`rational`] and [`carrier`]: exact arithmetic with a totalized inverse,
//!   over the rationals and over prime fields.
//! * [`syntax`]: terms in inversive and divisive notation, formulas, parser
//!   and printer.
//! * [`semantics`]: total evaluation, punched partial evaluation, and axiom
//!   checking; [`laws`] holds the axiom catalog.
//! * [`logic`]: three-valued formula evaluation with configurable equality,
//!   connectives and quantifiers.
//! * [`lint`]: classification of divisions and inverses against the
//!   conventions forbidding division by zero.

pub mod carrier;
pub mod error;
pub mod laws;
pub mod lint;
pub mod logic;
pub mod rational;
pub mod semantics;
pub mod syntax;

pub use carrier::{Carrier, CarrierKind, Element, Residue};
pub use error::{ArithError, EvalError, ParseError};
pub use logic::{
    classify_sentence, eval_equality, eval_formula, ConnectiveFamily, ConnectiveTable,
    EqualityKind, LogicConfig, QuantifierFamily, TruthValue, Usability,
};
pub use rational::Rational;
pub use semantics::{
    eval_partial, eval_total, verify_axiom, verify_law, AxiomReport, Env, Law, Mode, PartialValue,
    Strategy, StructureSpec,
};
pub use syntax::{parse_formula, parse_term, Formula, Term};
