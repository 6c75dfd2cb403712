//! Printing with parentheses only where the grammar needs them.
//!
//! `Add(a, Neg(b))` prints as `a - b`, which the parser reads back as the
//! same tree, and `Not(Eq(a, b))` prints as `a != b`.

use std::fmt;

use super::ast::{Formula, Term};

// binding strength of the term productions
const SUM: u8 = 1;
const PROD: u8 = 2;
const UNARY: u8 = 3;
const POSTFIX: u8 = 4;

fn term_level(t: &Term) -> u8 {
    match t {
        Term::Add(..) => SUM,
        Term::Mul(..) | Term::Div(..) => PROD,
        Term::Neg(_) => UNARY,
        _ => POSTFIX,
    }
}

fn write_term(out: &mut String, t: &Term, min: u8) {
    let paren = term_level(t) < min;
    if paren {
        out.push('(');
    }
    match t {
        Term::Zero => out.push('0'),
        Term::One => out.push('1'),
        Term::Var(v) => out.push_str(v),
        Term::Num(n) => out.push_str(&n.to_string()),
        Term::Add(a, b) => {
            write_term(out, a, SUM);
            match b.as_ref() {
                Term::Neg(c) => {
                    out.push_str(" - ");
                    write_term(out, c, PROD);
                }
                _ => {
                    out.push_str(" + ");
                    write_term(out, b, PROD);
                }
            }
        }
        Term::Mul(a, b) | Term::Div(a, b) => {
            write_term(out, a, PROD);
            out.push(if matches!(t, Term::Mul(..)) { '*' } else { '/' });
            write_term(out, b, UNARY);
        }
        Term::Neg(a) => {
            out.push('-');
            write_term(out, a, UNARY);
        }
        Term::Inv(a) => {
            write_term(out, a, POSTFIX);
            out.push_str("^-1");
        }
    }
    if paren {
        out.push(')');
    }
}

pub fn print_term(t: &Term) -> String {
    let mut out = String::new();
    write_term(&mut out, t, SUM);
    out
}

const QUANT: u8 = 0;
const IMPL: u8 = 1;
const DISJ: u8 = 2;
const CONJ: u8 = 3;
const NEG: u8 = 4;
const ATOM: u8 = 5;

fn formula_level(f: &Formula) -> u8 {
    match f {
        Formula::Forall(..) | Formula::Exists(..) => QUANT,
        Formula::Implies(..) => IMPL,
        Formula::Or(..) => DISJ,
        Formula::And(..) => CONJ,
        Formula::Not(g) if matches!(g.as_ref(), Formula::Eq(..)) => ATOM,
        Formula::Not(_) => NEG,
        _ => ATOM,
    }
}

fn write_formula(out: &mut String, f: &Formula, min: u8) {
    let paren = formula_level(f) < min;
    if paren {
        out.push('(');
    }
    let comparison = |out: &mut String, a: &Term, op: &str, b: &Term| {
        write_term(out, a, SUM);
        out.push_str(op);
        write_term(out, b, SUM);
    };
    match f {
        Formula::Eq(a, b) => comparison(out, a, " = ", b),
        Formula::Gt(a, b) => comparison(out, a, " > ", b),
        Formula::Lt(a, b) => comparison(out, a, " < ", b),
        Formula::Not(g) => match g.as_ref() {
            Formula::Eq(a, b) => comparison(out, a, " != ", b),
            _ => {
                out.push('!');
                write_formula(out, g, NEG);
            }
        },
        Formula::And(a, b) => {
            write_formula(out, a, CONJ);
            out.push_str(" & ");
            write_formula(out, b, NEG);
        }
        Formula::Or(a, b) => {
            write_formula(out, a, DISJ);
            out.push_str(" | ");
            write_formula(out, b, CONJ);
        }
        Formula::Implies(a, b) => {
            write_formula(out, a, DISJ);
            out.push_str(" => ");
            write_formula(out, b, IMPL);
        }
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            out.push_str(if matches!(f, Formula::Forall(..)) {
                "forall "
            } else {
                "exists "
            });
            out.push_str(v);
            out.push_str(". ");
            write_formula(out, g, QUANT);
        }
    }
    if paren {
        out.push(')');
    }
}

pub fn print_formula(f: &Formula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, QUANT);
    out
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_term(self))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_formula(self))
    }
}
