use std::collections::BTreeSet;

use crate::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operator {
    Div,
    Inv,
}

/// One use of `÷` or `⁻¹`. `guarded` is the divisor or the inverted term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub operator: Operator,
    /// The dividend of a division; `None` for an inverse.
    pub numerator: Option<Term>,
    pub guarded: Term,
    /// Ordinal among the occurrences of the same statement, in the textual
    /// order of the operator symbols.
    pub position: usize,
    /// Variables bound by enclosing quantifiers.
    pub bound: BTreeSet<String>,
}

struct Collector {
    out: Vec<Occurrence>,
    bound: Vec<String>,
}

impl Collector {
    fn term(&mut self, t: &Term) {
        match t {
            Term::Zero | Term::One | Term::Var(_) | Term::Num(_) => {}
            Term::Add(a, b) | Term::Mul(a, b) => {
                self.term(a);
                self.term(b);
            }
            Term::Neg(a) => self.term(a),
            Term::Inv(a) => {
                self.term(a);
                self.push(Operator::Inv, None, a);
            }
            Term::Div(a, b) => {
                self.term(a);
                self.push(Operator::Div, Some(a), b);
                self.term(b);
            }
        }
    }

    fn push(&mut self, operator: Operator, numerator: Option<&Term>, guarded: &Term) {
        self.out.push(Occurrence {
            operator,
            numerator: numerator.cloned(),
            guarded: guarded.clone(),
            position: self.out.len(),
            bound: self.bound.iter().cloned().collect(),
        });
    }

    fn formula(&mut self, f: &Formula) {
        match f {
            Formula::Eq(a, b) | Formula::Gt(a, b) | Formula::Lt(a, b) => {
                self.term(a);
                self.term(b);
            }
            Formula::Not(g) => self.formula(g),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                self.formula(a);
                self.formula(b);
            }
            Formula::Forall(v, g) | Formula::Exists(v, g) => {
                self.bound.push(v.clone());
                self.formula(g);
                self.bound.pop();
            }
        }
    }
}

pub fn collect_term_occurrences(t: &Term) -> Vec<Occurrence> {
    let mut c = Collector {
        out: Vec::new(),
        bound: Vec::new(),
    };
    c.term(t);
    c.out
}

pub fn collect_occurrences(f: &Formula) -> Vec<Occurrence> {
    let mut c = Collector {
        out: Vec::new(),
        bound: Vec::new(),
    };
    c.formula(f);
    c.out
}
