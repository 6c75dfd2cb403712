use std::collections::BTreeSet;

use num_bigint::BigInt;

/// A term over the inversive and divisive meadow signatures.
///
/// `Num` carries integer numerals other than 0 and 1, which have their own
/// constants; the parser never builds `Num(0)` or `Num(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Num(BigInt),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Inv(Box<Term>),
    Div(Box<Term>, Box<Term>),
}

/// Which notation a term is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// Neither `⁻¹` nor `÷` occurs; the term belongs to both notations.
    Common,
    Inversive,
    Divisive,
    Mixed,
}

#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    /// Numeral for `n`, using the `Zero`/`One` constants where they apply.
    pub fn num(n: impl Into<BigInt>) -> Term {
        let n = n.into();
        if n == BigInt::from(0) {
            Term::Zero
        } else if n == BigInt::from(1) {
            Term::One
        } else if n < BigInt::from(0) {
            Term::neg(Term::num(-n))
        } else {
            Term::Num(n)
        }
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Term {
        Term::add(a, Term::neg(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn div(a: Term, b: Term) -> Term {
        Term::Div(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn inv(a: Term) -> Term {
        Term::Inv(Box::new(a))
    }

    /// `a^n` expanded as a left-nested product; `a^0` is `1`.
    pub fn pow(a: Term, n: u32) -> Term {
        match n {
            0 => Term::One,
            _ => (1..n).fold(a.clone(), |acc, _| Term::mul(acc, a.clone())),
        }
    }

    pub fn contains_div(&self) -> bool {
        self.any(&|t| matches!(t, Term::Div(..)))
    }

    pub fn contains_inv(&self) -> bool {
        self.any(&|t| matches!(t, Term::Inv(..)))
    }

    pub fn notation(&self) -> Notation {
        match (self.contains_inv(), self.contains_div()) {
            (false, false) => Notation::Common,
            (true, false) => Notation::Inversive,
            (false, true) => Notation::Divisive,
            (true, true) => Notation::Mixed,
        }
    }

    fn any(&self, pred: &dyn Fn(&Term) -> bool) -> bool {
        pred(self)
            || match self {
                Term::Zero | Term::One | Term::Var(_) | Term::Num(_) => false,
                Term::Neg(a) | Term::Inv(a) => a.any(pred),
                Term::Add(a, b) | Term::Mul(a, b) | Term::Div(a, b) => a.any(pred) || b.any(pred),
            }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One | Term::Num(_) => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Neg(a) | Term::Inv(a) => a.collect_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) | Term::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        !self.any(&|t| matches!(t, Term::Var(_)))
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Zero | Term::One | Term::Var(_) | Term::Num(_) => 1,
            Term::Neg(a) | Term::Inv(a) => 1 + a.size(),
            Term::Add(a, b) | Term::Mul(a, b) | Term::Div(a, b) => 1 + a.size() + b.size(),
        }
    }
}

/// First-order formulas over meadow terms. `t != u` is `Not(Eq(t, u))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Eq(Term, Term),
    Gt(Term, Term),
    Lt(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

#[allow(clippy::should_implement_trait)]
impl Formula {
    pub fn eq(a: Term, b: Term) -> Formula {
        Formula::Eq(a, b)
    }

    pub fn neq(a: Term, b: Term) -> Formula {
        Formula::not(Formula::Eq(a, b))
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn forall(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Forall(v.into(), Box::new(f))
    }

    pub fn exists(v: impl Into<String>, f: Formula) -> Formula {
        Formula::Exists(v.into(), Box::new(f))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        match self {
            Formula::Eq(a, b) | Formula::Gt(a, b) | Formula::Lt(a, b) => {
                let mut out = a.free_vars();
                b.collect_vars(&mut out);
                out
            }
            Formula::Not(f) => f.free_vars(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let mut out = a.free_vars();
                out.extend(b.free_vars());
                out
            }
            Formula::Forall(v, f) | Formula::Exists(v, f) => {
                let mut out = f.free_vars();
                out.remove(v);
                out
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn has_quantifier(&self) -> bool {
        match self {
            Formula::Eq(..) | Formula::Gt(..) | Formula::Lt(..) => false,
            Formula::Not(f) => f.has_quantifier(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.has_quantifier() || b.has_quantifier()
            }
            Formula::Forall(..) | Formula::Exists(..) => true,
        }
    }

    /// Applies `f` to every term in the formula, keeping the formula shape.
    pub fn map_terms(&self, f: &dyn Fn(&Term) -> Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(f(a), f(b)),
            Formula::Gt(a, b) => Formula::Gt(f(a), f(b)),
            Formula::Lt(a, b) => Formula::Lt(f(a), f(b)),
            Formula::Not(g) => Formula::not(g.map_terms(f)),
            Formula::And(a, b) => Formula::and(a.map_terms(f), b.map_terms(f)),
            Formula::Or(a, b) => Formula::or(a.map_terms(f), b.map_terms(f)),
            Formula::Implies(a, b) => Formula::implies(a.map_terms(f), b.map_terms(f)),
            Formula::Forall(v, g) => Formula::forall(v.clone(), g.map_terms(f)),
            Formula::Exists(v, g) => Formula::exists(v.clone(), g.map_terms(f)),
        }
    }
}
