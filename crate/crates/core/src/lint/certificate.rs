//! Syntactic certificates that a term never evaluates to zero.
//!
//! Sound but incomplete: a missing certificate says nothing about zeros.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::carrier::{Carrier, Element};
use crate::rational::Rational;
use crate::semantics::{eval_total, Env};
use crate::syntax::Term;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// Closed term with a nonzero value.
    NonzeroConstant,
    /// Positive constant plus a sum of even-power monomials with positive
    /// coefficients, such as `1 + x^2 + y^2`.
    OnePlusSumOfSquares,
    /// Product, quotient, inverse or negation of certified terms.
    ProductOfCertified,
    /// Recorded as nonzero by the hypothesis with this statement index.
    HypothesisDerived(usize),
    /// Only under the liberal convention: the dividend is the constant zero.
    ZeroNumerator,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateKind::NonzeroConstant => f.write_str("NonzeroConstant"),
            CertificateKind::OnePlusSumOfSquares => f.write_str("OnePlusSumOfSquares"),
            CertificateKind::ProductOfCertified => f.write_str("ProductOfCertified"),
            CertificateKind::HypothesisDerived(i) => write!(f, "HypothesisDerived({i})"),
            CertificateKind::ZeroNumerator => f.write_str("ZeroNumerator"),
        }
    }
}

/// A term known to be nonzero, with the statement that introduced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonzeroFact {
    pub term: Term,
    pub statement: usize,
}

impl NonzeroFact {
    pub fn new(term: &Term, statement: usize) -> Self {
        NonzeroFact {
            term: normalize(term),
            statement,
        }
    }
}

/// A certificate together with the hypotheses it relies on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub depends_on: BTreeSet<usize>,
}

impl Certificate {
    fn plain(kind: CertificateKind) -> Self {
        Certificate {
            kind,
            depends_on: BTreeSet::new(),
        }
    }
}

/// Value of a closed term in the rational Komori field.
pub fn fold_constant(t: &Term) -> Option<Rational> {
    if !t.is_closed() {
        return None;
    }
    match eval_total(t, &Env::new(), &Carrier::rationals()) {
        Ok(Element::Rational(r)) => Some(r),
        _ => None,
    }
}

fn flatten_add<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
    match t {
        Term::Add(a, b) => {
            flatten_add(a, out);
            flatten_add(b, out);
        }
        _ => out.push(t),
    }
}

fn flatten_mul<'a>(t: &'a Term, out: &mut Vec<&'a Term>) {
    match t {
        Term::Mul(a, b) => {
            flatten_mul(a, out);
            flatten_mul(b, out);
        }
        _ => out.push(t),
    }
}

/// Sorts the operands of `+` and `·` chains so that terms equal up to
/// associativity and commutativity of those operators compare equal.
pub fn normalize(t: &Term) -> Term {
    match t {
        Term::Add(..) | Term::Mul(..) => {
            let mut parts = Vec::new();
            if matches!(t, Term::Add(..)) {
                flatten_add(t, &mut parts);
            } else {
                flatten_mul(t, &mut parts);
            }
            let mut parts: Vec<Term> = parts.into_iter().map(normalize).collect();
            parts.sort();
            let join = if matches!(t, Term::Add(..)) {
                Term::add
            } else {
                Term::mul
            };
            let mut it = parts.into_iter();
            let first = it.next().expect("chain has operands");
            it.fold(first, join)
        }
        Term::Neg(a) => Term::neg(normalize(a)),
        Term::Inv(a) => Term::inv(normalize(a)),
        Term::Div(a, b) => Term::div(normalize(a), normalize(b)),
        _ => t.clone(),
    }
}

/// `c · m₁ · … · mₖ` with `c > 0` and every non-constant factor occurring
/// an even number of times.
fn is_nonnegative_monomial(t: &Term) -> bool {
    let mut factors = Vec::new();
    flatten_mul(t, &mut factors);
    let mut coefficient = Rational::one();
    let mut counts: BTreeMap<Term, usize> = BTreeMap::new();
    for f in factors {
        match fold_constant(f) {
            Some(c) => coefficient = &coefficient * &c,
            None => *counts.entry(normalize(f)).or_default() += 1,
        }
    }
    coefficient.is_positive() && counts.values().all(|n| n % 2 == 0)
}

fn sum_of_squares(t: &Term) -> bool {
    let mut summands = Vec::new();
    flatten_add(t, &mut summands);
    let mut constant = Rational::zero();
    for s in summands {
        match fold_constant(s) {
            Some(c) if c.is_positive() || c.is_zero() => constant = &constant + &c,
            Some(_) => return false,
            None if is_nonnegative_monomial(s) => {}
            None => return false,
        }
    }
    constant.is_positive()
}

fn certify(t: &Term, facts: &[NonzeroFact]) -> Option<Certificate> {
    if t.is_closed() {
        return match fold_constant(t) {
            Some(c) if !c.is_zero() => Some(Certificate::plain(CertificateKind::NonzeroConstant)),
            _ => None,
        };
    }
    if sum_of_squares(t) {
        return Some(Certificate::plain(CertificateKind::OnePlusSumOfSquares));
    }
    let parts: Vec<&Term> = match t {
        Term::Mul(..) => {
            let mut out = Vec::new();
            flatten_mul(t, &mut out);
            out
        }
        Term::Div(a, b) => vec![a, b],
        Term::Neg(a) | Term::Inv(a) => vec![a],
        _ => Vec::new(),
    };
    if !parts.is_empty() {
        let mut depends_on = BTreeSet::new();
        let all = parts.iter().all(|p| match certify(p, facts) {
            Some(c) => {
                depends_on.extend(c.depends_on);
                true
            }
            None => false,
        });
        if all {
            return Some(Certificate {
                kind: CertificateKind::ProductOfCertified,
                depends_on,
            });
        }
    }
    let norm = normalize(t);
    facts
        .iter()
        .filter(|f| f.term == norm)
        .map(|f| f.statement)
        .min()
        .map(|i| Certificate {
            kind: CertificateKind::HypothesisDerived(i),
            depends_on: BTreeSet::from([i]),
        })
}

/// Full certificate search, reporting which hypotheses were used.
pub fn nonzero_certificate_with_deps(t: &Term, facts: &[NonzeroFact]) -> Option<Certificate> {
    certify(t, facts)
}

pub fn nonzero_certificate(t: &Term, facts: &[NonzeroFact]) -> Option<CertificateKind> {
    certify(t, facts).map(|c| c.kind)
}
