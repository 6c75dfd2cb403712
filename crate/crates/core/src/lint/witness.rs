//! Bounded search for assignments that make a term zero.

use std::collections::BTreeSet;

use crate::carrier::{Carrier, Element};
use crate::rational::Rational;
use crate::semantics::{eval_total, for_each_assignment, Env};
use crate::syntax::Term;

/// Bounds of the zero search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Residues `0..p` of these primes, lifted to integers, are tried first.
    pub primes: Vec<u64>,
    /// Skip a prime once `p^vars` exceeds this many assignments.
    pub max_lift_assignments: u64,
    /// Then rationals `n/d` with `|n| <= max_abs_numerator`, `1 <= d <= max_denominator`.
    pub max_abs_numerator: i64,
    pub max_denominator: i64,
    /// The rational sweep runs only for at most this many variables.
    pub max_vars: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            primes: vec![2, 3, 5],
            max_lift_assignments: 100_000,
            max_abs_numerator: 4,
            max_denominator: 4,
            max_vars: 3,
        }
    }
}

impl SearchBudget {
    fn small_rationals(&self) -> Vec<Element> {
        let mut seen = BTreeSet::new();
        for d in 1..=self.max_denominator {
            for n in -self.max_abs_numerator..=self.max_abs_numerator {
                seen.insert(Rational::new(n, d).expect("positive denominator"));
            }
        }
        // smallest magnitudes first so that witnesses stay simple
        let mut values: Vec<Rational> = seen.into_iter().collect();
        values.sort_by(|a, b| {
            let key = |r: &Rational| {
                (
                    r.numer().magnitude().clone() + r.denom().magnitude(),
                    r.denom().clone(),
                    r.is_positive(),
                )
            };
            key(a).cmp(&key(b))
        });
        values.into_iter().map(Element::Rational).collect()
    }
}

/// Looks for an assignment of `vars` over the rationals accepted by `accept`.
pub(crate) fn search(
    vars: &[String],
    budget: &SearchBudget,
    accept: &dyn Fn(&Env) -> bool,
) -> Option<Env> {
    let mut found = None;
    let mut probe = |env: Env| -> Result<(), ()> {
        if accept(&env) {
            found = Some(env);
            Err(())
        } else {
            Ok(())
        }
    };
    for &p in &budget.primes {
        let count = (p as u128).checked_pow(vars.len() as u32);
        if count.is_none_or(|c| c > budget.max_lift_assignments as u128) {
            continue;
        }
        let lifted: Vec<Element> = (0..p as i64)
            .map(|v| Element::Rational(Rational::from_integer(v)))
            .collect();
        if for_each_assignment(vars, &lifted, &mut probe).is_err() {
            return found;
        }
    }
    if vars.len() <= budget.max_vars {
        let values = budget.small_rationals();
        if for_each_assignment(vars, &values, &mut probe).is_err() {
            return found;
        }
    }
    None
}

pub(crate) fn is_zero_at(t: &Term, env: &Env) -> bool {
    matches!(eval_total(t, env, &Carrier::rationals()), Ok(v) if v.is_zero())
}

pub(crate) fn is_nonzero_at(t: &Term, env: &Env) -> bool {
    matches!(eval_total(t, env, &Carrier::rationals()), Ok(v) if !v.is_zero())
}

/// An assignment under which `t` is zero in the rational Komori field,
/// verified by evaluation, or `None` once the budget is spent.
pub fn find_zero_witness(t: &Term, budget: &SearchBudget) -> Option<Env> {
    let vars: Vec<String> = t.free_vars().into_iter().collect();
    search(&vars, budget, &|env| is_zero_at(t, env))
}
