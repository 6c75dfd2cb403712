//! Translation between the inversive and divisive notations.
//!
//! `x / y` becomes `x * y^-1` and `x^-1` becomes `1 / x`. Both maps preserve
//! total evaluation in every Komori field.

use super::ast::{Formula, Term};

pub fn to_inversive(t: &Term) -> Term {
    match t {
        Term::Zero | Term::One | Term::Var(_) | Term::Num(_) => t.clone(),
        Term::Add(a, b) => Term::add(to_inversive(a), to_inversive(b)),
        Term::Mul(a, b) => Term::mul(to_inversive(a), to_inversive(b)),
        Term::Neg(a) => Term::neg(to_inversive(a)),
        Term::Inv(a) => Term::inv(to_inversive(a)),
        Term::Div(a, b) => Term::mul(to_inversive(a), Term::inv(to_inversive(b))),
    }
}

pub fn to_divisive(t: &Term) -> Term {
    match t {
        Term::Zero | Term::One | Term::Var(_) | Term::Num(_) => t.clone(),
        Term::Add(a, b) => Term::add(to_divisive(a), to_divisive(b)),
        Term::Mul(a, b) => Term::mul(to_divisive(a), to_divisive(b)),
        Term::Neg(a) => Term::neg(to_divisive(a)),
        Term::Inv(a) => Term::div(Term::One, to_divisive(a)),
        Term::Div(a, b) => Term::div(to_divisive(a), to_divisive(b)),
    }
}

pub fn formula_to_inversive(f: &Formula) -> Formula {
    f.map_terms(&to_inversive)
}

pub fn formula_to_divisive(f: &Formula) -> Formula {
    f.map_terms(&to_divisive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_term, Notation};

    #[test]
    fn division_becomes_product_with_inverse() {
        let x = Term::var("x");
        let y = Term::var("y");
        assert_eq!(
            to_inversive(&Term::div(x.clone(), y.clone())),
            Term::mul(x.clone(), Term::inv(y))
        );
        assert_eq!(
            to_divisive(&Term::inv(x.clone())),
            Term::div(Term::One, x.clone())
        );
        assert_eq!(to_inversive(&x), x);
    }

    #[test]
    fn output_notation_and_idempotence() {
        let t = parse_term("(x/y)^-1 + 1/(z^-1 - x)").unwrap();
        assert_eq!(t.notation(), Notation::Mixed);
        let i = to_inversive(&t);
        let d = to_divisive(&t);
        assert!(!i.contains_div());
        assert!(!d.contains_inv());
        assert_eq!(to_inversive(&i), i);
        assert_eq!(to_divisive(&d), d);
    }
}
