//! Recursive descent parser for the ASCII term and formula grammar.
//!
//! ```text
//! term    := sum ;
//! sum     := prod (("+"|"-") prod)* ;
//! prod    := unary (("*"|"/") unary)* ;
//! unary   := "-" unary | postfix ;
//! postfix := atom ("^-1" | "^" nat)* ;
//! atom    := "0" | "1" | nat | ident | "(" term ")" ;
//! formula := quant | impl ;
//! quant   := ("forall"|"exists") ident "." formula ;
//! impl    := disj ("=>" impl)? ;
//! disj    := conj ("|" conj)* ;
//! conj    := neg ("&" neg)* ;
//! neg     := "!" neg | fatom ;
//! fatom   := term ("="|"!="|">"|"<") term | "(" formula ")" ;
//! ```

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::ast::{Formula, Term};
use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Nat(BigInt),
    Ident(String),
    Forall,
    Exists,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
    Neq,
    Gt,
    Lt,
    Bang,
    Amp,
    Pipe,
    Arrow,
    Dot,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Nat(n) => format!("numeral `{n}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Neq => "`!=`".into(),
            Tok::Gt => "`>`".into(),
            Tok::Lt => "`<`".into(),
            Tok::Bang => "`!`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Arrow => "`=>`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = bytes.get(i + 1).copied();
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'>' => Tok::Gt,
            b'<' => Tok::Lt,
            b'&' => Tok::Amp,
            b'|' => Tok::Pipe,
            b'.' => Tok::Dot,
            b'=' if two == Some(b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'=' => Tok::Eq,
            b'!' if two == Some(b'=') => {
                i += 1;
                Tok::Neq
            }
            b'!' => Tok::Bang,
            b'0'..=b'9' => {
                while i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                }
                Tok::Nat(input[start..=i].parse().expect("digits"))
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i + 1 < bytes.len()
                    && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_')
                {
                    i += 1;
                }
                match &input[start..=i] {
                    "forall" => Tok::Forall,
                    "exists" => Tok::Exists,
                    name => Tok::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = input[start..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::Eof, input.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn new(input: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: lex(input)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == t {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            position: self.offset(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        }
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if self.eat(&t) {
            Ok(())
        } else {
            Err(self.error(&t.describe()))
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            Err(self.error("end of input"))
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.prod()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Term::add(lhs, self.prod()?);
            } else if self.eat(&Tok::Minus) {
                lhs = Term::sub(lhs, self.prod()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Term::mul(lhs, self.unary()?);
            } else if self.eat(&Tok::Slash) {
                lhs = Term::div(lhs, self.unary()?);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        if self.eat(&Tok::Minus) {
            Ok(Term::neg(self.unary()?))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Caret) {
            if self.eat(&Tok::Minus) {
                if *self.peek() != Tok::Nat(BigInt::from(1)) {
                    return Err(self.error("`1` after `^-`"));
                }
                self.bump();
                base = Term::inv(base);
            } else if let Tok::Nat(n) = self.peek().clone() {
                let exp = n
                    .to_u32()
                    .filter(|e| *e <= 64)
                    .ok_or_else(|| self.error("an exponent of at most 64"))?;
                self.bump();
                base = Term::pow(base, exp);
            } else {
                return Err(self.error("`-1` or a natural exponent after `^`"));
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Nat(n) => {
                self.bump();
                Ok(Term::num(n))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            _ => Err(self.error("a term")),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Forall | Tok::Exists => {
                let universal = self.bump() == Tok::Forall;
                let var = match self.peek().clone() {
                    Tok::Ident(v) => v,
                    _ => return Err(self.error("a bound variable")),
                };
                self.bump();
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(if universal {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            _ => self.implication(),
        }
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            Ok(Formula::implies(lhs, self.implication()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Pipe) {
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.negation()?;
        while self.eat(&Tok::Amp) {
            lhs = Formula::and(lhs, self.negation()?);
        }
        Ok(lhs)
    }

    fn negation(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Bang) {
            Ok(Formula::not(self.negation()?))
        } else {
            self.formula_atom()
        }
    }

    fn formula_atom(&mut self) -> Result<Formula, ParseError> {
        let start = self.pos;
        let as_atom = self.comparison();
        if as_atom.is_ok() || self.toks[start].0 != Tok::LParen {
            return as_atom;
        }
        // `(` may open either a term or a parenthesized formula
        let atom_err = as_atom.unwrap_err();
        self.pos = start + 1;
        let nested = self
            .formula()
            .and_then(|f| self.expect(Tok::RParen).map(|_| f));
        match nested {
            Ok(f) => Ok(f),
            Err(e) if e.position >= atom_err.position => Err(e),
            Err(_) => Err(atom_err),
        }
    }

    fn comparison(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.term()?;
        let op = self.peek().clone();
        let build: fn(Term, Term) -> Formula = match op {
            Tok::Eq => Formula::Eq,
            Tok::Neq => Formula::neq,
            Tok::Gt => Formula::Gt,
            Tok::Lt => Formula::Lt,
            _ => return Err(self.error("`=`, `!=`, `>` or `<`")),
        };
        self.bump();
        let rhs = self.term()?;
        Ok(build(lhs, rhs))
    }
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.finish()?;
    Ok(t)
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.finish()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(name: &str) -> Term {
        Term::var(name)
    }

    #[test]
    fn division_literal() {
        assert_eq!(parse_term("1/0").unwrap(), Term::div(Term::One, Term::Zero));
    }

    #[test]
    fn inversive_axiom_side() {
        assert_eq!(
            parse_term("x*(x*x^-1)").unwrap(),
            Term::mul(v("x"), Term::mul(v("x"), Term::inv(v("x"))))
        );
    }

    #[test]
    fn divisive_axiom_side() {
        assert_eq!(
            parse_term("1/(1/x)").unwrap(),
            Term::div(Term::One, Term::div(Term::One, v("x")))
        );
    }

    #[test]
    fn precedence_and_associativity() {
        // postfix binds tighter than unary minus
        assert_eq!(parse_term("-x^-1").unwrap(), Term::neg(Term::inv(v("x"))));
        assert_eq!(
            parse_term("a - b - c").unwrap(),
            Term::sub(Term::sub(v("a"), v("b")), v("c"))
        );
        assert_eq!(
            parse_term("a / b * c").unwrap(),
            Term::mul(Term::div(v("a"), v("b")), v("c"))
        );
        assert_eq!(
            parse_term("a + b * c").unwrap(),
            Term::add(v("a"), Term::mul(v("b"), v("c")))
        );
        assert_eq!(parse_term("x^-1^-1").unwrap(), Term::inv(Term::inv(v("x"))));
    }

    #[test]
    fn numerals_and_powers() {
        assert_eq!(parse_term("7").unwrap(), Term::Num(7.into()));
        assert_eq!(parse_term("x^2").unwrap(), Term::mul(v("x"), v("x")));
        assert_eq!(
            parse_term("x^3").unwrap(),
            Term::mul(Term::mul(v("x"), v("x")), v("x"))
        );
        assert_eq!(parse_term("x^0").unwrap(), Term::One);
        assert_eq!(parse_term("x^1").unwrap(), v("x"));
        assert_eq!(
            parse_term("1 + x^2 + y^2").unwrap(),
            Term::add(
                Term::add(Term::One, Term::mul(v("x"), v("x"))),
                Term::mul(v("y"), v("y"))
            )
        );
    }

    #[test]
    fn formula_examples() {
        let f = parse_formula("forall x. x != 0 => x/x = 1").unwrap();
        assert_eq!(
            f,
            Formula::forall(
                "x",
                Formula::implies(
                    Formula::not(Formula::eq(v("x"), Term::Zero)),
                    Formula::eq(Term::div(v("x"), v("x")), Term::One)
                )
            )
        );
        assert_eq!(
            parse_formula("0/0 = 1 | 0 = 0").unwrap(),
            Formula::or(
                Formula::eq(Term::div(Term::Zero, Term::Zero), Term::One),
                Formula::eq(Term::Zero, Term::Zero)
            )
        );
        assert_eq!(parse_formula("x = x").unwrap(), Formula::eq(v("x"), v("x")));
    }

    #[test]
    fn connective_precedence() {
        let a = || Formula::eq(v("a"), Term::Zero);
        let b = || Formula::eq(v("b"), Term::Zero);
        let c = || Formula::eq(v("c"), Term::Zero);
        assert_eq!(
            parse_formula("a = 0 | b = 0 & c = 0").unwrap(),
            Formula::or(a(), Formula::and(b(), c()))
        );
        assert_eq!(
            parse_formula("a = 0 => b = 0 => c = 0").unwrap(),
            Formula::implies(a(), Formula::implies(b(), c()))
        );
        assert_eq!(
            parse_formula("!a = 0 & b = 0").unwrap(),
            Formula::and(Formula::not(a()), b())
        );
        assert_eq!(
            parse_formula("!(a = 0 & b = 0)").unwrap(),
            Formula::not(Formula::and(a(), b()))
        );
        assert_eq!(
            parse_formula("(a + 1) = 0").unwrap(),
            Formula::eq(Term::add(v("a"), Term::One), Term::Zero)
        );
        assert_eq!(
            parse_formula("a = 0 & (forall c. c = 0)").unwrap(),
            Formula::and(a(), Formula::forall("c", c()))
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_term("1 + ").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_term("x ^ 2.5").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_term("x^-2").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_term("x $ y").is_err());
        assert!(parse_formula("x = ").is_err());
        assert!(parse_formula("forall 1. x = x").is_err());
        assert!(parse_formula("(x = 1").is_err());
        assert!(parse_term("x y").is_err());
        assert!(parse_term("").is_err());
        assert!(parse_formula("a = 0 & forall c. c = 0").is_err());
    }
}
