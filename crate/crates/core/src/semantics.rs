//! Evaluation in Komori fields and in their punched partial variants.
//!
//! Total evaluation uses the totalized inverse and division everywhere.
//! Partial evaluation makes the selected applications undefined and
//! propagates undefinedness strictly through every operator.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::carrier::{Carrier, CarrierKind, Element};
use crate::error::EvalError;
use crate::rational::Rational;
use crate::syntax::{Formula, Term};

/// Which applications are punched out of the total structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Total,
    /// `0⁻¹` is undefined.
    PunchInv0,
    /// `q ÷ 0` is undefined for every `q`.
    PunchDivAll0,
    /// `q ÷ 0` is undefined for every `q ≠ 0`; `0 ÷ 0 = 0` stays.
    PunchDivNonzero0,
}

impl Mode {
    pub const ALL: [Mode; 4] = [
        Mode::Total,
        Mode::PunchInv0,
        Mode::PunchDivAll0,
        Mode::PunchDivNonzero0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Total => "total",
            Mode::PunchInv0 => "punch-inv0",
            Mode::PunchDivAll0 => "punch-div-all",
            Mode::PunchDivNonzero0 => "punch-div-nonzero",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureSpec {
    pub carrier: Carrier,
    pub mode: Mode,
}

impl StructureSpec {
    pub fn new(carrier: Carrier, mode: Mode) -> Self {
        StructureSpec { carrier, mode }
    }

    pub fn total(carrier: Carrier) -> Self {
        Self::new(carrier, Mode::Total)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PartialValue {
    Defined(Element),
    Undefined,
}

impl PartialValue {
    pub fn is_defined(&self) -> bool {
        matches!(self, PartialValue::Defined(_))
    }

    pub fn defined(self) -> Option<Element> {
        match self {
            PartialValue::Defined(e) => Some(e),
            PartialValue::Undefined => None,
        }
    }
}

impl fmt::Display for PartialValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartialValue::Defined(e) => e.fmt(f),
            PartialValue::Undefined => f.write_str("UNDEFINED"),
        }
    }
}

/// Variable assignment. Displays as `x=1,y=-1/2`, or `{}` when empty.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Env(BTreeMap<String, Element>);

impl Env {
    pub fn new() -> Self {
        Env::default()
    }

    pub fn bind(&mut self, name: impl Into<String>, value: Element) {
        self.0.insert(name.into(), value);
    }

    pub fn with(mut self, name: impl Into<String>, value: Element) -> Self {
        self.bind(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Element> {
        self.0.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Element)> {
        self.0.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Env {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

impl serde::Serialize for Env {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.0.iter().map(|(k, v)| (k, v.to_string())))
    }
}

fn lookup(env: &Env, name: &str) -> Result<Element, EvalError> {
    env.get(name)
        .cloned()
        .ok_or_else(|| EvalError::Unbound(name.to_string()))
}

/// Evaluates `t` in the Komori field over `carrier`. Only unbound variables
/// or foreign elements in `env` can make this fail.
pub fn eval_total(t: &Term, env: &Env, carrier: &Carrier) -> Result<Element, EvalError> {
    let c = carrier;
    Ok(match t {
        Term::Zero => c.zero(),
        Term::One => c.one(),
        Term::Num(n) => c.from_integer(n),
        Term::Var(v) => lookup(env, v)?,
        Term::Add(a, b) => c.add(&eval_total(a, env, c)?, &eval_total(b, env, c)?)?,
        Term::Mul(a, b) => c.mul(&eval_total(a, env, c)?, &eval_total(b, env, c)?)?,
        Term::Neg(a) => c.neg(&eval_total(a, env, c)?)?,
        Term::Inv(a) => c.inv_total(&eval_total(a, env, c)?)?,
        Term::Div(a, b) => c.div_total(&eval_total(a, env, c)?, &eval_total(b, env, c)?)?,
    })
}

/// Evaluates `t` in the (possibly punched) structure `s`.
pub fn eval_partial(t: &Term, env: &Env, s: &StructureSpec) -> Result<PartialValue, EvalError> {
    use PartialValue::{Defined, Undefined};
    let c = &s.carrier;
    // strict: an undefined operand makes the application undefined
    macro_rules! operand {
        ($e:expr) => {
            match eval_partial($e, env, s)? {
                Defined(v) => v,
                Undefined => return Ok(Undefined),
            }
        };
    }
    Ok(match t {
        Term::Zero => Defined(c.zero()),
        Term::One => Defined(c.one()),
        Term::Num(n) => Defined(c.from_integer(n)),
        Term::Var(v) => Defined(lookup(env, v)?),
        Term::Add(a, b) => {
            let (x, y) = (operand!(a), operand!(b));
            Defined(c.add(&x, &y)?)
        }
        Term::Mul(a, b) => {
            let (x, y) = (operand!(a), operand!(b));
            Defined(c.mul(&x, &y)?)
        }
        Term::Neg(a) => Defined(c.neg(&operand!(a))?),
        Term::Inv(a) => {
            let x = operand!(a);
            if s.mode == Mode::PunchInv0 && x.is_zero() {
                Undefined
            } else {
                Defined(c.inv_total(&x)?)
            }
        }
        Term::Div(a, b) => {
            let (x, y) = (operand!(a), operand!(b));
            let punched = y.is_zero()
                && match s.mode {
                    Mode::PunchDivAll0 => true,
                    Mode::PunchDivNonzero0 => !x.is_zero(),
                    Mode::Total | Mode::PunchInv0 => false,
                };
            if punched {
                Undefined
            } else {
                Defined(c.div_total(&x, &y)?)
            }
        }
    })
}

/// Two-valued evaluation of a formula in the total structure. Used for the
/// classical metatheory of the axiom catalog (guards like `x != 0 => ...`).
pub fn holds_classically(f: &Formula, env: &Env, carrier: &Carrier) -> Result<bool, EvalError> {
    Ok(match f {
        Formula::Eq(a, b) => eval_total(a, env, carrier)? == eval_total(b, env, carrier)?,
        Formula::Gt(a, b) | Formula::Lt(a, b) => {
            let x = eval_total(a, env, carrier)?;
            let y = eval_total(b, env, carrier)?;
            let ord = compare(&x, &y, carrier)?;
            if matches!(f, Formula::Gt(..)) {
                ord.is_gt()
            } else {
                ord.is_lt()
            }
        }
        Formula::Not(g) => !holds_classically(g, env, carrier)?,
        Formula::And(a, b) => {
            holds_classically(a, env, carrier)? & holds_classically(b, env, carrier)?
        }
        Formula::Or(a, b) => {
            holds_classically(a, env, carrier)? | holds_classically(b, env, carrier)?
        }
        Formula::Implies(a, b) => {
            !holds_classically(a, env, carrier)? | holds_classically(b, env, carrier)?
        }
        Formula::Forall(v, g) | Formula::Exists(v, g) => {
            let elements = carrier
                .elements()
                .ok_or_else(|| EvalError::QuantifierOverInfinite(v.clone()))?;
            let mut results = Vec::with_capacity(elements.len());
            for e in elements {
                results.push(holds_classically(
                    g,
                    &env.clone().with(v.clone(), e),
                    carrier,
                )?);
            }
            if matches!(f, Formula::Forall(..)) {
                results.into_iter().all(|b| b)
            } else {
                results.into_iter().any(|b| b)
            }
        }
    })
}

/// Order of two elements of an ordered carrier.
pub fn compare(
    x: &Element,
    y: &Element,
    carrier: &Carrier,
) -> Result<std::cmp::Ordering, EvalError> {
    match (x, y) {
        (Element::Rational(a), Element::Rational(b)) if carrier.is_ordered() => Ok(a.cmp(b)),
        _ => Err(EvalError::Unordered(carrier.to_string())),
    }
}

/// A law to check: a formula whose free variables are read universally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub formula: Formula,
}

impl Law {
    pub fn new(name: impl Into<String>, formula: Formula) -> Self {
        Law {
            name: name.into(),
            formula,
        }
    }

    pub fn equation(name: impl Into<String>, lhs: Term, rhs: Term) -> Self {
        Law::new(name, Formula::Eq(lhs, rhs))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every assignment over a finite carrier.
    Exhaustive,
    /// Seeded random assignments. Rationals have numerator and denominator
    /// uniform in `[-9999, 9999]` (denominator nonzero).
    RandomSample { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub passed: bool,
    pub samples: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Env>,
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} axiom={} samples={}",
            if self.passed { "PASS" } else { "FAIL" },
            self.axiom,
            self.samples
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness={w}")?;
        }
        Ok(())
    }
}

pub const SAMPLE_BOUND: i64 = 9999;

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    let num = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let den = loop {
        let d = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
        if d != 0 {
            break d;
        }
    };
    Rational::new(num, den).expect("nonzero denominator")
}

fn random_element<R: Rng>(rng: &mut R, carrier: &Carrier) -> Result<Element, EvalError> {
    Ok(match carrier.kind() {
        CarrierKind::Rationals => Element::Rational(random_rational(rng)),
        CarrierKind::PrimeField(p) => carrier.from_integer(&rng.gen_range(0..*p).into()),
        CarrierKind::FiniteProbeSet(values) => {
            Element::Rational(values[rng.gen_range(0..values.len())].clone())
        }
    })
}

/// Checks `lhs = rhs` for all assignments of its variables.
pub fn verify_axiom(
    lhs: &Term,
    rhs: &Term,
    s: &StructureSpec,
    strategy: Strategy,
) -> Result<AxiomReport, EvalError> {
    verify_law(&Law::equation("", lhs.clone(), rhs.clone()), s, strategy)
}

/// Checks a law classically in a total structure. The report keeps the first
/// failing assignment as its witness.
pub fn verify_law(
    law: &Law,
    s: &StructureSpec,
    strategy: Strategy,
) -> Result<AxiomReport, EvalError> {
    if s.mode != Mode::Total {
        return Err(EvalError::NotTotal);
    }
    let carrier = &s.carrier;
    let vars: Vec<String> = law.formula.free_vars().into_iter().collect();
    let mut samples = 0;
    let mut witness = None;
    let mut check = |env: Env| -> Result<(), EvalError> {
        samples += 1;
        if witness.is_none() && !holds_classically(&law.formula, &env, carrier)? {
            witness = Some(env);
        }
        Ok(())
    };
    match strategy {
        Strategy::Exhaustive => {
            let elements = carrier.elements().ok_or(EvalError::NotEnumerable)?;
            for_each_assignment(&vars, &elements, &mut check)?;
        }
        Strategy::RandomSample { samples: n, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let rounds = if vars.is_empty() { 1 } else { n };
            for _ in 0..rounds {
                let mut env = Env::new();
                for v in &vars {
                    env.bind(v.clone(), random_element(&mut rng, carrier)?);
                }
                check(env)?;
            }
        }
    }
    Ok(AxiomReport {
        axiom: law.formula.to_string(),
        passed: witness.is_none(),
        samples,
        witness,
    })
}

/// Calls `f` on every assignment of `vars` to `elements`, in lexicographic
/// order with the first variable varying slowest.
pub fn for_each_assignment<E>(
    vars: &[String],
    elements: &[Element],
    f: &mut dyn FnMut(Env) -> Result<(), E>,
) -> Result<(), E> {
    fn go<E>(
        vars: &[String],
        elements: &[Element],
        env: Env,
        f: &mut dyn FnMut(Env) -> Result<(), E>,
    ) -> Result<(), E> {
        match vars.split_first() {
            None => f(env),
            Some((v, rest)) => {
                for e in elements {
                    go(rest, elements, env.clone().with(v.clone(), e.clone()), f)?;
                }
                Ok(())
            }
        }
    }
    go(vars, elements, Env::new(), f)
}
