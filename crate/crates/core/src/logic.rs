//! Three-valued logics of partial functions.
//!
//! A [`LogicConfig`] picks an equality kind, a connective family and a
//! quantifier family independently. Atoms are evaluated over a (possibly
//! punched) structure; non-denoting sides are handled by the equality kind.
//!
//! Connective families, with the order `F < U < T` where it matters:
//!
//! * Bochvar: any `U` operand gives `U`, otherwise classical.
//! * Kleene: `∧` is min and `∨` is max.
//! * McCarthy (left): the left operand is inspected first; `U` there gives
//!   `U`, otherwise it either decides or hands over to the right operand.
//! * McCarthy (right): the same with the operand roles swapped.
//!
//! In every family `¬` swaps `T`/`F` and fixes `U`, and `a ⟹ b` is `¬a ∨ b`.

use std::fmt;
use std::str::FromStr;

use crate::error::EvalError;
use crate::semantics::{compare, eval_partial, Env, PartialValue, StructureSpec};
use crate::syntax::{Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum TruthValue {
    F,
    U,
    T,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::T, TruthValue::F, TruthValue::U];

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::T
        } else {
            TruthValue::F
        }
    }

    pub fn is_classical(self) -> bool {
        self != TruthValue::U
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TruthValue::T => "T",
            TruthValue::F => "F",
            TruthValue::U => "U",
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl std::ops::Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        match self {
            TruthValue::T => TruthValue::F,
            TruthValue::F => TruthValue::T,
            TruthValue::U => TruthValue::U,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EqualityKind {
    Weak,
    Strong,
    Existential,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectiveFamily {
    Bochvar,
    Kleene,
    McCarthyLeft,
    McCarthyRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuantifierFamily {
    Bochvar,
    Kleene,
}

macro_rules! named {
    ($ty:ty { $($variant:ident => $name:literal),* $(,)? }) => {
        impl $ty {
            pub const ALL: &'static [$ty] = &[$(<$ty>::$variant),*];

            pub fn name(self) -> &'static str {
                match self { $(<$ty>::$variant => $name),* }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s.trim() {
                    $($name => Ok(<$ty>::$variant),)*
                    other => Err(format!("unknown {} `{other}`", stringify!($ty))),
                }
            }
        }
    };
}

named!(EqualityKind { Weak => "weak", Strong => "strong", Existential => "existential" });
named!(ConnectiveFamily {
    Bochvar => "bochvar",
    Kleene => "kleene",
    McCarthyLeft => "mccarthy-left",
    McCarthyRight => "mccarthy-right",
});
named!(QuantifierFamily { Bochvar => "bochvar", Kleene => "kleene" });

impl ConnectiveFamily {
    pub fn and(self, a: TruthValue, b: TruthValue) -> TruthValue {
        use TruthValue::*;
        match self {
            ConnectiveFamily::Bochvar => {
                if a == U || b == U {
                    U
                } else {
                    TruthValue::from_bool(a == T && b == T)
                }
            }
            ConnectiveFamily::Kleene => a.min(b),
            ConnectiveFamily::McCarthyLeft => match a {
                F => F,
                U => U,
                T => b,
            },
            ConnectiveFamily::McCarthyRight => ConnectiveFamily::McCarthyLeft.and(b, a),
        }
    }

    pub fn or(self, a: TruthValue, b: TruthValue) -> TruthValue {
        use TruthValue::*;
        match self {
            ConnectiveFamily::Bochvar => {
                if a == U || b == U {
                    U
                } else {
                    TruthValue::from_bool(a == T || b == T)
                }
            }
            ConnectiveFamily::Kleene => a.max(b),
            ConnectiveFamily::McCarthyLeft => match a {
                T => T,
                U => U,
                F => b,
            },
            ConnectiveFamily::McCarthyRight => ConnectiveFamily::McCarthyLeft.or(b, a),
        }
    }

    pub fn not(self, a: TruthValue) -> TruthValue {
        !a
    }

    pub fn implies(self, a: TruthValue, b: TruthValue) -> TruthValue {
        self.or(!a, b)
    }

    pub fn table(self) -> ConnectiveTable {
        ConnectiveTable::of(self)
    }
}

/// Full truth tables of one connective family, indexed in `T, F, U` order.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct ConnectiveTable {
    pub family: String,
    pub not: [TruthValue; 3],
    pub and: [[TruthValue; 3]; 3],
    pub or: [[TruthValue; 3]; 3],
    pub implies: [[TruthValue; 3]; 3],
}

impl ConnectiveTable {
    pub fn of(family: ConnectiveFamily) -> Self {
        let grid = |op: fn(ConnectiveFamily, TruthValue, TruthValue) -> TruthValue| {
            TruthValue::ALL.map(|a| TruthValue::ALL.map(|b| op(family, a, b)))
        };
        ConnectiveTable {
            family: family.name().to_string(),
            not: TruthValue::ALL.map(|a| family.not(a)),
            and: grid(ConnectiveFamily::and),
            or: grid(ConnectiveFamily::or),
            implies: grid(ConnectiveFamily::implies),
        }
    }
}

impl fmt::Display for ConnectiveTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family {}", self.family)?;
        writeln!(f, "not")?;
        for (i, a) in TruthValue::ALL.iter().enumerate() {
            writeln!(f, "  !{a} -> {}", self.not[i])?;
        }
        for (name, sym, grid) in [
            ("and", "&", &self.and),
            ("or", "|", &self.or),
            ("implies", "=>", &self.implies),
        ] {
            writeln!(f, "{name}")?;
            for (i, a) in TruthValue::ALL.iter().enumerate() {
                for (j, b) in TruthValue::ALL.iter().enumerate() {
                    writeln!(f, "  {a} {sym} {b} -> {}", grid[i][j])?;
                }
            }
        }
        Ok(())
    }
}

impl QuantifierFamily {
    /// Universal quantification over the instance values.
    pub fn forall(self, instances: &[TruthValue]) -> TruthValue {
        use TruthValue::*;
        let any = |v| instances.contains(&v);
        match self {
            QuantifierFamily::Kleene if any(F) => F,
            QuantifierFamily::Bochvar if any(U) => U,
            _ if any(U) => U,
            _ if any(F) => F,
            _ => T,
        }
    }

    pub fn exists(self, instances: &[TruthValue]) -> TruthValue {
        use TruthValue::*;
        let any = |v| instances.contains(&v);
        match self {
            QuantifierFamily::Kleene if any(T) => T,
            QuantifierFamily::Bochvar if any(U) => U,
            _ if any(U) => U,
            _ if any(T) => T,
            _ => F,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LogicConfig {
    pub equality: EqualityKind,
    pub connectives: ConnectiveFamily,
    pub quantifiers: QuantifierFamily,
}

impl LogicConfig {
    /// Weak equality, left-sequential McCarthy connectives, Bochvar quantifiers.
    pub const LPMD: LogicConfig = LogicConfig {
        equality: EqualityKind::Weak,
        connectives: ConnectiveFamily::McCarthyLeft,
        quantifiers: QuantifierFamily::Bochvar,
    };

    pub fn new(
        equality: EqualityKind,
        connectives: ConnectiveFamily,
        quantifiers: QuantifierFamily,
    ) -> Self {
        LogicConfig {
            equality,
            connectives,
            quantifiers,
        }
    }

    /// Every combination of the three selectors.
    pub fn all() -> Vec<LogicConfig> {
        let mut out = Vec::new();
        for &e in EqualityKind::ALL {
            for &c in ConnectiveFamily::ALL {
                for &q in QuantifierFamily::ALL {
                    out.push(LogicConfig::new(e, c, q));
                }
            }
        }
        out
    }
}

impl Default for LogicConfig {
    fn default() -> Self {
        LogicConfig::LPMD
    }
}

impl fmt::Display for LogicConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{},{}",
            self.equality, self.connectives, self.quantifiers
        )
    }
}

impl FromStr for LogicConfig {
    type Err = String;

    /// `lpmd` or `<equality>,<connectives>,<quantifiers>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "lpmd" {
            return Ok(LogicConfig::LPMD);
        }
        let parts: Vec<&str> = s.split(',').collect();
        match parts.as_slice() {
            [e, c, q] => Ok(LogicConfig::new(e.parse()?, c.parse()?, q.parse()?)),
            _ => Err(format!(
                "logic must be `lpmd` or `<equality>,<connectives>,<quantifiers>`, got `{s}`"
            )),
        }
    }
}

/// Truth value of `t = u` under the given equality kind.
pub fn eval_equality(
    t: &Term,
    u: &Term,
    kind: EqualityKind,
    env: &Env,
    s: &StructureSpec,
) -> Result<TruthValue, EvalError> {
    let a = eval_partial(t, env, s)?;
    let b = eval_partial(u, env, s)?;
    Ok(equality_of_values(&a, &b, kind))
}

/// Equality on already evaluated partial values.
pub fn equality_of_values(a: &PartialValue, b: &PartialValue, kind: EqualityKind) -> TruthValue {
    match (a, b) {
        (PartialValue::Defined(x), PartialValue::Defined(y)) => TruthValue::from_bool(x == y),
        _ => match kind {
            EqualityKind::Weak => TruthValue::U,
            EqualityKind::Strong => TruthValue::from_bool(a == b),
            EqualityKind::Existential => TruthValue::F,
        },
    }
}

fn eval_order(
    f: &Formula,
    a: &Term,
    b: &Term,
    kind: EqualityKind,
    env: &Env,
    s: &StructureSpec,
) -> Result<TruthValue, EvalError> {
    let x = eval_partial(a, env, s)?;
    let y = eval_partial(b, env, s)?;
    match (x, y) {
        (PartialValue::Defined(x), PartialValue::Defined(y)) => {
            let ord = compare(&x, &y, &s.carrier)?;
            Ok(TruthValue::from_bool(if matches!(f, Formula::Gt(..)) {
                ord.is_gt()
            } else {
                ord.is_lt()
            }))
        }
        // a non-denoting side: weak gives U, the other kinds give F
        _ => Ok(match kind {
            EqualityKind::Weak => TruthValue::U,
            EqualityKind::Strong | EqualityKind::Existential => TruthValue::F,
        }),
    }
}

/// Evaluates a formula. Quantifiers range over the carrier's elements, so
/// they need an enumerable carrier.
pub fn eval_formula(
    f: &Formula,
    cfg: &LogicConfig,
    env: &Env,
    s: &StructureSpec,
) -> Result<TruthValue, EvalError> {
    let conn = cfg.connectives;
    Ok(match f {
        Formula::Eq(a, b) => eval_equality(a, b, cfg.equality, env, s)?,
        Formula::Gt(a, b) | Formula::Lt(a, b) => eval_order(f, a, b, cfg.equality, env, s)?,
        Formula::Not(g) => conn.not(eval_formula(g, cfg, env, s)?),
        Formula::And(a, b) => {
            conn.and(eval_formula(a, cfg, env, s)?, eval_formula(b, cfg, env, s)?)
        }
        Formula::Or(a, b) => conn.or(eval_formula(a, cfg, env, s)?, eval_formula(b, cfg, env, s)?),
        Formula::Implies(a, b) => {
            conn.implies(eval_formula(a, cfg, env, s)?, eval_formula(b, cfg, env, s)?)
        }
        Formula::Forall(v, body) | Formula::Exists(v, body) => {
            let elements = s
                .carrier
                .elements()
                .ok_or_else(|| EvalError::QuantifierOverInfinite(v.clone()))?;
            let instances = elements
                .into_iter()
                .map(|e| eval_formula(body, cfg, &env.clone().with(v.clone(), e), s))
                .collect::<Result<Vec<_>, _>>()?;
            if matches!(f, Formula::Forall(..)) {
                cfg.quantifiers.forall(&instances)
            } else {
                cfg.quantifiers.exists(&instances)
            }
        }
    })
}

/// Outcome of the two-valued logic convention for a sentence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Usability {
    Usable(TruthValue),
    Unusable,
}

impl fmt::Display for Usability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Usability::Usable(v) => write!(f, "USABLE({v})"),
            Usability::Unusable => f.write_str("UNUSABLE"),
        }
    }
}

/// A sentence may be used only if its truth value is `T` or `F`.
pub fn classify_sentence(
    f: &Formula,
    cfg: &LogicConfig,
    s: &StructureSpec,
) -> Result<Usability, EvalError> {
    let free = f.free_vars();
    if !free.is_empty() {
        return Err(EvalError::NotClosed(free.into_iter().collect()));
    }
    Ok(match eval_formula(f, cfg, &Env::new(), s)? {
        TruthValue::U => Usability::Unusable,
        v => Usability::Usable(v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Carrier;
    use crate::semantics::Mode;
    use crate::syntax::{parse_formula, parse_term};
    use TruthValue::*;

    fn punch_div_all() -> StructureSpec {
        StructureSpec::new(Carrier::rationals(), Mode::PunchDivAll0)
    }

    fn eq_kind(text: &str, kind: EqualityKind) -> TruthValue {
        let (l, r) = text.split_once(" = ").unwrap();
        eval_equality(
            &parse_term(l).unwrap(),
            &parse_term(r).unwrap(),
            kind,
            &Env::new(),
            &punch_div_all(),
        )
        .unwrap()
    }

    fn eval(text: &str, cfg: LogicConfig, s: &StructureSpec) -> TruthValue {
        eval_formula(&parse_formula(text).unwrap(), &cfg, &Env::new(), s).unwrap()
    }

    #[test]
    fn equality_kinds() {
        assert_eq!(eq_kind("1/0 = 1/0 + 1", EqualityKind::Strong), T);
        assert_eq!(eq_kind("1/0 = 1/0", EqualityKind::Existential), F);
        assert_eq!(eq_kind("1/0 = 1/0", EqualityKind::Weak), U);
        assert_eq!(eq_kind("1/0 = 1", EqualityKind::Strong), F);
        for &k in EqualityKind::ALL {
            assert_eq!(eq_kind("1 + 1 = 2", k), T);
            assert_eq!(eq_kind("1 + 1 = 3", k), F);
        }
    }

    #[test]
    fn named_table_entries() {
        assert_eq!(ConnectiveFamily::McCarthyLeft.or(U, T), U);
        assert_eq!(ConnectiveFamily::McCarthyLeft.or(T, U), T);
        assert_eq!(ConnectiveFamily::Kleene.or(U, T), T);
        assert_eq!(ConnectiveFamily::Bochvar.implies(F, U), U);
        assert_eq!(ConnectiveFamily::McCarthyRight.or(U, T), T);
        assert_eq!(ConnectiveFamily::McCarthyRight.or(T, U), U);
        assert_eq!(ConnectiveFamily::McCarthyLeft.implies(F, U), T);
    }

    #[test]
    fn connective_examples_from_partial_meadows() {
        let s = punch_div_all();
        assert_eq!(eval("0 != 0 => 0/0 = 1", LogicConfig::LPMD, &s), T);
        assert_eq!(eval("0 = 0 | 0/0 = 1", LogicConfig::LPMD, &s), T);
        assert_eq!(eval("0/0 = 1 | 0 = 0", LogicConfig::LPMD, &s), U);
        let bochvar = LogicConfig::new(
            EqualityKind::Weak,
            ConnectiveFamily::Bochvar,
            QuantifierFamily::Bochvar,
        );
        assert_eq!(eval("0 != 0 => 0/0 = 1", bochvar, &s), U);
        let kleene = LogicConfig::new(
            EqualityKind::Weak,
            ConnectiveFamily::Kleene,
            QuantifierFamily::Kleene,
        );
        assert_eq!(eval("0/0 = 1 | 0 = 0", kleene, &s), T);
    }

    #[test]
    fn quantifier_examples() {
        let gf7 = StructureSpec::new(Carrier::prime_field(7).unwrap(), Mode::PunchDivAll0);
        let kk = LogicConfig::new(
            EqualityKind::Weak,
            ConnectiveFamily::Kleene,
            QuantifierFamily::Kleene,
        );
        let kb = LogicConfig::new(
            EqualityKind::Weak,
            ConnectiveFamily::Kleene,
            QuantifierFamily::Bochvar,
        );
        assert_eq!(eval("forall x. x/x = 1", kk, &gf7), U);
        assert_eq!(eval("exists x. x/x = 1", kk, &gf7), T);
        assert_eq!(eval("forall x. x/x = 1", kb, &gf7), U);
        assert_eq!(eval("exists x. x/x = 1", kb, &gf7), U);
        assert_eq!(
            eval("forall x. x != 0 => x/x = 1", LogicConfig::LPMD, &gf7),
            T
        );

        let gf3 = StructureSpec::new(Carrier::prime_field(3).unwrap(), Mode::PunchDivAll0);
        assert_eq!(eval("forall x. x/x = 0", kk, &gf3), F);
        assert_eq!(eval("forall x. x/x = 0", kb, &gf3), U);

        let inv7 = StructureSpec::new(Carrier::prime_field(7).unwrap(), Mode::PunchInv0);
        assert_eq!(
            eval("forall x. x != 0 => x*x^-1 = 1", LogicConfig::LPMD, &inv7),
            T
        );
    }

    #[test]
    fn quantifiers_need_enumerable_carrier() {
        let f = parse_formula("forall x. x = x").unwrap();
        assert_eq!(
            eval_formula(&f, &LogicConfig::LPMD, &Env::new(), &punch_div_all()),
            Err(EvalError::QuantifierOverInfinite("x".into()))
        );
        let probe = StructureSpec::new("probe:-1,0,1/2".parse().unwrap(), Mode::PunchDivAll0);
        assert_eq!(eval("exists x. x/x = 1", LogicConfig::LPMD, &probe), U);
        assert_eq!(eval("forall x. x*x > x - 1", LogicConfig::LPMD, &probe), T);
    }

    #[test]
    fn ordering_atoms_follow_equality_kind() {
        let s = punch_div_all();
        let with = |e| LogicConfig::new(e, ConnectiveFamily::Kleene, QuantifierFamily::Kleene);
        assert_eq!(eval("1/0 > 0", with(EqualityKind::Weak), &s), U);
        assert_eq!(eval("1/0 > 0", with(EqualityKind::Strong), &s), F);
        assert_eq!(eval("1/0 < 0", with(EqualityKind::Existential), &s), F);
        assert_eq!(eval("2 > 1", with(EqualityKind::Weak), &s), T);
    }

    #[test]
    fn sentence_classification() {
        let s = punch_div_all();
        let classify =
            |t: &str| classify_sentence(&parse_formula(t).unwrap(), &LogicConfig::LPMD, &s);
        assert_eq!(classify("0 != 0 => 0/0 = 1").unwrap(), Usability::Usable(T));
        assert_eq!(classify("0/0 = 1 | 0 = 0").unwrap(), Usability::Unusable);
        assert_eq!(classify("1 = 1").unwrap(), Usability::Usable(T));
        assert_eq!(classify("1 = 0").unwrap(), Usability::Usable(F));
        assert!(matches!(classify("x = 1"), Err(EvalError::NotClosed(_))));
        assert_eq!(Usability::Usable(T).to_string(), "USABLE(T)");
    }

    #[test]
    fn config_strings() {
        assert_eq!("lpmd".parse::<LogicConfig>().unwrap(), LogicConfig::LPMD);
        assert_eq!(
            "weak,mccarthy-left,bochvar".parse::<LogicConfig>().unwrap(),
            LogicConfig::LPMD
        );
        for cfg in LogicConfig::all() {
            assert_eq!(cfg.to_string().parse::<LogicConfig>().unwrap(), cfg);
        }
        assert_eq!(LogicConfig::all().len(), 24);
        assert!("weak,kleene".parse::<LogicConfig>().is_err());
        assert!("weak,lukasiewicz,kleene".parse::<LogicConfig>().is_err());
    }

    #[test]
    fn table_rendering() {
        let text = ConnectiveFamily::McCarthyLeft.table().to_string();
        assert!(text.contains("  U | T -> U\n"));
        assert!(text.contains("  !U -> U\n"));
    }
}
