//! Linting statement corpora against the conventions that restrict the use
//! of inverse and division.
//!
//! * inversive: `q⁻¹` is not used with `q = 0`;
//! * division: `p / q` is not used with `q = 0`;
//! * liberal division: `p / q` is not used with `q = 0` if `p ≠ 0`.
//!
//! Compliance is undecidable, so every occurrence gets one of three verdicts.
//! A violation carries a verified witness, compliance carries a certificate,
//! and anything else is unknown. Under the inversive convention `p / q` is
//! read as `p · q⁻¹`; under the division conventions `q⁻¹` is read as `1 / q`.

mod certificate;
mod occurrence;
mod witness;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use certificate::{
    fold_constant, nonzero_certificate, nonzero_certificate_with_deps, normalize, Certificate,
    CertificateKind, NonzeroFact,
};
pub use occurrence::{collect_occurrences, collect_term_occurrences, Occurrence, Operator};
pub use witness::{find_zero_witness, SearchBudget};

use crate::error::ParseError;
use crate::semantics::Env;
use crate::syntax::{parse_formula, Formula, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Inversive,
    Division,
    LiberalDivision,
}

impl Convention {
    pub const ALL: [Convention; 3] = [
        Convention::Inversive,
        Convention::Division,
        Convention::LiberalDivision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Convention::Inversive => "inversive",
            Convention::Division => "division",
            Convention::LiberalDivision => "liberal-division",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Convention::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown convention `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatementKind {
    Hypothesis,
    Claim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement {
    pub index: usize,
    pub kind: StatementKind,
    pub formula: Formula,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Compliant(CertificateKind),
    Violation(Env),
    Unknown(String),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Compliant(_) => "COMPLIANT",
            Outcome::Violation(_) => "VIOLATION",
            Outcome::Unknown(_) => "UNKNOWN",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            Outcome::Compliant(c) => c.to_string(),
            Outcome::Violation(env) => env.to_string(),
            Outcome::Unknown(reason) => reason.clone(),
        }
    }
}

/// The verdict for one occurrence of `÷` or `⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub statement: usize,
    pub position: usize,
    pub operator: Operator,
    pub numerator: Option<Term>,
    pub guarded: Term,
    pub outcome: Outcome,
}

pub const SAME_STATEMENT: &str = "same-statement hypothesis";
pub const UNDECIDED: &str = "no certificate or witness within budget";

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "statement={} pos={} guarded={} verdict={} detail={}",
            self.statement,
            self.position,
            self.guarded,
            self.outcome.label(),
            self.outcome.detail()
        )
    }
}

impl serde::Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Verdict", 6)?;
        s.serialize_field("statement", &self.statement)?;
        s.serialize_field("pos", &self.position)?;
        s.serialize_field("guarded", &self.guarded.to_string())?;
        s.serialize_field("verdict", self.outcome.label())?;
        s.serialize_field("detail", &self.outcome.detail())?;
        if let Outcome::Violation(env) = &self.outcome {
            s.serialize_field("witness", env)?;
        } else {
            s.skip_field("witness")?;
        }
        s.end()
    }
}

/// Nonzero facts justified by a hypothesis: in `t / q = c` or `t · q⁻¹ = c`
/// with `c` a nonzero constant, `q` cannot be zero because the left side
/// would then be zero. A hypothesis `t != 0` records `t` directly.
pub fn hypothesis_facts(f: &Formula) -> Vec<Term> {
    let mut out = Vec::new();
    let mut conjuncts = vec![f];
    while let Some(g) = conjuncts.pop() {
        match g {
            Formula::And(a, b) => {
                conjuncts.push(b);
                conjuncts.push(a);
            }
            Formula::Eq(l, r) => {
                for (side, other) in [(l, r), (r, l)] {
                    if fold_constant(other).is_some_and(|c| !c.is_zero()) {
                        out.extend(divisor_of(side));
                    }
                }
            }
            Formula::Not(inner) => {
                if let Formula::Eq(l, r) = inner.as_ref() {
                    for (side, other) in [(l, r), (r, l)] {
                        if fold_constant(other).is_some_and(|c| c.is_zero()) {
                            out.push(side.clone());
                        }
                    }
                }
            }
            _ => {}
        }
    }
    out
}

fn divisor_of(t: &Term) -> Option<Term> {
    match t {
        Term::Div(_, q) | Term::Inv(q) => Some(q.as_ref().clone()),
        Term::Mul(a, b) => match (a.as_ref(), b.as_ref()) {
            (_, Term::Inv(q)) | (Term::Inv(q), _) => Some(q.as_ref().clone()),
            _ => None,
        },
        _ => None,
    }
}

fn vars_of(t: &Term) -> BTreeSet<String> {
    t.free_vars()
}

/// Lints statements in document order. Hypothesis facts count from their own
/// statement on; a certificate that relies on the statement being linted
/// yields `Unknown`.
pub fn lint(corpus: &[Statement], convention: Convention) -> Vec<Verdict> {
    lint_with_budget(corpus, convention, &SearchBudget::default())
}

pub fn lint_with_budget(
    corpus: &[Statement],
    convention: Convention,
    budget: &SearchBudget,
) -> Vec<Verdict> {
    let mut facts: Vec<NonzeroFact> = Vec::new();
    let mut verdicts = Vec::new();
    for stmt in corpus {
        if stmt.kind == StatementKind::Hypothesis {
            for t in hypothesis_facts(&stmt.formula) {
                facts.push(NonzeroFact::new(&t, stmt.index));
            }
        }
        for occ in collect_occurrences(&stmt.formula) {
            let outcome = judge(&occ, stmt.index, &facts, convention, budget);
            verdicts.push(Verdict {
                statement: stmt.index,
                position: occ.position,
                operator: occ.operator,
                numerator: occ.numerator,
                guarded: occ.guarded,
                outcome,
            });
        }
    }
    verdicts
}

fn judge(
    occ: &Occurrence,
    statement: usize,
    facts: &[NonzeroFact],
    convention: Convention,
    budget: &SearchBudget,
) -> Outcome {
    // facts about a name do not transfer to a quantified variable of that name
    let applicable: Vec<NonzeroFact> = facts
        .iter()
        .filter(|f| vars_of(&f.term).is_disjoint(&occ.bound))
        .cloned()
        .collect();
    let liberal = convention == Convention::LiberalDivision;
    let numerator = match (convention, occ.operator) {
        (Convention::Inversive, _) => None,
        (_, Operator::Div) => occ.numerator.clone(),
        (_, Operator::Inv) => Some(Term::One),
    };

    let mut vars = vars_of(&occ.guarded);
    if liberal {
        if let Some(n) = &numerator {
            vars.extend(vars_of(n));
        }
    }
    // pull in every fact that constrains the searched variables
    loop {
        let before = vars.len();
        for f in &applicable {
            let fv = vars_of(&f.term);
            if !fv.is_disjoint(&vars) {
                vars.extend(fv);
            }
        }
        if vars.len() == before {
            break;
        }
    }
    let constraining: Vec<&NonzeroFact> = applicable
        .iter()
        .filter(|f| vars_of(&f.term).is_subset(&vars))
        .collect();
    let vars: Vec<String> = vars.into_iter().collect();
    let accept = |env: &Env| {
        witness::is_zero_at(&occ.guarded, env)
            && constraining
                .iter()
                .all(|f| witness::is_nonzero_at(&f.term, env))
            && (!liberal
                || numerator
                    .as_ref()
                    .is_none_or(|n| witness::is_nonzero_at(n, env)))
    };
    if let Some(env) = witness::search(&vars, budget, &accept) {
        return Outcome::Violation(env);
    }

    if let Some(cert) = nonzero_certificate_with_deps(&occ.guarded, &applicable) {
        if cert.depends_on.contains(&statement) {
            return Outcome::Unknown(SAME_STATEMENT.to_string());
        }
        return Outcome::Compliant(cert.kind);
    }
    if liberal {
        if let Some(n) = &numerator {
            if fold_constant(n).is_some_and(|c| c.is_zero()) {
                return Outcome::Compliant(CertificateKind::ZeroNumerator);
            }
        }
    }
    Outcome::Unknown(UNDECIDED.to_string())
}

/// 4 if any violation, else 3 if any unknown, else 0.
pub fn exit_code(verdicts: &[Verdict]) -> i32 {
    if verdicts
        .iter()
        .any(|v| matches!(v.outcome, Outcome::Violation(_)))
    {
        4
    } else if verdicts
        .iter()
        .any(|v| matches!(v.outcome, Outcome::Unknown(_)))
    {
        3
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CorpusError {
    #[error("line {line}: expected `hyp:` or `claim:`")]
    MissingKind { line: usize },
    #[error("line {line}: {source}")]
    Syntax {
        line: usize,
        #[source]
        source: ParseError,
    },
}

/// Reads the corpus format: one `hyp: <formula>` or `claim: <formula>` per
/// line, `#` starts a comment, blank lines are skipped. Lines are 1-based
/// in errors.
pub fn parse_corpus(text: &str) -> Result<Vec<Statement>, CorpusError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (kind, body) = if let Some(rest) = line.strip_prefix("hyp:") {
            (StatementKind::Hypothesis, rest)
        } else if let Some(rest) = line.strip_prefix("claim:") {
            (StatementKind::Claim, rest)
        } else {
            return Err(CorpusError::MissingKind { line: n + 1 });
        };
        let formula = parse_formula(body).map_err(|source| CorpusError::Syntax {
            line: n + 1,
            source,
        })?;
        out.push(Statement {
            index: out.len(),
            kind,
            formula,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_term;

    fn run(corpus: &str, convention: Convention) -> Vec<Verdict> {
        lint(&parse_corpus(corpus).unwrap(), convention)
    }

    #[test]
    fn one_over_zero_is_a_violation() {
        let v = run("claim: 1/0 = 0", Convention::Division);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].outcome, Outcome::Violation(Env::new()));
        assert_eq!(
            v[0].to_string(),
            "statement=0 pos=0 guarded=0 verdict=VIOLATION detail={}"
        );
        assert_eq!(exit_code(&v), 4);
    }

    #[test]
    fn sum_of_squares_complies() {
        let v = run("claim: forall x. (x^2+1)/(x^2+1) = 1", Convention::Division);
        assert_eq!(
            v[0].outcome,
            Outcome::Compliant(CertificateKind::OnePlusSumOfSquares)
        );
        assert_eq!(exit_code(&v), 0);
    }

    #[test]
    fn theorem_with_hypothesis() {
        let v = run(
            "hyp: p/q = 7\nclaim: q^2 + p/q - 7 > 0",
            Convention::Division,
        );
        assert_eq!(v[0].outcome, Outcome::Unknown(SAME_STATEMENT.into()));
        assert_eq!(
            v[1].outcome,
            Outcome::Compliant(CertificateKind::HypothesisDerived(0))
        );
        assert_eq!(exit_code(&v), 3);
    }

    #[test]
    fn liberal_convention_excepts_zero_numerator() {
        let v = run("claim: 0/0 = 0", Convention::LiberalDivision);
        assert_eq!(
            v[0].outcome,
            Outcome::Compliant(CertificateKind::ZeroNumerator)
        );
        let v = run("claim: 0/0 = 0", Convention::Division);
        assert!(matches!(v[0].outcome, Outcome::Violation(_)));
        // a dividend that can be nonzero does not help
        let v = run("claim: x/0 = 0", Convention::LiberalDivision);
        let Outcome::Violation(env) = &v[0].outcome else {
            panic!("{:?}", v[0].outcome)
        };
        assert!(!env.get("x").unwrap().is_zero());
    }

    #[test]
    fn inversive_convention() {
        let v = run("claim: 0^-1 = 0", Convention::Inversive);
        assert!(matches!(v[0].outcome, Outcome::Violation(_)));
        let v = run("claim: (x^2 + 1)^-1 > 0", Convention::Inversive);
        assert_eq!(
            v[0].outcome,
            Outcome::Compliant(CertificateKind::OnePlusSumOfSquares)
        );
        // division is read through its inverse
        let v = run("claim: 0/0 = 0", Convention::Inversive);
        assert!(matches!(v[0].outcome, Outcome::Violation(_)));
        // and inverse through division under the division conventions
        let v = run("claim: 0^-1 = 0", Convention::LiberalDivision);
        assert!(matches!(v[0].outcome, Outcome::Violation(_)));
    }

    #[test]
    fn facts_only_reach_forward_and_respect_binders() {
        let corpus = "claim: 1/q = 1/q\nhyp: 1/q = 2\nclaim: forall q. 1/q = 1/q";
        let v = run(corpus, Convention::Division);
        assert!(matches!(v[0].outcome, Outcome::Violation(_)));
        assert_eq!(v[2].outcome, Outcome::Unknown(SAME_STATEMENT.into()));
        assert!(matches!(v[3].outcome, Outcome::Violation(_)));
    }

    #[test]
    fn disequation_hypothesis() {
        let v = run(
            "hyp: x - 1 != 0\nclaim: 1/(x - 1) = 1/(x - 1)",
            Convention::Division,
        );
        assert!(v
            .iter()
            .all(|v| v.outcome == Outcome::Compliant(CertificateKind::HypothesisDerived(0))));
    }

    #[test]
    fn undecided_occurrence() {
        let v = run("claim: 1/(x^2 - 2) = 1", Convention::Division);
        assert_eq!(v[0].outcome, Outcome::Unknown(UNDECIDED.into()));
    }

    #[test]
    fn fact_extraction() {
        let f = parse_formula("p/q = 7 & a*b^-1 = -2 & 0 = c^-1 & d/e = 0").unwrap();
        let got: Vec<String> = hypothesis_facts(&f).iter().map(|t| t.to_string()).collect();
        assert_eq!(got, ["q", "b"]);
        assert!(hypothesis_facts(&parse_formula("1 = c^-1").unwrap())
            .contains(&parse_term("c").unwrap()));
    }

    #[test]
    fn corpus_parsing() {
        let text = "# theorem\nhyp: p/q = 7   # assumption\n\nclaim: q != 0\n";
        let c = parse_corpus(text).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].kind, StatementKind::Hypothesis);
        assert_eq!(c[1].index, 1);
        assert_eq!(
            parse_corpus("lemma: x = x"),
            Err(CorpusError::MissingKind { line: 1 })
        );
        assert!(matches!(
            parse_corpus("claim: x = x\nclaim: x =").unwrap_err(),
            CorpusError::Syntax { line: 2, .. }
        ));
    }
}
