use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use meadow::laws::catalog;
use meadow::lint::{exit_code, lint, parse_corpus, Convention};
use meadow::semantics::Law;
use meadow::{
    classify_sentence, eval_formula, eval_partial, parse_formula, parse_term, verify_law, Carrier,
    ConnectiveFamily, ConnectiveTable, Env, EvalError, LogicConfig, Mode, PartialValue, Rational,
    Strategy, StructureSpec, TruthValue, Usability,
};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_EVAL: u8 = 2;
const EXIT_THIRD: u8 = 3;
const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "meadow",
    version,
    about = "Komori fields of rational numbers: evaluation, logic, axioms and linting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a term
    Eval {
        term: String,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        bindings: BindingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate a formula in a logic of partial functions
    Logic {
        formula: String,
        #[command(flatten)]
        structure: StructureArgs,
        #[command(flatten)]
        bindings: BindingArgs,
        /// `<equality>,<connectives>,<quantifiers>` or `lpmd`
        #[arg(long, default_value = "lpmd", value_parser = parse_logic)]
        logic: LogicConfig,
        /// Apply the two-valued logic convention to a sentence
        #[arg(long)]
        classify: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the axiom catalog
    Axioms {
        #[command(flatten)]
        structure: StructureArgs,
        /// Random samples per law on infinite carriers
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Additional law to check, as a formula
        #[arg(long)]
        extra: Vec<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print connective truth tables
    Tables {
        /// One family; all four when omitted
        #[arg(value_parser = parse_family)]
        family: Option<ConnectiveFamily>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check a corpus against a division convention
    Lint {
        corpus: PathBuf,
        #[arg(long, default_value = "division", value_parser = parse_convention)]
        convention: Convention,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct StructureArgs {
    /// `rationals`, `gf<p>` or `probe:<q>,<q>,...`
    #[arg(long, default_value = "rationals", value_parser = parse_carrier)]
    carrier: Carrier,
    /// `total`, `punch-inv0`, `punch-div-all` or `punch-div-nonzero`
    #[arg(long, default_value = "total", value_parser = parse_mode)]
    mode: Mode,
}

impl StructureArgs {
    fn spec(&self) -> StructureSpec {
        StructureSpec::new(self.carrier.clone(), self.mode)
    }
}

#[derive(Args, Debug)]
struct BindingArgs {
    /// Bind a variable, e.g. `-b x=2/3`
    #[arg(short = 'b', long = "bind", value_parser = parse_binding)]
    bind: Vec<(String, Rational)>,
}

impl BindingArgs {
    fn env(&self, carrier: &Carrier) -> Result<Env, Failure> {
        let mut env = Env::new();
        for (name, value) in &self.bind {
            let e = carrier
                .lift(value)
                .map_err(|e| Failure::usage(format!("binding {name}={value}: {e}")))?;
            env.bind(name.clone(), e);
        }
        Ok(env)
    }
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_carrier(s: &str) -> Result<Carrier, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_logic(s: &str) -> Result<LogicConfig, String> {
    s.parse()
}

fn parse_family(s: &str) -> Result<ConnectiveFamily, String> {
    s.parse()
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse()
}

fn parse_binding(s: &str) -> Result<(String, Rational), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got `{s}`"))?;
    let value = value.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((name.trim().to_string(), value))
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<meadow::ParseError> for Failure {
    fn from(e: meadow::ParseError) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        Failure {
            code: EXIT_EVAL,
            message: e.to_string(),
        }
    }
}

struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn run(command: Command) -> Result<(Output, Format), Failure> {
    match command {
        Command::Eval {
            term,
            structure,
            bindings,
            output,
        } => {
            let t = parse_term(&term)?;
            let env = bindings.env(&structure.carrier)?;
            let value = eval_partial(&t, &env, &structure.spec())?;
            let (text, code) = match &value {
                PartialValue::Defined(e) => (e.to_string(), EXIT_OK),
                PartialValue::Undefined => ("UNDEFINED".to_string(), EXIT_THIRD),
            };
            let json = json!({
                "term": t.to_string(),
                "defined": value.is_defined(),
                "value": text,
            });
            Ok((Output { text, json, code }, output.format))
        }
        Command::Logic {
            formula,
            structure,
            bindings,
            logic,
            classify,
            output,
        } => {
            let f = parse_formula(&formula)?;
            let spec = structure.spec();
            let env = bindings.env(&structure.carrier)?;
            let value = eval_formula(&f, &logic, &env, &spec)?;
            let code = if value == TruthValue::U {
                EXIT_THIRD
            } else {
                EXIT_OK
            };
            let mut json = json!({
                "formula": f.to_string(),
                "logic": logic.to_string(),
                "value": value.to_string(),
            });
            let text = if classify {
                let usability: Usability = classify_sentence(&f, &logic, &spec)?;
                json["classification"] = json!(usability.to_string());
                usability.to_string()
            } else {
                value.to_string()
            };
            Ok((Output { text, json, code }, output.format))
        }
        Command::Axioms {
            structure,
            samples,
            seed,
            extra,
            output,
        } => {
            if structure.mode != Mode::Total {
                return Err(Failure::usage(
                    "axioms are checked in total structures only",
                ));
            }
            let mut laws = catalog();
            for (i, text) in extra.iter().enumerate() {
                laws.push(Law::new(format!("extra-{i}"), parse_formula(text)?));
            }
            let strategy = if structure.carrier.is_enumerable() {
                Strategy::Exhaustive
            } else {
                Strategy::RandomSample { samples, seed }
            };
            let spec = structure.spec();
            let mut lines = Vec::new();
            let mut reports = Vec::new();
            let mut all_pass = true;
            for law in &laws {
                let report = verify_law(law, &spec, strategy)?;
                all_pass &= report.passed;
                lines.push(report.to_string());
                let mut entry = serde_json::to_value(&report).expect("report serializes");
                entry["name"] = json!(law.name);
                reports.push(entry);
            }
            let code = if all_pass {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            let json = json!({
                "carrier": structure.carrier.to_string(),
                "passed": all_pass,
                "reports": reports,
            });
            Ok((
                Output {
                    text: lines.join("\n"),
                    json,
                    code,
                },
                output.format,
            ))
        }
        Command::Tables { family, output } => {
            let families: Vec<ConnectiveFamily> = match family {
                Some(f) => vec![f],
                None => ConnectiveFamily::ALL.to_vec(),
            };
            let tables: Vec<ConnectiveTable> = families.into_iter().map(|f| f.table()).collect();
            let text = tables
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json = serde_json::to_value(&tables).expect("tables serialize");
            Ok((
                Output {
                    text: text.trim_end().to_string(),
                    json,
                    code: EXIT_OK,
                },
                output.format,
            ))
        }
        Command::Lint {
            corpus,
            convention,
            output,
        } => {
            let text = fs::read_to_string(&corpus)
                .map_err(|e| Failure::usage(format!("{}: {e}", corpus.display())))?;
            let statements = parse_corpus(&text).map_err(|e| Failure::usage(e.to_string()))?;
            let verdicts = lint(&statements, convention);
            let code = exit_code(&verdicts) as u8;
            let json = json!({
                "convention": convention.to_string(),
                "verdicts": verdicts,
            });
            let text = verdicts
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Ok((Output { text, json, code }, output.format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok((out, format)) => {
            let body = match format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json output"),
            };
            let mut stdout = io::stdout().lock();
            if !body.is_empty() {
                // a closed pipe is not an error of the command
                let _ = writeln!(stdout, "{body}");
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
