//! The `iafrel` command line. Every command reads a frame in the text
//! format from a file or standard input and writes JSON to standard output.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{ArgAction, Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::af::{extensions, verify, ArgSet, ArgumentId, Semantics};
use crate::diff::{diff_run, gadget_run, DiffConfig, GadgetConfig};
use crate::error::{Error, Result};
use crate::format::{emit_iaf, parse_iaf_with, ParseOptions};
use crate::generate::{emit_generated, generate, GeneratorParams};
use crate::iaf::{Action, Iaf, UncertainElement};
use crate::reductions::{pi2sat_check, pi2sat_to_iaf, to_atiaf, QbfInstance};
use crate::relevance::{relevance_report, strongly_relevant, RelevanceReport, ReportMode};
use crate::verification::{necver, posver, stability_status, Method, VerificationStatus};
use crate::Cap;

#[derive(Parser, Debug)]
#[command(
    name = "iafrel",
    version,
    about = "Relevance for verification in incomplete argumentation frameworks"
)]
struct Cli {
    /// Largest number of uncertain elements (or arguments) enumerated exhaustively.
    #[arg(long, global = true, default_value_t = 20)]
    cap: usize,
    /// Accept argument names with the reserved `__aux_` prefix.
    #[arg(long, global = true)]
    allow_reserved: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Frame file; standard input when omitted or `-`.
    file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Query {
    #[arg(long)]
    sem: Semantics,
    /// Comma-separated argument names; empty for the empty set.
    #[arg(long, default_value = "")]
    set: String,
    #[command(flatten)]
    input: Input,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a frame and print its canonical form.
    Parse(Input),
    /// List the extensions of the certain part of a frame.
    Extensions {
        #[arg(long)]
        sem: Semantics,
        #[command(flatten)]
        input: Input,
    },
    /// Is the set an extension of the certain part of the frame?
    Verify(Query),
    Posver {
        #[command(flatten)]
        query: Query,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    Necver {
        #[command(flatten)]
        query: Query,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    Stability(Query),
    /// Relevance report for every uncertain element.
    Relevance {
        #[command(flatten)]
        query: Query,
        #[arg(long, action = ArgAction::Set)]
        status: bool,
        #[arg(long, default_value = "auto")]
        method: ReportMode,
        /// Print a table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Strong relevance of one element, or of every element.
    StrongRelevance {
        #[command(flatten)]
        query: Query,
        #[arg(long, action = ArgAction::Set)]
        status: bool,
        /// An argument name or an attack `(a,b)`.
        #[arg(long)]
        element: Option<String>,
        #[arg(long, value_parser = parse_action, requires = "element")]
        action: Option<Action>,
    },
    /// Replace uncertain arguments by uncertain attacks from a fresh argument.
    ToAtiaf(Input),
    /// Print a random frame.
    Gen {
        #[arg(long, default_value_t = 6)]
        n_args: usize,
        #[arg(long, default_value_t = 0.2)]
        p_uncertain_arg: f64,
        #[arg(long, default_value_t = 0.3)]
        p_att: f64,
        #[arg(long, default_value_t = 0.3)]
        p_uncertain_att: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        no_self_attacks: bool,
    },
    /// Differential test of characterizations against enumeration.
    Diff {
        #[arg(long, default_value_t = 300)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        max_args: usize,
        #[arg(long, default_value_t = 2)]
        max_uncertain_args: usize,
        #[arg(long, default_value_t = 4)]
        max_uncertain_attacks: usize,
        /// Comma-separated semantics.
        #[arg(long, default_value = "ad,st,co,gr,pr", value_delimiter = ',')]
        sem: Vec<Semantics>,
        /// Comma-separated statuses.
        #[arg(long, default_value = "true,false", value_delimiter = ',')]
        status: Vec<bool>,
        /// Also run the gadget equivalences.
        #[arg(long)]
        gadgets: bool,
    },
    /// Translate a `p pi2` formula from standard input into a frame.
    Sat2iaf {
        /// Instead of the frame, print the formula's truth and the reduction's answers.
        #[arg(long)]
        check: bool,
    },
}

fn parse_action(s: &str) -> std::result::Result<Action, String> {
    match s {
        "add" | "addition" => Ok(Action::Addition),
        "rem" | "remove" | "removal" => Ok(Action::Removal),
        other => Err(format!("unknown action `{other}` (expected add or rem)")),
    }
}

fn parse_set(text: &str) -> Result<ArgSet> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(ArgumentId::new)
        .collect()
}

fn parse_element(text: &str) -> Result<UncertainElement> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::InvalidParameter(format!("attack `{text}` must be (a,b)")))?;
        Ok(UncertainElement::Att((
            ArgumentId::new(a)?,
            ArgumentId::new(b)?,
        )))
    } else {
        Ok(UncertainElement::Arg(ArgumentId::new(&t)?))
    }
}

fn names(s: &ArgSet) -> Value {
    json!(s.iter().map(|a| a.as_str()).collect::<Vec<_>>())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    opts: ParseOptions,
}

impl Io<'_> {
    fn text(&mut self, input: &Input) -> Result<String> {
        match &input.file {
            Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
                .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", p.display()))),
            _ => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| {
                    Error::InvalidParameter(format!("cannot read standard input: {e}"))
                })?;
                Ok(s)
            }
        }
    }

    fn frame(&mut self, input: &Input) -> Result<Iaf> {
        let text = self.text(input)?;
        parse_iaf_with(&text, self.opts)
    }
}

pub fn report_json(r: &RelevanceReport) -> Value {
    json!({
        "query": names(&r.query),
        "semantics": r.status.semantics.short_name(),
        "status": r.status.value,
        "stability": r.stability.as_str(),
        "elements": r.elements,
    })
}

enum Output {
    Json(Value),
    Text(String),
    /// Output together with a non-zero exit code.
    Failed(Value, i32),
}

fn execute(cli: Cli, io: &mut Io<'_>) -> Result<Output> {
    let cap = Cap(cli.cap);
    let out = match cli.command {
        Command::Parse(input) => Output::Text(emit_iaf(&io.frame(&input)?)),
        Command::Extensions { sem, input } => {
            let af = io.frame(&input)?.cert();
            let exts: Vec<Value> = extensions(&af, sem, cap)?.iter().map(names).collect();
            Output::Json(json!({ "semantics": sem.short_name(), "extensions": exts }))
        }
        Command::Verify(q) => {
            let af = io.frame(&q.input)?.cert();
            let s = parse_set(&q.set)?;
            let holds = verify(&af, &s, q.sem, cap)?;
            Output::Json(
                json!({ "query": names(&s), "semantics": q.sem.short_name(), "holds": holds }),
            )
        }
        Command::Posver { query, method } => verification(io, &query, method, false, cap)?,
        Command::Necver { query, method } => verification(io, &query, method, true, cap)?,
        Command::Stability(q) => {
            let iaf = io.frame(&q.input)?;
            let s = parse_set(&q.set)?;
            let st = stability_status(&iaf, &s, q.sem, cap)?;
            Output::Json(
                json!({ "query": names(&s), "semantics": q.sem.short_name(), "stability": st.as_str() }),
            )
        }
        Command::Relevance {
            query,
            status,
            method,
            pretty,
        } => {
            let iaf = io.frame(&query.input)?;
            let s = parse_set(&query.set)?;
            let r = relevance_report(
                &iaf,
                &s,
                VerificationStatus::new(query.sem, status),
                method,
                cap,
            )?;
            if pretty {
                Output::Text(r.to_table())
            } else {
                Output::Json(report_json(&r))
            }
        }
        Command::StrongRelevance {
            query,
            status,
            element,
            action,
        } => {
            let iaf = io.frame(&query.input)?;
            let s = parse_set(&query.set)?;
            let j = VerificationStatus::new(query.sem, status);
            let head = json!({ "query": names(&s), "semantics": query.sem.short_name(), "status": status });
            let mut obj = head.as_object().cloned().expect("object");
            if let Some(e) = element {
                let e = parse_element(&e)?;
                let actions = match action {
                    Some(a) => vec![a],
                    None => vec![Action::Addition, Action::Removal],
                };
                obj.insert("element".into(), json!(e.to_string()));
                for a in actions {
                    let key = if a == Action::Addition {
                        "strongly_add"
                    } else {
                        "strongly_rem"
                    };
                    obj.insert(
                        key.into(),
                        json!(strongly_relevant(&iaf, &s, j, &e, a, cap)?),
                    );
                }
            } else {
                let mut rows = Vec::new();
                for e in iaf.uncertain_elements() {
                    rows.push(json!({
                        "kind": if e.is_argument() { "argument" } else { "attack" },
                        "id_or_pair": e.to_string(),
                        "strongly_add": strongly_relevant(&iaf, &s, j, &e, Action::Addition, cap)?,
                        "strongly_rem": strongly_relevant(&iaf, &s, j, &e, Action::Removal, cap)?,
                    }));
                }
                obj.insert("elements".into(), Value::Array(rows));
            }
            Output::Json(Value::Object(obj))
        }
        Command::ToAtiaf(input) => {
            let m = to_atiaf(&io.frame(&input)?);
            Output::Text(format!(
                "# witness: {}\n{}",
                m.witness,
                emit_iaf(&m.transformed)
            ))
        }
        Command::Gen {
            n_args,
            p_uncertain_arg,
            p_att,
            p_uncertain_att,
            seed,
            no_self_attacks,
        } => {
            let p = GeneratorParams {
                n_args,
                p_uncertain_arg,
                p_att,
                p_uncertain_att,
                seed,
                allow_self_attacks: !no_self_attacks,
            };
            Output::Text(emit_generated(&p, &generate(&p)?))
        }
        Command::Diff {
            trials,
            seed,
            max_args,
            max_uncertain_args,
            max_uncertain_attacks,
            sem,
            status,
            gadgets,
        } => {
            let c = DiffConfig {
                semantics: sem,
                trials,
                seed,
                max_args,
                max_uncertain_args,
                max_uncertain_attacks,
                statuses: status,
                cap,
                break_characterization: false,
            };
            let report = diff_run(&c)?;
            let mut clean = report.is_clean();
            let mut body = json!({ "relevance": report });
            if gadgets {
                let g = gadget_run(&GadgetConfig {
                    seed,
                    cap,
                    ..GadgetConfig::default()
                })?;
                clean &= g.is_clean();
                body["gadgets"] = json!(g);
            }
            body["disagreements"] = json!(!clean);
            if clean {
                Output::Json(body)
            } else {
                Output::Failed(body, 4)
            }
        }
        Command::Sat2iaf { check } => {
            let text = io.text(&Input { file: None })?;
            let q: QbfInstance = text.parse()?;
            if check {
                let c = pi2sat_check(&q, cap)?;
                let body = json!({
                    "formula": c.brute,
                    "loop_addition": c.loop_addition,
                    "guard_removal": c.guard_removal,
                    "agree": c.holds(),
                });
                if c.holds() {
                    Output::Json(body)
                } else {
                    Output::Failed(body, 4)
                }
            } else {
                Output::Text(emit_iaf(&pi2sat_to_iaf(&q).frame))
            }
        }
    };
    Ok(out)
}

fn verification(
    io: &mut Io<'_>,
    q: &Query,
    method: Method,
    necessary: bool,
    cap: Cap,
) -> Result<Output> {
    let iaf = io.frame(&q.input)?;
    let s = parse_set(&q.set)?;
    let (key, value) = if necessary {
        ("necver", necver(&iaf, &s, q.sem, method, cap)?)
    } else {
        ("posver", posver(&iaf, &s, q.sem, method, cap)?)
    };
    Ok(Output::Json(
        json!({ "query": names(&s), "semantics": q.sem.short_name(), key: value }),
    ))
}

/// Runs the command line with `args` (including the program name) and
/// returns the process exit code.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let mut io = Io {
        stdin,
        opts: ParseOptions {
            allow_reserved: cli.allow_reserved,
        },
    };
    let result = execute(cli, &mut io);
    let printed = match result {
        Ok(Output::Json(v)) => writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&v).expect("json")
        )
        .map(|_| 0),
        Ok(Output::Text(t)) => write!(stdout, "{t}").map(|_| 0),
        Ok(Output::Failed(v, code)) => writeln!(
            stdout,
            "{}",
            serde_json::to_string_pretty(&v).expect("json")
        )
        .map(|_| code),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return e.exit_code();
        }
    };
    printed.unwrap_or(1)
}
