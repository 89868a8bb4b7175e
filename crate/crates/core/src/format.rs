//! The `arg/uarg/att/uatt` text format.
//!
//! ```text
//! # comment
//! arg(a).
//! uarg(b).
//! att(a,b).
//! uatt(b,a).
//! ```
//!
//! One statement per line; whitespace is insignificant and `#` starts a
//! comment running to the end of the line.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::af::{is_identifier, ArgumentId, Attack};
use crate::error::{Error, Result};
use crate::iaf::Iaf;

/// Names starting with this prefix are produced by the transformations.
pub const RESERVED_PREFIX: &str = "__aux_";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Accept argument names that start with [`RESERVED_PREFIX`].
    pub allow_reserved: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Keyword {
    Arg,
    Uarg,
    Att,
    Uatt,
}

struct Statement {
    keyword: Keyword,
    names: Vec<ArgumentId>,
}

fn parse_statement(line: usize, text: &str, opts: ParseOptions) -> Result<Statement> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let body = compact
        .strip_suffix('.')
        .ok_or_else(|| Error::parse(line, "statement must end with `.`"))?;
    let (kw, rest) = body
        .split_once('(')
        .ok_or_else(|| Error::parse(line, "expected `(` after keyword"))?;
    let inner = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::parse(line, "expected `)` before `.`"))?;
    let keyword = match kw {
        "arg" => Keyword::Arg,
        "uarg" => Keyword::Uarg,
        "att" => Keyword::Att,
        "uatt" => Keyword::Uatt,
        other => return Err(Error::parse(line, format!("unknown keyword `{other}`"))),
    };
    let arity = match keyword {
        Keyword::Arg | Keyword::Uarg => 1,
        Keyword::Att | Keyword::Uatt => 2,
    };
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.len() != arity {
        return Err(Error::parse(
            line,
            format!("`{kw}` takes {arity} argument(s), found {}", parts.len()),
        ));
    }
    let mut names = Vec::with_capacity(arity);
    for p in parts {
        if !is_identifier(p) {
            return Err(Error::parse(line, format!("invalid argument name `{p}`")));
        }
        if !opts.allow_reserved && p.starts_with(RESERVED_PREFIX) {
            return Err(Error::parse(
                line,
                format!("argument name `{p}` uses the reserved prefix `{RESERVED_PREFIX}`"),
            ));
        }
        names.push(ArgumentId::new(p)?);
    }
    Ok(Statement { keyword, names })
}

pub fn parse_iaf(text: &str) -> Result<Iaf> {
    parse_iaf_with(text, ParseOptions::default())
}

pub fn parse_iaf_with(text: &str, opts: ParseOptions) -> Result<Iaf> {
    let mut args = BTreeSet::new();
    let mut uargs = BTreeSet::new();
    let mut atts = BTreeSet::new();
    let mut uatts = BTreeSet::new();
    let mut pending: Vec<(usize, Attack)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let st = parse_statement(line, content, opts)?;
        let mut names = st.names.into_iter();
        match st.keyword {
            Keyword::Arg | Keyword::Uarg => {
                let a = names.next().expect("arity checked");
                if args.contains(&a) || uargs.contains(&a) {
                    let msg = if (st.keyword == Keyword::Arg) == args.contains(&a) {
                        format!("duplicate declaration of argument `{a}`")
                    } else {
                        format!("argument `{a}` declared both certain and uncertain")
                    };
                    return Err(Error::parse(line, msg));
                }
                if st.keyword == Keyword::Arg {
                    args.insert(a);
                } else {
                    uargs.insert(a);
                }
            }
            Keyword::Att | Keyword::Uatt => {
                let r = (names.next().expect("arity"), names.next().expect("arity"));
                let certain = st.keyword == Keyword::Att;
                let (same, other) = if certain {
                    (&mut atts, &uatts)
                } else {
                    (&mut uatts, &atts)
                };
                if other.contains(&r) {
                    return Err(Error::parse(
                        line,
                        format!(
                            "attack ({},{}) declared both certain and uncertain",
                            r.0, r.1
                        ),
                    ));
                }
                if !same.insert(r.clone()) {
                    return Err(Error::parse(
                        line,
                        format!("duplicate declaration of attack ({},{})", r.0, r.1),
                    ));
                }
                pending.push((line, r));
            }
        }
    }

    for (line, (a, b)) in &pending {
        for x in [a, b] {
            if !args.contains(x) && !uargs.contains(x) {
                return Err(Error::parse(*line, format!("undeclared argument `{x}`")));
            }
        }
    }
    Iaf::new(args, uargs, atts, uatts)
}

/// Canonical text: certain arguments, uncertain arguments, certain attacks,
/// uncertain attacks, each sorted.
pub fn emit_iaf(iaf: &Iaf) -> String {
    let mut out = String::new();
    for a in iaf.args() {
        writeln!(out, "arg({a}).").unwrap();
    }
    for a in iaf.uncertain_args() {
        writeln!(out, "uarg({a}).").unwrap();
    }
    for (a, b) in iaf.attacks() {
        writeln!(out, "att({a},{b}).").unwrap();
    }
    for (a, b) in iaf.uncertain_attacks() {
        writeln!(out, "uatt({a},{b}).").unwrap();
    }
    out
}
