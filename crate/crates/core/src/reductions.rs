//! Transformations between problems: uncertain arguments into uncertain
//! attacks, the preferred-semantics gadgets, and the translation of
//! `∀X ∃Y φ` formulas into incomplete frameworks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::af::{ArgSet, ArgumentId, Attack, Semantics};
use crate::error::{Error, Result};
use crate::format::RESERVED_PREFIX;
use crate::iaf::{Action, Iaf, UncertainElement};
use crate::relevance::{relevant_brute, strongly_relevant, strongly_relevant_direct};
use crate::verification::{necver, posver, Method, VerificationStatus};
use crate::Cap;

/// A name `__aux_<role><k>` not in `used`, with the smallest such `k`.
pub fn fresh_name(used: &ArgSet, role: &str) -> ArgumentId {
    (0..)
        .map(|k| ArgumentId::new(&format!("{RESERVED_PREFIX}{role}{k}")).expect("valid name"))
        .find(|a| !used.contains(a))
        .expect("unbounded supply")
}

/// The result of replacing every uncertain argument `e` by a certain one
/// guarded by the uncertain attack `(w,e)` from a fresh certain `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtiafMapping {
    pub transformed: Iaf,
    pub witness: ArgumentId,
    /// Original uncertain element to the uncertain attack that stands for it.
    pub element_map: BTreeMap<UncertainElement, Attack>,
}

impl AtiafMapping {
    /// The query for the transformed frame: `s ∪ {w}`.
    pub fn map_query(&self, s: &ArgSet) -> ArgSet {
        let mut out = s.clone();
        out.insert(self.witness.clone());
        out
    }

    /// The attack standing for `e`, and whether the action flips: adding an
    /// argument corresponds to removing its guard.
    pub fn map_element(&self, e: &UncertainElement) -> (Attack, bool) {
        (self.element_map[e].clone(), e.is_argument())
    }

    pub fn map_action(&self, e: &UncertainElement, a: Action) -> (UncertainElement, Action) {
        let (r, flip) = self.map_element(e);
        (
            UncertainElement::Att(r),
            if flip { a.opposite() } else { a },
        )
    }
}

pub fn to_atiaf(iaf: &Iaf) -> AtiafMapping {
    let w = fresh_name(&iaf.universe(), "w");
    let mut args = iaf.universe();
    args.insert(w.clone());
    let mut uatts = iaf.uncertain_attacks().clone();
    let mut element_map = BTreeMap::new();
    for r in iaf.uncertain_attacks() {
        element_map.insert(UncertainElement::Att(r.clone()), r.clone());
    }
    for e in iaf.uncertain_args() {
        let guard = (w.clone(), e.clone());
        uatts.insert(guard.clone());
        element_map.insert(UncertainElement::Arg(e.clone()), guard);
    }
    AtiafMapping {
        transformed: Iaf::from_parts(args, BTreeSet::new(), iaf.attacks().clone(), uatts),
        witness: w,
        element_map,
    }
}

fn require_atiaf(iaf: &Iaf) -> Result<()> {
    if iaf.is_atiaf() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "the gadget expects a frame without uncertain arguments".into(),
        ))
    }
}

/// The three sides of a gadget biconditional pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GadgetCheck {
    /// The decision problem on the input frame.
    pub direct: bool,
    pub first: bool,
    pub second: bool,
}

impl GadgetCheck {
    pub fn holds(&self) -> bool {
        self.direct == self.first && self.direct == self.second
    }
}

/// `⟨A∪{w1}, {w2}, R∪{(w2,s) | s∈S}, R?∪{(w1,w2)}⟩`: possible preferred
/// verification of `S` as relevance of `(w1,w2)` or `w2` for `S∪{w1}`.
#[derive(Clone, Debug)]
pub struct PosverPrGadget {
    pub original: Iaf,
    pub set: ArgSet,
    pub frame: Iaf,
    pub w1: ArgumentId,
    pub w2: ArgumentId,
}

pub fn posver_pr_gadget(iaf: &Iaf, s: &ArgSet) -> Result<PosverPrGadget> {
    require_atiaf(iaf)?;
    iaf.check_subset(s)?;
    let mut used = iaf.universe();
    let w1 = fresh_name(&used, "w");
    used.insert(w1.clone());
    let w2 = fresh_name(&used, "w");
    let mut args = iaf.args().clone();
    args.insert(w1.clone());
    let mut atts = iaf.attacks().clone();
    atts.extend(s.iter().map(|x| (w2.clone(), x.clone())));
    let mut uatts = iaf.uncertain_attacks().clone();
    uatts.insert((w1.clone(), w2.clone()));
    let frame = Iaf::from_parts(args, BTreeSet::from([w2.clone()]), atts, uatts);
    Ok(PosverPrGadget {
        original: iaf.clone(),
        set: s.clone(),
        frame,
        w1,
        w2,
    })
}

impl PosverPrGadget {
    pub fn query(&self) -> ArgSet {
        let mut q = self.set.clone();
        q.insert(self.w1.clone());
        q
    }

    fn guard(&self) -> UncertainElement {
        UncertainElement::Att((self.w1.clone(), self.w2.clone()))
    }

    pub fn direct(&self, cap: Cap) -> Result<bool> {
        posver(
            &self.original,
            &self.set,
            Semantics::Preferred,
            Method::Brute,
            cap,
        )
    }

    /// `(w1,w2) ∈ RE⁺(I'+{w2}, S∪{w1}, pr-true)`.
    pub fn attack_addition_side(&self, cap: Cap) -> Result<bool> {
        let i = self.frame.add(&UncertainElement::Arg(self.w2.clone()))?;
        let j = VerificationStatus::new(Semantics::Preferred, true);
        relevant_brute(&i, &self.query(), j, &self.guard(), Action::Addition, cap)
    }

    /// `w2 ∈ RE⁻(I'−{(w1,w2)}, S∪{w1}, pr-true)`.
    pub fn argument_removal_side(&self, cap: Cap) -> Result<bool> {
        let i = self.frame.remove(&self.guard())?;
        let j = VerificationStatus::new(Semantics::Preferred, true);
        let w2 = UncertainElement::Arg(self.w2.clone());
        relevant_brute(&i, &self.query(), j, &w2, Action::Removal, cap)
    }

    pub fn check(&self, cap: Cap) -> Result<GadgetCheck> {
        Ok(GadgetCheck {
            direct: self.direct(cap)?,
            first: self.attack_addition_side(cap)?,
            second: self.argument_removal_side(cap)?,
        })
    }
}

/// `⟨A, {w}, R, R?∪{(w,w)}⟩`: necessary preferred verification of `S` as
/// strong preferred-false relevance of `w` or `(w,w)`.
#[derive(Clone, Debug)]
pub struct NecverPrGadget {
    pub original: Iaf,
    pub set: ArgSet,
    pub frame: Iaf,
    pub w: ArgumentId,
}

pub fn necver_pr_gadget(iaf: &Iaf, s: &ArgSet) -> Result<NecverPrGadget> {
    require_atiaf(iaf)?;
    iaf.check_subset(s)?;
    let w = fresh_name(&iaf.universe(), "w");
    let mut uatts = iaf.uncertain_attacks().clone();
    uatts.insert((w.clone(), w.clone()));
    let frame = Iaf::from_parts(
        iaf.args().clone(),
        BTreeSet::from([w.clone()]),
        iaf.attacks().clone(),
        uatts,
    );
    Ok(NecverPrGadget {
        original: iaf.clone(),
        set: s.clone(),
        frame,
        w,
    })
}

impl NecverPrGadget {
    fn loop_attack(&self) -> UncertainElement {
        UncertainElement::Att((self.w.clone(), self.w.clone()))
    }

    pub fn direct(&self, cap: Cap) -> Result<bool> {
        necver(
            &self.original,
            &self.set,
            Semantics::Preferred,
            Method::Brute,
            cap,
        )
    }

    /// `w ∈ SRE⁺(I'−{(w,w)}, S, pr-false)`.
    pub fn argument_addition_side(&self, cap: Cap) -> Result<bool> {
        let i = self.frame.remove(&self.loop_attack())?;
        let j = VerificationStatus::new(Semantics::Preferred, false);
        let w = UncertainElement::Arg(self.w.clone());
        strongly_relevant(&i, &self.set, j, &w, Action::Addition, cap)
    }

    /// `(w,w) ∈ SRE⁻(I'+{w}, S, pr-false)`.
    pub fn attack_removal_side(&self, cap: Cap) -> Result<bool> {
        let i = self.frame.add(&UncertainElement::Arg(self.w.clone()))?;
        let j = VerificationStatus::new(Semantics::Preferred, false);
        strongly_relevant(&i, &self.set, j, &self.loop_attack(), Action::Removal, cap)
    }

    pub fn check(&self, cap: Cap) -> Result<GadgetCheck> {
        Ok(GadgetCheck {
            direct: self.direct(cap)?,
            first: self.argument_addition_side(cap)?,
            second: self.attack_removal_side(cap)?,
        })
    }
}

/// `∀X ∃Y φ` with `φ` in CNF over numbered variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QbfInstance {
    x_vars: BTreeSet<u32>,
    y_vars: BTreeSet<u32>,
    clauses: Vec<Vec<i32>>,
}

impl QbfInstance {
    pub fn new(
        x_vars: impl IntoIterator<Item = u32>,
        y_vars: impl IntoIterator<Item = u32>,
        clauses: Vec<Vec<i32>>,
    ) -> Result<Self> {
        let x_vars: BTreeSet<u32> = x_vars.into_iter().collect();
        let y_vars: BTreeSet<u32> = y_vars.into_iter().collect();
        if let Some(v) = x_vars.intersection(&y_vars).next() {
            return Err(Error::InvalidParameter(format!(
                "variable {v} is both universal and existential"
            )));
        }
        if x_vars.contains(&0) || y_vars.contains(&0) {
            return Err(Error::InvalidParameter("variable 0 is not allowed".into()));
        }
        if clauses.is_empty() {
            return Err(Error::InvalidParameter("the formula has no clauses".into()));
        }
        for lit in clauses.iter().flatten() {
            let v = lit.unsigned_abs();
            if !x_vars.contains(&v) && !y_vars.contains(&v) {
                return Err(Error::InvalidParameter(format!(
                    "unknown variable {v} in a clause"
                )));
            }
        }
        Ok(QbfInstance {
            x_vars,
            y_vars,
            clauses,
        })
    }

    pub fn x_vars(&self) -> &BTreeSet<u32> {
        &self.x_vars
    }

    pub fn y_vars(&self) -> &BTreeSet<u32> {
        &self.y_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    fn satisfied(&self, value: impl Fn(u32) -> bool) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| value(l.unsigned_abs()) == (l > 0)))
    }
}

/// Text form: `p pi2 <nx> <ny> <nc>`, then `x ... 0` and `y ... 0` lines
/// listing the quantified variables, then clause lines of signed integers
/// ending in `0`. Lines starting with `c` are comments.
impl FromStr for QbfInstance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, usize)> = None;
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        let mut clauses = Vec::new();
        let ints = |line: usize, items: &[&str]| -> Result<Vec<i64>> {
            let nums = items
                .iter()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(line, format!("`{t}` is not an integer")))
                })
                .collect::<Result<Vec<_>>>()?;
            match nums.split_last() {
                Some((0, rest)) if !rest.contains(&0) => Ok(rest.to_vec()),
                _ => Err(Error::parse(line, "list must end with a single 0")),
            }
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            match toks.first().copied() {
                None | Some("c") => continue,
                Some("p") => {
                    if header.is_some() {
                        return Err(Error::parse(line, "duplicate problem line"));
                    }
                    let [_, "pi2", nx, ny, nc] = toks[..] else {
                        return Err(Error::parse(line, "expected `p pi2 <nx> <ny> <nc>`"));
                    };
                    let num = |t: &str| {
                        t.parse::<usize>()
                            .map_err(|_| Error::parse(line, format!("`{t}` is not a count")))
                    };
                    header = Some((num(nx)?, num(ny)?, num(nc)?));
                }
                Some(_) if header.is_none() => {
                    return Err(Error::parse(
                        line,
                        "problem line `p pi2 ...` must come first",
                    ));
                }
                Some(q @ ("x" | "y")) => {
                    let vars = ints(line, &toks[1..])?;
                    let target = if q == "x" { &mut xs } else { &mut ys };
                    for v in vars {
                        let v = u32::try_from(v)
                            .map_err(|_| Error::parse(line, format!("invalid variable {v}")))?;
                        target.push(v);
                    }
                }
                Some(_) => {
                    let lits = ints(line, &toks)?;
                    let lits = lits
                        .into_iter()
                        .map(|l| {
                            i32::try_from(l).map_err(|_| Error::parse(line, "literal out of range"))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    clauses.push(lits);
                }
            }
        }
        let (nx, ny, nc) = header.ok_or_else(|| Error::parse(1, "missing problem line"))?;
        let all: BTreeSet<u32> = xs.iter().chain(&ys).copied().collect();
        let expected: BTreeSet<u32> = (1..=(nx + ny) as u32).collect();
        if xs.len() != nx || ys.len() != ny || all != expected {
            return Err(Error::InvalidParameter(format!(
                "x and y lines must partition the variables 1..{}",
                nx + ny
            )));
        }
        if clauses.len() != nc {
            return Err(Error::InvalidParameter(format!(
                "expected {nc} clauses, found {}",
                clauses.len()
            )));
        }
        QbfInstance::new(xs, ys, clauses)
    }
}

impl fmt::Display for QbfInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "p pi2 {} {} {}",
            self.x_vars.len(),
            self.y_vars.len(),
            self.clauses.len()
        )?;
        for (tag, vars) in [("x", &self.x_vars), ("y", &self.y_vars)] {
            write!(f, "{tag}")?;
            for v in vars {
                write!(f, " {v}")?;
            }
            writeln!(f, " 0")?;
        }
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

/// `∀X ∃Y φ` by enumerating both assignments.
pub fn pi2sat_brute(q: &QbfInstance, cap: Cap) -> Result<bool> {
    let n = q.x_vars.len() + q.y_vars.len();
    if n > cap.0.min(62) {
        return Err(Error::CapExceeded {
            what: "quantified variables",
            size: n,
            cap: cap.0.min(62),
        });
    }
    let xs: Vec<u32> = q.x_vars.iter().copied().collect();
    let ys: Vec<u32> = q.y_vars.iter().copied().collect();
    Ok((0..1u64 << xs.len()).all(|tx| {
        (0..1u64 << ys.len()).any(|ty| {
            q.satisfied(|v| match xs.iter().position(|&x| x == v) {
                Some(i) => tx >> i & 1 == 1,
                None => ty >> ys.iter().position(|&y| y == v).expect("declared") & 1 == 1,
            })
        })
    }))
}

/// The frame built from a formula, with its distinguished arguments.
///
/// Universal variables become uncertain arguments `x1..` with certain
/// negations `not_x1..`; existential ones become mutually attacking pairs
/// `y1..`/`not_y1..`, numbered by position among their quantifier's
/// variables. Clauses `c1..` attack themselves and `phi`; `w` attacks every
/// literal and itself, and `phi` attacks itself and `w` uncertainly.
#[derive(Clone, Debug)]
pub struct Pi2Frame {
    pub frame: Iaf,
    pub phi: ArgumentId,
    pub w: ArgumentId,
}

pub fn pi2sat_to_iaf(q: &QbfInstance) -> Pi2Frame {
    let id = |s: String| ArgumentId::new(&s).expect("generated name is valid");
    let mut literal: BTreeMap<i64, ArgumentId> = BTreeMap::new();
    let mut args = BTreeSet::new();
    let mut uargs = BTreeSet::new();
    let mut atts = BTreeSet::new();
    let phi = id("phi".into());
    let w = id("w".into());

    for (i, &v) in q.x_vars.iter().enumerate() {
        let (pos, neg) = (id(format!("x{}", i + 1)), id(format!("not_x{}", i + 1)));
        uargs.insert(pos.clone());
        args.insert(neg.clone());
        atts.insert((pos.clone(), neg.clone()));
        literal.insert(v as i64, pos);
        literal.insert(-(v as i64), neg);
    }
    for (i, &v) in q.y_vars.iter().enumerate() {
        let (pos, neg) = (id(format!("y{}", i + 1)), id(format!("not_y{}", i + 1)));
        args.insert(pos.clone());
        args.insert(neg.clone());
        atts.insert((pos.clone(), neg.clone()));
        atts.insert((neg.clone(), pos.clone()));
        literal.insert(v as i64, pos);
        literal.insert(-(v as i64), neg);
    }
    for node in literal.values() {
        atts.insert((w.clone(), node.clone()));
    }
    for (i, clause) in q.clauses.iter().enumerate() {
        let c = id(format!("c{}", i + 1));
        args.insert(c.clone());
        for &l in clause {
            atts.insert((literal[&(l as i64)].clone(), c.clone()));
        }
        atts.insert((c.clone(), phi.clone()));
        atts.insert((c.clone(), c.clone()));
    }
    args.insert(phi.clone());
    args.insert(w.clone());
    atts.insert((w.clone(), w.clone()));
    let uatts = BTreeSet::from([(phi.clone(), phi.clone()), (phi.clone(), w.clone())]);
    Pi2Frame {
        frame: Iaf::from_parts(args, uargs, atts, uatts),
        phi,
        w,
    }
}

/// Answers of the reduction's sides on a formula, each strong relevance
/// side computed through verification and by direct enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pi2Check {
    pub brute: bool,
    pub loop_addition: [bool; 2],
    pub guard_removal: [bool; 2],
}

impl Pi2Check {
    pub fn holds(&self) -> bool {
        self.loop_addition
            .iter()
            .chain(&self.guard_removal)
            .all(|&b| b == self.brute)
    }
}

impl Pi2Frame {
    fn loop_attack(&self) -> UncertainElement {
        UncertainElement::Att((self.phi.clone(), self.phi.clone()))
    }

    fn guard(&self) -> UncertainElement {
        UncertainElement::Att((self.phi.clone(), self.w.clone()))
    }

    /// `(phi,phi) ∈ SRE⁺(I+{(phi,w)}, ∅, pr-true)`, through verification
    /// (`direct = false`) or by enumeration.
    pub fn loop_addition_side(&self, direct: bool, cap: Cap) -> Result<bool> {
        let i = self.frame.add(&self.guard())?;
        let j = VerificationStatus::new(Semantics::Preferred, true);
        let f = if direct {
            strongly_relevant_direct
        } else {
            strongly_relevant
        };
        f(
            &i,
            &ArgSet::new(),
            j,
            &self.loop_attack(),
            Action::Addition,
            cap,
        )
    }

    /// `(phi,w) ∈ SRE⁻(I−{(phi,phi)}, ∅, pr-true)`.
    pub fn guard_removal_side(&self, direct: bool, cap: Cap) -> Result<bool> {
        let i = self.frame.remove(&self.loop_attack())?;
        let j = VerificationStatus::new(Semantics::Preferred, true);
        let f = if direct {
            strongly_relevant_direct
        } else {
            strongly_relevant
        };
        f(&i, &ArgSet::new(), j, &self.guard(), Action::Removal, cap)
    }
}

pub fn pi2sat_check(q: &QbfInstance, cap: Cap) -> Result<Pi2Check> {
    let g = pi2sat_to_iaf(q);
    Ok(Pi2Check {
        brute: pi2sat_brute(q, cap)?,
        loop_addition: [
            g.loop_addition_side(false, cap)?,
            g.loop_addition_side(true, cap)?,
        ],
        guard_removal: [
            g.guard_removal_side(false, cap)?,
            g.guard_removal_side(true, cap)?,
        ],
    })
}
