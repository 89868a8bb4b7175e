//! Relevance and strong relevance of deciding uncertain elements for the
//! verification status of a set.
//!
//! Addition (removal) of `e` is `j`-relevant for `S` when some partial
//! completion leaves only `e` open, and adding (removing) it makes `S` reach
//! `j` while the opposite decision does not. It is strongly relevant when no
//! partial completion taking the opposite decision keeps `j` reachable.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::af::{ArgSet, Attack, Semantics};
use crate::error::{Error, Result};
use crate::iaf::{Iaf, UncertainElement};
use crate::reductions::to_atiaf;
use crate::verification::{
    holds_in, necver, posver, stability_with, CompletionTable, Method, StabilityAnswer,
    VerificationStatus,
};
use crate::Cap;

pub use crate::iaf::Action;

/// The dual query: the same element, the opposite status and action.
pub fn duality_map(j: VerificationStatus, a: Action) -> (VerificationStatus, Action) {
    (j.negated(), a.opposite())
}

fn status_holds(iaf: &Iaf, s: &ArgSet, j: VerificationStatus, cap: Cap) -> Result<bool> {
    Ok(holds_in(&iaf.cert(), s, j.semantics, cap)? == j.value)
}

/// Relevance by enumerating the partial completions that leave only `e` open.
pub fn relevant_brute(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    e: &UncertainElement,
    a: Action,
    cap: Cap,
) -> Result<bool> {
    iaf.check_subset(s)?;
    for frame in iaf.fix_all_but(e, cap)? {
        let acted = status_holds(&frame.decide(e, a)?, s, j, cap)?;
        let other = status_holds(&frame.decide(e, a.opposite())?, s, j, cap)?;
        if acted && !other {
            return Ok(true);
        }
    }
    Ok(false)
}

fn check_char_input(iaf: &Iaf, s: &ArgSet, r: &Attack) -> Result<()> {
    if !iaf.is_atiaf() {
        return Err(Error::Precondition(
            "the characterizations apply to frames without uncertain arguments".into(),
        ));
    }
    iaf.check_subset(s)?;
    if !iaf.uncertain_attacks().contains(r) {
        return Err(Error::NotUncertain(UncertainElement::Att(r.clone())));
    }
    Ok(())
}

/// An attack between two members of `s` must be absent for any
/// conflict-free based extension, so only its removal helps.
fn inside(s: &ArgSet, r: &Attack, action: Action) -> Option<bool> {
    (s.contains(&r.0) && s.contains(&r.1)).then_some(action == Action::Removal)
}

fn single(a: &crate::af::ArgumentId) -> ArgSet {
    ArgSet::from([a.clone()])
}

/// Admissible-true relevance of an uncertain attack of an AtIAF.
///
/// The caller guarantees that `s` is not stable for admissibility.
pub fn char_relevant_ad(iaf: &Iaf, s: &ArgSet, r: &Attack, action: Action) -> Result<bool> {
    check_char_input(iaf, s, r)?;
    if let Some(v) = inside(s, r, action) {
        return Ok(v);
    }
    let (a, b) = r;
    Ok(match action {
        Action::Addition => {
            s.contains(a)
                && !iaf.certain_targets(s)?.contains(b)
                && !s.is_subset(&iaf.untouched_by(&single(b))?)
        }
        Action::Removal => {
            !iaf.certain_attackers(s)?.contains(a)
                && !iaf.certain_targets(s)?.contains(a)
                && s.contains(b)
        }
    })
}

/// Stable-true relevance of an uncertain attack of an AtIAF.
pub fn char_relevant_st(iaf: &Iaf, s: &ArgSet, r: &Attack, action: Action) -> Result<bool> {
    check_char_input(iaf, s, r)?;
    if let Some(v) = inside(s, r, action) {
        return Ok(v);
    }
    let (a, b) = r;
    Ok(match action {
        Action::Addition => s.contains(a) && !iaf.certain_targets(s)?.contains(b),
        Action::Removal => false,
    })
}

/// Decides whether some completion makes `s` complete while `(a,b)` is the
/// only attack keeping `b`, which `s` then defends, outside of `s`.
pub fn out_rel(iaf: &Iaf, s: &ArgSet, r: &Attack, cap: Cap) -> Result<bool> {
    let (a, b) = r;
    iaf.check_subset(s)?;
    if s.contains(b) {
        return Err(Error::Precondition(format!(
            "target `{b}` belongs to the query set"
        )));
    }
    if iaf.attacks().contains(&(b.clone(), b.clone())) {
        return Err(Error::Precondition(format!("`{b}` attacks itself")));
    }
    if !iaf.attacks().contains(r) && !iaf.uncertain_attacks().contains(r) {
        return Err(Error::Precondition(format!(
            "({a},{b}) is not an attack of the frame"
        )));
    }
    let mut others = iaf.certain_attackers(&single(b))?;
    others.remove(a);
    let untouched = iaf.untouched_by(s)?;
    if others.iter().any(|v| untouched.contains(v)) {
        return Ok(false);
    }
    let defend = iaf
        .uncertain_attacks()
        .iter()
        .filter(|(x, v)| s.contains(x) && others.contains(v))
        .map(|r| UncertainElement::Att(r.clone()))
        .collect();
    let i0 = iaf.apply(Action::Addition, &defend)?;
    let drop = i0
        .uncertain_attacks()
        .iter()
        .filter(|(u, t)| t == b && u != a)
        .map(|r| UncertainElement::Att(r.clone()))
        .collect();
    let i1 = i0.apply(Action::Removal, &drop)?;
    posver(&i1, s, Semantics::Complete, Method::Brute, cap)
}

/// Complete-true relevance of an uncertain attack of an AtIAF.
pub fn char_relevant_co(
    iaf: &Iaf,
    s: &ArgSet,
    r: &Attack,
    action: Action,
    cap: Cap,
) -> Result<bool> {
    check_char_input(iaf, s, r)?;
    if let Some(v) = inside(s, r, action) {
        return Ok(v);
    }
    let (a, b) = r;
    let b_loops = iaf.attacks().contains(&(b.clone(), b.clone()));
    match (s.contains(a), s.contains(b), action) {
        (false, false, Action::Addition) => Ok(!b_loops && out_rel(iaf, s, r, cap)?),
        (false, false, Action::Removal) => Ok(false),
        (false, true, Action::Addition) => Ok(false),
        (false, true, Action::Removal) => {
            if iaf.certain_targets(s)?.contains(a) {
                return Ok(false);
            }
            let counter = iaf
                .uncertain_attacks()
                .iter()
                .filter(|(x, t)| s.contains(x) && t == a)
                .map(|r| UncertainElement::Att(r.clone()))
                .collect();
            posver(
                &iaf.apply(Action::Removal, &counter)?,
                s,
                Semantics::Complete,
                Method::Brute,
                cap,
            )
        }
        (true, false, Action::Addition) => {
            if !b_loops && out_rel(iaf, s, r, cap)? {
                return Ok(true);
            }
            Ok(!s.is_subset(&iaf.untouched_by(&single(b))?)
                && !iaf.certain_targets(s)?.contains(b)
                && posver(
                    &iaf.add(&UncertainElement::Att(r.clone()))?,
                    s,
                    Semantics::Complete,
                    Method::Brute,
                    cap,
                )?)
        }
        (true, false, Action::Removal) => {
            for (x, v) in iaf.attacks().iter().chain(iaf.uncertain_attacks()) {
                if x != b || s.contains(v) || v == b {
                    continue;
                }
                if iaf.attacks().contains(&(v.clone(), v.clone())) {
                    continue;
                }
                if out_rel(iaf, s, &(b.clone(), v.clone()), cap)? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        (true, true, _) => unreachable!("handled by the inside rule"),
    }
}

/// Grounded-true relevance of adding an attack between two arguments
/// outside `s`, answered by complete-true relevance. Other positions and
/// actions are left open (`None`).
///
/// Only a negative answer is reliable: grounded relevance of such an
/// addition implies complete relevance, but not conversely, since `s` may
/// be complete in every relevant completion without ever being grounded.
pub fn char_relevant_gr_outside(
    iaf: &Iaf,
    s: &ArgSet,
    r: &Attack,
    action: Action,
    cap: Cap,
) -> Result<Option<bool>> {
    check_char_input(iaf, s, r)?;
    if action != Action::Addition || s.contains(&r.0) || s.contains(&r.1) {
        return Ok(None);
    }
    char_relevant_co(iaf, s, r, action, cap).map(Some)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportMethod {
    Brute,
    Characterization,
}

impl fmt::Display for ReportMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportMethod::Brute => "brute",
            ReportMethod::Characterization => "characterization",
        })
    }
}

/// How [`relevance_report`] computes its answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ReportMode {
    /// Exhaustive enumeration for every element and status.
    Brute,
    /// Characterizations for ad, st and co; enumeration otherwise.
    #[default]
    Auto,
}

impl FromStr for ReportMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(ReportMode::Brute),
            "auto" => Ok(ReportMode::Auto),
            other => Err(Error::InvalidParameter(format!(
                "unknown method `{other}` (expected auto or brute)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    #[serde(skip)]
    pub element: UncertainElement,
    pub kind: &'static str,
    pub id_or_pair: String,
    pub add_relevant: bool,
    pub rem_relevant: bool,
    /// `None` when strong relevance is undefined because `j` is unreachable.
    pub strongly_add: Option<bool>,
    pub strongly_rem: Option<bool>,
    pub method: ReportMethod,
    /// For grounded-true reports, the answer of the partial grounded method
    /// on addition where it applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grounded_partial: Option<bool>,
}

impl ElementReport {
    pub fn relevant(&self, a: Action) -> bool {
        match a {
            Action::Addition => self.add_relevant,
            Action::Removal => self.rem_relevant,
        }
    }

    pub fn strongly(&self, a: Action) -> Option<bool> {
        match a {
            Action::Addition => self.strongly_add,
            Action::Removal => self.strongly_rem,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceReport {
    pub query: ArgSet,
    pub status: VerificationStatus,
    pub stability: StabilityAnswer,
    pub elements: Vec<ElementReport>,
}

impl RelevanceReport {
    /// `RE⁺` (addition) or `RE⁻` (removal).
    pub fn relevant_set(&self, a: Action) -> Vec<UncertainElement> {
        self.elements
            .iter()
            .filter(|e| e.relevant(a))
            .map(|e| e.element.clone())
            .collect()
    }

    /// `SRE⁺` or `SRE⁻`; empty when strong relevance is undefined.
    pub fn strongly_relevant_set(&self, a: Action) -> Vec<UncertainElement> {
        self.elements
            .iter()
            .filter(|e| e.strongly(a) == Some(true))
            .map(|e| e.element.clone())
            .collect()
    }

    pub fn element(&self, e: &UncertainElement) -> Option<&ElementReport> {
        self.elements.iter().find(|x| &x.element == e)
    }

    /// Relevance answers only, for comparing reports computed differently.
    pub fn relevance_key(&self) -> Vec<(UncertainElement, bool, bool)> {
        self.elements
            .iter()
            .map(|e| (e.element.clone(), e.add_relevant, e.rem_relevant))
            .collect()
    }

    /// A fixed-width table.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "query {}  status {}  ({})\n",
            crate::af::format_set(&self.query),
            self.status,
            self.stability
        );
        let flag = |b: bool| if b { "yes" } else { "-" };
        let strong = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "-",
            None => "n/a",
        };
        out.push_str(&format!(
            "{:<10} {:<8} {:<6} {:<6} {:<9} {:<9} {}\n",
            "element", "kind", "add", "rem", "strong+", "strong-", "method"
        ));
        for e in &self.elements {
            out.push_str(&format!(
                "{:<10} {:<8} {:<6} {:<6} {:<9} {:<9} {}\n",
                e.id_or_pair,
                e.kind,
                flag(e.add_relevant),
                flag(e.rem_relevant),
                strong(e.strongly_add),
                strong(e.strongly_rem),
                e.method
            ));
        }
        out
    }
}

fn char_true(
    iaf: &Iaf,
    s: &ArgSet,
    sem: Semantics,
    r: &Attack,
    action: Action,
    cap: Cap,
) -> Result<bool> {
    match sem {
        Semantics::Admissible => char_relevant_ad(iaf, s, r, action),
        Semantics::Stable => char_relevant_st(iaf, s, r, action),
        Semantics::Complete => char_relevant_co(iaf, s, r, action, cap),
        Semantics::Grounded | Semantics::Preferred => {
            unreachable!("no characterization for {sem}")
        }
    }
}

/// Characterization answers for every uncertain element, as
/// `(add_relevant, rem_relevant)` under `σ-true`.
fn characterized_true(
    iaf: &Iaf,
    s: &ArgSet,
    sem: Semantics,
    cap: Cap,
    sabotage: bool,
) -> Result<Vec<(bool, bool)>> {
    let mapping = to_atiaf(iaf);
    let s_att = mapping.map_query(s);
    let mut out = Vec::new();
    for e in iaf.uncertain_elements() {
        let (r, flip) = mapping.map_element(&e);
        let add = char_true(&mapping.transformed, &s_att, sem, &r, Action::Addition, cap)?;
        let rem = char_true(&mapping.transformed, &s_att, sem, &r, Action::Removal, cap)?;
        let (add, rem) = if flip { (rem, add) } else { (add, rem) };
        let add = if sabotage && sem == Semantics::Admissible && !e.is_argument() {
            !add
        } else {
            add
        };
        out.push((add, rem));
    }
    Ok(out)
}

fn element_shell(e: &UncertainElement, method: ReportMethod) -> ElementReport {
    ElementReport {
        element: e.clone(),
        kind: if e.is_argument() {
            "argument"
        } else {
            "attack"
        },
        id_or_pair: e.to_string(),
        add_relevant: false,
        rem_relevant: false,
        strongly_add: None,
        strongly_rem: None,
        method,
        grounded_partial: None,
    }
}

/// Relevance of adding and removing every uncertain element of `iaf` for
/// `s` to reach `j`, together with strong relevance where it is defined.
pub fn relevance_report(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    mode: ReportMode,
    cap: Cap,
) -> Result<RelevanceReport> {
    report_impl(iaf, s, j, mode, cap, false)
}

pub(crate) fn report_impl(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    mode: ReportMode,
    cap: Cap,
    sabotage: bool,
) -> Result<RelevanceReport> {
    iaf.check_subset(s)?;
    let sem = j.semantics;
    let has_chars = matches!(
        sem,
        Semantics::Admissible | Semantics::Stable | Semantics::Complete
    );
    let elements = iaf.uncertain_elements();

    if mode == ReportMode::Brute || !has_chars {
        let table = CompletionTable::new(iaf, s, sem, cap)?;
        let stability = table.stability();
        let reachable = if j.value {
            table.posver()
        } else {
            !table.necver()
        };
        let mut rows = Vec::new();
        for (bit, e) in elements.iter().enumerate() {
            let mut row = element_shell(e, ReportMethod::Brute);
            row.add_relevant = table.relevant(bit, Action::Addition, j.value);
            row.rem_relevant = table.relevant(bit, Action::Removal, j.value);
            if reachable {
                row.strongly_add = Some(!table.attains_after(bit, Action::Removal, j.value));
                row.strongly_rem = Some(!table.attains_after(bit, Action::Addition, j.value));
            }
            rows.push(row);
        }
        if sem == Semantics::Grounded && j.value && mode == ReportMode::Auto {
            annotate_grounded(iaf, s, cap, &mut rows)?;
        }
        return Ok(RelevanceReport {
            query: s.clone(),
            status: j,
            stability,
            elements: rows,
        });
    }

    let stability = stability_with(iaf, s, sem, Method::Auto, cap)?;
    let answers = if stability.is_stable() {
        vec![(false, false); elements.len()]
    } else {
        characterized_true(iaf, s, sem, cap, sabotage)?
    };
    let mut rows = Vec::new();
    for (e, (add, rem)) in elements.iter().zip(answers) {
        let mut row = element_shell(e, ReportMethod::Characterization);
        // The false-status answers are the true-status answers of the dual action.
        (row.add_relevant, row.rem_relevant) = if j.value { (add, rem) } else { (rem, add) };
        row.strongly_add = strong_or_undefined(iaf, s, j, e, Action::Addition, cap)?;
        row.strongly_rem = strong_or_undefined(iaf, s, j, e, Action::Removal, cap)?;
        rows.push(row);
    }
    Ok(RelevanceReport {
        query: s.clone(),
        status: j,
        stability,
        elements: rows,
    })
}

fn annotate_grounded(iaf: &Iaf, s: &ArgSet, cap: Cap, rows: &mut [ElementReport]) -> Result<()> {
    let co = VerificationStatus::new(Semantics::Complete, true);
    let co_report = report_impl(iaf, s, co, ReportMode::Auto, cap, false)?;
    let mapping = to_atiaf(iaf);
    let s_att = mapping.map_query(s);
    for (row, co_row) in rows.iter_mut().zip(&co_report.elements) {
        let (r, _) = mapping.map_element(&row.element);
        if !s_att.contains(&r.0) && !s_att.contains(&r.1) {
            row.grounded_partial = Some(co_row.add_relevant);
        }
    }
    Ok(())
}

fn strong_or_undefined(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    e: &UncertainElement,
    a: Action,
    cap: Cap,
) -> Result<Option<bool>> {
    match strongly_relevant(iaf, s, j, e, a, cap) {
        Ok(b) => Ok(Some(b)),
        Err(Error::UnreachableStatus(_)) => Ok(None),
        Err(err) => Err(err),
    }
}

fn check_reachable(iaf: &Iaf, s: &ArgSet, j: VerificationStatus, cap: Cap) -> Result<()> {
    let reachable = if j.value {
        posver(iaf, s, j.semantics, Method::Auto, cap)?
    } else {
        !necver(iaf, s, j.semantics, Method::Auto, cap)?
    };
    if reachable {
        Ok(())
    } else {
        Err(Error::UnreachableStatus(j))
    }
}

/// Strong relevance through possible and necessary verification of the frame
/// with `e` decided the other way.
///
/// Fails with [`Error::UnreachableStatus`] when no partial completion makes
/// `s` stable-`j`, since strong relevance is undefined there.
pub fn strongly_relevant(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    e: &UncertainElement,
    a: Action,
    cap: Cap,
) -> Result<bool> {
    iaf.check_subset(s)?;
    if !iaf.is_uncertain(e) {
        return Err(Error::NotUncertain(e.clone()));
    }
    check_reachable(iaf, s, j, cap)?;
    let other = iaf.decide(e, a.opposite())?;
    // Removing a member of `s` leaves no completion where `s` is an extension.
    if !s.is_subset(&other.universe()) {
        return Ok(j.value);
    }
    if j.value {
        Ok(!posver(&other, s, j.semantics, Method::Auto, cap)?)
    } else {
        necver(&other, s, j.semantics, Method::Auto, cap)
    }
}

/// Strong relevance by enumerating the completions of the frame with `e`
/// decided the other way and checking that none of them attains `j`.
pub fn strongly_relevant_direct(
    iaf: &Iaf,
    s: &ArgSet,
    j: VerificationStatus,
    e: &UncertainElement,
    a: Action,
    cap: Cap,
) -> Result<bool> {
    iaf.check_subset(s)?;
    if !iaf.is_uncertain(e) {
        return Err(Error::NotUncertain(e.clone()));
    }
    let mut reachable = false;
    for af in iaf.completions(cap)? {
        if holds_in(&af, s, j.semantics, cap)? == j.value {
            reachable = true;
            break;
        }
    }
    if !reachable {
        return Err(Error::UnreachableStatus(j));
    }
    for af in iaf.decide(e, a.opposite())?.completions(cap)? {
        if holds_in(&af, s, j.semantics, cap)? == j.value {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::{arg_set, attack};
    use crate::fixtures;

    const CAP: Cap = Cap(20);

    fn st(s: &str) -> VerificationStatus {
        s.parse().unwrap()
    }

    fn names(v: Vec<UncertainElement>) -> Vec<String> {
        v.iter().map(|e| e.to_string()).collect()
    }

    #[test]
    fn duality_is_an_involution() {
        let j = st("ad-true");
        assert_eq!(
            duality_map(j, Action::Addition),
            (st("ad-false"), Action::Removal)
        );
        assert_eq!(
            duality_map(st("st-false"), Action::Addition),
            (st("st-true"), Action::Removal)
        );
        let (j2, a2) = duality_map(j, Action::Removal);
        assert_eq!(duality_map(j2, a2), (j, Action::Removal));
    }

    #[test]
    fn brute_relevance_examples() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        let j = st("ad-true");
        let bd = UncertainElement::att("b", "d");
        let ca = UncertainElement::att("c", "a");
        assert!(relevant_brute(&ex, &s, j, &bd, Action::Addition, CAP).unwrap());
        assert!(!relevant_brute(&ex, &s, j, &ca, Action::Addition, CAP).unwrap());
        assert!(!relevant_brute(&ex, &s, j, &ca, Action::Removal, CAP).unwrap());
        assert!(relevant_brute(
            &ex,
            &s,
            j,
            &UncertainElement::arg("d"),
            Action::Removal,
            CAP
        )
        .unwrap());
        let certain = UncertainElement::att("b", "c");
        assert!(matches!(
            relevant_brute(&ex, &s, j, &certain, Action::Addition, CAP),
            Err(Error::NotUncertain(_))
        ));
    }

    #[test]
    fn characterization_examples() {
        let att = fixtures::running_example_atiaf();
        let s = arg_set(["a", "b", "f", "w"]);
        assert!(char_relevant_ad(&att, &s, &attack("b", "d"), Action::Addition).unwrap());
        assert!(char_relevant_ad(&att, &s, &attack("f", "b"), Action::Removal).unwrap());
        assert!(!char_relevant_ad(&att, &s, &attack("f", "b"), Action::Addition).unwrap());
        assert!(!char_relevant_ad(&att, &s, &attack("c", "a"), Action::Addition).unwrap());
        assert!(char_relevant_st(&att, &s, &attack("f", "g"), Action::Addition).unwrap());
        assert!(!char_relevant_st(&att, &s, &attack("w", "h"), Action::Removal).unwrap());
        assert!(!char_relevant_st(&att, &s, &attack("b", "e"), Action::Addition).unwrap());

        let s = arg_set(["a", "b", "w"]);
        assert!(out_rel(&att, &s, &attack("f", "g"), CAP).unwrap());
        assert!(out_rel(&att, &s, &attack("e", "f"), CAP).unwrap());
        let co =
            |r: (&str, &str), a| char_relevant_co(&att, &s, &attack(r.0, r.1), a, CAP).unwrap();
        assert!(co(("f", "g"), Action::Addition));
        assert!(co(("f", "b"), Action::Removal));
        assert!(co(("b", "e"), Action::Removal));
        assert_eq!(
            char_relevant_gr_outside(&att, &s, &attack("f", "g"), Action::Addition, CAP).unwrap(),
            Some(true)
        );
        assert_eq!(
            char_relevant_gr_outside(&att, &s, &attack("f", "b"), Action::Removal, CAP).unwrap(),
            None
        );
    }

    #[test]
    fn out_rel_guard() {
        // b has a certain attacker c that the query set can never reach.
        let i = Iaf::from_names(&["a", "b", "c", "s"], &[], &[("c", "b")], &[("a", "b")]);
        assert!(!out_rel(&i, &arg_set(["s"]), &attack("a", "b"), CAP).unwrap());
    }

    #[test]
    fn out_rel_preconditions() {
        let i = Iaf::from_names(&["a", "b"], &[], &[("b", "b")], &[("a", "b")]);
        assert!(out_rel(&i, &arg_set(["a"]), &attack("a", "b"), CAP).is_err());
        assert!(out_rel(&i, &arg_set(["b"]), &attack("a", "b"), CAP).is_err());
    }

    #[test]
    fn running_example_report() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        for mode in [ReportMode::Brute, ReportMode::Auto] {
            let rep = relevance_report(&ex, &s, st("ad-true"), mode, CAP).unwrap();
            assert_eq!(names(rep.relevant_set(Action::Addition)), ["(b,d)"]);
            assert_eq!(names(rep.relevant_set(Action::Removal)), ["(f,b)", "d"]);
        }
    }

    #[test]
    fn strong_relevance_examples() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        let fg = UncertainElement::att("f", "g");
        let fb = UncertainElement::att("f", "b");
        let d = UncertainElement::arg("d");
        for f in [strongly_relevant, strongly_relevant_direct] {
            assert!(f(&ex, &s, st("co-true"), &fg, Action::Addition, CAP).unwrap());
            assert!(f(&ex, &s, st("ad-true"), &fb, Action::Removal, CAP).unwrap());
            assert!(!f(&ex, &s, st("ad-false"), &fb, Action::Addition, CAP).unwrap());
            assert!(!f(&ex, &s, st("co-true"), &d, Action::Removal, CAP).unwrap());
        }
        let rep = relevance_report(&ex, &s, st("co-true"), ReportMode::Brute, CAP).unwrap();
        assert_eq!(
            names(rep.strongly_relevant_set(Action::Addition)),
            ["(f,g)"]
        );
        assert_eq!(
            names(rep.strongly_relevant_set(Action::Removal)),
            ["(b,e)", "(f,b)", "h"]
        );
    }

    #[test]
    fn unreachable_status_is_an_error() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        let e = UncertainElement::att("f", "g");
        for f in [strongly_relevant, strongly_relevant_direct] {
            let err = f(&ex, &s, st("st-true"), &e, Action::Addition, CAP).unwrap_err();
            assert_eq!(err, Error::UnreachableStatus(st("st-true")));
        }
        let rep = relevance_report(&ex, &s, st("st-true"), ReportMode::Auto, CAP).unwrap();
        assert!(rep.elements.iter().all(|e| e.strongly_add.is_none()));
    }

    #[test]
    fn complete_relevance_overshoots_grounded() {
        // No argument is unattacked, so the grounded extension is always empty.
        let i = Iaf::from_names(
            &["s", "x", "a", "b"],
            &[],
            &[("s", "x"), ("x", "s"), ("a", "a"), ("x", "b")],
            &[("a", "b")],
        );
        let s = arg_set(["s"]);
        let r = attack("a", "b");
        let e = UncertainElement::Att(r.clone());
        assert_eq!(
            char_relevant_gr_outside(&i, &s, &r, Action::Addition, CAP).unwrap(),
            Some(true)
        );
        assert!(relevant_brute(&i, &s, st("co-true"), &e, Action::Addition, CAP).unwrap());
        assert!(!relevant_brute(&i, &s, st("gr-true"), &e, Action::Addition, CAP).unwrap());
    }

    #[test]
    fn grounded_annotation() {
        let att = fixtures::running_example_atiaf();
        let s = arg_set(["a", "b", "w"]);
        let rep = relevance_report(&att, &s, st("gr-true"), ReportMode::Auto, CAP).unwrap();
        let fg = rep.element(&UncertainElement::att("f", "g")).unwrap();
        assert_eq!(fg.grounded_partial, Some(fg.add_relevant));
        assert_eq!(
            rep.element(&UncertainElement::att("f", "b"))
                .unwrap()
                .grounded_partial,
            None
        );
    }
}
