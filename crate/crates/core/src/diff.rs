//! Differential testing: characterization-based answers against exhaustive
//! enumeration, and the structural properties relevance must satisfy, on
//! seeded random frames.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::af::{format_set, ArgSet, ArgumentId, Semantics};
use crate::error::{Error, Result};
use crate::format::emit_iaf;
use crate::iaf::{Action, Iaf, UncertainElement};
use crate::reductions::{necver_pr_gadget, pi2sat_check, posver_pr_gadget, to_atiaf, QbfInstance};
use crate::relevance::{
    relevant_brute, report_impl, strongly_relevant, strongly_relevant_direct, RelevanceReport,
    ReportMode,
};
use crate::verification::{necver, posver, CompletionTable, Method, VerificationStatus};
use crate::Cap;

#[derive(Clone, Debug, PartialEq)]
pub struct DiffConfig {
    pub semantics: Vec<Semantics>,
    pub trials: usize,
    pub seed: u64,
    /// Upper bound on certain arguments per frame.
    pub max_args: usize,
    pub max_uncertain_args: usize,
    pub max_uncertain_attacks: usize,
    pub statuses: Vec<bool>,
    pub cap: Cap,
    /// Flip one characterization answer on purpose, to check that the
    /// harness notices.
    pub break_characterization: bool,
}

impl Default for DiffConfig {
    fn default() -> Self {
        DiffConfig {
            semantics: Semantics::ALL.to_vec(),
            trials: 300,
            seed: 0,
            max_args: 6,
            max_uncertain_args: 2,
            max_uncertain_attacks: 4,
            statuses: vec![true, false],
            cap: Cap::default(),
            break_characterization: false,
        }
    }
}

impl DiffConfig {
    pub fn validate(&self) -> Result<()> {
        let uncertain = self.max_uncertain_args + self.max_uncertain_attacks;
        if uncertain > self.cap.0 {
            return Err(Error::InvalidParameter(format!(
                "up to {uncertain} uncertain elements exceed the cap of {}",
                self.cap.0
            )));
        }
        if self.max_args == 0 {
            return Err(Error::InvalidParameter(
                "max_args must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub trial: usize,
    pub query: String,
    pub detail: String,
    /// The frame in the text format.
    pub frame: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub trials: usize,
    pub checks: Vec<CheckTally>,
    pub first_counterexample: Option<Counterexample>,
}

impl DiffReport {
    pub fn disagreements(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.disagreements() == 0
    }

    pub fn tally(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn summary(&self) -> String {
        let mut out = format!(
            "{} trials, {} disagreements\n",
            self.trials,
            self.disagreements()
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  {:<28} {:>8} checked {:>4} failed\n",
                c.name, c.checked, c.violations
            ));
        }
        if let Some(cx) = &self.first_counterexample {
            out.push_str(&format!(
                "first counterexample: {} (trial {}, query {}): {}\n{}",
                cx.check, cx.trial, cx.query, cx.detail, cx.frame
            ));
        }
        out
    }
}

struct Recorder {
    checks: Vec<CheckTally>,
    first: Option<Counterexample>,
}

impl Recorder {
    fn new(names: &[&'static str]) -> Self {
        Recorder {
            checks: names
                .iter()
                .map(|&name| CheckTally {
                    name,
                    checked: 0,
                    violations: 0,
                })
                .collect(),
            first: None,
        }
    }

    fn record(
        &mut self,
        name: &'static str,
        ok: bool,
        ctx: (usize, &Iaf, &ArgSet),
        detail: impl FnOnce() -> String,
    ) {
        let tally = self
            .checks
            .iter_mut()
            .find(|c| c.name == name)
            .expect("registered check");
        tally.checked += 1;
        if !ok {
            tally.violations += 1;
            if self.first.is_none() {
                self.first = Some(Counterexample {
                    check: name,
                    trial: ctx.0,
                    query: format_set(ctx.2),
                    detail: detail(),
                    frame: emit_iaf(ctx.1),
                });
            }
        }
    }

    fn finish(self, trials: usize) -> DiffReport {
        DiffReport {
            trials,
            checks: self.checks,
            first_counterexample: self.first,
        }
    }
}

pub const DIFF_CHECKS: [&str; 13] = [
    "characterization_vs_brute",
    "strong_auto_vs_brute",
    "duality",
    "strong_inclusion",
    "ad_st_exclusive",
    "stability_iff_irrelevant",
    "fast_vs_brute",
    "srel_alt_vs_direct",
    "atiaf_round_trip",
    "grounded_partial",
    "grounded_within_complete",
    "strong_add_blocks_removal",
    "literal_vs_table",
];

/// A frame with `1..=max_args` certain and `0..=max_uncertain_args`
/// uncertain arguments, random attacks, and up to `max_uncertain_attacks`
/// of them uncertain.
pub fn random_frame(c: &DiffConfig, rng: &mut impl Rng) -> Iaf {
    let certain = rng.random_range(1..=c.max_args);
    let uncertain = rng.random_range(0..=c.max_uncertain_args);
    let names: Vec<ArgumentId> = (0..certain + uncertain)
        .map(|i| ArgumentId::new(&format!("a{i}")).expect("valid name"))
        .collect();
    let mut shuffled = names.clone();
    shuffled.shuffle(rng);
    let uargs: BTreeSet<ArgumentId> = shuffled[..uncertain].iter().cloned().collect();
    let args: BTreeSet<ArgumentId> = shuffled[uncertain..].iter().cloned().collect();
    let p_att = rng.random_range(0.15..0.45);
    let mut all = Vec::new();
    for a in &names {
        for b in &names {
            let p = if a == b { p_att / 3.0 } else { p_att };
            if rng.random_bool(p) {
                all.push((a.clone(), b.clone()));
            }
        }
    }
    all.shuffle(rng);
    let k = rng.random_range(0..=c.max_uncertain_attacks).min(all.len());
    let uatts: BTreeSet<_> = all[..k].iter().cloned().collect();
    let atts: BTreeSet<_> = all[k..].iter().cloned().collect();
    Iaf::from_parts(args, uargs, atts, uatts)
}

/// Each certain argument with probability ½, each uncertain one with ¼.
pub fn random_query(iaf: &Iaf, rng: &mut impl Rng) -> ArgSet {
    let mut s = ArgSet::new();
    for a in iaf.args() {
        if rng.random_bool(0.5) {
            s.insert(a.clone());
        }
    }
    for a in iaf.uncertain_args() {
        if rng.random_bool(0.25) {
            s.insert(a.clone());
        }
    }
    s
}

/// The seeded corpus: frames and query sets, trial by trial.
pub fn corpus(c: &DiffConfig) -> Vec<(Iaf, ArgSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    (0..c.trials)
        .map(|_| {
            let f = random_frame(c, &mut rng);
            let s = random_query(&f, &mut rng);
            (f, s)
        })
        .collect()
}

fn has_characterization(sem: Semantics) -> bool {
    matches!(
        sem,
        Semantics::Admissible | Semantics::Stable | Semantics::Complete
    )
}

fn describe(e: &UncertainElement, a: Action, j: VerificationStatus) -> String {
    format!("{a} of {e} under {j}")
}

pub fn diff_run(c: &DiffConfig) -> Result<DiffReport> {
    c.validate()?;
    let mut rec = Recorder::new(&DIFF_CHECKS);
    for (trial, (iaf, s)) in corpus(c).into_iter().enumerate() {
        check_instance(c, trial, &iaf, &s, &mut rec)?;
    }
    Ok(rec.finish(c.trials))
}

fn check_instance(
    c: &DiffConfig,
    trial: usize,
    iaf: &Iaf,
    s: &ArgSet,
    rec: &mut Recorder,
) -> Result<()> {
    let ctx = (trial, iaf, s);
    let cap = c.cap;
    let elements = iaf.uncertain_elements();
    let mapping = to_atiaf(iaf);
    let s_att = mapping.map_query(s);

    for &sem in &c.semantics {
        let brute = |value| {
            report_impl(
                iaf,
                s,
                VerificationStatus::new(sem, value),
                ReportMode::Brute,
                cap,
                false,
            )
        };
        let reports: Vec<(bool, RelevanceReport)> = [true, false]
            .into_iter()
            .map(|v| brute(v).map(|r| (v, r)))
            .collect::<Result<_>>()?;
        let of = |v: bool| {
            &reports
                .iter()
                .find(|(x, _)| *x == v)
                .expect("both statuses")
                .1
        };

        for &value in &c.statuses {
            let j = VerificationStatus::new(sem, value);
            let b = of(value);
            let auto = report_impl(iaf, s, j, ReportMode::Auto, cap, c.break_characterization)?;
            if has_characterization(sem) {
                rec.record(
                    "characterization_vs_brute",
                    auto.relevance_key() == b.relevance_key(),
                    ctx,
                    || {
                        format!(
                            "{j}: auto {:?} vs brute {:?}",
                            auto.relevance_key(),
                            b.relevance_key()
                        )
                    },
                );
                rec.record(
                    "strong_auto_vs_brute",
                    auto.elements.iter().zip(&b.elements).all(|(x, y)| {
                        x.strongly_add == y.strongly_add && x.strongly_rem == y.strongly_rem
                    }),
                    ctx,
                    || format!("{j}: strong flags differ"),
                );
            }
            if sem == Semantics::Grounded && value {
                let co = report_impl(
                    iaf,
                    s,
                    VerificationStatus::new(Semantics::Complete, true),
                    ReportMode::Brute,
                    cap,
                    false,
                )?;
                for ((row, b_row), co_row) in
                    auto.elements.iter().zip(&b.elements).zip(&co.elements)
                {
                    if let Some(g) = row.grounded_partial {
                        rec.record("grounded_partial", g == b_row.add_relevant, ctx, || {
                            format!(
                                "{}: partial {g} vs brute {}",
                                row.element, b_row.add_relevant
                            )
                        });
                        rec.record(
                            "grounded_within_complete",
                            !b_row.add_relevant || co_row.add_relevant,
                            ctx,
                            || {
                                format!(
                                    "{}: grounded-relevant but not complete-relevant",
                                    row.element
                                )
                            },
                        );
                    }
                }
            }
            for row in &b.elements {
                for a in [Action::Addition, Action::Removal] {
                    if let Some(strong) = row.strongly(a) {
                        rec.record("strong_inclusion", !strong || row.relevant(a), ctx, || {
                            describe(&row.element, a, j)
                        });
                        if strong {
                            rec.record(
                                "strong_add_blocks_removal",
                                !row.relevant(a.opposite()),
                                ctx,
                                || describe(&row.element, a, j),
                            );
                        }
                    }
                }
                if value && matches!(sem, Semantics::Admissible | Semantics::Stable) {
                    rec.record(
                        "ad_st_exclusive",
                        !(row.add_relevant && row.rem_relevant),
                        ctx,
                        || format!("{} under {j}", row.element),
                    );
                }
            }

            let table_att = CompletionTable::new(&mapping.transformed, &s_att, sem, cap)?;
            let table = CompletionTable::new(iaf, s, sem, cap)?;
            for (bit, e) in elements.iter().enumerate() {
                for a in [Action::Addition, Action::Removal] {
                    let here = table.relevant(bit, a, value);
                    let (e_att, a_att) = mapping.map_action(e, a);
                    let bit_att = table_att.space().bit_of(&e_att).expect("mapped element");
                    let there = table_att.relevant(bit_att, a_att, value);
                    rec.record("atiaf_round_trip", here == there, ctx, || {
                        format!("{}: {here} vs {e_att} {a_att}: {there}", describe(e, a, j))
                    });
                    let literal = relevant_brute(iaf, s, j, e, a, cap)?;
                    rec.record("literal_vs_table", literal == here, ctx, || {
                        format!("{}: literal {literal} vs table {here}", describe(e, a, j))
                    });
                    let alt = strongly_relevant(iaf, s, j, e, a, cap);
                    let direct = strongly_relevant_direct(iaf, s, j, e, a, cap);
                    let agree = match (&alt, &direct) {
                        (Ok(x), Ok(y)) => x == y,
                        (Err(Error::UnreachableStatus(_)), Err(Error::UnreachableStatus(_))) => {
                            true
                        }
                        (Err(err), _) | (_, Err(err))
                            if !matches!(err, Error::UnreachableStatus(_)) =>
                        {
                            return Err(err.clone())
                        }
                        _ => false,
                    };
                    rec.record("srel_alt_vs_direct", agree, ctx, || {
                        format!("{}: {alt:?} vs {direct:?}", describe(e, a, j))
                    });
                }
            }
        }

        for (value, a) in [(true, Action::Addition), (true, Action::Removal)] {
            let t = of(value);
            let f = of(!value);
            let ok = t
                .elements
                .iter()
                .zip(&f.elements)
                .all(|(x, y)| x.relevant(a) == y.relevant(a.opposite()));
            rec.record("duality", ok, ctx, || {
                format!("{sem}: {a} under true vs {} under false", a.opposite())
            });
        }

        let stable = of(true).stability.is_stable();
        let irrelevant = reports.iter().all(|(_, r)| {
            r.elements
                .iter()
                .all(|e| !e.add_relevant && !e.rem_relevant)
        });
        rec.record(
            "stability_iff_irrelevant",
            stable == irrelevant,
            ctx,
            || format!("{sem}: {} but irrelevant={irrelevant}", of(true).stability),
        );

        if matches!(sem, Semantics::Admissible | Semantics::Stable) {
            for (name, f) in [("posver", posver as VerFn), ("necver", necver as VerFn)] {
                let fast = f(iaf, s, sem, Method::Fast, cap)?;
                let slow = f(iaf, s, sem, Method::Brute, cap)?;
                rec.record("fast_vs_brute", fast == slow, ctx, || {
                    format!("{name} {sem}: fast {fast} vs brute {slow}")
                });
            }
        }
    }
    Ok(())
}

type VerFn = fn(&Iaf, &ArgSet, Semantics, Method, Cap) -> Result<bool>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetConfig {
    pub atiafs: usize,
    pub max_args: usize,
    pub max_uncertain_attacks: usize,
    pub formulas: usize,
    pub max_vars: usize,
    pub max_clauses: usize,
    pub seed: u64,
    pub cap: Cap,
}

impl Default for GadgetConfig {
    fn default() -> Self {
        GadgetConfig {
            atiafs: 50,
            max_args: 5,
            max_uncertain_attacks: 4,
            formulas: 20,
            max_vars: 4,
            max_clauses: 4,
            seed: 0,
            cap: Cap::default(),
        }
    }
}

pub const GADGET_CHECKS: [&str; 4] = [
    "posver_pr_gadget",
    "necver_pr_gadget",
    "pi2sat_random",
    "pi2sat_two_clause",
];

/// A random formula with `1..=max_vars` variables split between the
/// quantifiers and `1..=max_clauses` clauses of one to three literals.
pub fn random_qbf(c: &GadgetConfig, rng: &mut impl Rng) -> QbfInstance {
    let n = rng.random_range(1..=c.max_vars as u32);
    let nx = rng.random_range(0..=n);
    let clauses = (0..rng.random_range(1..=c.max_clauses))
        .map(|_| {
            let mut vars: Vec<u32> = (1..=n).collect();
            vars.shuffle(rng);
            let len = rng.random_range(1..=3.min(n as usize));
            vars[..len]
                .iter()
                .map(|&v| {
                    if rng.random_bool(0.5) {
                        v as i32
                    } else {
                        -(v as i32)
                    }
                })
                .collect()
        })
        .collect();
    QbfInstance::new(1..=nx, nx + 1..=n, clauses).expect("well-formed by construction")
}

pub fn gadget_run(c: &GadgetConfig) -> Result<DiffReport> {
    let mut rec = Recorder::new(&GADGET_CHECKS);
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let frames = DiffConfig {
        max_args: c.max_args,
        max_uncertain_args: 0,
        max_uncertain_attacks: c.max_uncertain_attacks,
        ..DiffConfig::default()
    };
    for trial in 0..c.atiafs {
        let iaf = random_frame(&frames, &mut rng);
        let s = random_query(&iaf, &mut rng);
        let ctx = (trial, &iaf, &s);
        let p = posver_pr_gadget(&iaf, &s)?.check(c.cap)?;
        rec.record("posver_pr_gadget", p.holds(), ctx, || format!("{p:?}"));
        let n = necver_pr_gadget(&iaf, &s)?.check(c.cap)?;
        rec.record("necver_pr_gadget", n.holds(), ctx, || format!("{n:?}"));
    }
    let empty = (Iaf::default(), ArgSet::new());
    for trial in 0..c.formulas {
        let q = random_qbf(c, &mut rng);
        let r = pi2sat_check(&q, c.cap)?;
        rec.record(
            "pi2sat_random",
            r.holds(),
            (trial, &empty.0, &empty.1),
            || format!("{q}: {r:?}"),
        );
    }
    let q = crate::fixtures::two_clause_qbf();
    let r = pi2sat_check(&q, c.cap)?;
    rec.record(
        "pi2sat_two_clause",
        r.holds() && r.brute,
        (0, &empty.0, &empty.1),
        || format!("{r:?}"),
    );
    Ok(rec.finish(c.atiafs + c.formulas + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(trials: usize) -> DiffConfig {
        DiffConfig {
            trials,
            seed: 11,
            ..DiffConfig::default()
        }
    }

    #[test]
    fn zero_trials() {
        let r = diff_run(&small(0)).unwrap();
        assert!(r.is_clean());
        assert!(r.checks.iter().all(|c| c.checked == 0));
        assert!(r.first_counterexample.is_none());
    }

    #[test]
    fn short_run_is_clean_and_reproducible() {
        let r = diff_run(&small(15)).unwrap();
        assert!(r.is_clean(), "{}", r.summary());
        assert_eq!(r, diff_run(&small(15)).unwrap());
    }

    #[test]
    fn broken_characterization_is_caught() {
        let c = DiffConfig {
            break_characterization: true,
            semantics: vec![Semantics::Admissible],
            ..small(30)
        };
        let r = diff_run(&c).unwrap();
        assert!(r.tally("characterization_vs_brute").unwrap().violations > 0);
        let cx = r.first_counterexample.unwrap();
        assert_eq!(cx.check, "characterization_vs_brute");
        assert!(crate::format::parse_iaf(&cx.frame).is_ok());
    }

    #[test]
    fn corpus_respects_bounds() {
        let c = small(100);
        for (f, s) in corpus(&c) {
            assert!(f.validate().is_empty());
            assert!(f.args().len() <= 6 && f.uncertain_args().len() <= 2);
            assert!(f.uncertain_attacks().len() <= 4);
            assert!(s.is_subset(&f.universe()));
        }
    }

    #[test]
    fn invalid_config() {
        let c = DiffConfig {
            cap: Cap(3),
            ..DiffConfig::default()
        };
        assert!(diff_run(&c).is_err());
    }

    #[test]
    fn short_gadget_run() {
        let c = GadgetConfig {
            atiafs: 5,
            formulas: 3,
            ..GadgetConfig::default()
        };
        let r = gadget_run(&c).unwrap();
        assert!(r.is_clean(), "{}", r.summary());
    }
}
