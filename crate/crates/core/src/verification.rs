//! Possible and necessary verification, and the stability of a set's
//! verification status across all completions.

use std::fmt;
use std::str::FromStr;

use crate::af::{Af, ArgSet, Dense, Semantics};
use crate::error::{Error, Result};
use crate::iaf::{Action, CompletionSpace, Iaf};
use crate::Cap;

/// `σ-true` or `σ-false`: whether the set is a σ-extension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VerificationStatus {
    pub semantics: Semantics,
    pub value: bool,
}

impl VerificationStatus {
    pub fn new(semantics: Semantics, value: bool) -> Self {
        VerificationStatus { semantics, value }
    }

    pub fn negated(self) -> Self {
        VerificationStatus {
            value: !self.value,
            ..self
        }
    }
}

impl fmt::Display for VerificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.semantics, self.value)
    }
}

impl FromStr for VerificationStatus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (sem, value) = s.split_once('-').ok_or_else(|| {
            Error::InvalidParameter(format!("status `{s}` is not of the form sem-true|false"))
        })?;
        let value = match value {
            "true" => true,
            "false" => false,
            other => {
                return Err(Error::InvalidParameter(format!(
                    "status value `{other}` must be true or false"
                )))
            }
        };
        Ok(VerificationStatus::new(sem.parse()?, value))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilityAnswer {
    StableTrue,
    StableFalse,
    Unstable,
}

impl StabilityAnswer {
    pub fn is_stable(self) -> bool {
        self != StabilityAnswer::Unstable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StabilityAnswer::StableTrue => "stable-true",
            StabilityAnswer::StableFalse => "stable-false",
            StabilityAnswer::Unstable => "unstable",
        }
    }
}

impl fmt::Display for StabilityAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How possible/necessary verification is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    /// Enumerate every completion.
    Brute,
    /// Evaluate a single extremal completion; ad and st only.
    Fast,
    /// Fast where available, otherwise brute.
    #[default]
    Auto,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "fast" => Ok(Method::Fast),
            "auto" => Ok(Method::Auto),
            other => Err(Error::InvalidParameter(format!(
                "unknown method `{other}` (expected brute, fast or auto)"
            ))),
        }
    }
}

fn has_fast_path(sem: Semantics) -> bool {
    matches!(sem, Semantics::Admissible | Semantics::Stable)
}

/// Whether `s` is a `sem`-extension of `af`; a set that is not contained in
/// the frame is not an extension.
pub fn holds_in(af: &Af, s: &ArgSet, sem: Semantics, cap: Cap) -> Result<bool> {
    let dense = Dense::new(af);
    match dense.bits_of(s) {
        Some(bits) => dense.verify(&bits, sem, cap),
        None => Ok(false),
    }
}

fn use_fast(sem: Semantics, method: Method) -> Result<bool> {
    match method {
        Method::Brute => Ok(false),
        Method::Auto => Ok(has_fast_path(sem)),
        Method::Fast if has_fast_path(sem) => Ok(true),
        Method::Fast => Err(Error::FastPathUnsupported(sem)),
    }
}

/// Is there a completion in which `s` is a `sem`-extension?
pub fn posver(iaf: &Iaf, s: &ArgSet, sem: Semantics, method: Method, cap: Cap) -> Result<bool> {
    iaf.check_subset(s)?;
    if use_fast(sem, method)? {
        return holds_in(&optimistic_completion(iaf, s)?, s, sem, cap);
    }
    for af in iaf.completions(cap)? {
        if holds_in(&af, s, sem, cap)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Is `s` a `sem`-extension in every completion?
pub fn necver(iaf: &Iaf, s: &ArgSet, sem: Semantics, method: Method, cap: Cap) -> Result<bool> {
    iaf.check_subset(s)?;
    if use_fast(sem, method)? {
        return holds_in(&pessimistic_completion(iaf, s)?, s, sem, cap);
    }
    for af in iaf.completions(cap)? {
        if !holds_in(&af, s, sem, cap)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn stability_status(
    iaf: &Iaf,
    s: &ArgSet,
    sem: Semantics,
    cap: Cap,
) -> Result<StabilityAnswer> {
    stability_with(iaf, s, sem, Method::Auto, cap)
}

pub fn stability_with(
    iaf: &Iaf,
    s: &ArgSet,
    sem: Semantics,
    method: Method,
    cap: Cap,
) -> Result<StabilityAnswer> {
    if necver(iaf, s, sem, method, cap)? {
        Ok(StabilityAnswer::StableTrue)
    } else if !posver(iaf, s, sem, method, cap)? {
        Ok(StabilityAnswer::StableFalse)
    } else {
        Ok(StabilityAnswer::Unstable)
    }
}

/// The completion most favourable to `s` being admissible or stable.
///
/// Uncertain members of `s` are present, other uncertain arguments absent;
/// the only uncertain attacks kept are those from `s` to present arguments
/// outside it.
pub fn optimistic_completion(iaf: &Iaf, s: &ArgSet) -> Result<Af> {
    iaf.check_subset(s)?;
    let mut args = iaf.args().clone();
    args.extend(iaf.uncertain_args().intersection(s).cloned());
    let attacks = iaf
        .attacks()
        .iter()
        .filter(|(a, b)| args.contains(a) && args.contains(b))
        .chain(iaf.uncertain_attacks().iter().filter(|(a, b)| {
            s.contains(a) && !s.contains(b) && args.contains(a) && args.contains(b)
        }))
        .cloned()
        .collect();
    Ok(Af::from_parts_unchecked(args, attacks))
}

/// The completion least favourable to `s` being admissible or stable.
///
/// Uncertain members of `s` are absent, every other uncertain argument is
/// present, and every uncertain attack is kept except those leaving `s`.
pub fn pessimistic_completion(iaf: &Iaf, s: &ArgSet) -> Result<Af> {
    iaf.check_subset(s)?;
    let mut args = iaf.args().clone();
    args.extend(iaf.uncertain_args().difference(s).cloned());
    let attacks = iaf
        .attacks()
        .iter()
        .filter(|(a, b)| args.contains(a) && args.contains(b))
        .chain(iaf.uncertain_attacks().iter().filter(|(a, b)| {
            !(s.contains(a) && !s.contains(b)) && args.contains(a) && args.contains(b)
        }))
        .cloned()
        .collect();
    Ok(Af::from_parts_unchecked(args, attacks))
}

/// Whether `s` is a σ-extension, tabulated over every completion of a frame.
///
/// Non-canonical masks are looked up through their normal form, so a table
/// answers queries about any partial completion reachable by deciding bits.
pub struct CompletionTable<'a> {
    space: CompletionSpace<'a>,
    holds: Vec<bool>,
}

impl<'a> CompletionTable<'a> {
    pub fn new(iaf: &'a Iaf, s: &ArgSet, sem: Semantics, cap: Cap) -> Result<Self> {
        iaf.check_subset(s)?;
        let space = CompletionSpace::new(iaf, cap)?;
        let mut holds = vec![false; 1usize << space.len()];
        for m in space.canonical_masks().collect::<Vec<_>>() {
            holds[m as usize] = holds_in(&space.completion(m), s, sem, cap)?;
        }
        Ok(CompletionTable { space, holds })
    }

    pub fn space(&self) -> &CompletionSpace<'a> {
        &self.space
    }

    pub fn holds(&self, mask: u64) -> bool {
        self.holds[self.space.normalize(mask) as usize]
    }

    pub fn posver(&self) -> bool {
        self.space.canonical_masks().any(|m| self.holds[m as usize])
    }

    pub fn necver(&self) -> bool {
        self.space.canonical_masks().all(|m| self.holds[m as usize])
    }

    pub fn stability(&self) -> StabilityAnswer {
        if self.necver() {
            StabilityAnswer::StableTrue
        } else if !self.posver() {
            StabilityAnswer::StableFalse
        } else {
            StabilityAnswer::Unstable
        }
    }

    /// Canonical masks of the completions of the frame after deciding `bit`.
    pub fn masks_after(&self, bit: usize, action: Action) -> impl Iterator<Item = u64> + '_ {
        let own = 1u64 << bit;
        let need = self.space.requires(bit);
        self.space.canonical_masks().filter(move |&m| match action {
            Action::Removal => m & own == 0,
            // An added attack with an absent endpoint disappears again.
            Action::Addition => m & own != 0 || m & need != need,
        })
    }

    /// Is some completion of the decided frame one where the status is `value`?
    pub fn attains_after(&self, bit: usize, action: Action, value: bool) -> bool {
        self.masks_after(bit, action)
            .any(|m| self.holds[m as usize] == value)
    }

    /// Relevance of deciding `bit` by `action` for reaching `value`.
    pub fn relevant(&self, bit: usize, action: Action, value: bool) -> bool {
        let own = 1u64 << bit;
        self.space.masks_fixing_all_but(bit).any(|m| {
            let plus = self.holds(m | own) == value;
            let minus = self.holds(m) == value;
            match action {
                Action::Addition => plus && !minus,
                Action::Removal => minus && !plus,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::arg_set;
    use crate::fixtures;

    const CAP: Cap = Cap(20);

    #[test]
    fn posver_examples() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        for m in [Method::Brute, Method::Fast, Method::Auto] {
            assert!(posver(&ex, &s, Semantics::Admissible, m, CAP).unwrap());
            assert!(!posver(&ex, &s, Semantics::Stable, m, CAP).unwrap());
            assert!(posver(&ex, &ArgSet::new(), Semantics::Admissible, m, CAP).unwrap());
        }
    }

    #[test]
    fn necver_examples() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        for m in [Method::Brute, Method::Fast] {
            assert!(!necver(&ex, &s, Semantics::Admissible, m, CAP).unwrap());
            assert!(necver(&ex, &ArgSet::new(), Semantics::Admissible, m, CAP).unwrap());
        }
        let single = Iaf::from_names(&["a"], &[], &[], &[]);
        assert!(necver(
            &single,
            &arg_set(["a"]),
            Semantics::Grounded,
            Method::Auto,
            CAP
        )
        .unwrap());
    }

    #[test]
    fn fast_path_is_limited_to_ad_and_st() {
        let ex = fixtures::running_example();
        let err = posver(&ex, &ArgSet::new(), Semantics::Complete, Method::Fast, CAP).unwrap_err();
        assert_eq!(err, Error::FastPathUnsupported(Semantics::Complete));
    }

    #[test]
    fn stability_examples() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        assert_eq!(
            stability_status(&ex, &s, Semantics::Admissible, CAP).unwrap(),
            StabilityAnswer::Unstable
        );
        assert_eq!(
            stability_status(&ex, &s, Semantics::Stable, CAP).unwrap(),
            StabilityAnswer::StableFalse
        );
        let plain = Iaf::from_names(&["a", "b"], &[], &[("a", "b")], &[]);
        assert_eq!(
            stability_status(&plain, &arg_set(["a"]), Semantics::Stable, CAP).unwrap(),
            StabilityAnswer::StableTrue
        );
    }

    #[test]
    fn uncertain_member_defeats_necessity() {
        let i = Iaf::from_names(&["a"], &["b"], &[], &[]);
        let s = arg_set(["a", "b"]);
        for sem in [Semantics::Admissible, Semantics::Stable] {
            assert!(!necver(&i, &s, sem, Method::Fast, CAP).unwrap());
            assert!(!necver(&i, &s, sem, Method::Brute, CAP).unwrap());
            assert!(posver(&i, &s, sem, Method::Fast, CAP).unwrap());
        }
    }

    #[test]
    fn table_matches_enumeration() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        for sem in Semantics::ALL {
            let table = CompletionTable::new(&ex, &s, sem, CAP).unwrap();
            assert_eq!(
                table.posver(),
                posver(&ex, &s, sem, Method::Brute, CAP).unwrap()
            );
            assert_eq!(
                table.necver(),
                necver(&ex, &s, sem, Method::Brute, CAP).unwrap()
            );
        }
    }

    #[test]
    fn status_parsing() {
        let st: VerificationStatus = "co-true".parse().unwrap();
        assert_eq!(st, VerificationStatus::new(Semantics::Complete, true));
        assert_eq!(st.to_string(), "co-true");
        assert!("co-maybe".parse::<VerificationStatus>().is_err());
        assert!("cotrue".parse::<VerificationStatus>().is_err());
    }
}
