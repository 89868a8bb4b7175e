//! Dung argumentation frameworks and the five extension-based semantics.
//!
//! Sets and relations are kept in ordered collections so that every
//! enumeration is reproducible. Evaluation goes through a dense bitset
//! view built on demand.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::Cap;

/// Interned argument name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(Arc<str>);

impl ArgumentId {
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(ArgumentId(Arc::from(name)))
        } else {
            Err(Error::InvalidName(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ArgumentId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArgumentId::new(s)
    }
}

pub type ArgSet = BTreeSet<ArgumentId>;

/// An ordered pair `(attacker, target)`.
pub type Attack = (ArgumentId, ArgumentId);

/// Builds an [`ArgSet`] from names, panicking on invalid identifiers.
///
/// Meant for fixtures and tests.
pub fn arg_set<'a>(names: impl IntoIterator<Item = &'a str>) -> ArgSet {
    names
        .into_iter()
        .map(|n| ArgumentId::new(n).expect("valid argument name"))
        .collect()
}

/// Builds an attack pair, panicking on invalid identifiers.
pub fn attack(from: &str, to: &str) -> Attack {
    (
        ArgumentId::new(from).expect("valid argument name"),
        ArgumentId::new(to).expect("valid argument name"),
    )
}

/// Formats a set as `{a,b,c}`.
pub fn format_set(set: &ArgSet) -> String {
    let names: Vec<&str> = set.iter().map(|a| a.as_str()).collect();
    format!("{{{}}}", names.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Semantics {
    Admissible,
    Stable,
    Complete,
    Grounded,
    Preferred,
}

impl Semantics {
    pub const ALL: [Semantics; 5] = [
        Semantics::Admissible,
        Semantics::Stable,
        Semantics::Complete,
        Semantics::Grounded,
        Semantics::Preferred,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            Semantics::Admissible => "ad",
            Semantics::Stable => "st",
            Semantics::Complete => "co",
            Semantics::Grounded => "gr",
            Semantics::Preferred => "pr",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ad" => Ok(Semantics::Admissible),
            "st" => Ok(Semantics::Stable),
            "co" => Ok(Semantics::Complete),
            "gr" => Ok(Semantics::Grounded),
            "pr" => Ok(Semantics::Preferred),
            other => Err(Error::InvalidParameter(format!(
                "unknown semantics `{other}` (expected ad, st, co, gr or pr)"
            ))),
        }
    }
}

/// A certain-only framework `<args, attacks>`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Af {
    args: BTreeSet<ArgumentId>,
    attacks: BTreeSet<Attack>,
}

impl Af {
    pub fn new(
        args: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = Attack>,
    ) -> Result<Self> {
        let args: BTreeSet<_> = args.into_iter().collect();
        let attacks: BTreeSet<_> = attacks.into_iter().collect();
        for (a, b) in &attacks {
            for end in [a, b] {
                if !args.contains(end) {
                    return Err(Error::UnknownArgument(end.clone()));
                }
            }
        }
        Ok(Af { args, attacks })
    }

    /// Convenience constructor from string names; panics on malformed input.
    pub fn from_names(args: &[&str], attacks: &[(&str, &str)]) -> Self {
        Af::new(
            arg_set(args.iter().copied()),
            attacks.iter().map(|(a, b)| attack(a, b)),
        )
        .expect("well-formed framework")
    }

    pub(crate) fn from_parts_unchecked(
        args: BTreeSet<ArgumentId>,
        attacks: BTreeSet<Attack>,
    ) -> Self {
        Af { args, attacks }
    }

    pub fn args(&self) -> &BTreeSet<ArgumentId> {
        &self.args
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    pub fn contains_attack(&self, from: &ArgumentId, to: &ArgumentId) -> bool {
        self.attacks.contains(&(from.clone(), to.clone()))
    }

    fn check_subset(&self, s: &ArgSet) -> Result<()> {
        match s.iter().find(|a| !self.args.contains(*a)) {
            Some(a) => Err(Error::UnknownArgument(a.clone())),
            None => Ok(()),
        }
    }
}

/// Dense view of an [`Af`]: arguments are indexed by their sorted position.
pub(crate) struct Dense {
    names: Vec<ArgumentId>,
    attackers: Vec<FixedBitSet>,
    targets: Vec<FixedBitSet>,
}

impl Dense {
    pub(crate) fn new(af: &Af) -> Self {
        let names: Vec<ArgumentId> = af.args.iter().cloned().collect();
        let n = names.len();
        let mut attackers = vec![FixedBitSet::with_capacity(n); n];
        let mut targets = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in &af.attacks {
            let i = names.binary_search(a).expect("attack endpoint in args");
            let j = names.binary_search(b).expect("attack endpoint in args");
            targets[i].insert(j);
            attackers[j].insert(i);
        }
        Dense {
            names,
            attackers,
            targets,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.names.len()
    }

    pub(crate) fn index_of(&self, a: &ArgumentId) -> Option<usize> {
        self.names.binary_search(a).ok()
    }

    /// Indexes a set, or `None` when some member is missing from the frame.
    pub(crate) fn bits_of(&self, s: &ArgSet) -> Option<FixedBitSet> {
        let mut bits = FixedBitSet::with_capacity(self.len());
        for a in s {
            bits.insert(self.index_of(a)?);
        }
        Some(bits)
    }

    pub(crate) fn to_set(&self, bits: &FixedBitSet) -> ArgSet {
        bits.ones().map(|i| self.names[i].clone()).collect()
    }

    pub(crate) fn targets(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for i in s.ones() {
            out.union_with(&self.targets[i]);
        }
        out
    }

    pub(crate) fn attackers(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for i in s.ones() {
            out.union_with(&self.attackers[i]);
        }
        out
    }

    /// Arguments whose every attacker lies in `hit`.
    fn defended_by_targets(&self, hit: &FixedBitSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for i in 0..self.len() {
            if self.attackers[i].is_subset(hit) {
                out.insert(i);
            }
        }
        out
    }

    pub(crate) fn characteristic(&self, s: &FixedBitSet) -> FixedBitSet {
        self.defended_by_targets(&self.targets(s))
    }

    pub(crate) fn is_admissible(&self, s: &FixedBitSet) -> bool {
        let hit = self.targets(s);
        if !hit.is_disjoint(s) {
            return false;
        }
        s.ones().all(|i| self.attackers[i].is_subset(&hit))
    }

    pub(crate) fn is_stable(&self, s: &FixedBitSet) -> bool {
        let hit = self.targets(s);
        if !hit.is_disjoint(s) {
            return false;
        }
        hit.count_ones(..) + s.count_ones(..) == self.len()
    }

    pub(crate) fn is_complete(&self, s: &FixedBitSet) -> bool {
        let hit = self.targets(s);
        if !hit.is_disjoint(s) {
            return false;
        }
        let defended = self.defended_by_targets(&hit);
        s.is_subset(&defended) && defended.is_subset(s)
    }

    pub(crate) fn grounded(&self) -> FixedBitSet {
        let mut current = FixedBitSet::with_capacity(self.len());
        loop {
            let next = self.characteristic(&current);
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Admissible and no admissible strict superset.
    ///
    /// Candidates for growth are restricted to arguments that neither attack
    /// nor are attacked by `s` and that do not attack themselves; any other
    /// addition breaks conflict-freeness.
    pub(crate) fn is_preferred(&self, s: &FixedBitSet, cap: Cap) -> Result<bool> {
        if !self.is_admissible(s) {
            return Ok(false);
        }
        let blocked = {
            let mut b = self.targets(s);
            b.union_with(&self.attackers(s));
            b.union_with(s);
            b
        };
        let candidates: Vec<usize> = (0..self.len())
            .filter(|&i| !blocked.contains(i) && !self.targets[i].contains(i))
            .collect();
        if candidates.len() > cap.0.min(63) {
            return Err(Error::CapExceeded {
                what: "preferred maximality search",
                size: candidates.len(),
                cap: cap.0.min(63),
            });
        }
        let mut grown = s.clone();
        for mask in 1u64..(1u64 << candidates.len()) {
            grown.clone_from(s);
            for (k, &i) in candidates.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    grown.insert(i);
                }
            }
            if self.is_admissible(&grown) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn verify(&self, s: &FixedBitSet, sem: Semantics, cap: Cap) -> Result<bool> {
        Ok(match sem {
            Semantics::Admissible => self.is_admissible(s),
            Semantics::Stable => self.is_stable(s),
            Semantics::Complete => self.is_complete(s),
            Semantics::Grounded => *s == self.grounded(),
            Semantics::Preferred => self.is_preferred(s, cap)?,
        })
    }
}

/// `S⁺`: arguments attacked by some member of `s`.
pub fn targets(af: &Af, s: &ArgSet) -> Result<ArgSet> {
    af.check_subset(s)?;
    Ok(af
        .attacks
        .iter()
        .filter(|(a, _)| s.contains(a))
        .map(|(_, b)| b.clone())
        .collect())
}

/// `S⁻`: arguments attacking some member of `s`.
pub fn attackers(af: &Af, s: &ArgSet) -> Result<ArgSet> {
    af.check_subset(s)?;
    Ok(af
        .attacks
        .iter()
        .filter(|(_, b)| s.contains(b))
        .map(|(a, _)| a.clone())
        .collect())
}

pub fn is_conflict_free(af: &Af, s: &ArgSet) -> Result<bool> {
    af.check_subset(s)?;
    Ok(!af
        .attacks
        .iter()
        .any(|(a, b)| s.contains(a) && s.contains(b)))
}

/// The characteristic function: every argument all of whose attackers are
/// attacked by `s`.
pub fn characteristic(af: &Af, s: &ArgSet) -> Result<ArgSet> {
    af.check_subset(s)?;
    let dense = Dense::new(af);
    let bits = dense.bits_of(s).expect("checked subset");
    Ok(dense.to_set(&dense.characteristic(&bits)))
}

/// Least fixpoint of the characteristic function.
pub fn grounded_extension(af: &Af) -> ArgSet {
    let dense = Dense::new(af);
    dense.to_set(&dense.grounded())
}

/// Whether `s` is a `sem`-extension of `af`.
///
/// Preferred maximality is decided by search over the arguments that could
/// still be added, which must not exceed `cap`.
pub fn verify(af: &Af, s: &ArgSet, sem: Semantics, cap: Cap) -> Result<bool> {
    af.check_subset(s)?;
    let dense = Dense::new(af);
    let bits = dense.bits_of(s).expect("checked subset");
    dense.verify(&bits, sem, cap)
}

/// All `sem`-extensions, in ascending set order.
pub fn extensions(af: &Af, sem: Semantics, cap: Cap) -> Result<Vec<ArgSet>> {
    let dense = Dense::new(af);
    if sem == Semantics::Grounded {
        return Ok(vec![dense.to_set(&dense.grounded())]);
    }
    if dense.len() > cap.0.min(63) {
        return Err(Error::CapExceeded {
            what: "extension enumeration over arguments",
            size: dense.len(),
            cap: cap.0.min(63),
        });
    }
    let conflict_free = conflict_free_sets(&dense);
    let admissible: Vec<&FixedBitSet> = conflict_free
        .iter()
        .filter(|s| dense.is_admissible(s))
        .collect();
    let chosen: Vec<FixedBitSet> = match sem {
        Semantics::Admissible => admissible.into_iter().cloned().collect(),
        Semantics::Stable => conflict_free
            .iter()
            .filter(|s| dense.is_stable(s))
            .cloned()
            .collect(),
        Semantics::Complete => admissible
            .into_iter()
            .filter(|s| dense.is_complete(s))
            .cloned()
            .collect(),
        Semantics::Preferred => admissible
            .iter()
            .filter(|s| {
                !admissible
                    .iter()
                    .any(|t| t.count_ones(..) > s.count_ones(..) && s.is_subset(t))
            })
            .map(|s| (*s).clone())
            .collect(),
        Semantics::Grounded => unreachable!(),
    };
    let mut out: Vec<ArgSet> = chosen.iter().map(|s| dense.to_set(s)).collect();
    out.sort();
    Ok(out)
}

/// Depth-first enumeration of conflict-free sets, pruning on the first conflict.
fn conflict_free_sets(dense: &Dense) -> Vec<FixedBitSet> {
    fn go(dense: &Dense, i: usize, current: &mut FixedBitSet, out: &mut Vec<FixedBitSet>) {
        if i == dense.len() {
            out.push(current.clone());
            return;
        }
        go(dense, i + 1, current, out);
        let self_attack = dense.targets[i].contains(i);
        let clash = current
            .ones()
            .any(|j| dense.targets[i].contains(j) || dense.targets[j].contains(i));
        if !self_attack && !clash {
            current.insert(i);
            go(dense, i + 1, current, out);
            current.set(i, false);
        }
    }
    let mut out = Vec::new();
    let mut current = FixedBitSet::with_capacity(dense.len());
    go(dense, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Certain part of the running example frame.
    fn f1() -> Af {
        Af::from_names(
            &["a", "b", "c", "e", "f", "g"],
            &[("b", "c"), ("e", "f"), ("f", "e")],
        )
    }

    fn abc() -> Af {
        Af::from_names(&["a", "b", "c"], &[("b", "c")])
    }

    #[test]
    fn names_are_validated() {
        assert!(ArgumentId::new("a_1").is_ok());
        assert!(ArgumentId::new("_x").is_ok());
        assert!(ArgumentId::new("1a").is_err());
        assert!(ArgumentId::new("").is_err());
        assert!(ArgumentId::new("a-b").is_err());
    }

    #[test]
    fn dangling_attack_is_rejected() {
        let err = Af::new(arg_set(["a"]), [attack("a", "b")]).unwrap_err();
        assert_eq!(err, Error::UnknownArgument(ArgumentId::new("b").unwrap()));
    }

    #[test]
    fn targets_and_attackers() {
        assert_eq!(
            targets(&abc(), &arg_set(["a", "b"])).unwrap(),
            arg_set(["c"])
        );
        assert_eq!(targets(&abc(), &ArgSet::new()).unwrap(), ArgSet::new());
        assert_eq!(targets(&f1(), &arg_set(["e"])).unwrap(), arg_set(["f"]));
        assert_eq!(attackers(&abc(), &arg_set(["c"])).unwrap(), arg_set(["b"]));
        assert_eq!(attackers(&abc(), &ArgSet::new()).unwrap(), ArgSet::new());
        assert_eq!(
            attackers(&f1(), &arg_set(["e", "f"])).unwrap(),
            arg_set(["e", "f"])
        );
    }

    #[test]
    fn domain_errors() {
        let err = targets(&abc(), &arg_set(["z"])).unwrap_err();
        assert!(matches!(err, Error::UnknownArgument(_)));
        assert!(verify(
            &abc(),
            &arg_set(["z"]),
            Semantics::Admissible,
            Cap::default()
        )
        .is_err());
        assert!(characteristic(&abc(), &arg_set(["z"])).is_err());
    }

    #[test]
    fn conflict_freeness() {
        assert!(is_conflict_free(&f1(), &arg_set(["a", "b"])).unwrap());
        assert!(!is_conflict_free(&f1(), &arg_set(["e", "f"])).unwrap());
        let selfish = Af::from_names(&["a"], &[("a", "a")]);
        assert!(!is_conflict_free(&selfish, &arg_set(["a"])).unwrap());
    }

    #[test]
    fn characteristic_function() {
        let free = Af::from_names(&["a", "b"], &[]);
        assert_eq!(
            characteristic(&free, &ArgSet::new()).unwrap(),
            arg_set(["a", "b"])
        );
        assert_eq!(
            characteristic(&f1(), &ArgSet::new()).unwrap(),
            arg_set(["a", "b", "g"])
        );
        assert_eq!(
            characteristic(&f1(), &arg_set(["e"])).unwrap(),
            arg_set(["a", "b", "e", "g"])
        );
    }

    #[test]
    fn grounded() {
        let free = Af::from_names(&["a", "b"], &[]);
        assert_eq!(grounded_extension(&free), arg_set(["a", "b"]));
        assert_eq!(grounded_extension(&f1()), arg_set(["a", "b", "g"]));
        let ab = Af::from_names(&["a", "b"], &[("a", "b")]);
        assert_eq!(grounded_extension(&ab), arg_set(["a"]));
        assert_eq!(grounded_extension(&Af::default()), ArgSet::new());
    }

    #[test]
    fn verification_examples() {
        let cap = Cap::default();
        assert!(verify(&f1(), &arg_set(["a", "b"]), Semantics::Admissible, cap).unwrap());
        assert!(!verify(&f1(), &arg_set(["a", "b"]), Semantics::Complete, cap).unwrap());
        assert!(verify(&abc(), &ArgSet::new(), Semantics::Admissible, cap).unwrap());
        // {a,b,g,e} attacks exactly {c,f}, which is everything outside it.
        assert!(verify(
            &f1(),
            &arg_set(["a", "b", "e", "g"]),
            Semantics::Stable,
            cap
        )
        .unwrap());
    }

    #[test]
    fn extension_examples() {
        let cap = Cap::default();
        let single = Af::from_names(&["a"], &[]);
        assert_eq!(
            extensions(&single, Semantics::Preferred, cap).unwrap(),
            vec![arg_set(["a"])]
        );
        let sym = Af::from_names(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert_eq!(
            extensions(&sym, Semantics::Preferred, cap).unwrap(),
            vec![arg_set(["a"]), arg_set(["b"])]
        );
        assert_eq!(
            extensions(&f1(), Semantics::Grounded, cap).unwrap(),
            vec![arg_set(["a", "b", "g"])]
        );
    }

    #[test]
    fn enumeration_cap() {
        let names: Vec<String> = (0..5).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let af = Af::from_names(&refs, &[]);
        let err = extensions(&af, Semantics::Admissible, Cap(4)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 4, .. }));
        assert!(extensions(&af, Semantics::Grounded, Cap(4)).is_ok());
    }

    #[test]
    fn semantics_round_trip_names() {
        for sem in Semantics::ALL {
            assert_eq!(sem.short_name().parse::<Semantics>().unwrap(), sem);
        }
        assert!("ideal".parse::<Semantics>().is_err());
    }
}
