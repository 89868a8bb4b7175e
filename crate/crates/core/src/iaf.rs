//! Incomplete argumentation frameworks: the four-part frame, its partial
//! completions and completions, and the `±` operators that decide
//! uncertain elements.

use std::collections::BTreeSet;
use std::fmt;

use crate::af::{arg_set, attack, Af, ArgSet, ArgumentId, Attack};
use crate::error::{Error, Result};
use crate::Cap;

/// `<A, A?, R, R?>`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Iaf {
    args: BTreeSet<ArgumentId>,
    uncertain_args: BTreeSet<ArgumentId>,
    attacks: BTreeSet<Attack>,
    uncertain_attacks: BTreeSet<Attack>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    ArgumentOverlap(ArgumentId),
    AttackOverlap(Attack),
    DanglingEndpoint {
        attack: Attack,
        endpoint: ArgumentId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ArgumentOverlap(a) => {
                write!(f, "A∩A?≠∅: `{a}` is both certain and uncertain")
            }
            Violation::AttackOverlap((a, b)) => {
                write!(f, "R∩R?≠∅: ({a},{b}) is both certain and uncertain")
            }
            Violation::DanglingEndpoint {
                attack: (a, b),
                endpoint,
            } => write!(f, "dangling endpoint `{endpoint}` in attack ({a},{b})"),
        }
    }
}

/// An element whose existence is undecided.
///
/// The derived order puts attacks before arguments, each lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UncertainElement {
    Att(Attack),
    Arg(ArgumentId),
}

impl UncertainElement {
    pub fn arg(name: &str) -> Self {
        UncertainElement::Arg(ArgumentId::new(name).expect("valid argument name"))
    }

    pub fn att(from: &str, to: &str) -> Self {
        UncertainElement::Att(attack(from, to))
    }

    pub fn is_argument(&self) -> bool {
        matches!(self, UncertainElement::Arg(_))
    }
}

impl fmt::Display for UncertainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UncertainElement::Att((a, b)) => write!(f, "({a},{b})"),
            UncertainElement::Arg(a) => write!(f, "{a}"),
        }
    }
}

impl fmt::Debug for UncertainElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Deciding an uncertain element one way or the other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Action {
    Addition,
    Removal,
}

impl Action {
    pub fn opposite(self) -> Self {
        match self {
            Action::Addition => Action::Removal,
            Action::Removal => Action::Addition,
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Action::Addition => "addition",
            Action::Removal => "removal",
        })
    }
}

impl Iaf {
    /// Builds a frame, rejecting it when any structural invariant fails.
    pub fn new(
        args: impl IntoIterator<Item = ArgumentId>,
        uncertain_args: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = Attack>,
        uncertain_attacks: impl IntoIterator<Item = Attack>,
    ) -> Result<Self> {
        let iaf = Self::from_parts(args, uncertain_args, attacks, uncertain_attacks);
        let violations = iaf.validate();
        if violations.is_empty() {
            Ok(iaf)
        } else {
            Err(Error::InvalidFrame(violations))
        }
    }

    /// Builds a frame without checking it; see [`Iaf::validate`].
    pub fn from_parts(
        args: impl IntoIterator<Item = ArgumentId>,
        uncertain_args: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = Attack>,
        uncertain_attacks: impl IntoIterator<Item = Attack>,
    ) -> Self {
        Iaf {
            args: args.into_iter().collect(),
            uncertain_args: uncertain_args.into_iter().collect(),
            attacks: attacks.into_iter().collect(),
            uncertain_attacks: uncertain_attacks.into_iter().collect(),
        }
    }

    /// Convenience constructor from string names; panics on malformed input.
    pub fn from_names(
        args: &[&str],
        uncertain_args: &[&str],
        attacks: &[(&str, &str)],
        uncertain_attacks: &[(&str, &str)],
    ) -> Self {
        Iaf::new(
            arg_set(args.iter().copied()),
            arg_set(uncertain_args.iter().copied()),
            attacks.iter().map(|(a, b)| attack(a, b)),
            uncertain_attacks.iter().map(|(a, b)| attack(a, b)),
        )
        .expect("well-formed frame")
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for a in self.args.intersection(&self.uncertain_args) {
            out.push(Violation::ArgumentOverlap(a.clone()));
        }
        for r in self.attacks.intersection(&self.uncertain_attacks) {
            out.push(Violation::AttackOverlap(r.clone()));
        }
        for r in self.attacks.iter().chain(&self.uncertain_attacks) {
            for end in [&r.0, &r.1] {
                if !self.contains_argument(end) {
                    out.push(Violation::DanglingEndpoint {
                        attack: r.clone(),
                        endpoint: end.clone(),
                    });
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    pub fn args(&self) -> &BTreeSet<ArgumentId> {
        &self.args
    }

    pub fn uncertain_args(&self) -> &BTreeSet<ArgumentId> {
        &self.uncertain_args
    }

    pub fn attacks(&self) -> &BTreeSet<Attack> {
        &self.attacks
    }

    pub fn uncertain_attacks(&self) -> &BTreeSet<Attack> {
        &self.uncertain_attacks
    }

    /// `A ∪ A?`.
    pub fn universe(&self) -> ArgSet {
        self.args.union(&self.uncertain_args).cloned().collect()
    }

    pub fn contains_argument(&self, a: &ArgumentId) -> bool {
        self.args.contains(a) || self.uncertain_args.contains(a)
    }

    /// No uncertain arguments.
    pub fn is_atiaf(&self) -> bool {
        self.uncertain_args.is_empty()
    }

    /// No uncertain attacks.
    pub fn is_ariaf(&self) -> bool {
        self.uncertain_attacks.is_empty()
    }

    pub fn uncertainty(&self) -> usize {
        self.uncertain_args.len() + self.uncertain_attacks.len()
    }

    /// Uncertain elements, attacks first, each lexicographic.
    pub fn uncertain_elements(&self) -> Vec<UncertainElement> {
        self.uncertain_attacks
            .iter()
            .cloned()
            .map(UncertainElement::Att)
            .chain(
                self.uncertain_args
                    .iter()
                    .cloned()
                    .map(UncertainElement::Arg),
            )
            .collect()
    }

    pub fn is_uncertain(&self, e: &UncertainElement) -> bool {
        match e {
            UncertainElement::Att(r) => self.uncertain_attacks.contains(r),
            UncertainElement::Arg(a) => self.uncertain_args.contains(a),
        }
    }

    pub(crate) fn check_subset(&self, s: &ArgSet) -> Result<()> {
        match s.iter().find(|a| !self.contains_argument(a)) {
            Some(a) => Err(Error::UnknownArgument(a.clone())),
            None => Ok(()),
        }
    }

    /// Projection onto the certain part: `<A, R ∩ (A×A)>`.
    pub fn cert(&self) -> Af {
        let attacks = self
            .attacks
            .iter()
            .filter(|(a, b)| self.args.contains(a) && self.args.contains(b))
            .cloned()
            .collect();
        Af::from_parts_unchecked(self.args.clone(), attacks)
    }

    /// Decides every element of `elements` according to `action`.
    ///
    /// Attacks are decided before arguments. Removing an argument also deletes
    /// every attack, certain or uncertain, that touches it.
    pub fn apply(&self, action: Action, elements: &BTreeSet<UncertainElement>) -> Result<Iaf> {
        if let Some(e) = elements.iter().find(|e| !self.is_uncertain(e)) {
            return Err(Error::NotUncertain((*e).clone()));
        }
        let mut out = self.clone();
        for e in elements {
            match (e, action) {
                (UncertainElement::Att(r), Action::Addition) => {
                    out.uncertain_attacks.remove(r);
                    out.attacks.insert(r.clone());
                }
                (UncertainElement::Att(r), Action::Removal) => {
                    out.uncertain_attacks.remove(r);
                }
                (UncertainElement::Arg(_), _) => {}
            }
        }
        let removed: BTreeSet<&ArgumentId> = elements
            .iter()
            .filter_map(|e| match e {
                UncertainElement::Arg(a) => Some(a),
                UncertainElement::Att(_) => None,
            })
            .collect();
        for a in &removed {
            out.uncertain_args.remove(*a);
            if action == Action::Addition {
                out.args.insert((*a).clone());
            }
        }
        if action == Action::Removal && !removed.is_empty() {
            let related = |r: &Attack| removed.contains(&r.0) || removed.contains(&r.1);
            out.attacks.retain(|r| !related(r));
            out.uncertain_attacks.retain(|r| !related(r));
        }
        Ok(out)
    }

    /// `I + {e}`.
    pub fn add(&self, e: &UncertainElement) -> Result<Iaf> {
        self.apply(Action::Addition, &BTreeSet::from([e.clone()]))
    }

    /// `I − {e}`.
    pub fn remove(&self, e: &UncertainElement) -> Result<Iaf> {
        self.apply(Action::Removal, &BTreeSet::from([e.clone()]))
    }

    pub fn decide(&self, e: &UncertainElement, action: Action) -> Result<Iaf> {
        match action {
            Action::Addition => self.add(e),
            Action::Removal => self.remove(e),
        }
    }

    /// Every completion, each exactly once.
    pub fn completions(&self, cap: Cap) -> Result<Vec<Af>> {
        let space = CompletionSpace::new(self, cap)?;
        Ok(space
            .canonical_masks()
            .map(|m| space.completion(m))
            .collect())
    }

    /// Every partial completion in which `e` is the only undecided element.
    pub fn fix_all_but(&self, e: &UncertainElement, cap: Cap) -> Result<Vec<Iaf>> {
        if !self.is_uncertain(e) {
            return Err(Error::NotUncertain(e.clone()));
        }
        let space = CompletionSpace::new(self, cap)?;
        let bit = space.bit_of(e).expect("uncertain element has a bit");
        Ok(space
            .masks_fixing_all_but(bit)
            .map(|m| space.partial_with_single(m, bit))
            .collect())
    }

    /// `S⁺_I`: targets of certain attacks from `s`.
    pub fn certain_targets(&self, s: &ArgSet) -> Result<ArgSet> {
        self.check_subset(s)?;
        Ok(self
            .attacks
            .iter()
            .filter(|(a, _)| s.contains(a))
            .map(|(_, b)| b.clone())
            .collect())
    }

    /// `S⁻_I`: sources of certain attacks into `s`.
    pub fn certain_attackers(&self, s: &ArgSet) -> Result<ArgSet> {
        self.check_subset(s)?;
        Ok(self
            .attacks
            .iter()
            .filter(|(_, b)| s.contains(b))
            .map(|(a, _)| a.clone())
            .collect())
    }

    /// `S~_I`: arguments that no member of `s` attacks, certainly or possibly.
    pub fn untouched_by(&self, s: &ArgSet) -> Result<ArgSet> {
        self.check_subset(s)?;
        let hit: ArgSet = self
            .attacks
            .iter()
            .chain(&self.uncertain_attacks)
            .filter(|(a, _)| s.contains(a))
            .map(|(_, b)| b.clone())
            .collect();
        Ok(self.universe().difference(&hit).cloned().collect())
    }
}

/// Bit-mask indexing of the uncertain elements of a frame.
///
/// Bit `k` refers to `elements()[k]`. A mask is canonical when every set
/// attack bit has its uncertain endpoints present as well; canonical masks
/// are in bijection with completions.
pub struct CompletionSpace<'a> {
    iaf: &'a Iaf,
    elements: Vec<UncertainElement>,
    /// Per attack bit, the mask of its uncertain endpoint arguments.
    requires: Vec<u64>,
    /// Per argument bit, the mask of uncertain attacks touching it.
    touching: Vec<u64>,
}

impl<'a> CompletionSpace<'a> {
    pub fn new(iaf: &'a Iaf, cap: Cap) -> Result<Self> {
        let n = iaf.uncertainty();
        let limit = cap.0.min(62);
        if n > limit {
            return Err(Error::CapExceeded {
                what: "uncertain elements",
                size: n,
                cap: limit,
            });
        }
        let elements = iaf.uncertain_elements();
        let arg_bit = |a: &ArgumentId| {
            elements
                .iter()
                .position(|e| matches!(e, UncertainElement::Arg(x) if x == a))
        };
        let mut requires = vec![0u64; n];
        let mut touching = vec![0u64; n];
        for (k, e) in elements.iter().enumerate() {
            if let UncertainElement::Att((a, b)) = e {
                for end in [a, b] {
                    if let Some(j) = arg_bit(end) {
                        requires[k] |= 1 << j;
                        touching[j] |= 1 << k;
                    }
                }
            }
        }
        Ok(CompletionSpace {
            iaf,
            elements,
            requires,
            touching,
        })
    }

    pub fn elements(&self) -> &[UncertainElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn bit_of(&self, e: &UncertainElement) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// Mask of every attack bit that touches argument bit `arg_bit`.
    pub fn touching(&self, arg_bit: usize) -> u64 {
        self.touching[arg_bit]
    }

    /// Mask of the uncertain endpoints of attack bit `att_bit` (zero for arguments).
    pub fn requires(&self, att_bit: usize) -> u64 {
        self.requires[att_bit]
    }

    pub fn is_canonical(&self, mask: u64) -> bool {
        (0..self.len()).all(|k| mask & (1 << k) == 0 || mask & self.requires[k] == self.requires[k])
    }

    /// Clears attack bits whose endpoints are absent.
    pub fn normalize(&self, mut mask: u64) -> u64 {
        for k in 0..self.len() {
            if mask & (1 << k) != 0 && mask & self.requires[k] != self.requires[k] {
                mask &= !(1 << k);
            }
        }
        mask
    }

    pub fn canonical_masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..1u64 << self.len()).filter(move |&m| self.is_canonical(m))
    }

    /// Masks of all decisions for every element except `bit`, with that bit clear.
    ///
    /// When `bit` is an attack, its uncertain endpoints are forced present so
    /// that it can remain undecided. When `bit` is an argument, attacks touching
    /// it may be decided either way.
    pub fn masks_fixing_all_but(&self, bit: usize) -> impl Iterator<Item = u64> + '_ {
        let own = 1u64 << bit;
        let need = self.requires[bit];
        (0..1u64 << self.len()).filter(move |&m| {
            m & own == 0
                && m & need == need
                && self.is_canonical(
                    m | if self.elements[bit].is_argument() {
                        own
                    } else {
                        0
                    },
                )
        })
    }

    /// The completion selected by `mask` (normalized first).
    pub fn completion(&self, mask: u64) -> Af {
        let mask = self.normalize(mask);
        let mut args = self.iaf.args.clone();
        let mut attacks = BTreeSet::new();
        for (k, e) in self.elements.iter().enumerate() {
            if mask & (1 << k) == 0 {
                continue;
            }
            match e {
                UncertainElement::Arg(a) => {
                    args.insert(a.clone());
                }
                UncertainElement::Att(r) => {
                    attacks.insert(r.clone());
                }
            }
        }
        for r in &self.iaf.attacks {
            if args.contains(&r.0) && args.contains(&r.1) {
                attacks.insert(r.clone());
            }
        }
        Af::from_parts_unchecked(args, attacks)
    }

    /// The partial completion deciding every element per `mask` except `bit`.
    fn partial_with_single(&self, mask: u64, bit: usize) -> Iaf {
        let mut out = Iaf {
            args: self.iaf.args.clone(),
            ..Iaf::default()
        };
        let single = &self.elements[bit];
        if let UncertainElement::Arg(a) = single {
            out.uncertain_args.insert(a.clone());
        }
        for (k, e) in self.elements.iter().enumerate() {
            if k != bit && mask & (1 << k) != 0 {
                if let UncertainElement::Arg(a) = e {
                    out.args.insert(a.clone());
                }
            }
        }
        for (k, e) in self.elements.iter().enumerate() {
            if k != bit && mask & (1 << k) != 0 {
                if let UncertainElement::Att(r) = e {
                    out.attacks.insert(r.clone());
                }
            }
        }
        for r in &self.iaf.attacks {
            if out.contains_argument(&r.0) && out.contains_argument(&r.1) {
                out.attacks.insert(r.clone());
            }
        }
        if let UncertainElement::Att(r) = single {
            out.uncertain_attacks.insert(r.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn one_uncertain_attacker() -> Iaf {
        Iaf::from_names(&["a"], &["b"], &[], &[("b", "a")])
    }

    #[test]
    fn validation_reports_violations() {
        assert!(fixtures::running_example().validate().is_empty());
        let dangling = Iaf::from_parts(arg_set(["y"]), [], [attack("x", "y")], []);
        assert_eq!(
            dangling.validate(),
            vec![Violation::DanglingEndpoint {
                attack: attack("x", "y"),
                endpoint: ArgumentId::new("x").unwrap()
            }]
        );
        assert!(dangling.validate()[0]
            .to_string()
            .contains("dangling endpoint"));
        let overlap = Iaf::from_parts(arg_set(["d"]), arg_set(["d"]), [], []);
        assert_eq!(
            overlap.validate(),
            vec![Violation::ArgumentOverlap(ArgumentId::new("d").unwrap())]
        );
        let att_overlap = Iaf::from_parts(
            arg_set(["a", "b"]),
            [],
            [attack("a", "b")],
            [attack("a", "b")],
        );
        assert_eq!(
            att_overlap.validate(),
            vec![Violation::AttackOverlap(attack("a", "b"))]
        );
        assert!(matches!(
            Iaf::new(arg_set(["d"]), arg_set(["d"]), [], []),
            Err(Error::InvalidFrame(_))
        ));
    }

    #[test]
    fn cert_projection() {
        let ex = fixtures::running_example();
        assert_eq!(
            ex.cert(),
            Af::from_names(
                &["a", "b", "c", "e", "f", "g"],
                &[("b", "c"), ("e", "f"), ("f", "e")]
            )
        );
        let plain = Iaf::from_names(&["a", "b"], &[], &[("a", "b")], &[]);
        assert_eq!(plain.cert(), Af::from_names(&["a", "b"], &[("a", "b")]));
        let with_d = ex.add(&UncertainElement::arg("d")).unwrap().cert();
        assert!(with_d.args().contains(&ArgumentId::new("d").unwrap()));
        assert!(with_d.contains_attack(
            &ArgumentId::new("d").unwrap(),
            &ArgumentId::new("a").unwrap()
        ));
    }

    #[test]
    fn removing_an_argument_drops_related_attacks() {
        let ex = fixtures::running_example();
        let out = ex.remove(&UncertainElement::arg("d")).unwrap();
        let d = ArgumentId::new("d").unwrap();
        assert!(!out.contains_argument(&d));
        assert!(!out.attacks().iter().any(|(a, b)| *a == d || *b == d));
        assert!(!out
            .uncertain_attacks()
            .iter()
            .any(|(a, b)| *a == d || *b == d));
        assert!(out.validate().is_empty());
    }

    #[test]
    fn adding_an_attack_keeps_endpoint_uncertain() {
        let ex = fixtures::running_example();
        let out = ex.add(&UncertainElement::att("b", "d")).unwrap();
        assert!(out.attacks().contains(&attack("b", "d")));
        assert!(!out.uncertain_attacks().contains(&attack("b", "d")));
        assert!(out
            .uncertain_args()
            .contains(&ArgumentId::new("d").unwrap()));
    }

    #[test]
    fn empty_delta_is_identity() {
        let ex = fixtures::running_example();
        assert_eq!(ex.apply(Action::Addition, &BTreeSet::new()).unwrap(), ex);
        assert_eq!(ex.apply(Action::Removal, &BTreeSet::new()).unwrap(), ex);
    }

    #[test]
    fn deciding_a_certain_element_is_an_error() {
        let ex = fixtures::running_example();
        let e = UncertainElement::att("d", "a");
        assert_eq!(ex.add(&e).unwrap_err(), Error::NotUncertain(e.clone()));
        assert!(ex.fix_all_but(&e, Cap::default()).is_err());
    }

    #[test]
    fn completion_counts() {
        let one_bit = Iaf::from_names(&["a", "b"], &[], &[], &[("a", "b")]);
        assert_eq!(one_bit.completions(Cap::default()).unwrap().len(), 2);

        let ex = fixtures::running_example();
        let all = ex.completions(Cap::default()).unwrap();
        assert_eq!(all.len(), 96);
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 96);

        let forced = one_uncertain_attacker()
            .completions(Cap::default())
            .unwrap();
        let got: BTreeSet<Af> = forced.into_iter().collect();
        let want: BTreeSet<Af> = [
            Af::from_names(&["a"], &[]),
            Af::from_names(&["a", "b"], &[]),
            Af::from_names(&["a", "b"], &[("b", "a")]),
        ]
        .into();
        assert_eq!(got, want);
    }

    #[test]
    fn completion_cap() {
        let ex = fixtures::running_example();
        assert!(matches!(
            ex.completions(Cap(3)),
            Err(Error::CapExceeded { size: 7, .. })
        ));
    }

    #[test]
    fn fix_all_but_examples() {
        let single = Iaf::from_names(&["a", "b"], &[], &[], &[("a", "b")]);
        let frames = single
            .fix_all_but(&UncertainElement::att("a", "b"), Cap::default())
            .unwrap();
        assert_eq!(frames, vec![single.clone()]);

        let i = one_uncertain_attacker();
        let frames = i
            .fix_all_but(&UncertainElement::att("b", "a"), Cap::default())
            .unwrap();
        assert_eq!(
            frames,
            vec![Iaf::from_names(&["a", "b"], &[], &[], &[("b", "a")])]
        );

        let frames = i
            .fix_all_but(&UncertainElement::arg("b"), Cap::default())
            .unwrap();
        assert_eq!(frames.len(), 2);
        assert!(frames.contains(&Iaf::from_names(&["a"], &["b"], &[], &[])));
        assert!(frames.contains(&Iaf::from_names(&["a"], &["b"], &[("b", "a")], &[])));
    }

    #[test]
    fn neighbourhoods() {
        let ex = fixtures::running_example();
        let s = arg_set(["a", "b"]);
        assert_eq!(ex.certain_targets(&s).unwrap(), arg_set(["c"]));
        assert_eq!(ex.certain_attackers(&s).unwrap(), arg_set(["d"]));
        let untouched = ex.untouched_by(&s).unwrap();
        assert!(untouched.contains(&ArgumentId::new("g").unwrap()));
        assert!(untouched.contains(&ArgumentId::new("h").unwrap()));
        assert!(!untouched.contains(&ArgumentId::new("d").unwrap()));
        assert!(ex.certain_targets(&arg_set(["zz"])).is_err());
    }

    #[test]
    fn uncertain_element_order() {
        let ex = fixtures::running_example();
        let elems = ex.uncertain_elements();
        assert_eq!(
            elems.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            ["(b,d)", "(b,e)", "(c,a)", "(f,b)", "(f,g)", "d", "h"]
        );
    }
}
