//! Seeded random frames.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::af::ArgumentId;
use crate::error::{Error, Result};
use crate::format::emit_iaf;
use crate::iaf::Iaf;

pub const RNG_NAME: &str = "ChaCha8";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeneratorParams {
    pub n_args: usize,
    pub p_uncertain_arg: f64,
    pub p_att: f64,
    pub p_uncertain_att: f64,
    pub seed: u64,
    pub allow_self_attacks: bool,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        GeneratorParams {
            n_args: 6,
            p_uncertain_arg: 0.2,
            p_att: 0.3,
            p_uncertain_att: 0.3,
            seed: 0,
            allow_self_attacks: true,
        }
    }
}

impl GeneratorParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_args == 0 {
            return Err(Error::InvalidParameter("n_args must be at least 1".into()));
        }
        for (name, p) in [
            ("p_uncertain_arg", self.p_uncertain_arg),
            ("p_att", self.p_att),
            ("p_uncertain_att", self.p_uncertain_att),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "{name}={p} is not in [0,1]"
                )));
            }
        }
        Ok(())
    }
}

/// Arguments `a0..a{n-1}`: each uncertain with `p_uncertain_arg`; each
/// ordered pair attacks with `p_att`, uncertainly with `p_uncertain_att`.
pub fn generate(p: &GeneratorParams) -> Result<Iaf> {
    p.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    Ok(generate_with(p, &mut rng))
}

pub(crate) fn generate_with(p: &GeneratorParams, rng: &mut impl Rng) -> Iaf {
    let names: Vec<ArgumentId> = (0..p.n_args)
        .map(|i| ArgumentId::new(&format!("a{i}")).expect("valid name"))
        .collect();
    let mut args = BTreeSet::new();
    let mut uargs = BTreeSet::new();
    for a in &names {
        if rng.random_bool(p.p_uncertain_arg) {
            uargs.insert(a.clone());
        } else {
            args.insert(a.clone());
        }
    }
    let mut atts = BTreeSet::new();
    let mut uatts = BTreeSet::new();
    for a in &names {
        for b in &names {
            if a == b && !p.allow_self_attacks {
                continue;
            }
            if rng.random_bool(p.p_att) {
                let r = (a.clone(), b.clone());
                if rng.random_bool(p.p_uncertain_att) {
                    uatts.insert(r);
                } else {
                    atts.insert(r);
                }
            }
        }
    }
    Iaf::from_parts(args, uargs, atts, uatts)
}

/// Emitted frame text preceded by a comment recording how it was made.
pub fn emit_generated(p: &GeneratorParams, iaf: &Iaf) -> String {
    format!(
        "# generated: rng={RNG_NAME} seed={} n_args={} p_uncertain_arg={} p_att={} p_uncertain_att={} allow_self_attacks={}\n{}",
        p.seed,
        p.n_args,
        p.p_uncertain_arg,
        p.p_att,
        p.p_uncertain_att,
        p.allow_self_attacks,
        emit_iaf(iaf)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_iaf;

    #[test]
    fn no_attacks() {
        let p = GeneratorParams {
            p_att: 0.0,
            ..Default::default()
        };
        let i = generate(&p).unwrap();
        assert!(i.attacks().is_empty() && i.uncertain_attacks().is_empty());
        assert_eq!(i.universe().len(), 6);
    }

    #[test]
    fn no_uncertainty() {
        let p = GeneratorParams {
            p_uncertain_arg: 0.0,
            p_uncertain_att: 0.0,
            p_att: 0.5,
            seed: 3,
            ..Default::default()
        };
        assert_eq!(generate(&p).unwrap().uncertainty(), 0);
    }

    #[test]
    fn deterministic() {
        let p = GeneratorParams {
            seed: 42,
            ..Default::default()
        };
        assert_eq!(generate(&p).unwrap(), generate(&p).unwrap());
        let other = GeneratorParams { seed: 43, ..p };
        let differs = (0..5).any(|k| {
            generate(&GeneratorParams { seed: 100 + k, ..p }).unwrap()
                != generate(&GeneratorParams {
                    seed: 200 + k,
                    ..other
                })
                .unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn self_attacks_toggle() {
        let p = GeneratorParams {
            p_att: 1.0,
            p_uncertain_att: 0.0,
            allow_self_attacks: false,
            ..Default::default()
        };
        let i = generate(&p).unwrap();
        assert!(i.attacks().iter().all(|(a, b)| a != b));
    }

    #[test]
    fn invalid_params() {
        assert!(generate(&GeneratorParams {
            n_args: 0,
            ..Default::default()
        })
        .is_err());
        assert!(generate(&GeneratorParams {
            p_att: 1.5,
            ..Default::default()
        })
        .is_err());
    }

    #[test]
    fn header_and_validity() {
        let p = GeneratorParams {
            seed: 9,
            ..Default::default()
        };
        let i = generate(&p).unwrap();
        assert!(i.validate().is_empty());
        let text = emit_generated(&p, &i);
        assert!(text.starts_with("# generated: rng=ChaCha8 seed=9"));
        assert_eq!(parse_iaf(&text).unwrap(), i);
    }
}
