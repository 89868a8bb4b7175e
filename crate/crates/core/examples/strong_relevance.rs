// Strong relevance: deciding an element one way is the only way to reach
// the status at all.

use iafrel::relevance::strongly_relevant_direct;
use iafrel::VerificationStatus;
use iafrel::{arg_set, fixtures, strongly_relevant, Action, Cap, Semantics, UncertainElement};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iaf = fixtures::running_example();
    let s = arg_set(["a", "b"]);
    let co = VerificationStatus::new(Semantics::Complete, true);
    let cap = Cap::default();

    for e in iaf.uncertain_elements() {
        for a in [Action::Addition, Action::Removal] {
            let via_verification = strongly_relevant(&iaf, &s, co, &e, a, cap)?;
            assert_eq!(
                via_verification,
                strongly_relevant_direct(&iaf, &s, co, &e, a, cap)?
            );
            if via_verification {
                println!("{a} of {e} is strongly {co}-relevant");
            }
        }
    }

    // An unreachable status has no strongly relevant elements.
    let frame = iafrel::format::parse_iaf("arg(a).\narg(b).\natt(b,a).\nuatt(b,b).\n")?;
    let err = strongly_relevant(
        &frame,
        &arg_set(["a"]),
        co,
        &UncertainElement::att("b", "b"),
        Action::Addition,
        cap,
    );
    println!("unreachable status: {}", err.unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("strong relevance example failed");
}
