// Which uncertain elements, once added or removed, can make {a,b}
// admissible in the running example.

use iafrel::VerificationStatus;
use iafrel::{
    arg_set, fixtures, relevance_report, Action, Cap, ReportMode, Semantics, UncertainElement,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iaf = fixtures::running_example();
    let s = arg_set(["a", "b"]);
    let j = VerificationStatus::new(Semantics::Admissible, true);

    let auto = relevance_report(&iaf, &s, j, ReportMode::Auto, Cap::default())?;
    print!("{}", auto.to_table());

    let brute = relevance_report(&iaf, &s, j, ReportMode::Brute, Cap::default())?;
    assert_eq!(auto.relevance_key(), brute.relevance_key());
    assert_eq!(
        auto.relevant_set(Action::Addition),
        vec![UncertainElement::att("b", "d")]
    );
    assert_eq!(
        auto.relevant_set(Action::Removal),
        vec![UncertainElement::att("f", "b"), UncertainElement::arg("d")]
    );

    // Relevance for the negated status is the same question with the action flipped.
    let dual = relevance_report(&iaf, &s, j.negated(), ReportMode::Auto, Cap::default())?;
    assert_eq!(
        dual.relevant_set(Action::Removal),
        auto.relevant_set(Action::Addition)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("relevance example failed");
}
