// Uncertain arguments become uncertain attacks from one fresh certain
// argument, and relevance carries over with the action flipped.

use iafrel::format::emit_iaf;
use iafrel::reductions::to_atiaf;
use iafrel::{arg_set, fixtures, relevance_report, Cap, ReportMode, Semantics, VerificationStatus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iaf = fixtures::running_example();
    let mapping = to_atiaf(&iaf);
    println!("witness {}", mapping.witness);
    print!("{}", emit_iaf(&mapping.transformed));
    assert!(mapping.transformed.is_atiaf());

    let s = arg_set(["a", "b"]);
    let j = VerificationStatus::new(Semantics::Stable, true);
    let before = relevance_report(&iaf, &s, j, ReportMode::Brute, Cap::default())?;
    let after = relevance_report(
        &mapping.transformed,
        &mapping.map_query(&s),
        j,
        ReportMode::Brute,
        Cap::default(),
    )?;
    for row in &before.elements {
        for (action, relevant) in [
            (iafrel::Action::Addition, row.add_relevant),
            (iafrel::Action::Removal, row.rem_relevant),
        ] {
            let (image, mapped) = mapping.map_action(&row.element, action);
            let there = after.element(&image).expect("mapped element exists");
            assert_eq!(relevant, there.relevant(mapped), "{} {action}", row.element);
        }
    }
    println!("all {} answers carried over", 2 * before.elements.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("transform example failed");
}
