// Possible and necessary verification, and the stability of a query.

use iafrel::verification::{optimistic_completion, pessimistic_completion};
use iafrel::{arg_set, fixtures, necver, posver, stability_status, Cap, Method, Semantics};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iaf = fixtures::running_example();
    let s = arg_set(["a", "b"]);
    let cap = Cap::default();

    for sem in Semantics::ALL {
        let pos = posver(&iaf, &s, sem, Method::Brute, cap)?;
        let nec = necver(&iaf, &s, sem, Method::Brute, cap)?;
        let stability = stability_status(&iaf, &s, sem, cap)?;
        println!(
            "{:>2}: possible={pos} necessary={nec} {stability}",
            sem.short_name()
        );
    }

    // For admissibility and stability two completions decide everything.
    for sem in [Semantics::Admissible, Semantics::Stable] {
        let fast = posver(&iaf, &s, sem, Method::Fast, cap)?;
        assert_eq!(fast, posver(&iaf, &s, sem, Method::Brute, cap)?);
        let fast = necver(&iaf, &s, sem, Method::Fast, cap)?;
        assert_eq!(fast, necver(&iaf, &s, sem, Method::Brute, cap)?);
    }
    println!(
        "optimistic completion: {} attacks",
        optimistic_completion(&iaf, &s)?.attacks().len()
    );
    println!(
        "pessimistic completion: {} attacks",
        pessimistic_completion(&iaf, &s)?.attacks().len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verification example failed");
}
