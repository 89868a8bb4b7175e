// Extensions of the certain part of the running example under each semantics.

use iafrel::af::{extensions, format_set, grounded_extension, verify};
use iafrel::{arg_set, fixtures, Cap, Semantics};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cert = fixtures::running_example().cert();
    for sem in Semantics::ALL {
        let exts = extensions(&cert, sem, Cap::default())?;
        let shown: Vec<String> = exts.iter().map(format_set).collect();
        println!("{:>2}: {}", sem.short_name(), shown.join(" "));
    }
    println!("grounded: {}", format_set(&grounded_extension(&cert)));

    let s = arg_set(["a", "b", "f"]);
    assert!(verify(&cert, &s, Semantics::Admissible, Cap::default())?);
    assert!(!verify(&cert, &s, Semantics::Grounded, Cap::default())?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("semantics example failed");
}
