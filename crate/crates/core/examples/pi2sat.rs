// A forall-exists formula and the frame whose strong relevance decides it.

use iafrel::format::emit_iaf;
use iafrel::reductions::{pi2sat_brute, pi2sat_check, pi2sat_to_iaf, QbfInstance};
use iafrel::{fixtures, Cap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = fixtures::two_clause_qbf();
    print!("{q}");
    let frame = pi2sat_to_iaf(&q);
    print!("{}", emit_iaf(&frame.frame));
    let check = pi2sat_check(&q, Cap::default())?;
    println!("{check:?}");
    assert!(check.holds() && check.brute);

    // Forall x exists y: (x or y) and (not x or not y) holds; adding (y) breaks it.
    let holds: QbfInstance = "p pi2 1 1 2\nx 1 0\ny 2 0\n1 2 0\n-1 -2 0\n".parse()?;
    let fails: QbfInstance = "p pi2 1 1 3\nx 1 0\ny 2 0\n1 2 0\n-1 -2 0\n2 0\n".parse()?;
    for f in [&holds, &fails] {
        let c = pi2sat_check(f, Cap::default())?;
        println!("{} -> {}", pi2sat_brute(f, Cap::default())?, c.holds());
        assert!(c.holds());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pi2sat example failed");
}
