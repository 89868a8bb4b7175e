// A short differential run: characterizations and fast paths against
// exhaustive enumeration on random frames.

use iafrel::diff::{diff_run, gadget_run, DiffConfig, GadgetConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let config = DiffConfig {
        trials: 20,
        seed: 11,
        ..DiffConfig::default()
    };
    let report = diff_run(&config)?;
    println!("{}", report.summary());
    assert!(report.is_clean(), "{:?}", report.first_counterexample);

    let gadgets = gadget_run(&GadgetConfig {
        atiafs: 5,
        formulas: 3,
        ..GadgetConfig::default()
    })?;
    println!("{}", gadgets.summary());
    assert!(gadgets.is_clean());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("differential example failed");
}
