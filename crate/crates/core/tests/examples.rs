mod semantics_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/semantics.rs"
    ));
}

#[test]
fn semantics_example_runs() {
    semantics_example::run_example().expect("semantics example should run");
}

mod verification_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verification.rs"
    ));
}

#[test]
fn verification_example_runs() {
    verification_example::run_example().expect("verification example should run");
}

mod relevance_report_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/relevance_report.rs"
    ));
}

#[test]
fn relevance_report_example_runs() {
    relevance_report_example::run_example().expect("relevance report example should run");
}

mod strong_relevance_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/strong_relevance.rs"
    ));
}

#[test]
fn strong_relevance_example_runs() {
    strong_relevance_example::run_example().expect("strong relevance example should run");
}

mod atiaf_transform_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/atiaf_transform.rs"
    ));
}

#[test]
fn atiaf_transform_example_runs() {
    atiaf_transform_example::run_example().expect("atiaf transform example should run");
}

mod preferred_gadgets_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/preferred_gadgets.rs"
    ));
}

#[test]
fn preferred_gadgets_example_runs() {
    preferred_gadgets_example::run_example().expect("preferred gadgets example should run");
}

mod pi2sat_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pi2sat.rs"));
}

#[test]
fn pi2sat_example_runs() {
    pi2sat_example::run_example().expect("pi2sat example should run");
}

mod text_format_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/text_format.rs"
    ));
}

#[test]
fn text_format_example_runs() {
    text_format_example::run_example().expect("text format example should run");
}

mod differential_example {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/differential.rs"
    ));
}

#[test]
fn differential_example_runs() {
    differential_example::run_example().expect("differential example should run");
}
