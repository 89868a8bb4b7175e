// Reading, writing and generating frames in the line-based text format.

use iafrel::format::{emit_iaf, parse_iaf, parse_iaf_with, ParseOptions};
use iafrel::generate::{emit_generated, generate, GeneratorParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = "# a tiny frame\narg(a).\n  arg( b ).\nuarg(c).\natt(a,b).\nuatt(c,a).\n";
    let iaf = parse_iaf(text)?;
    let canonical = emit_iaf(&iaf);
    print!("{canonical}");
    assert_eq!(parse_iaf(&canonical)?, iaf);

    match parse_iaf("arg(a).\natt(a,z).\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    assert!(parse_iaf("arg(__aux_w0).").is_err());
    parse_iaf_with(
        "arg(__aux_w0).",
        ParseOptions {
            allow_reserved: true,
        },
    )?;

    let params = GeneratorParams {
        n_args: 5,
        seed: 7,
        ..GeneratorParams::default()
    };
    let generated = generate(&params)?;
    print!("{}", emit_generated(&params, &generated));
    assert_eq!(generate(&params)?, generated);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("format example failed");
}
