// Possible and necessary preferred verification phrased as relevance
// questions on slightly larger frames.

use iafrel::format::parse_iaf;
use iafrel::reductions::{necver_pr_gadget, posver_pr_gadget};
use iafrel::{arg_set, Cap};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let iaf =
        parse_iaf("arg(a).\narg(b).\narg(c).\natt(b,c).\nuatt(a,b).\nuatt(b,a).\nuatt(c,a).\n")?;
    let cap = Cap::default();
    for s in [arg_set(["a"]), arg_set(["b"]), arg_set(["a", "c"])] {
        let pos = posver_pr_gadget(&iaf, &s)?.check(cap)?;
        let nec = necver_pr_gadget(&iaf, &s)?.check(cap)?;
        println!(
            "{}: possible {} / {} / {}   necessary {} / {} / {}",
            iafrel::af::format_set(&s),
            pos.direct,
            pos.first,
            pos.second,
            nec.direct,
            nec.first,
            nec.second,
        );
        assert!(pos.holds() && nec.holds());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("gadget example failed");
}
