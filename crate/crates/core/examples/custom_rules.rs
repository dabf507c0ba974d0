//! Loading a rule catalog from text. Rules are checked for semantic
//! soundness and strict decrease of the move measure before use.
//!
//!     cargo run --example custom_rules

use rbc::format::parse_rules;
use rbc::rewrite::Rewriter;
use rbc::{verify_strict, Diagram};

const CATALOG: &str = "
# only the annihilation rules
rule a_not
wires 1
not 0
not 0
=>
wires 1

rule a_t2
wires 2
t2 0
t2 0
=>
wires 2
";

fn main() -> rbc::Result<()> {
    let rules = parse_rules(CATALOG)?;
    print!("{}", verify_strict(&rules));

    let rewriter = Rewriter::new(rules);
    let d = Diagram::from_compact(3, "not@0 t2@1 not@2 t2@1 not@0")?;
    let (nf, trace) = rewriter.normalize(&d)?;
    println!("{d} ⇛* {nf} in {} steps", trace.len());

    let bogus = "rule wrong\nwires 1\nnot 0\n=>\nwires 1\n";
    match parse_rules(bogus) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
