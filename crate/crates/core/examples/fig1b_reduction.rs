//! A Toffoli gate slides through a swap ladder and cancels with its twin.
//!
//!     cargo run --example fig1b_reduction

use rbc::format::print_circuit;
use rbc::{normalize, truth_table, verify_trace, Diagram};

fn main() -> rbc::Result<()> {
    let start = Diagram::from_compact(4, "t3@0 sw@2 sw@1 sw@0 t3@1")?;
    let (nf, trace) = normalize(&start)?;

    println!("start: {start}");
    for step in trace.steps() {
        println!("  {} ⇛ {}", step.at, step.after);
    }
    print!("{trace}");
    println!("normal form:\n{}", print_circuit(&nf));

    let report = verify_trace(&trace);
    print!("{report}");
    println!(
        "truth table preserved: {}",
        truth_table(&start)? == truth_table(&nf)?
    );
    Ok(())
}
