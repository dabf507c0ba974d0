//! The rewrite system terminates but is not confluent: one circuit has two
//! distinct normal forms.
//!
//!     cargo run --example non_confluence

use rbc::rewrite::Rewriter;
use rbc::{truth_table, Diagram};

fn main() -> rbc::Result<()> {
    let start = Diagram::from_compact(3, "sw@0 sw@1 sw@0 t2@1")?;
    let rewriter = Rewriter::default();

    println!("redexes in {start}:");
    for m in rewriter.find_matches(&start) {
        println!("  {m} ⇛ {}", rewriter.apply(&start, &m)?);
    }

    let graph = rewriter.reduction_graph(&start, 10_000)?;
    println!("{} states, {} edges", graph.states.len(), graph.edges.len());
    let nfs = graph.normal_forms();
    let table = truth_table(&start)?;
    for nf in &nfs {
        println!(
            "normal form {nf} (same function: {})",
            truth_table(nf)? == table
        );
    }
    Ok(())
}
