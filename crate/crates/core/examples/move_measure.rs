//! The termination measure: circuits interpreted as maps on vectors of move
//! words, and the check that every rule strictly decreases them.
//!
//!     cargo run --example move_measure

use rbc::{builtin_rules, phi, verify_strict, word_rank, Diagram, MoveWord};

fn main() -> rbc::Result<()> {
    println!("the first words in order, with their ranks:");
    for w in MoveWord::all_up_to(2) {
        println!("  {w:>2} -> {}", word_rank(&w));
    }

    let ladder = Diagram::from_compact(3, "sw@0 sw@1 sw@0")?;
    println!("\nφ({ladder}):");
    print!("{}", phi(&ladder));

    let slid = Diagram::from_compact(4, "sw@0 sw@1 sw@2 t3@0")?;
    let m = phi(&slid);
    println!("\nφ({slid}):");
    print!("{m}");
    println!("ε-rank {}", m.epsilon_rank());

    let report = verify_strict(&builtin_rules());
    println!();
    for entry in &report.entries {
        println!("{entry}");
        println!("    {}", entry.vectors());
    }
    println!("{}/{} strict", report.strict_count(), report.entries.len());
    Ok(())
}
