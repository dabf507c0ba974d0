//! Boolean semantics: each generator is a bijection, and so is every circuit.
//!
//!     cargo run --example truth_tables

use rbc::semantics::{eval, truth_table};
use rbc::{BitVec, Diagram, GateKind};

fn main() -> rbc::Result<()> {
    for kind in GateKind::ALL {
        let t = truth_table(&Diagram::generator(kind))?;
        println!("{kind}:");
        print!("{t}");
        println!("  bijective: {}", t.is_permutation());
    }

    // Exchanging the controls of a Toffoli gate changes nothing.
    let lhs = Diagram::from_compact(3, "sw@0 t3@0")?;
    let rhs = Diagram::from_compact(3, "t3@0 sw@0")?;
    let input = BitVec::from_index(0b011, 3);
    println!("{lhs} on {input} -> {}", eval(&lhs, &input)?);
    println!("{rhs} on {input} -> {}", eval(&rhs, &input)?);
    println!(
        "same function: {}",
        truth_table(&lhs)? == truth_table(&rhs)?
    );
    Ok(())
}
