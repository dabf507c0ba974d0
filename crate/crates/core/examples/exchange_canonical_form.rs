//! Circuits are equal modulo exchange: gates on disjoint wires commute.
//! The layered canonical form picks one gate list per class.
//!
//!     cargo run --example exchange_canonical_form

use rbc::Diagram;

fn main() -> rbc::Result<()> {
    let a = Diagram::from_compact(3, "not@2 sw@0 not@2")?;
    let b = Diagram::from_compact(3, "sw@0 not@2 not@2")?;

    println!("a = {a}");
    for (i, layer) in a.layers().iter().enumerate() {
        let gates: Vec<String> = layer.gates().iter().map(|g| g.to_string()).collect();
        println!("  layer {i}: {}", gates.join(" "));
    }
    println!("canonical(a) = {}", a.canonicalize());
    println!("a ~ b: {}", a.equivalent(&b));

    // Series and parallel composition.
    let sw = Diagram::from_compact(2, "sw@0")?;
    let not = Diagram::from_compact(1, "not@0")?;
    let left = sw.compose_par(&not).compose_seq(&not.compose_par(&sw))?;
    println!("(sw ⊗ not) ; (not ⊗ sw) = {left}");

    let dag = left.dependency_dag();
    println!("dependency edges: {:?}", dag.edges());

    // Cancelling gates are a reduction, not an equation.
    let twice = sw.compose_seq(&sw)?;
    println!("sw;sw ~ id: {}", twice.equivalent(&Diagram::identity(2)));
    Ok(())
}
