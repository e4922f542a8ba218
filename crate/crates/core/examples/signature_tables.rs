//! Inspect the dynamic programming tables node by node.
//!
//! cargo run --example signature_tables

use bcolor::bcol::{accepting_signature, build_table};
use bcolor::{linear_decomposition, DecompositionAnalysis, Graph};

fn main() -> bcolor::Result<()> {
    let g = Graph::path(4);
    let d = linear_decomposition(&g, &[0, 1, 2, 3])?;
    let a = DecompositionAnalysis::new(&g, &d)?;
    let k = 2;
    let table = build_table(&a, k, false)?;
    for &t in a.post_order() {
        println!(
            "node {t} covering {:?}: {} classes, {} signatures, {} distinct types",
            a.vertices(t),
            a.class_count(t),
            table.signatures(t).len(),
            table.instantiated_types(t)
        );
        for sig in table.signatures(t) {
            println!("    {sig:?}");
        }
    }
    println!(
        "accepting signature present: {}",
        table.contains(a.root(), &accepting_signature(k))
    );
    Ok(())
}
