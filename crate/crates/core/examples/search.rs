//! Bounded exhaustive search for labelings.

use iasi::graph::Graph;
use iasi::labeling::TargetClass;
use iasi::search::{search, SearchBounds};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bounds = SearchBounds::new(10, &[1, 2], &[2, 3]);
    for (name, g, class) in [
        ("C4", Graph::cycle(4), TargetClass::IdenticalBiarithmetic(2)),
        ("C3", Graph::cycle(3), TargetClass::IdenticalBiarithmetic(2)),
        ("K4", Graph::complete(4), TargetClass::Isoarithmetic),
        ("C5", Graph::cycle(5), TargetClass::Biarithmetic),
    ] {
        let r = search(&g, class, &bounds)?;
        println!(
            "{name} {class}: {} after {} nodes",
            r.status.as_str(),
            r.nodes_explored
        );
        if let Some(w) = r.witness {
            println!("  {}", serde_json::to_string(&w)?);
        }
    }
    let tight = search(
        &Graph::complete(5),
        TargetClass::Arithmetic,
        &bounds.clone().with_budget(6),
    )?;
    println!("K5 with 6 nodes: {}", tight.status.as_str());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
