//! Identical biarithmetic labelings exist exactly on bipartite graphs.

use iasi::construct::{label_identical_biarithmetic, BiarithmeticParams};
use iasi::graph::Graph;
use iasi::labeling::classify;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, g) in [
        ("C6", Graph::cycle(6)),
        ("K1,3", Graph::star(3)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
    ] {
        let outcome = label_identical_biarithmetic(&g, 3, 2, BiarithmeticParams::default())?;
        match outcome.labeling() {
            Some(f) => {
                let k = classify(&g, f)?.identical_biarithmetic_k;
                println!("{name}: k = {k:?}");
                for (v, label) in f.iter() {
                    println!("  {v} -> {label}");
                }
            }
            None => println!(
                "{name}: {}",
                serde_json::to_string(&outcome.failed_hypothesis())?
            ),
        }
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
