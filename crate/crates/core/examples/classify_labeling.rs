//! Check which classes a labeling belongs to.

use iasi::graph::Graph;
use iasi::labeling::{classify, verify_iasi, Labeling, TargetClass};
use iasi::numeric::make_ap;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let c4 = Graph::cycle(4);
    // Indices alternate 1 and 2 around the square.
    let f: Labeling = [
        ("v1", 0, 1, 2),
        ("v2", 10, 2, 2),
        ("v3", 3, 1, 2),
        ("v4", 20, 2, 2),
    ]
    .into_iter()
    .map(|(v, a, d, n)| Ok((v.to_string(), make_ap(a, d, n)?)))
    .collect::<Result<_, iasi::numeric::NumericError>>()?;
    let report = classify(&c4, &f)?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    assert!(report.satisfies(TargetClass::IdenticalBiarithmetic(2)));

    // Index 3 next to index 1 with only two elements: vertex labels are APs
    // but the sum is not.
    let p2 = Graph::path(2);
    let g: Labeling = [
        ("v1".to_string(), make_ap(0, 1, 2)?),
        ("v2".to_string(), make_ap(5, 3, 2)?),
    ]
    .into_iter()
    .collect();
    let report = classify(&p2, &g)?;
    println!(
        "semi-arithmetic: {}, violations: {:?}",
        report.is_semi_arithmetic,
        report
            .violations
            .iter()
            .map(|v| v.kind())
            .collect::<Vec<_>>()
    );

    let dup: Labeling = [
        ("v1".to_string(), make_ap(0, 1, 2)?),
        ("v2".to_string(), make_ap(0, 1, 2)?),
    ]
    .into_iter()
    .collect();
    println!("injective: {}", verify_iasi(&p2, &dup)?.holds);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
