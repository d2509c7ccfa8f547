//! Labeling unions, joins, products, coronas and complements.

use iasi::construct::{
    label_complement, label_corona, label_join, label_product, label_union, ConstructParams,
};
use iasi::graph::Graph;
use iasi::labeling::Labeling;
use iasi::numeric::make_ap;

fn labels(spec: &[(&str, u64, u64, usize)]) -> Labeling {
    spec.iter()
        .map(|&(v, a, d, n)| (v.to_string(), make_ap(a, d, n).unwrap()))
        .collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = Graph::path(2);
    let f = labels(&[("v1", 0, 1, 3), ("v2", 5, 1, 3)]);
    let h = labels(&[("v1", 0, 1, 2), ("v2", 4, 2, 2)]);
    let params = ConstructParams::default();

    let union = label_union(&p2, &f, &p2, &f)?;
    println!("union: {}", serde_json::to_string(&union)?);

    let product = label_product(&p2, &f, &p2, &h, params)?;
    println!("product {:?}: {:?}", product.class(), product.labeling());

    let corona = label_corona(
        &Graph::path(1),
        &labels(&[("v1", 0, 1, 3)]),
        &p2,
        &labels(&[("v1", 0, 2, 2), ("v2", 9, 2, 2)]),
        params,
    )?;
    println!(
        "corona {:?}, repairs {:?}",
        corona.class(),
        corona.repairs()
    );

    // Index 5 next to index 2: no multiple relation, the join cannot be arithmetic.
    let a = labels(&[("v1", 0, 5, 2)]);
    let b = labels(&[("v1", 1, 2, 2)]);
    let join = label_join(&Graph::path(1), &a, &Graph::path(1), &b, params)?;
    println!(
        "join: {}",
        serde_json::to_string(&join.failed_hypothesis())?
    );

    // Index 3 = 3 * 1 needs three elements on the index-1 side; padding fixes it.
    let a = labels(&[("v1", 0, 1, 2)]);
    let b = labels(&[("v1", 10, 3, 2)]);
    let strict = label_join(&Graph::path(1), &a, &Graph::path(1), &b, params)?;
    let padded = label_join(
        &Graph::path(1),
        &a,
        &Graph::path(1),
        &b,
        ConstructParams {
            pad: true,
            ..params
        },
    )?;
    println!(
        "join without pad ok: {}, with pad: {:?}",
        strict.is_ok(),
        padded.repairs()
    );

    let complement = label_complement(
        &Graph::path(3),
        &labels(&[("v1", 0, 1, 2), ("v2", 10, 1, 2), ("v3", 20, 1, 2)]),
    )?;
    println!("complement of P3: {:?}", complement.class());
    Ok(())
}

fn main() {
    run_example().unwrap();
}
