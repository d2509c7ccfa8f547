//! Graph operations, bipartiteness certificates and file formats.

use iasi::graph::{find_triangle, io, Bipartiteness, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = Graph::path(2);
    let p3 = Graph::path(3);
    for (name, g) in [
        ("P2 u P3", p2.disjoint_union(&p3)),
        ("P2 + P3", p2.join(&p3)),
        ("P2 x P3", p2.cartesian_product(&p3)),
        ("P2 o P2", p2.corona(&p2)),
        ("complement of C5", Graph::cycle(5).complement()),
    ] {
        println!(
            "{name}: {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        );
    }

    match Graph::cycle(6).is_bipartite() {
        Bipartiteness::Bipartite { left, right } => println!("C6 sides {left:?} {right:?}"),
        Bipartiteness::OddCycle { cycle } => unreachable!("{cycle:?}"),
    }
    if let Bipartiteness::OddCycle { cycle } = Graph::cycle(5).is_bipartite() {
        println!("C5 odd cycle {cycle:?}");
    }
    println!("triangle in P2 + P2: {:?}", find_triangle(&p2.join(&p2)));

    let g = io::parse_edge_list("# a square with a tail\nvertex x\na b\nb c\nc d\nd a\nd x\n")?;
    println!("{}", io::write_json(&g));
    assert_eq!(io::parse_edge_list(&io::write_edge_list(&g)?)?, g);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
