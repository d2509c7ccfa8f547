//! Fixture graphs and labeling generators shared by the integration tests.

#![allow(dead_code)]

use iasi::construct::{label_identical_biarithmetic, sidon_sequence, BiarithmeticParams};
use iasi::graph::Graph;
use iasi::labeling::{classify, Labeling, TargetClass};
use iasi::numeric::make_ap;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push((format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=6 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for n in 1..=4 {
        out.push((format!("K1,{n}"), Graph::star(n)));
    }
    for n in 2..=4 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    out
}

/// Isoarithmetic labeling with index `d`. First terms are spread along a
/// Sidon sequence so vertex and edge labels have pairwise distinct minima.
pub fn isoarithmetic(g: &Graph, d: u64, len: usize) -> Labeling {
    let span = d * (len as u64 - 1) + 1;
    let sidon = sidon_sequence(g.vertex_count());
    g.vertices()
        .iter()
        .zip(sidon)
        .map(|(v, s)| (v.clone(), make_ap(s * span, d, len).unwrap()))
        .collect()
}

/// Random arithmetic labeling: indices from {1, 2, 4} and at least four
/// elements, so every pair of indices meets the adjacency condition; first
/// terms are redrawn until the labeling is injective.
pub fn random_arithmetic(g: &Graph, rng: &mut ChaCha8Rng) -> Labeling {
    loop {
        let f: Labeling = g
            .vertices()
            .iter()
            .map(|v| {
                let d = [1, 2, 4][rng.gen_range(0..3)];
                let n = rng.gen_range(4..=5);
                (v.clone(), make_ap(rng.gen_range(0..400), d, n).unwrap())
            })
            .collect();
        if classify(g, &f).unwrap().is_arithmetic {
            return f;
        }
    }
}

/// Identical biarithmetic labeling from the constructor, or `None` for
/// graphs that have none.
pub fn identical(g: &Graph, k: u64) -> Option<Labeling> {
    label_identical_biarithmetic(g, k, 1, BiarithmeticParams::default())
        .unwrap()
        .labeling()
        .cloned()
}

pub fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut g = Graph::numbered(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                g.add_edge(&format!("v{}", a + 1), &format!("v{}", b + 1))
                    .unwrap();
            }
        }
    }
    g
}

pub fn satisfies(g: &Graph, f: &Labeling, class: TargetClass) -> bool {
    classify(g, &f.restrict(g)).unwrap().satisfies(class)
}
