mod common;

use iasi::construct::{label_identical_biarithmetic, BiarithmeticParams};
use iasi::graph::Graph;
use iasi::labeling::{check_adjacency_condition, classify, Labeling, TargetClass};
use iasi::numeric::make_ap;
use iasi::search::{enumerate_graphs, search, SearchBounds, SearchStatus};
use proptest::prelude::*;
use rayon::prelude::*;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::numbered(n);
    let mut i = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            if bits[i] {
                g.add_edge(&format!("v{a}"), &format!("v{b}")).unwrap();
            }
            i += 1;
        }
    }
    g
}

fn arb_labeled_graph() -> impl Strategy<Value = (Graph, Labeling)> {
    (2usize..=6).prop_flat_map(|n| {
        let bits = prop::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let labels = prop::collection::vec(
            (
                0u64..40,
                prop::sample::select(vec![1u64, 2, 3, 4, 6]),
                1usize..=4,
            ),
            n,
        );
        (bits, labels).prop_map(move |(bits, labels)| {
            let g = graph_from_bits(n, &bits);
            let f = labels
                .into_iter()
                .enumerate()
                .map(|(i, (a, d, len))| (format!("v{}", i + 1), make_ap(a, d, len).unwrap()))
                .collect();
            (g, f)
        })
    })
}

proptest! {
    #[test]
    fn class_lattice((g, f) in arb_labeled_graph()) {
        let r = classify(&g, &f).unwrap();
        prop_assert!(!r.is_arithmetic || r.is_iasi);
        prop_assert!(!r.is_isoarithmetic || r.is_arithmetic);
        prop_assert!(!r.is_biarithmetic || r.is_arithmetic);
        prop_assert!(!(r.is_arithmetic && r.is_semi_arithmetic));
        prop_assert!(r.identical_biarithmetic_k.is_none() || r.is_biarithmetic);
        let collision = r.has_violation("vertex-collision") || r.has_violation("edge-collision");
        prop_assert_eq!(r.is_iasi, !collision);
    }

    #[test]
    fn edge_labels_are_progressions_exactly_when_adjacency_holds((g, f) in arb_labeled_graph()) {
        // Only meaningful when all vertex labels have an index.
        prop_assume!(f.iter().all(|(_, l)| l.len() >= 2));
        let r = classify(&g, &f).unwrap();
        let adjacency = check_adjacency_condition(&g, &f).unwrap();
        prop_assert_eq!(r.is_arithmetic, r.is_iasi && adjacency.holds);
    }

    #[test]
    fn classes_survive_deletions((g, f) in arb_labeled_graph(), pick in any::<prop::sample::Index>()) {
        let r = classify(&g, &f).unwrap();
        let classes = [TargetClass::Iasi, TargetClass::Arithmetic, TargetClass::Isoarithmetic, TargetClass::Biarithmetic];
        let v = pick.get(g.vertices()).clone();
        let mut smaller = vec![g.without_vertex(&v).unwrap()];
        if let Some((a, b)) = g.edges().nth(pick.index(g.edge_count().max(1))) {
            smaller.push(g.without_edge(a, b).unwrap());
        }
        for class in classes.into_iter().filter(|&c| r.satisfies(c)) {
            for h in &smaller {
                prop_assert!(classify(h, &f.restrict(h)).unwrap().satisfies(class), "{} lost {}", h, class);
            }
        }
    }

    #[test]
    fn search_witnesses_verify((g, _) in arb_labeled_graph(), class_ix in 0usize..5) {
        let class = [
            TargetClass::Iasi,
            TargetClass::Arithmetic,
            TargetClass::Isoarithmetic,
            TargetClass::Biarithmetic,
            TargetClass::IdenticalBiarithmetic(2),
        ][class_ix];
        let bounds = SearchBounds::new(8, &[1, 2], &[2, 3]).with_budget(20_000);
        let r = search(&g, class, &bounds).unwrap();
        if let Some(w) = &r.witness {
            prop_assert_eq!(r.status, SearchStatus::Found);
            prop_assert!(classify(&g, w).unwrap().satisfies(class));
        }
    }
}

#[test]
fn constructor_and_search_agree_on_six_vertices() {
    let bounds = SearchBounds::default();
    let disagreements: Vec<String> = enumerate_graphs(6)
        .par_iter()
        .filter_map(|(id, g)| {
            let bipartite = g.is_bipartite().is_bipartite();
            let built = label_identical_biarithmetic(g, 2, 1, BiarithmeticParams::default())
                .unwrap()
                .is_ok();
            let found = search(g, TargetClass::IdenticalBiarithmetic(2), &bounds)
                .unwrap()
                .status;
            let expected = if bipartite {
                SearchStatus::Found
            } else {
                SearchStatus::Exhausted
            };
            (built != bipartite || found != expected)
                .then(|| format!("{id}: built {built}, search {found:?}"))
        })
        .collect();
    assert!(disagreements.is_empty(), "{disagreements:?}");
}
