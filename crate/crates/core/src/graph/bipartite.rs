use std::collections::VecDeque;

use serde::Serialize;

use super::Graph;

/// Outcome of a bipartiteness test, with a certificate either way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Bipartiteness {
    Bipartite {
        left: Vec<String>,
        right: Vec<String>,
    },
    /// Vertices of an odd cycle in traversal order.
    OddCycle { cycle: Vec<String> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }

    /// Checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            Bipartiteness::Bipartite { left, right } => {
                let mut side = vec![None; g.vertex_count()];
                for (names, s) in [(left, false), (right, true)] {
                    for v in names {
                        match g.index_of(v) {
                            Some(i) if side[i].is_none() => side[i] = Some(s),
                            _ => return false,
                        }
                    }
                }
                side.iter().all(Option::is_some)
                    && g.edge_indices().all(|(a, b)| side[a] != side[b])
            }
            Bipartiteness::OddCycle { cycle } => {
                let ixs: Option<Vec<usize>> = cycle.iter().map(|v| g.index_of(v)).collect();
                let Some(ixs) = ixs else { return false };
                let mut seen = ixs.clone();
                seen.sort_unstable();
                seen.dedup();
                ixs.len() >= 3
                    && ixs.len() % 2 == 1
                    && seen.len() == ixs.len()
                    && (0..ixs.len()).all(|i| g.has_edge_ix(ixs[i], ixs[(i + 1) % ixs.len()]))
            }
        }
    }
}

impl Graph {
    /// BFS 2-coloring. Components are colored in vertex order, each starting
    /// on the left side.
    pub fn is_bipartite(&self) -> Bipartiteness {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!color[u].unwrap());
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(c) if c == color[u].unwrap() => {
                            let cycle = odd_cycle(u, w, &parent, &depth);
                            return Bipartiteness::OddCycle {
                                cycle: cycle
                                    .into_iter()
                                    .map(|i| self.name(i).to_string())
                                    .collect(),
                            };
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, c) in color.iter().enumerate() {
            if c.unwrap() {
                right.push(self.name(i).to_string());
            } else {
                left.push(self.name(i).to_string());
            }
        }
        Bipartiteness::Bipartite { left, right }
    }
}

// Same-colored BFS endpoints sit at equal depth; climb to their common
// ancestor and splice the two tree paths with the closing edge.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Any triangle of `g`, as three vertex names.
pub fn find_triangle(g: &Graph) -> Option<[String; 3]> {
    for (a, b) in g.edge_indices() {
        if let Some(c) = g.neighbors(b).find(|&c| c > b && g.has_edge_ix(a, c)) {
            return Some([a, b, c].map(|i| g.name(i).to_string()));
        }
    }
    None
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::numbered(n);
                let mut it = bits.into_iter();
                for a in 0..n {
                    for b in a + 1..n {
                        if it.next().unwrap() {
                            g.add_edge_ix(a, b).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    fn brute_force_bipartite(g: &Graph) -> bool {
        let n = g.vertex_count();
        (0u32..1 << n).any(|mask| {
            g.edge_indices()
                .all(|(a, b)| (mask >> a & 1) != (mask >> b & 1))
        })
    }

    proptest! {
        #[test]
        fn certificates_verify(g in arb_graph(7)) {
            let cert = g.is_bipartite();
            prop_assert!(cert.verify(&g));
            prop_assert_eq!(cert.is_bipartite(), brute_force_bipartite(&g));
        }

        #[test]
        fn complement_is_involution(g in arb_graph(7)) {
            prop_assert_eq!(g.complement().complement(), g.clone());
            let n = g.vertex_count();
            prop_assert_eq!(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
        }

        #[test]
        fn operation_counts(g1 in arb_graph(6), g2 in arb_graph(6)) {
            let (p1, q1, p2, q2) = (g1.vertex_count(), g1.edge_count(), g2.vertex_count(), g2.edge_count());
            let u = g1.disjoint_union(&g2);
            prop_assert_eq!((u.vertex_count(), u.edge_count()), (p1 + p2, q1 + q2));
            let j = g1.join(&g2);
            prop_assert_eq!((j.vertex_count(), j.edge_count()), (p1 + p2, q1 + q2 + p1 * p2));
            let x = g1.cartesian_product(&g2);
            prop_assert_eq!((x.vertex_count(), x.edge_count()), (p1 * p2, p1 * q2 + p2 * q1));
            let c = g1.corona(&g2);
            prop_assert_eq!((c.vertex_count(), c.edge_count()), (p1 * (1 + p2), q1 + p1 * q2 + p1 * p2));
        }

        #[test]
        fn product_adjacency_matches_definition(g1 in arb_graph(4), g2 in arb_graph(4)) {
            let x = g1.cartesian_product(&g2);
            for u1 in g1.vertices() { for u2 in g2.vertices() {
                for v1 in g1.vertices() { for v2 in g2.vertices() {
                    let expected = (u1 == v1 && g2.has_edge(u2, v2)) || (u2 == v2 && g1.has_edge(u1, v1));
                    let got = x.has_edge(&crate::graph::ops::product_name(u1, u2), &crate::graph::ops::product_name(v1, v2));
                    prop_assert_eq!(got, expected);
                }}
            }}
        }
    }
}
