//! Bounded backtracking search for labelings of a requested class, and a
//! census harness that runs it over every small graph.
//!
//! Candidate labels are `make_ap(a, d, n)` with `a <= max_first`, `d` in
//! `diffs` and `n` in `lengths`. The search branches in two phases over the
//! same variables:
//!
//! 1. the shape `(d, n)` of every vertex, choosing next the unassigned vertex
//!    with the fewest consistent shapes (ties broken by degeneracy order);
//!    the class constraints (divisibility, cardinality bound, common index,
//!    common multiplier) depend only on shapes and are pruned here;
//! 2. the first term of every vertex in degeneracy order, pruning repeated
//!    vertex labels and repeated edge labels incrementally.
//!
//! Every leaf is re-checked with [`classify`] before it is reported. The
//! search is complete over the bounded space, so [`SearchStatus::Exhausted`]
//! proves that no labeling exists *within the bounds*.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::{classify, index_multiplier, Labeling, TargetClass};
use crate::numeric::{make_ap, sumset, SetLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("empty candidate space: {0}")]
    EmptyCandidates(&'static str),
    #[error("label length {0} is not allowed for {1} searches")]
    BadLength(usize, TargetClass),
    #[error("common difference 0 is not allowed")]
    ZeroDiff,
    #[error("identical biarithmetic search needs k >= 2, got {0}")]
    MultiplierTooSmall(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub max_first: u64,
    pub diffs: BTreeSet<u64>,
    pub lengths: BTreeSet<usize>,
    pub node_budget: u64,
}

impl SearchBounds {
    pub const DEFAULT_BUDGET: u64 = 2_000_000;

    pub fn new(max_first: u64, diffs: &[u64], lengths: &[usize]) -> Self {
        SearchBounds {
            max_first,
            diffs: diffs.iter().copied().collect(),
            lengths: lengths.iter().copied().collect(),
            node_budget: Self::DEFAULT_BUDGET,
        }
    }

    pub fn with_budget(mut self, node_budget: u64) -> Self {
        self.node_budget = node_budget;
        self
    }
}

impl Default for SearchBounds {
    /// `a <= 12`, `d` in `{1, 2}`, `n` in `{2, 3}`.
    fn default() -> Self {
        SearchBounds::new(12, &[1, 2], &[2, 3])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

impl SearchStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            SearchStatus::Found => "FOUND",
            SearchStatus::Exhausted => "EXHAUSTED",
            SearchStatus::BudgetExceeded => "BUDGET_EXCEEDED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub witness: Option<Labeling>,
    pub nodes_explored: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Shape {
    index: Option<u64>,
    len: usize,
}

struct BudgetHit;

struct Searcher<'a> {
    g: &'a Graph,
    class: TargetClass,
    bounds: &'a SearchBounds,
    shapes: Vec<Shape>,
    rank: Vec<usize>,
    order: Vec<usize>,
    nodes: u64,
}

pub fn search(
    g: &Graph,
    class: TargetClass,
    bounds: &SearchBounds,
) -> Result<SearchResult, SearchError> {
    if let TargetClass::IdenticalBiarithmetic(k) = class {
        if k < 2 {
            return Err(SearchError::MultiplierTooSmall(k));
        }
    }
    if bounds.diffs.is_empty() {
        return Err(SearchError::EmptyCandidates("no allowed differences"));
    }
    if bounds.lengths.is_empty() {
        return Err(SearchError::EmptyCandidates("no allowed lengths"));
    }
    if bounds.diffs.contains(&0) {
        return Err(SearchError::ZeroDiff);
    }
    for &n in &bounds.lengths {
        if n == 0 || (n == 1 && class.is_arithmetic_family()) {
            return Err(SearchError::BadLength(n, class));
        }
    }
    if bounds.node_budget == 0 {
        return Err(SearchError::EmptyCandidates("node budget is zero"));
    }

    let mut shapes = Vec::new();
    if bounds.lengths.contains(&1) {
        shapes.push(Shape {
            index: None,
            len: 1,
        });
    }
    for &d in &bounds.diffs {
        for &n in bounds.lengths.iter().filter(|&&n| n >= 2) {
            shapes.push(Shape {
                index: Some(d),
                len: n,
            });
        }
    }
    let order = g.degeneracy_order();
    let mut rank = vec![0; g.vertex_count()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut s = Searcher {
        g,
        class,
        bounds,
        shapes,
        rank,
        order,
        nodes: 0,
    };
    let mut assigned = vec![None; g.vertex_count()];
    let outcome = s.assign_shapes(&mut assigned);
    let (status, witness) = match outcome {
        Ok(Some(l)) => (SearchStatus::Found, Some(l)),
        Ok(None) => (SearchStatus::Exhausted, None),
        Err(BudgetHit) => (SearchStatus::BudgetExceeded, None),
    };
    Ok(SearchResult {
        status,
        witness,
        nodes_explored: s.nodes,
    })
}

impl Searcher<'_> {
    fn tick(&mut self) -> Result<(), BudgetHit> {
        self.nodes += 1;
        if self.nodes > self.bounds.node_budget {
            Err(BudgetHit)
        } else {
            Ok(())
        }
    }

    fn shape_fits(&self, v: usize, s: Shape, assigned: &[Option<Shape>]) -> bool {
        let g = self.g;
        match self.class {
            TargetClass::Iasi => true,
            TargetClass::Isoarithmetic => assigned.iter().flatten().all(|o| o.index == s.index),
            TargetClass::Arithmetic | TargetClass::Biarithmetic => {
                g.neighbors(v).all(|w| match assigned[w] {
                    None => true,
                    Some(o) => {
                        index_multiplier((g.name(v), s.index, s.len), (g.name(w), o.index, o.len))
                            .is_ok()
                    }
                })
            }
            TargetClass::IdenticalBiarithmetic(k) => g.neighbors(v).all(|w| match assigned[w] {
                None => true,
                Some(o) => matches!(
                    index_multiplier((g.name(v), s.index, s.len), (g.name(w), o.index, o.len)),
                    Ok(m) if m.k == k
                ),
            }),
        }
    }

    fn assign_shapes(
        &mut self,
        assigned: &mut [Option<Shape>],
    ) -> Result<Option<Labeling>, BudgetHit> {
        let mut pick: Option<(usize, Vec<Shape>)> = None;
        for &v in &self.order {
            if assigned[v].is_some() {
                continue;
            }
            let fits: Vec<Shape> = self
                .shapes
                .iter()
                .copied()
                .filter(|&s| self.shape_fits(v, s, assigned))
                .collect();
            let better = match &pick {
                None => true,
                Some((_, best)) => fits.len() < best.len(),
            };
            if better {
                let empty = fits.is_empty();
                pick = Some((v, fits));
                if empty {
                    break;
                }
            }
        }
        let Some((v, fits)) = pick else {
            return self.place_firsts(assigned);
        };
        for s in fits {
            self.tick()?;
            assigned[v] = Some(s);
            if let Some(found) = self.assign_shapes(assigned)? {
                return Ok(Some(found));
            }
            assigned[v] = None;
        }
        Ok(None)
    }

    fn place_firsts(&mut self, shapes: &[Option<Shape>]) -> Result<Option<Labeling>, BudgetHit> {
        let n = self.g.vertex_count();
        let mut labels: Vec<Option<SetLabel>> = vec![None; n];
        let mut vertex_labels = HashSet::new();
        let mut edge_labels = HashSet::new();
        let shapes: Vec<Shape> = shapes
            .iter()
            .map(|s| s.expect("all shapes assigned"))
            .collect();
        self.place_from(
            0,
            &shapes,
            &mut labels,
            &mut vertex_labels,
            &mut edge_labels,
        )
    }

    fn place_from(
        &mut self,
        depth: usize,
        shapes: &[Shape],
        labels: &mut Vec<Option<SetLabel>>,
        vertex_labels: &mut HashSet<SetLabel>,
        edge_labels: &mut HashSet<SetLabel>,
    ) -> Result<Option<Labeling>, BudgetHit> {
        if depth == self.order.len() {
            let labeling: Labeling = labels
                .iter()
                .enumerate()
                .map(|(i, l)| (self.g.name(i).to_string(), l.clone().expect("placed")))
                .collect();
            let report = classify(self.g, &labeling).expect("labeling is total and small");
            return Ok(report.satisfies(self.class).then_some(labeling));
        }
        let v = self.order[depth];
        let Shape { index, len } = shapes[v];
        for a in 0..=self.bounds.max_first {
            let label = make_ap(a, index.unwrap_or(1), len).expect("bounded labels fit in u64");
            if vertex_labels.contains(&label) {
                continue;
            }
            let mut fresh = Vec::new();
            let mut clash = false;
            for w in self.g.neighbors(v) {
                if self.rank[w] >= self.rank[v] {
                    continue;
                }
                let e = sumset(&label, labels[w].as_ref().expect("earlier vertex placed"))
                    .expect("bounded labels fit in u64");
                if edge_labels.contains(&e) || fresh.contains(&e) {
                    clash = true;
                    break;
                }
                fresh.push(e);
            }
            if clash {
                continue;
            }
            self.tick()?;
            vertex_labels.insert(label.clone());
            edge_labels.extend(fresh.iter().cloned());
            labels[v] = Some(label.clone());
            if let Some(found) =
                self.place_from(depth + 1, shapes, labels, vertex_labels, edge_labels)?
            {
                return Ok(Some(found));
            }
            labels[v] = None;
            vertex_labels.remove(&label);
            for e in &fresh {
                edge_labels.remove(e);
            }
        }
        Ok(None)
    }
}

/// Every labeled graph on `2..=n_max` vertices `v1..vn` without isolated
/// vertices, one per edge set. Isomorphic graphs are counted repeatedly.
/// Ids are `n{n}-{mask}` with bit `i` set for the `i`-th pair in
/// lexicographic order.
pub fn enumerate_graphs(n_max: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        for mask in 0u64..1 << pairs.len() {
            let mut covered = 0u64;
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    covered |= 1 << a | 1 << b;
                }
            }
            if covered != (1 << n) - 1 {
                continue;
            }
            let mut g = Graph::numbered(n);
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge_ix(a, b).expect("fresh edge");
                }
            }
            out.push((format!("n{n}-{mask}"), g));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub status: SearchStatus,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusTable {
    pub class: TargetClass,
    pub bounds: SearchBounds,
    pub rows: Vec<CensusRow>,
}

impl CensusTable {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["graph_id", "n", "m", "bipartite", "status", "nodes"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.graph_id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.bipartite.to_string(),
                r.status.as_str().to_string(),
                r.nodes.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("ascii")
    }

    pub fn count(&self, status: SearchStatus) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }
}

/// Runs [`search`] on every graph from [`enumerate_graphs`]. Graphs are
/// searched in parallel; rows keep enumeration order.
pub fn census(
    n_max: usize,
    class: TargetClass,
    bounds: &SearchBounds,
) -> Result<CensusTable, SearchError> {
    let graphs = enumerate_graphs(n_max);
    let rows = graphs
        .par_iter()
        .map(|(id, g)| {
            let result = search(g, class, bounds)?;
            Ok(CensusRow {
                graph_id: id.clone(),
                n: g.vertex_count(),
                m: g.edge_count(),
                bipartite: g.is_bipartite().is_bipartite(),
                status: result.status,
                nodes: result.nodes_explored,
            })
        })
        .collect::<Result<Vec<_>, SearchError>>()?;
    Ok(CensusTable {
        class,
        bounds: bounds.clone(),
        rows,
    })
}
