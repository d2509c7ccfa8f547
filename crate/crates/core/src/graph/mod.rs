//! Finite simple undirected graphs with named vertices.
//!
//! Vertex order is part of a graph's identity: it fixes the iteration order of
//! every operation, so reports and constructed labelings are reproducible.

mod bipartite;
pub mod io;
mod ops;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use bipartite::{find_triangle, Bipartiteness};
pub use ops::{corona_copy_name, product_name, side_name};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` -- `{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex `{0}` is isolated (strict mode forbids isolated vertices)")]
    IsolatedVertex(String),
    #[error("vertex name `{0}` cannot be written in edge-list format")]
    UnrepresentableName(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// An undirected edge stored as a pair of vertex indices with `.0 < .1`.
pub type EdgeIx = (usize, usize);

#[derive(Debug, Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from a vertex list and an edge list of names.
    pub fn from_parts<S, E>(vertices: &[S], edges: &[(E, E)]) -> Result<Self, GraphError>
    where
        S: AsRef<str>,
        E: AsRef<str>,
    {
        let mut g = Graph::new();
        for v in vertices {
            g.add_vertex(v.as_ref())?;
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, GraphError> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        let ix = self.names.len();
        self.index.insert(name.clone(), ix);
        self.names.push(name);
        self.adj.push(BTreeSet::new());
        Ok(ix)
    }

    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<(), GraphError> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        self.add_edge_ix(a, b)
    }

    pub(crate) fn add_edge_ix(&mut self, a: usize, b: usize) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(self.names[a].clone()));
        }
        if !self.adj[a].insert(b) {
            return Err(GraphError::DuplicateEdge(
                self.names[a].clone(),
                self.names[b].clone(),
            ));
        }
        self.adj[b].insert(a);
        Ok(())
    }

    fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, ix: usize) -> &str {
        &self.names[ix]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn neighbors(&self, ix: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[ix].iter().copied()
    }

    pub fn degree(&self, ix: usize) -> usize {
        self.adj[ix].len()
    }

    pub fn has_edge_ix(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Some(a), Some(b)) => self.has_edge_ix(a, b),
            _ => false,
        }
    }

    /// Edges as index pairs, sorted lexicographically with `a < b`.
    pub fn edge_indices(&self) -> impl Iterator<Item = EdgeIx> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, ns)| ns.range(a + 1..).map(move |&b| (a, b)))
    }

    /// Edges as name pairs in the same order as [`Graph::edge_indices`].
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edge_indices()
            .map(|(a, b)| (self.names[a].as_str(), self.names[b].as_str()))
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = &str> + '_ {
        (0..self.names.len())
            .filter(|&i| self.adj[i].is_empty())
            .map(|i| self.names[i].as_str())
    }

    /// Rejects graphs with isolated vertices.
    pub fn check_strict(&self) -> Result<(), GraphError> {
        match self.isolated_vertices().next() {
            Some(v) => Err(GraphError::IsolatedVertex(v.to_string())),
            None => Ok(()),
        }
    }

    /// Vertex order for search: repeatedly strip a minimum-degree vertex
    /// (lowest index on ties) and return the removal order reversed, so the
    /// densest core comes first.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut degree: Vec<usize> = (0..n).map(|i| self.degree(i)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&i| !removed[i])
                .min_by_key(|&i| (degree[i], i))
                .expect("a vertex remains");
            removed[v] = true;
            for u in self.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                }
            }
            order.push(v);
        }
        order.reverse();
        order
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::numbered(n);
        for i in 1..n {
            g.add_edge_ix(i - 1, i).expect("fresh edge");
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge_ix(n - 1, 0).expect("fresh edge");
        g
    }

    /// `K_{1,leaves}` with center `v1`.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::numbered(leaves + 1);
        for i in 1..=leaves {
            g.add_edge_ix(0, i).expect("fresh edge");
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::numbered(n);
        for a in 0..n {
            for b in a + 1..n {
                g.add_edge_ix(a, b).expect("fresh edge");
            }
        }
        g
    }

    /// `n` isolated vertices named `v1..vn`.
    pub fn numbered(n: usize) -> Graph {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(format!("v{i}")).expect("fresh name");
        }
        g
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(p={}, q={}; ",
            self.vertex_count(),
            self.edge_count()
        )?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, ")")
    }
}
