use std::collections::BTreeSet;

use super::{Graph, GraphError};

/// Name of a vertex of the left (`A.`) or right (`B.`) operand in a union or join.
pub fn side_name(left: bool, v: &str) -> String {
    if left {
        format!("A.{v}")
    } else {
        format!("B.{v}")
    }
}

/// Name of the product vertex `(u, v)`.
pub fn product_name(u: &str, v: &str) -> String {
    format!("{u}|{v}")
}

/// Name of vertex `v` of the `copy`-th (1-based) copy of the second operand in a corona.
pub fn corona_copy_name(copy: usize, v: &str) -> String {
    format!("{copy}.{v}")
}

impl Graph {
    fn copy_into(&self, out: &mut Graph, rename: impl Fn(&str) -> String) -> usize {
        let offset = out.vertex_count();
        for v in &self.names {
            out.add_vertex(rename(v))
                .expect("renamed vertices are distinct");
        }
        for (a, b) in self.edge_indices() {
            out.add_edge_ix(offset + a, offset + b)
                .expect("copied edges are fresh");
        }
        offset
    }

    /// Vertex-disjoint union; operands' vertices are prefixed `A.` and `B.`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new();
        self.copy_into(&mut g, |v| side_name(true, v));
        other.copy_into(&mut g, |v| side_name(false, v));
        g
    }

    /// Union plus every edge between the two operands.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let p1 = self.vertex_count();
        for a in 0..p1 {
            for b in 0..other.vertex_count() {
                g.add_edge_ix(a, p1 + b).expect("cross edges are fresh");
            }
        }
        g
    }

    /// Cartesian product. Vertices are `u|v` in row-major order over
    /// `(self, other)`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let p2 = other.vertex_count();
        let at = |i: usize, j: usize| i * p2 + j;
        let mut g = Graph::new();
        for u in &self.names {
            for v in &other.names {
                g.add_vertex(product_name(u, v))
                    .expect("product names are distinct");
            }
        }
        for i in 0..self.vertex_count() {
            for (a, b) in other.edge_indices() {
                g.add_edge_ix(at(i, a), at(i, b)).expect("fresh edge");
            }
        }
        for j in 0..p2 {
            for (a, b) in self.edge_indices() {
                g.add_edge_ix(at(a, j), at(b, j)).expect("fresh edge");
            }
        }
        g
    }

    /// Corona `self ∘ other`: `self` keeps its vertex names, copy `i` of
    /// `other` is attached to the `i`-th vertex of `self`.
    pub fn corona(&self, other: &Graph) -> Graph {
        let mut g = Graph::new();
        self.copy_into(&mut g, str::to_string);
        for i in 0..self.vertex_count() {
            let offset = other.copy_into(&mut g, |v| corona_copy_name(i + 1, v));
            for j in 0..other.vertex_count() {
                g.add_edge_ix(i, offset + j).expect("spoke edges are fresh");
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new();
        for v in &self.names {
            g.add_vertex(v.clone()).expect("distinct names");
        }
        let n = self.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                if !self.has_edge_ix(a, b) {
                    g.add_edge_ix(a, b).expect("fresh edge");
                }
            }
        }
        g
    }

    /// Subgraph induced by `subset`, keeping the original vertex order.
    pub fn induced_subgraph<S: AsRef<str>>(&self, subset: &[S]) -> Result<Graph, GraphError> {
        let mut keep = BTreeSet::new();
        for v in subset {
            let v = v.as_ref();
            keep.insert(self.require(v)?);
        }
        let mut g = Graph::new();
        let mut new_ix = vec![usize::MAX; self.vertex_count()];
        for &i in &keep {
            new_ix[i] = g.add_vertex(self.names[i].clone())?;
        }
        for (a, b) in self.edge_indices() {
            if keep.contains(&a) && keep.contains(&b) {
                g.add_edge_ix(new_ix[a], new_ix[b])?;
            }
        }
        Ok(g)
    }

    pub fn without_vertex(&self, v: &str) -> Result<Graph, GraphError> {
        let ix = self.require(v)?;
        let rest: Vec<&str> = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ix)
            .map(|(_, n)| n.as_str())
            .collect();
        self.induced_subgraph(&rest)
    }

    /// Spanning subgraph with the edge `u v` deleted.
    pub fn without_edge(&self, u: &str, v: &str) -> Result<Graph, GraphError> {
        let (a, b) = (self.require(u)?, self.require(v)?);
        if !self.has_edge_ix(a, b) {
            return Err(GraphError::UnknownVertex(format!("{u}-{v} (not an edge)")));
        }
        let mut g = self.clone();
        g.adj[a].remove(&b);
        g.adj[b].remove(&a);
        Ok(g)
    }
}
