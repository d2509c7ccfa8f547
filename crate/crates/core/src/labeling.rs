//! Set labelings, induced edge labels, and the IASI verifier/classifier.
//!
//! A labeling assigns a [`SetLabel`] to every vertex; the label of an edge
//! `uv` is the sumset `f(u) + f(v)`. [`classify`] decides every class at once
//! and backs each negative verdict with a machine-readable [`Violation`].
//!
//! Conventions:
//! - a singleton label has no deterministic index, so any arithmetic-class
//!   verdict touching an edge at a singleton-labeled vertex is false;
//! - identical biarithmetic requires a common multiplier `k >= 2`; with
//!   `k = 1` the class would coincide with isoarithmetic, which odd cycles admit;
//! - the multiplier of an edge is recorded from its smaller-index endpoint,
//!   and from the lexicographically smaller name when the indices tie.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::numeric::{ap_of, sumset, NumericError, SetLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("vertex `{0}` has no label")]
    Unlabeled(String),
    #[error("an edge needs two distinct endpoints, got `{0}` twice")]
    SameVertex(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("invalid labeling JSON: {0}")]
    Json(String),
}

/// Vertex name to set label. Ordered by name so serialized output is stable.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Labeling(BTreeMap<String, SetLabel>);

impl Labeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, vertex: impl Into<String>, label: SetLabel) -> Option<SetLabel> {
        self.0.insert(vertex.into(), label)
    }

    pub fn get(&self, vertex: &str) -> Option<&SetLabel> {
        self.0.get(vertex)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &SetLabel)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Labels of `g`'s vertices in vertex order, or the first unlabeled vertex.
    pub fn labels_for<'a>(&'a self, g: &Graph) -> Result<Vec<&'a SetLabel>, LabelError> {
        g.vertices()
            .iter()
            .map(|v| self.get(v).ok_or_else(|| LabelError::Unlabeled(v.clone())))
            .collect()
    }

    /// Keeps only the vertices of `g`.
    pub fn restrict(&self, g: &Graph) -> Labeling {
        Labeling(
            g.vertices()
                .iter()
                .filter_map(|v| self.0.get(v).map(|l| (v.clone(), l.clone())))
                .collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Labeling, LabelError> {
        serde_json::from_str(text).map_err(|e| LabelError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("labeling is serializable")
    }

    pub fn max_element(&self) -> u64 {
        self.0.values().map(SetLabel::largest).max().unwrap_or(0)
    }
}

impl FromIterator<(String, SetLabel)> for Labeling {
    fn from_iter<I: IntoIterator<Item = (String, SetLabel)>>(iter: I) -> Self {
        Labeling(iter.into_iter().collect())
    }
}

/// An edge named by its endpoints in graph order.
pub type EdgeName = [String; 2];

fn edge_name(g: &Graph, a: usize, b: usize) -> EdgeName {
    [g.name(a).to_string(), g.name(b).to_string()]
}

/// `g_f(uv) = f(u) + f(v)`.
pub fn induced_edge_label(f: &Labeling, u: &str, v: &str) -> Result<SetLabel, LabelError> {
    if u == v {
        return Err(LabelError::SameVertex(u.to_string()));
    }
    let lu = f
        .get(u)
        .ok_or_else(|| LabelError::Unlabeled(u.to_string()))?;
    let lv = f
        .get(v)
        .ok_or_else(|| LabelError::Unlabeled(v.to_string()))?;
    Ok(sumset(lu, lv)?)
}

/// A concrete reason for a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    VertexCollision {
        first: String,
        second: String,
        label: SetLabel,
    },
    EdgeCollision {
        first: EdgeName,
        second: EdgeName,
        label: SetLabel,
    },
    NonApVertex {
        vertex: String,
        label: SetLabel,
    },
    NonApEdge {
        edge: EdgeName,
        label: SetLabel,
    },
    UndefinedIndex {
        vertex: String,
        edge: EdgeName,
    },
    Divisibility {
        edge: EdgeName,
        indices: [u64; 2],
    },
    CardinalityBound {
        edge: EdgeName,
        base: String,
        k: u64,
        cardinality: usize,
    },
    MixedIndices {
        first: String,
        first_index: u64,
        second: String,
        second_index: u64,
    },
    MixedMultipliers {
        first: EdgeName,
        first_k: u64,
        second: EdgeName,
        second_k: u64,
    },
    MultiplierBelowTwo {
        edge: EdgeName,
        k: u64,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::VertexCollision { .. } => "vertex-collision",
            Violation::EdgeCollision { .. } => "edge-collision",
            Violation::NonApVertex { .. } => "non-ap-vertex",
            Violation::NonApEdge { .. } => "non-ap-edge",
            Violation::UndefinedIndex { .. } => "undefined-index",
            Violation::Divisibility { .. } => "divisibility",
            Violation::CardinalityBound { .. } => "cardinality-bound",
            Violation::MixedIndices { .. } => "mixed-indices",
            Violation::MixedMultipliers { .. } => "mixed-multipliers",
            Violation::MultiplierBelowTwo { .. } => "multiplier-below-two",
        }
    }
}

/// Multiplier of one edge: `index(other) = k * index(base)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeMultiplier {
    pub edge: EdgeName,
    pub base: String,
    pub k: u64,
}

/// Checks the adjacency condition for labels `lu`, `lv` of adjacent `u`, `v`:
/// one index is `k` times the other with `1 <= k <= |label of the smaller-index end|`.
pub fn edge_multiplier(
    u: &str,
    lu: &SetLabel,
    v: &str,
    lv: &SetLabel,
) -> Result<EdgeMultiplier, Violation> {
    let index = |name: &str, l: &SetLabel| {
        ap_of(l)
            .map(|ap| ap.diff)
            .ok_or_else(|| Violation::NonApVertex {
                vertex: name.to_string(),
                label: l.clone(),
            })
    };
    let du = index(u, lu)?;
    let dv = index(v, lv)?;
    index_multiplier((u, du, lu.len()), (v, dv, lv.len()))
}

/// The adjacency condition on bare `(name, index, cardinality)` shapes.
pub fn index_multiplier(
    (u, du, nu): (&str, Option<u64>, usize),
    (v, dv, nv): (&str, Option<u64>, usize),
) -> Result<EdgeMultiplier, Violation> {
    let edge = [u.to_string(), v.to_string()];
    let (du, dv) = match (du, dv) {
        (Some(du), Some(dv)) => (du, dv),
        (None, _) => {
            return Err(Violation::UndefinedIndex {
                vertex: u.to_string(),
                edge,
            })
        }
        (_, None) => {
            return Err(Violation::UndefinedIndex {
                vertex: v.to_string(),
                edge,
            })
        }
    };
    let u_is_base = du < dv || (du == dv && u <= v);
    let (base, base_len, lo, hi) = if u_is_base {
        (u, nu, du, dv)
    } else {
        (v, nv, dv, du)
    };
    if hi % lo != 0 {
        return Err(Violation::Divisibility {
            edge,
            indices: [du, dv],
        });
    }
    let k = hi / lo;
    if k > base_len as u64 {
        return Err(Violation::CardinalityBound {
            edge,
            base: base.to_string(),
            k,
            cardinality: base_len,
        });
    }
    Ok(EdgeMultiplier {
        edge,
        base: base.to_string(),
        k,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

/// Injectivity of `f` on vertices and of the induced labels on edges.
pub fn verify_iasi(g: &Graph, f: &Labeling) -> Result<Verdict, LabelError> {
    let labels = f.labels_for(g)?;
    let edge_labels = edge_labels(g, &labels)?;
    let violations = injectivity_violations(g, &labels, &edge_labels);
    Ok(Verdict {
        holds: violations.is_empty(),
        violations,
    })
}

fn edge_labels(g: &Graph, labels: &[&SetLabel]) -> Result<Vec<SetLabel>, LabelError> {
    g.edge_indices()
        .map(|(a, b)| sumset(labels[a], labels[b]).map_err(LabelError::from))
        .collect()
}

fn injectivity_violations(
    g: &Graph,
    labels: &[&SetLabel],
    edge_labels: &[SetLabel],
) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut seen: HashMap<&SetLabel, usize> = HashMap::new();
    for (i, l) in labels.iter().enumerate() {
        if let Some(&j) = seen.get(l) {
            violations.push(Violation::VertexCollision {
                first: g.name(j).to_string(),
                second: g.name(i).to_string(),
                label: (*l).clone(),
            });
        } else {
            seen.insert(l, i);
        }
    }
    let edges: Vec<_> = g.edge_indices().collect();
    let mut seen: HashMap<&SetLabel, usize> = HashMap::new();
    for (e, l) in edge_labels.iter().enumerate() {
        if let Some(&first) = seen.get(l) {
            let (a, b) = edges[first];
            let (c, d) = edges[e];
            violations.push(Violation::EdgeCollision {
                first: edge_name(g, a, b),
                second: edge_name(g, c, d),
                label: l.clone(),
            });
        } else {
            seen.insert(l, e);
        }
    }
    violations
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjacencyReport {
    pub holds: bool,
    pub k_map: Vec<EdgeMultiplier>,
    pub violations: Vec<Violation>,
}

/// Per-edge divisibility and cardinality check, independent of injectivity.
pub fn check_adjacency_condition(g: &Graph, f: &Labeling) -> Result<AdjacencyReport, LabelError> {
    let labels = f.labels_for(g)?;
    let mut k_map = Vec::new();
    let mut violations = Vec::new();
    for (a, b) in g.edge_indices() {
        match edge_multiplier(g.name(a), labels[a], g.name(b), labels[b]) {
            Ok(m) => k_map.push(m),
            Err(v) => violations.push(v),
        }
    }
    Ok(AdjacencyReport {
        holds: violations.is_empty(),
        k_map,
        violations,
    })
}

/// Every vertex label has cardinality `l`.
pub fn check_uniform(f: &Labeling, l: usize) -> bool {
    f.iter().all(|(_, label)| label.len() == l)
}

/// The classes a labeling can be checked or searched for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TargetClass {
    Iasi,
    Arithmetic,
    Isoarithmetic,
    Biarithmetic,
    IdenticalBiarithmetic(u64),
}

impl TargetClass {
    pub fn is_arithmetic_family(&self) -> bool {
        !matches!(self, TargetClass::Iasi)
    }

    /// Parses a class name; `k` is required for `identical-biarithmetic` only.
    pub fn parse(name: &str, k: Option<u64>) -> Result<TargetClass, String> {
        match name {
            "iasi" => Ok(TargetClass::Iasi),
            "arithmetic" => Ok(TargetClass::Arithmetic),
            "isoarithmetic" => Ok(TargetClass::Isoarithmetic),
            "biarithmetic" => Ok(TargetClass::Biarithmetic),
            "identical-biarithmetic" => match k {
                Some(k) if k >= 2 => Ok(TargetClass::IdenticalBiarithmetic(k)),
                Some(k) => Err(format!("identical biarithmetic needs k >= 2, got {k}")),
                None => Err("identical-biarithmetic requires --k".to_string()),
            },
            other => Err(format!("unknown class `{other}`")),
        }
    }
}

impl fmt::Display for TargetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TargetClass::Iasi => write!(f, "iasi"),
            TargetClass::Arithmetic => write!(f, "arithmetic"),
            TargetClass::Isoarithmetic => write!(f, "isoarithmetic"),
            TargetClass::Biarithmetic => write!(f, "biarithmetic"),
            TargetClass::IdenticalBiarithmetic(k) => write!(f, "identical-biarithmetic:{k}"),
        }
    }
}

impl FromStr for TargetClass {
    type Err = String;

    /// Accepts the [`Display`](fmt::Display) form, e.g. `identical-biarithmetic:2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some((name, k)) => {
                let k = k
                    .parse::<u64>()
                    .map_err(|e| format!("bad multiplier `{k}`: {e}"))?;
                TargetClass::parse(name, Some(k))
            }
            None => TargetClass::parse(s, None),
        }
    }
}

impl Serialize for TargetClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub is_iasi: bool,
    pub is_arithmetic: bool,
    pub is_semi_arithmetic: bool,
    pub is_isoarithmetic: bool,
    pub is_biarithmetic: bool,
    pub identical_biarithmetic_k: Option<u64>,
    pub k_map: Vec<EdgeMultiplier>,
    pub violations: Vec<Violation>,
}

impl ClassificationReport {
    pub fn satisfies(&self, class: TargetClass) -> bool {
        match class {
            TargetClass::Iasi => self.is_iasi,
            TargetClass::Arithmetic => self.is_arithmetic,
            TargetClass::Isoarithmetic => self.is_isoarithmetic,
            TargetClass::Biarithmetic => self.is_biarithmetic,
            TargetClass::IdenticalBiarithmetic(k) => self.identical_biarithmetic_k == Some(k),
        }
    }

    pub fn has_violation(&self, kind: &str) -> bool {
        self.violations.iter().any(|v| v.kind() == kind)
    }
}

pub fn classify(g: &Graph, f: &Labeling) -> Result<ClassificationReport, LabelError> {
    let labels = f.labels_for(g)?;
    let edge_labels = edge_labels(g, &labels)?;
    let mut violations = injectivity_violations(g, &labels, &edge_labels);
    let is_iasi = violations.is_empty();

    let vertex_aps: Vec<_> = labels.iter().map(|l| ap_of(l)).collect();
    for (i, ap) in vertex_aps.iter().enumerate() {
        if ap.is_none() {
            violations.push(Violation::NonApVertex {
                vertex: g.name(i).to_string(),
                label: labels[i].clone(),
            });
        }
    }
    let vertices_ap = vertex_aps.iter().all(Option::is_some);

    let mut edges_ap = true;
    let mut adjacency_ok = true;
    let mut k_map = Vec::new();
    for ((a, b), label) in g.edge_indices().zip(&edge_labels) {
        if ap_of(label).is_none() {
            edges_ap = false;
            violations.push(Violation::NonApEdge {
                edge: edge_name(g, a, b),
                label: label.clone(),
            });
        }
        if vertex_aps[a].is_none() || vertex_aps[b].is_none() {
            adjacency_ok = false;
            continue;
        }
        match edge_multiplier(g.name(a), labels[a], g.name(b), labels[b]) {
            Ok(m) => k_map.push(m),
            Err(v) => {
                adjacency_ok = false;
                violations.push(v);
            }
        }
    }

    let is_arithmetic = is_iasi && vertices_ap && edges_ap && adjacency_ok;
    let is_semi_arithmetic = is_iasi && vertices_ap && !edges_ap;

    let mut indices = vertex_aps
        .iter()
        .enumerate()
        .filter_map(|(i, ap)| ap.and_then(|ap| ap.diff).map(|d| (i, d)));
    let mut indices_equal = true;
    if let Some((i0, d0)) = indices.next() {
        if let Some((i, d)) = indices.find(|&(_, d)| d != d0) {
            indices_equal = false;
            violations.push(Violation::MixedIndices {
                first: g.name(i0).to_string(),
                first_index: d0,
                second: g.name(i).to_string(),
                second_index: d,
            });
        }
    }
    let is_isoarithmetic = is_arithmetic && indices_equal;
    let is_biarithmetic = is_arithmetic && k_map.len() == g.edge_count();

    let mut identical_biarithmetic_k = None;
    if is_biarithmetic {
        if let Some(first) = k_map.first() {
            match k_map.iter().find(|m| m.k != first.k) {
                Some(other) => violations.push(Violation::MixedMultipliers {
                    first: first.edge.clone(),
                    first_k: first.k,
                    second: other.edge.clone(),
                    second_k: other.k,
                }),
                None if first.k < 2 => violations.push(Violation::MultiplierBelowTwo {
                    edge: first.edge.clone(),
                    k: first.k,
                }),
                None => identical_biarithmetic_k = Some(first.k),
            }
        }
    }

    Ok(ClassificationReport {
        is_iasi,
        is_arithmetic,
        is_semi_arithmetic,
        is_isoarithmetic,
        is_biarithmetic,
        identical_biarithmetic_k,
        k_map,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::make_ap;

    fn set(v: &[u64]) -> SetLabel {
        SetLabel::new(v.to_vec()).unwrap()
    }

    fn labeling(pairs: &[(&str, &[u64])]) -> Labeling {
        pairs.iter().map(|(v, l)| (v.to_string(), set(l))).collect()
    }

    #[test]
    fn induced_edge_label_examples() {
        let f = labeling(&[
            ("u", &[1, 2]),
            ("v", &[3, 4]),
            ("z", &[0]),
            ("b", &[2, 5, 8]),
        ]);
        assert_eq!(induced_edge_label(&f, "u", "v").unwrap(), set(&[4, 5, 6]));
        assert_eq!(induced_edge_label(&f, "z", "b").unwrap(), set(&[2, 5, 8]));
        let f = labeling(&[("u", &[1, 3, 5]), ("v", &[2, 6, 10])]);
        assert_eq!(
            induced_edge_label(&f, "u", "v").unwrap(),
            set(&[3, 5, 7, 9, 11, 13, 15])
        );
        assert_eq!(
            induced_edge_label(&f, "u", "w"),
            Err(LabelError::Unlabeled("w".into()))
        );
        assert_eq!(
            induced_edge_label(&f, "u", "u"),
            Err(LabelError::SameVertex("u".into()))
        );
    }

    #[test]
    fn verify_iasi_examples() {
        let p2 = Graph::from_parts(&["u", "v"], &[("u", "v")]).unwrap();
        assert!(
            verify_iasi(&p2, &labeling(&[("u", &[1]), ("v", &[2])]))
                .unwrap()
                .holds
        );

        let p3 = Graph::from_parts(&["u", "v", "w"], &[("u", "v"), ("v", "w")]).unwrap();
        let verdict =
            verify_iasi(&p3, &labeling(&[("u", &[1]), ("v", &[2]), ("w", &[1])])).unwrap();
        assert!(!verdict.holds);
        assert!(verdict.violations.contains(&Violation::VertexCollision {
            first: "u".into(),
            second: "w".into(),
            label: set(&[1]),
        }));

        // Star: {0,1}+{2} = {2,3} and {0,1}+{3} = {3,4}.
        let star = Graph::from_parts(&["c", "x", "y"], &[("c", "x"), ("c", "y")]).unwrap();
        let f = labeling(&[("c", &[0, 1]), ("x", &[2]), ("y", &[3])]);
        assert_eq!(induced_edge_label(&f, "c", "x").unwrap(), set(&[2, 3]));
        assert_eq!(induced_edge_label(&f, "c", "y").unwrap(), set(&[3, 4]));
        assert!(verify_iasi(&star, &f).unwrap().holds);

        assert_eq!(
            verify_iasi(&p3, &labeling(&[("u", &[1])])),
            Err(LabelError::Unlabeled("v".into()))
        );
    }

    #[test]
    fn edge_collision_with_shared_endpoint() {
        // {0,1}+{0,2} = {0,1}+{0,1,2} = {0,1,2,3}.
        let star = Graph::from_parts(&["c", "x", "y"], &[("c", "x"), ("c", "y")]).unwrap();
        let f = labeling(&[("c", &[0, 1]), ("x", &[0, 2]), ("y", &[0, 1, 2])]);
        let v = verify_iasi(&star, &f).unwrap();
        assert!(!v.holds);
        assert_eq!(v.violations[0].kind(), "edge-collision");
    }

    #[test]
    fn adjacency_condition_examples() {
        let p2 = Graph::from_parts(&["u", "v"], &[("u", "v")]).unwrap();
        let f = labeling(&[("u", &[0, 2, 4]), ("v", &[1, 5])]);
        let r = check_adjacency_condition(&p2, &f).unwrap();
        assert!(r.holds);
        assert_eq!(
            r.k_map,
            vec![EdgeMultiplier {
                edge: ["u".into(), "v".into()],
                base: "u".into(),
                k: 2
            }]
        );
        let s = sumset(f.get("u").unwrap(), f.get("v").unwrap()).unwrap();
        assert!(ap_of(&s).is_some());

        let f = labeling(&[("u", &[0, 2]), ("v", &[0, 6])]);
        let r = check_adjacency_condition(&p2, &f).unwrap();
        assert!(!r.holds);
        assert_eq!(
            r.violations,
            vec![Violation::CardinalityBound {
                edge: ["u".into(), "v".into()],
                base: "u".into(),
                k: 3,
                cardinality: 2
            }]
        );
        assert_eq!(
            sumset(f.get("u").unwrap(), f.get("v").unwrap()).unwrap(),
            set(&[0, 2, 6, 8])
        );
        assert!(ap_of(&set(&[0, 2, 6, 8])).is_none());

        let f = labeling(&[("u", &[0, 5]), ("v", &[1, 6, 11])]);
        let r = check_adjacency_condition(&p2, &f).unwrap();
        assert_eq!(r.k_map[0].k, 1);
        assert_eq!(r.k_map[0].base, "u");

        let f = labeling(&[("u", &[3]), ("v", &[1, 6])]);
        let r = check_adjacency_condition(&p2, &f).unwrap();
        assert_eq!(r.violations[0].kind(), "undefined-index");

        let f = labeling(&[("u", &[0, 2]), ("v", &[0, 3])]);
        let r = check_adjacency_condition(&p2, &f).unwrap();
        assert_eq!(r.violations[0].kind(), "divisibility");
    }

    #[test]
    fn equal_indices_orient_by_name() {
        let m = edge_multiplier("z", &set(&[0, 2]), "a", &set(&[1, 3])).unwrap();
        assert_eq!((m.base.as_str(), m.k), ("a", 1));
        let m = edge_multiplier("z", &set(&[0, 6]), "a", &set(&[1, 3, 5])).unwrap();
        assert_eq!((m.base.as_str(), m.k), ("a", 3));
    }

    #[test]
    fn classify_isoarithmetic_c4() {
        let c4 = Graph::cycle(4);
        // First terms 0, 1, 3, 7: vertex labels and all four edge sums differ.
        let f: Labeling = [0u64, 1, 3, 7]
            .iter()
            .enumerate()
            .map(|(i, &a)| (format!("v{}", i + 1), make_ap(a, 3, 3).unwrap()))
            .collect();
        let r = classify(&c4, &f).unwrap();
        assert!(r.is_iasi && r.is_arithmetic && r.is_isoarithmetic && r.is_biarithmetic);
        assert!(!r.is_semi_arithmetic);
        assert_eq!(r.identical_biarithmetic_k, None);
        assert!(r.has_violation("multiplier-below-two"));
    }

    #[test]
    fn classify_identical_biarithmetic_c4() {
        let c4 = Graph::cycle(4);
        let f = labeling(&[
            ("v1", &[0, 1]),
            ("v2", &[0, 2, 4]),
            ("v3", &[4, 5]),
            ("v4", &[10, 12, 14]),
        ]);
        let r = classify(&c4, &f).unwrap();
        assert!(r.is_arithmetic && r.is_biarithmetic);
        assert!(!r.is_isoarithmetic);
        assert!(r.has_violation("mixed-indices"));
        assert_eq!(r.identical_biarithmetic_k, Some(2));
        assert!(r.satisfies(TargetClass::IdenticalBiarithmetic(2)));
    }

    #[test]
    fn classify_non_ap_vertex() {
        let p2 = Graph::from_parts(&["u", "v"], &[("u", "v")]).unwrap();
        let f = labeling(&[("u", &[0, 1]), ("v", &[0, 2, 5])]);
        let r = classify(&p2, &f).unwrap();
        assert!(r.is_iasi);
        assert!(!r.is_arithmetic && !r.is_semi_arithmetic);
        assert!(r.has_violation("non-ap-vertex"));
    }

    #[test]
    fn classify_semi_arithmetic() {
        let p2 = Graph::from_parts(&["u", "v"], &[("u", "v")]).unwrap();
        let f = labeling(&[("u", &[0, 2]), ("v", &[0, 6])]);
        let r = classify(&p2, &f).unwrap();
        assert!(r.is_iasi && r.is_semi_arithmetic && !r.is_arithmetic);
        assert!(r.has_violation("non-ap-edge") && r.has_violation("cardinality-bound"));
    }

    #[test]
    fn singleton_blocks_arithmetic_classes() {
        let p2 = Graph::from_parts(&["u", "v"], &[("u", "v")]).unwrap();
        let f = labeling(&[("u", &[3]), ("v", &[0, 2, 4])]);
        let r = classify(&p2, &f).unwrap();
        assert!(r.is_iasi);
        assert!(!r.is_arithmetic && !r.is_biarithmetic && !r.is_isoarithmetic);
        assert!(r.has_violation("undefined-index"));
    }

    #[test]
    fn mixed_multipliers() {
        let p3 = Graph::path(3);
        let f = labeling(&[("v1", &[0, 1, 2]), ("v2", &[10, 12, 14]), ("v3", &[20, 26])]);
        let r = classify(&p3, &f).unwrap();
        assert!(r.is_biarithmetic);
        assert_eq!(r.identical_biarithmetic_k, None);
        assert!(r.has_violation("mixed-multipliers"));
    }

    #[test]
    fn uniform_examples() {
        let f = labeling(&[("a", &[0, 1, 2]), ("b", &[3, 4, 5])]);
        assert!(check_uniform(&f, 3));
        let f = labeling(&[("a", &[0, 1]), ("b", &[3, 4, 5])]);
        assert!(!check_uniform(&f, 3));
        assert!(check_uniform(&Labeling::new(), 3));
    }

    #[test]
    fn labeling_json() {
        let f = Labeling::from_json(r#"{"b":[1,3],"a":[0]}"#).unwrap();
        assert_eq!(
            f.to_json().replace([' ', '\n'], ""),
            r#"{"a":[0],"b":[1,3]}"#
        );
        assert!(Labeling::from_json(r#"{"a":[2,1]}"#).is_err());
    }

    #[test]
    fn class_names_parse() {
        for c in [
            TargetClass::Iasi,
            TargetClass::Arithmetic,
            TargetClass::Isoarithmetic,
            TargetClass::Biarithmetic,
            TargetClass::IdenticalBiarithmetic(3),
        ] {
            assert_eq!(c.to_string().parse::<TargetClass>().unwrap(), c);
        }
        assert!(TargetClass::parse("identical-biarithmetic", Some(1)).is_err());
        assert!(TargetClass::parse("identical-biarithmetic", None).is_err());
    }
}
