//! Integer additive set-indexers of graphs: verification, construction and
//! bounded search.
//!
//! ```
//! use iasi::construct::{label_product, ConstructParams};
//! use iasi::graph::Graph;
//! use iasi::labeling::{classify, Labeling};
//! use iasi::numeric::make_ap;
//!
//! let p2 = Graph::path(2);
//! let f: Labeling = [("v1", 0), ("v2", 5)]
//!     .into_iter()
//!     .map(|(v, a)| (v.to_string(), make_ap(a, 1, 3).unwrap()))
//!     .collect();
//! let outcome = label_product(&p2, &f, &p2, &f, ConstructParams::default()).unwrap();
//! let report = classify(outcome.graph(), outcome.labeling().unwrap()).unwrap();
//! assert!(report.is_isoarithmetic);
//! ```

pub mod cli;
pub mod construct;
pub mod graph;
pub mod labeling;
pub mod numeric;
pub mod search;
