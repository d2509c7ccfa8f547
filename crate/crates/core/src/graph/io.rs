//! Edge-list text and JSON graph formats.
//!
//! Edge list: one `u v` pair per line, `#` starts a comment, and
//! `vertex u` declares a vertex. Vertices are ordered by first appearance.
//! The writer declares every vertex up front so vertex order survives a
//! round trip.
//!
//! JSON: `{"vertices": [...], "edges": [["u", "v"], ...]}`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let at_line = |e: GraphError| GraphError::Parse {
            line,
            message: e.to_string(),
        };
        match tokens.as_slice() {
            ["vertex", v] => {
                if !g.contains(v) {
                    g.add_vertex(*v).map_err(at_line)?;
                }
            }
            [u, v] => {
                for w in [u, v] {
                    if !g.contains(w) {
                        g.add_vertex(*w).map_err(at_line)?;
                    }
                }
                g.add_edge(u, v).map_err(at_line)?;
            }
            _ => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected `u v` or `vertex u`, found `{content}`"),
                })
            }
        }
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> Result<String, GraphError> {
    for v in g.vertices() {
        if v.is_empty() || v == "vertex" || v.contains('#') || v.chars().any(char::is_whitespace) {
            return Err(GraphError::UnrepresentableName(v.clone()));
        }
    }
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

pub fn parse_json(text: &str) -> Result<Graph, GraphError> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
    Graph::from_parts(&raw.vertices, &raw.edges)
}

fn raw(g: &Graph) -> GraphJson {
    GraphJson {
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .map(|(u, v)| (u.to_string(), v.to_string()))
            .collect(),
    }
}

pub fn to_json_value(g: &Graph) -> serde_json::Value {
    serde_json::to_value(raw(g)).expect("graph JSON is always serializable")
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&raw(g)).expect("serializable")
}

/// Picks the format from the extension: `.json` is JSON, anything else is an
/// edge list.
pub fn parse_for_path(path: &Path, text: &str) -> Result<Graph, GraphError> {
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("json"))
    {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_declarations() {
        let text = "# a square\nvertex x\na b\nb c # trailing\n\nc d\nd a\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertices(), &["x", "a", "b", "c", "d"]);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.isolated_vertices().collect::<Vec<_>>(), vec!["x"]);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("a b\na b c\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = parse_edge_list("a b\nb a\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        let err = parse_edge_list("a a\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn json_rejects_unknown_endpoint() {
        let err = parse_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#).unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex("b".into()));
        assert!(matches!(parse_json("{"), Err(GraphError::Json(_))));
    }

    #[test]
    fn writer_refuses_unrepresentable_names() {
        let g = Graph::from_parts::<&str, &str>(&["has space"], &[]).unwrap();
        assert!(write_edge_list(&g).is_err());
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_named_graph() -> impl Strategy<Value = Graph> {
        (
            prop::collection::btree_set("[a-z][a-z0-9_.|]{0,5}", 1..7),
            any::<u64>(),
        )
            .prop_map(|(names, bits)| {
                let names: Vec<String> = names.into_iter().filter(|n| n != "vertex").collect();
                let mut g = Graph::new();
                for n in &names {
                    g.add_vertex(n.clone()).unwrap();
                }
                let mut bit = 0;
                for a in 0..names.len() {
                    for b in a + 1..names.len() {
                        if bits >> (bit % 64) & 1 == 1 {
                            g.add_edge(&names[a], &names[b]).unwrap();
                        }
                        bit += 1;
                    }
                }
                g
            })
    }

    proptest! {
        #[test]
        fn both_formats_round_trip(g in arb_named_graph()) {
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g).unwrap()).unwrap(), g.clone());
            prop_assert_eq!(parse_json(&write_json(&g)).unwrap(), g);
        }
    }
}
