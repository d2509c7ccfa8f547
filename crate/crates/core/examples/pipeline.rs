//! Batch constructions from a JSON spec, as run by `iasi pipeline`.

use std::fs;

use iasi::cli::run_pipeline;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    let p = dir.path();
    fs::write(p.join("p2.edges"), "a b\n")?;
    fs::write(p.join("p2.json"), r#"{"a": [0, 1, 2], "b": [5, 6, 7]}"#)?;
    fs::write(p.join("c4.edges"), "a b\nb c\nc d\nd a\n")?;
    fs::write(p.join("c5.edges"), "a b\nb c\nc d\nd e\ne a\n")?;
    fs::write(
        p.join("spec.json"),
        r#"[
  {"id": "union", "op": "union", "g1": "p2.edges", "l1": "p2.json", "g2": "p2.edges", "l2": "p2.json"},
  {"id": "join", "op": "join", "g1": "p2.edges", "l1": "p2.json", "g2": "p2.edges", "l2": "p2.json"},
  {"id": "square", "op": "identical-biarithmetic", "g1": "c4.edges", "k": 2},
  {"id": "pentagon", "op": "identical-biarithmetic", "g1": "c5.edges", "k": 2},
  {"id": "typo", "op": "product", "g1": "p2.edges"}
]"#,
    )?;
    for row in run_pipeline(&p.join("spec.json"), false)? {
        println!(
            "{:8} {:7} verified={:?} {}",
            row.id,
            row.status,
            row.verified,
            row.error.as_deref().unwrap_or(row.claim.unwrap_or(""))
        );
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
