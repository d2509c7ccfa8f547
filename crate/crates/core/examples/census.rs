//! Search every graph on up to four vertices and compare with bipartiteness.

use iasi::labeling::TargetClass;
use iasi::search::{census, SearchBounds, SearchStatus};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = census(
        4,
        TargetClass::IdenticalBiarithmetic(2),
        &SearchBounds::default(),
    )?;
    let mut agree = 0;
    for row in &table.rows {
        if row.bipartite == (row.status == SearchStatus::Found) {
            agree += 1;
        }
    }
    println!(
        "{} graphs, {} found, {} exhausted, {} agree with bipartiteness",
        table.rows.len(),
        table.count(SearchStatus::Found),
        table.count(SearchStatus::Exhausted),
        agree
    );
    assert_eq!(agree, table.rows.len());
    for line in table.to_csv().lines().take(6) {
        println!("{line}");
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
