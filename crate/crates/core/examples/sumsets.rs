//! Sumsets of arithmetic progressions and the deterministic index.

use iasi::numeric::{ap_of, deterministic_index, make_ap, sumset, SetLabel};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = make_ap(1, 2, 4)?;
    let b = make_ap(10, 4, 3)?;
    let s = sumset(&a, &b)?;
    println!("{a} + {b} = {s}");
    let ap = ap_of(&s).expect("index 4 = 2 * 2 and 2 <= |A|");
    println!("  first {} diff {:?} len {}", ap.first, ap.diff, ap.len);
    assert_eq!(s.len(), 4 + 2 * (3 - 1));

    // Multiplier 5 exceeds |A| = 4: the sum is no longer a progression.
    let c = make_ap(0, 10, 3)?;
    let t = sumset(&a, &c)?;
    println!("{a} + {c} = {t}, progression: {}", ap_of(&t).is_some());

    let irregular = SetLabel::from_unsorted([7, 1, 4, 13])?;
    println!(
        "index of {irregular}: {:?}",
        deterministic_index(&irregular)
    );
    println!(
        "index of {}: {:?}",
        SetLabel::singleton(3),
        deterministic_index(&SetLabel::singleton(3))?
    );
    Ok(())
}

fn main() {
    run_example().unwrap();
}
