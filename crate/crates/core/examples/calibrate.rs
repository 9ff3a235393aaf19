//! Confirms the counting convention against published meandric numbers.

use meander::enumerate::{calibrate, ReferenceTable};

fn main() -> meander::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(13);
    let reference = ReferenceTable::embedded();
    let report = calibrate(max, &reference)?;
    for r in &report.rows {
        println!("M_{:<2} raw {:>6} halved {:>6} reference {:>6} -> {:?}", r.order, r.raw, r.halved.map_or("-".into(), |h| h.to_string()), r.reference, r.matches);
    }
    for i in &report.identities {
        println!("M_{} = {} = closed({})", i.open_order, i.open, i.n);
    }
    for s in &report.sandwiches {
        println!("{} <= M_{} = {} <= {}", s.closed, 2 * s.n, s.open_even, s.upper);
    }

    let mut broken = reference.clone();
    broken.open.insert(7, 43);
    match calibrate(max, &broken) {
        Err(e) => println!("corrupted reference rejected: {e}"),
        Ok(_) => println!("corrupted reference accepted?"),
    }
    Ok(())
}
