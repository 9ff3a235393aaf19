//! Odd and even inserts, and curls inserted at a set of crossings.

use std::collections::BTreeSet;

use meander::compose::{insert, insert_trefoil_set, InsertSpec};
use meander::OpenMeander;

fn main() -> meander::Result<()> {
    let cases = [("1,2", "3,2,1", 1), ("1,2", "3,2,1", 2), ("1,2,3", "1,2", 1), ("3,2,1", "1,2", 1), ("1,2,3", "2,1", 2)];
    for (host, guest, pos) in cases {
        let (h, g): (OpenMeander, OpenMeander) = (host.parse()?, guest.parse()?);
        let r = insert(InsertSpec { host: &h, guest: &g, position: pos })?;
        println!("insert ({g}) into ({h}) at {pos}: ({}) guest {:?}", r.meander, r.orientation);
    }

    let h: OpenMeander = "1,4,3,2".parse()?;
    for targets in [vec![], vec![1], vec![2, 4], vec![1, 2, 3, 4]] {
        let s: BTreeSet<u32> = targets.iter().copied().collect();
        let img = insert_trefoil_set(&h, &s)?;
        println!("curls at {targets:?} of ({h}): ({img}), order {}", img.order());
    }
    Ok(())
}
