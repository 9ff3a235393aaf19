//! Joining two meanders along the river.

use meander::{concatenate, OpenMeander};

fn main() -> meander::Result<()> {
    let pairs = [("3,2,1", "3,2,1"), ("1", "1"), ("1,2", "1"), ("1", "2,1"), ("4,3,2,5,6,1", "1")];
    for (a, b) in pairs {
        let (p, q): (OpenMeander, OpenMeander) = (a.parse()?, b.parse()?);
        let c = concatenate(&p, &q)?;
        let note = match (c.left_reversed, c.branch) {
            (true, _) => "left operand traversed backwards",
            (false, meander::model::Branch::Mirrored) => "right operand mirrored",
            _ => "plain append",
        };
        println!("({p}) + ({q}) = ({}) [{note}]", c.meander);
    }
    Ok(())
}
