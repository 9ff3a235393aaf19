//! Irreducible meanders of order 2n+32 and 2n+35 built from any meander.
//!
//! The fixed frames come from template files; the doubling recipe they were
//! derived from is run alongside as a cross-check.

use meander::classify::is_irreducible;
use meander::compose::recipe::construct_by_recipe;
use meander::compose::{build_irreducible, ConstructionVariant};
use meander::enumerate::open_meanders;
use meander::OpenMeander;

fn main() -> meander::Result<()> {
    let m: OpenMeander = std::env::args().nth(1).unwrap_or_else(|| "3,2,1".into()).parse()?;
    for variant in [ConstructionVariant::Plus32, ConstructionVariant::Plus35] {
        let c = build_irreducible(&m, variant)?;
        println!("{variant} of ({m}), branch {:?}:\n  ({})", c.branch, c.output);
        println!("  order {} irreducible {}", c.output.order(), is_irreducible(&c.output));
        assert_eq!(c.output.values(), construct_by_recipe(&m, variant).as_slice());
    }

    let mut total = 0;
    for n in 1..=7 {
        for m in open_meanders(n) {
            for variant in [ConstructionVariant::Plus32, ConstructionVariant::Plus35] {
                let c = build_irreducible(&m, variant)?;
                assert!(c.checks.valid && c.checks.order && c.checks.irreducible);
                total += 1;
            }
        }
    }
    println!("{total} constructions over all meanders of order <= 7 pass");
    Ok(())
}
