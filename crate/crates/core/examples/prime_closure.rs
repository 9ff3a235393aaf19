//! Turning any meander into a prime one, and how often each branch is used.

use meander::classify::{is_prime, PrimeVariant};
use meander::compose::prime_closure;
use meander::enumerate::open_meanders;
use meander::model::Branch;

fn main() -> meander::Result<()> {
    for s in ["1", "2,1", "1,2,3", "3,2,1,6,5,4"] {
        let m = s.parse()?;
        let p = prime_closure(&m)?;
        println!("({m}) -> ({}) via {:?}", p.meander, p.branch);
    }
    for n in 1..=8 {
        let (mut lit, mut mir) = (0, 0);
        for m in open_meanders(n) {
            let p = prime_closure(&m)?;
            assert!(is_prime(p.meander.perm(), PrimeVariant::Paper));
            match p.branch {
                Branch::Literal => lit += 1,
                Branch::Mirrored => mir += 1,
            }
        }
        println!("order {n}: {lit} literal, {mir} mirrored");
    }
    Ok(())
}
