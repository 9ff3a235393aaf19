//! Irreducibility and primality, with the witnesses that refute them.
//!
//! ```text
//! cargo run --example classify -- 3,2,1,6,5,4
//! ```

use meander::classify::{classify, interval_windows, PrimeVariant};
use meander::OpenMeander;

fn main() -> meander::Result<()> {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        vec!["3,2,1,6,5,4".to_string(), "1,2,3,4,5".to_string(), "1,2,3".to_string()]
    } else {
        inputs
    };
    for s in inputs {
        let m: OpenMeander = s.parse()?;
        let paper = classify(m.perm(), PrimeVariant::Paper);
        let strict = classify(m.perm(), PrimeVariant::Strict);
        println!("{m}");
        println!("  interval windows: {:?}", interval_windows(m.perm()).iter().map(|w| (w.k1, w.k2)).collect::<Vec<_>>());
        match paper.witness {
            None => println!("  irreducible"),
            Some(w) => println!("  reducible: positions {}..={} hold consecutive values", w.k1, w.k2),
        }
        for r in [&paper, &strict] {
            match r.prime_witness {
                None => println!("  prime ({})", r.prime_variant),
                Some(k) => println!("  not prime ({}): first {k} values are 1..={k}", r.prime_variant),
            }
        }
    }
    Ok(())
}
