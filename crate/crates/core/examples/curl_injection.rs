//! Distinct crossing subsets give distinct meanders after curl insertion.

use meander::compose::{injection_image, subset_injection};
use meander::Convention;

fn main() -> meander::Result<()> {
    for n in 1..=8 {
        let sizes: Vec<String> = (0..=n.min(4))
            .map(|s| subset_injection(n, s, Convention::EvenRoadReversal).map(|c| format!("{}:{}", s, c.certified)))
            .collect::<meander::Result<_>>()?;
        println!("order {n}: images per subset size {}", sizes.join(" "));
    }
    let c = injection_image(8, 4, Convention::EvenRoadReversal)?;
    println!("{}", serde_json::to_string_pretty(&c)?);
    Ok(())
}
