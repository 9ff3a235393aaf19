//! Count table (raw, classes, irreducible, prime) and closed meander counts.
//!
//! ```text
//! cargo run --release --example enumerate_counts -- 14
//! ```

use meander::enumerate::{count_closed, enumerate_open, parallel_count, SearchConfig};

fn main() -> meander::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(12);

    print!("order 4:");
    enumerate_open(4, |p| print!(" {p:?}"));
    println!();

    let table = parallel_count(&SearchConfig::new(max))?;
    println!("{:>5} {:>10} {:>10} {:>11} {:>10}", "order", "raw", "classes", "irreducible", "prime");
    for r in &table.rows {
        println!(
            "{:>5} {:>10} {:>10} {:>11} {:>10}",
            r.order,
            r.raw,
            r.canonical,
            r.irreducible.unwrap_or(0),
            r.prime.unwrap_or(0)
        );
    }
    table.write_csv(std::io::stdout())?;

    println!("\nclosed meanders with 2n crossings:");
    for n in 1..=7 {
        println!("  n={n}: {}", count_closed(n));
    }
    Ok(())
}
