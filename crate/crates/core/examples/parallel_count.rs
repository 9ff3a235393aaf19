//! Counts open meanders of one order on a worker pool and checks that the
//! total does not depend on the number of workers or the prefix depth.
//!
//! ```text
//! cargo run --release --example parallel_count -- 16 4
//! ```

use std::time::Instant;

use meander::enumerate::{count_open, parallel_count, partition_counts, SearchConfig};
use meander::Convention;

fn main() -> meander::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(14);
    let workers: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(8);

    println!("order 4, split on the first crossing:");
    for (prefix, count) in partition_counts(4, 1) {
        println!("  {prefix:?} -> {count}");
    }

    let start = Instant::now();
    let serial = count_open(n, Convention::EvenRoadReversal);
    println!("\nsingle thread, order {n}: raw {} classes {} ({:.2?})", serial.raw, serial.canonical, start.elapsed());

    for depth in [2, 4] {
        let config = SearchConfig {
            max_order: n,
            prefix_depth: depth.min(n - 1),
            workers,
            convention: Convention::EvenRoadReversal,
            classify: false,
        };
        let start = Instant::now();
        let table = parallel_count(&config)?;
        let row = table.row(n).expect("row for the max order");
        println!(
            "{workers} workers, prefix depth {depth}: raw {} classes {} ({:.2?}) {}",
            row.raw,
            row.canonical,
            start.elapsed(),
            if row.raw == serial.raw { "identical" } else { "MISMATCH" }
        );
    }
    Ok(())
}
