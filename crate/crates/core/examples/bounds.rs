//! Upper and lower growth bounds for irreducible meanders, with the
//! insertion inequality checked against exact counts.

use meander::bounds::{
    bound_report, check_insertion_inequality, empirical_growth, minimize_upper_bound, ratio_table,
    upper_bound_at, BoundConstants,
};
use meander::enumerate::{parallel_count, SearchConfig};

fn main() -> meander::Result<()> {
    let c = BoundConstants::default();
    for k in [2.0, 5.0, 13.901, 50.0, 1000.0] {
        println!("bound at k = {k:>8}: {:.6}", upper_bound_at(k, &c)?);
    }
    let min = minimize_upper_bound(&c)?;
    println!("minimum {:.5} at k = {:.4} ({:?})", min.upper_min, min.k_star, min.method);
    println!("{}", serde_json::to_string_pretty(&bound_report(&c, None)?)?);

    let table = parallel_count(&SearchConfig::new(12))?;
    for n in 2..=6 {
        for k in [2, 3, 4] {
            let r = check_insertion_inequality(n, k, &table)?;
            println!(
                "n={n} k={k}: M_{} = {} >= C({n},{}) * {} = {} : {}",
                r.target_order, r.lhs, r.subset_size, r.rhs / meander::compose::binomial(n as u64, r.subset_size as u64), r.rhs, r.holds
            );
        }
    }
    let ratios = ratio_table(&table, 12, &c)?;
    ratios.write_csv(std::io::stdout())?;
    println!("gap: {}", ratios.gap_statement());
    meander::bounds::write_growth_csv(&empirical_growth(&table), std::io::stdout())?;
    Ok(())
}
