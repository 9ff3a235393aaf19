//! The geometric route to the irreducible construction, used to cross-check
//! the frame templates: concatenate a fixed seed with the input, stop the
//! road at one extra crossing, then run a parallel copy of the road back to
//! the start.

use super::construct::ConstructionVariant;
use crate::model::{Convention, OpenMeander};

/// The order-15 starting meander.
pub const SEED: [u32; 15] = [11, 10, 1, 2, 9, 12, 13, 8, 3, 4, 7, 14, 15, 6, 5];

/// Doubles a road given by its crossing labels `x_1..x_L`: crossing `x`
/// splits into `2x-1` and `2x`, the outgoing strand takes `2x_i - [i odd]`,
/// turns around at the last crossing and comes back on the other label.
pub fn double_road(path: &[u32]) -> Vec<u32> {
    let forward = path
        .iter()
        .enumerate()
        .map(|(i, &x)| 2 * x - u32::from(i % 2 == 0));
    let back = path
        .iter()
        .enumerate()
        .rev()
        .map(|(i, &x)| 2 * x - u32::from(i % 2 == 1));
    forward.chain(back).collect()
}

/// River position of the terminal crossing the road stops at (after the seed
/// values at or above it are moved up by one).
fn terminal(odd: bool) -> u32 {
    if odd {
        14
    } else {
        5
    }
}

/// Where the three extra crossings of the `+35` variant go.
fn extension_gap(odd: bool) -> u32 {
    if odd {
        9
    } else {
        5
    }
}

/// The road of the seed-plus-input concatenation, stopped at the terminal crossing.
pub fn stopped_road(input: &[u32]) -> Vec<u32> {
    let odd = input.len() % 2 == 1;
    let t = terminal(odd);
    let shift = SEED.len() as u32 + 1;
    let mut path: Vec<u32> = SEED.iter().map(|&v| if v >= t { v + 1 } else { v }).collect();
    path.extend(input.iter().map(|a| a + shift));
    path.push(t);
    path
}

/// Builds the construction output by the recipe. Even inputs are first
/// brought to even-reversal canonical form, as in the template route.
pub fn construct_by_recipe(input: &OpenMeander, variant: ConstructionVariant) -> Vec<u32> {
    let n = input.order();
    let canonical = crate::model::canonicalize(input.perm(), Convention::EvenRoadReversal);
    let doubled = double_road(&stopped_road(canonical.values()));
    match variant {
        ConstructionVariant::Plus32 => doubled,
        ConstructionVariant::Plus35 => {
            let s = extension_gap(n % 2 == 1);
            let mut out: Vec<u32> = doubled
                .into_iter()
                .map(|v| if v >= s { v + 2 } else { v })
                .collect();
            out.extend([2 * n as u32 + 35, s + 1, s]);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_is_a_meander() {
        assert!(crate::model::validate(&SEED).unwrap());
    }

    #[test]
    fn doubling_small_road() {
        // road 1 -> 2 stopping at 2: out on 1, 4 then back on 3, 2
        assert_eq!(double_road(&[1, 2]), vec![1, 4, 3, 2]);
    }
}
