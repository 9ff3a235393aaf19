use std::collections::BTreeSet;

use meander::classify::{classify, prime_witness, reducibility_witness, PrimeVariant};
use meander::compose::recipe::construct_by_recipe;
use meander::compose::{
    build_irreducible, insert_even, insert_odd, insert_trefoil_set, ConstructionVariant, InsertSpec,
};
use meander::enumerate::{
    closed_meanders, count_closed, count_open, enumerate_with_prefix, open_meanders,
    parallel_count, SearchConfig,
};
use meander::model::{canonicalize, is_closed_meander};
use meander::render::{render_arc_diagram, RenderSpec};
use meander::{concatenate, validate, Convention, OpenMeander, Permutation};
use proptest::prelude::*;

fn any_perm(max: usize) -> impl Strategy<Value = Vec<u32>> {
    (1..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle())
}

fn meanders_up_to(max: usize) -> Vec<OpenMeander> {
    (1..=max).flat_map(open_meanders).collect()
}

fn any_meander(max: usize) -> impl Strategy<Value = OpenMeander> {
    let all = meanders_up_to(max);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn in_search(values: &[u32]) -> bool {
    let mut hit = false;
    enumerate_with_prefix(values.len(), values, |_| hit = true);
    hit
}

proptest! {
    #[test]
    fn validity_agrees_with_search(p in any_perm(11)) {
        prop_assert_eq!(validate(&p).unwrap(), in_search(&p));
    }

    #[test]
    fn symmetries_preserve_validity(p in any_perm(10)) {
        let perm = Permutation::new(p).unwrap();
        let v = perm.is_meandric();
        prop_assert_eq!(perm.road_reverse().is_meandric(), v);
        prop_assert_eq!(perm.river_reverse().is_meandric(), v);
    }

    #[test]
    fn witnesses_check_out(p in any_perm(12)) {
        let perm = Permutation::new(p).unwrap();
        let r = classify(&perm, PrimeVariant::Strict);
        if let Some(w) = r.witness {
            prop_assert!(w.holds_in(perm.values()));
            prop_assert!((3..=perm.order() - 2).contains(&w.width()));
        }
        if let Some(k) = r.prime_witness {
            let mut prefix: Vec<u32> = perm.values()[..k].to_vec();
            prefix.sort_unstable();
            prop_assert_eq!(prefix, (1..=k as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn concatenations_are_valid_and_not_prime(a in any_meander(6), b in any_meander(6)) {
        let c = concatenate(&a, &b).unwrap();
        prop_assert_eq!(c.meander.order(), a.order() + b.order());
        prop_assert!(c.meander.perm().is_meandric());
        prop_assert!(prime_witness(c.meander.values(), PrimeVariant::Strict).is_some());
    }

    #[test]
    fn odd_inserts_are_valid(h in any_meander(7), g in any_meander(5), k in 1usize..8) {
        prop_assume!(g.order() % 2 == 1 && k <= h.order());
        let r = insert_odd(InsertSpec { host: &h, guest: &g, position: k }).unwrap();
        prop_assert_eq!(r.meander.order(), h.order() + g.order() - 1);
    }

    #[test]
    fn even_inserts_have_one_orientation(h in any_meander(7), g in any_meander(6), k in 1usize..7) {
        prop_assume!(g.order() % 2 == 0 && k < h.order());
        prop_assume!(h.values()[k - 1].abs_diff(h.values()[k]) == 1);
        let r = insert_even(InsertSpec { host: &h, guest: &g, position: k }).unwrap();
        prop_assert_eq!(r.meander.order(), h.order() + g.order());
    }

    #[test]
    fn curl_images_grow_by_two_per_target(h in any_meander(8), mask in any::<u8>()) {
        let s: BTreeSet<u32> = (1..=h.order() as u32).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        let img = insert_trefoil_set(&h, &s).unwrap();
        prop_assert_eq!(img.order(), h.order() + 2 * s.len());
    }

    #[test]
    fn canonical_form_is_idempotent(m in any_meander(8)) {
        let c = canonicalize(m.perm(), Convention::EvenRoadReversal);
        prop_assert_eq!(canonicalize(&c, Convention::EvenRoadReversal), c.clone());
        if m.order() % 2 == 0 {
            prop_assert_eq!(canonicalize(&m.perm().road_reverse(), Convention::EvenRoadReversal), c);
        } else {
            prop_assert_eq!(c, m.perm().clone());
        }
    }

    #[test]
    fn rendering_is_deterministic(m in any_meander(9)) {
        let spec = RenderSpec::new(m.perm().clone());
        prop_assert_eq!(render_arc_diagram(&spec).unwrap(), render_arc_diagram(&spec).unwrap());
    }
}

#[test]
fn concatenation_is_total_up_to_order_six() {
    let all = meanders_up_to(6);
    let mut reversed = 0;
    for p in &all {
        for q in &all {
            let c = concatenate(p, q).unwrap();
            assert_eq!(c.meander.order(), p.order() + q.order());
            reversed += usize::from(c.left_reversed);
        }
    }
    assert!(reversed > 0);
}

#[test]
fn strictly_composite_means_concatenation() {
    for n in 2..=8 {
        for m in open_meanders(n) {
            let a = m.values();
            let split = (1..n).find(|&k| {
                let left = Permutation::new(a[..k].to_vec());
                let right = Permutation::new(a[k..].iter().map(|v| v.wrapping_sub(k as u32)).collect());
                matches!((left, right), (Ok(l), Ok(r)) if l.is_meandric() && r.is_meandric())
            });
            let composite = prime_witness(a, PrimeVariant::Strict).is_some();
            assert_eq!(composite, split.is_some(), "{m}");
        }
    }
}

#[test]
fn templates_match_the_doubling_recipe() {
    for m in meanders_up_to(7) {
        for variant in [ConstructionVariant::Plus32, ConstructionVariant::Plus35] {
            let built = build_irreducible(&m, variant).unwrap();
            assert_eq!(
                built.output.values(),
                construct_by_recipe(&m, variant).as_slice(),
                "{m} {variant}"
            );
            assert!(reducibility_witness(built.output.values()).is_none());
        }
    }
}

#[test]
fn parallel_totals_do_not_depend_on_partitioning() {
    let mut base = SearchConfig::new(10);
    base.prefix_depth = 0;
    let reference = parallel_count(&base).unwrap().rows;
    for depth in 1..=4 {
        for workers in [1, 2, 4, 8] {
            let c = SearchConfig { prefix_depth: depth, workers, ..base };
            assert_eq!(parallel_count(&c).unwrap().rows, reference, "depth {depth}, {workers} workers");
        }
    }
}

#[test]
fn even_raw_counts_halve() {
    for n in (2..=12).step_by(2) {
        let c = count_open(n, Convention::EvenRoadReversal);
        assert_eq!(c.raw % 2, 0);
        assert_eq!(c.canonical * 2, c.raw);
    }
}

#[test]
fn closed_meanders_are_well_formed() {
    for n in 1..=5 {
        let all = closed_meanders(n);
        assert_eq!(all.len() as u64, count_closed(n));
        for c in &all {
            assert!(is_closed_meander(c.upper(), c.lower()).unwrap());
        }
    }
}
