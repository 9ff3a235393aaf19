use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::trefoil::insert_trefoil_set;
use crate::classify::is_irreducible;
use crate::enumerate::open_meanders;
use crate::error::{MeanderError, Result};
use crate::model::{canonicalize, Convention, OpenMeander};

/// Above this many (host, subset) pairs the certificate is built from a sample.
pub const EXHAUSTIVE_LIMIT: u64 = 2_000_000;
const SAMPLE_SIZE: usize = 200_000;
const SAMPLE_SEED: u64 = 0x6d65_616e_6465_72;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InjectionCertificate {
    pub order: usize,
    /// Density parameter when the subset size was derived as `floor(n/k)`.
    pub k: Option<u32>,
    pub subset_size: usize,
    pub target_order: usize,
    /// Irreducible class representatives used as hosts.
    pub hosts: u64,
    /// `binomial(n, subset_size) * hosts`.
    pub expected: u64,
    /// Number of pairwise distinct images (compared as classes).
    pub certified: u64,
    pub exhaustive: bool,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Materializes the curl insertions for every irreducible class of order `n`
/// and every subset of `floor(n/k)` crossings, and certifies that the images
/// are pairwise non-equivalent under `convention`. Any collision is an error.
pub fn injection_image(n: usize, k: u32, convention: Convention) -> Result<InjectionCertificate> {
    if n == 0 || k <= 1 {
        return Err(MeanderError::Precondition(format!(
            "need n >= 1 and k > 1, got n={n}, k={k}"
        )));
    }
    let mut cert = subset_injection(n, n / k as usize, convention)?;
    cert.k = Some(k);
    Ok(cert)
}

/// [`injection_image`] for an explicit subset size `s`.
///
/// Images are collected in parallel and sorted before comparison, so the
/// result does not depend on scheduling.
pub fn subset_injection(n: usize, s: usize, convention: Convention) -> Result<InjectionCertificate> {
    if n == 0 || s > n {
        return Err(MeanderError::Precondition(format!(
            "need 1 <= n and subset size <= n, got n={n}, s={s}"
        )));
    }
    let hosts: Vec<OpenMeander> = open_meanders(n)
        .into_iter()
        .filter(|m| convention.is_representative(m.values()) && is_irreducible(m.perm()))
        .collect();
    let subsets: Vec<BTreeSet<u32>> = (1..=n as u32)
        .combinations(s)
        .map(|c| c.into_iter().collect())
        .collect();
    let total = hosts.len() as u64 * subsets.len() as u64;
    let exhaustive = total <= EXHAUSTIVE_LIMIT;

    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..hosts.len())
            .flat_map(|h| (0..subsets.len()).map(move |j| (h, j)))
            .collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut picked: Vec<usize> = sample(&mut rng, total as usize, SAMPLE_SIZE).into_vec();
        picked.sort_unstable();
        picked
            .into_iter()
            .map(|i| (i / subsets.len(), i % subsets.len()))
            .collect()
    };

    let mut images = pairs
        .par_iter()
        .map(|&(h, j)| {
            insert_trefoil_set(&hosts[h], &subsets[j])
                .map(|img| (canonicalize(img.perm(), convention), h, j))
        })
        .collect::<Result<Vec<_>>>()?;
    images.sort_unstable();
    if let Some(w) = images.windows(2).find(|w| w[0].0 == w[1].0) {
        let (a, b) = (&w[0], &w[1]);
        return Err(MeanderError::Injectivity(format!(
            "host {} with {:?} and host {} with {:?} both give {}",
            hosts[a.1], subsets[a.2], hosts[b.1], subsets[b.2], a.0
        )));
    }

    Ok(InjectionCertificate {
        order: n,
        k: None,
        subset_size: s,
        target_order: n + 2 * s,
        hosts: hosts.len() as u64,
        expected: binomial(n as u64, s as u64) * hosts.len() as u64,
        certified: images.len() as u64,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 1), 4);
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }

    #[test]
    fn order_four_single_curl() {
        let c = injection_image(4, 4, Convention::EvenRoadReversal).unwrap();
        assert_eq!(c.hosts, 3);
        assert_eq!(c.certified, 12);
        assert_eq!(c.expected, 12);
        assert_eq!(c.target_order, 6);
    }

    #[test]
    fn order_two() {
        let c = injection_image(2, 2, Convention::EvenRoadReversal).unwrap();
        assert_eq!((c.hosts, c.certified), (1, 2));
    }

    #[test]
    fn empty_subsets() {
        // k > n: no curls, images are the hosts themselves
        let c = injection_image(6, 7, Convention::EvenRoadReversal).unwrap();
        assert_eq!(c.subset_size, 0);
        assert_eq!(c.certified, c.hosts);
    }
}
