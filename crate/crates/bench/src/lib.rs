//! Shared fixtures for the benchmark targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use okc_core::algebra::{Monomial, SparsePoly};
use okc_core::divisor::{sample_config, SncConfig};
use okc_core::proj::MultiProj;

pub fn bench_rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xBE7C)
}

/// A batch of dense-ish polynomials in the K-ring of `P^4 x P^4 x P^4`.
pub fn poly_batch(count: usize) -> Vec<SparsePoly> {
    let mut rng = bench_rng();
    let space = MultiProj::new(vec![4, 4, 4]).expect("nonempty");
    let ring = space.k_ring();
    (0..count)
        .map(|_| {
            let terms = (0..40).map(|_| {
                let m = Monomial::from_pairs(
                    (0..3u32).map(|v| (v, rng.random_range(0..=4i32))),
                );
                (m, rng.random_range(-9i64..=9).into())
            });
            SparsePoly::from_terms(&ring, terms.collect::<Vec<_>>())
        })
        .collect()
}

/// A deterministic batch of desk-scale SNC configurations.
pub fn config_batch(count: usize) -> Vec<SncConfig> {
    let mut rng = bench_rng();
    (0..count).map(|_| sample_config(&mut rng)).collect()
}
