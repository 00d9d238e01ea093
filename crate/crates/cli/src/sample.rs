//! Seeded element sampling shared by `verify` and the acceptance suite.

use isoconj::linalg::IntVec;
use isoconj::{Group, Isometry};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vector(rng: &mut impl Rng, n: usize, r: i64) -> IntVec {
    (0..n).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect()
}

/// Uniform point part, translation uniform in `[-r, r]^n`.
pub fn element(g: &Group, rng: &mut impl Rng, r: i64) -> Isometry {
    let point = rng.gen_range(0..g.order());
    Isometry::new(vector(rng, g.dim(), r), point)
}

pub fn elements(g: &Group, seed: u64, count: usize, r: i64) -> Vec<Isometry> {
    let mut rng = rng(seed);
    (0..count).map(|_| element(g, &mut rng, r)).collect()
}

/// Ordered pairs `(h, h')`; even-numbered pairs are conjugate by a conjugator
/// with translation in `[-1, 1]^n`, odd-numbered ones are independent draws.
pub fn pairs(g: &Group, seed: u64, count: usize, r: i64) -> Vec<(Isometry, Isometry)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let h = element(g, &mut rng, r);
            let h2 = if i % 2 == 0 {
                let k = element(g, &mut rng, 1);
                g.conjugate(&k, &h)
            } else {
                element(g, &mut rng, r)
            };
            (h, h2)
        })
        .collect()
}
