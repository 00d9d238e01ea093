#![allow(dead_code)]

use isoconj::catalog;
use isoconj::linalg::{IntMatrix, IntVec};
use isoconj::{Group, Isometry};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn all_groups() -> Vec<Group> {
    catalog::keys().iter().map(|k| catalog::group(k).unwrap()).collect()
}

pub fn planar_groups() -> Vec<Group> {
    all_groups().into_iter().filter(|g| g.dim() == 2).collect()
}

pub fn random_vec(rng: &mut impl Rng, n: usize, r: i64) -> IntVec {
    (0..n).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect()
}

pub fn random_element(g: &Group, rng: &mut impl Rng, r: i64) -> Isometry {
    Isometry::new(random_vec(rng, g.dim(), r), rng.gen_range(0..g.order()))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, r: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-r..=r)).collect()).collect();
    IntMatrix::from_rows(&data)
}

/// Product of random elementary column operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..3 * n {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        match rng.gen_range(0..3) {
            0 if a != b => m.add_col_multiple(a, b, &BigInt::from(rng.gen_range(-3..=3))),
            1 => m.swap_cols(a, b),
            _ => m.negate_col(a),
        }
    }
    m
}

/// All `x` in `[-r, r]^n`.
pub fn box_points(n: usize, r: i64) -> Vec<IntVec> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<BigInt>| {
                (-r..=r).map(move |x| {
                    let mut w = v.clone();
                    w.push(BigInt::from(x));
                    w
                })
            })
            .collect();
    }
    out
}
