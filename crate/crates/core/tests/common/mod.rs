#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tri_extremal::{random_convex, IntPolygon};

/// A random instance with `n` uniform in `[4, n_max]`. The coordinate bound
/// is drawn from a mix of tight lattices (many parallel edges and distance
/// ties) and loose ones.
pub fn instance(seed: u64, n_max: usize) -> IntPolygon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let n = rng.gen_range(4..=n_max);
    let mut bound = match rng.gen_range(0..4) {
        0 => n as i64,
        1 => 4 * n as i64,
        2 => 1_000,
        _ => 1_000_000,
    };
    loop {
        match random_convex(n, seed, bound) {
            Ok(p) => return p,
            Err(_) => bound *= 2,
        }
    }
}
