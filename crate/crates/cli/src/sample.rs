//! Seeded random weight tuples for the verification suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wphodge::WeightTuple;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 5;
pub const MAX_WEIGHT: u64 = 12;

/// Dimension uniform in `2..=5`, weights uniform in `1..=12`, redrawn until
/// well-formed.
pub fn draw(rng: &mut ChaCha8Rng) -> WeightTuple {
    loop {
        let n = rng.gen_range(MIN_DIM..=MAX_DIM);
        let raw: Vec<u64> = (0..=n).map(|_| rng.gen_range(1..=MAX_WEIGHT)).collect();
        if let Ok(w) = WeightTuple::new(&raw) {
            return w;
        }
    }
}

pub fn tuples(count: usize, seed: u64) -> Vec<WeightTuple> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| draw(&mut rng)).collect()
}
