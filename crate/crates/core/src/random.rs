//! Seeded random representations.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::face::{Element, MAX_ELEMENTS};
use crate::order::{Ground, LinearOrder, Representation};

/// `d` independent uniform permutations of `e0 … e{n-1}`. The same seed
/// always yields the same representation.
pub fn random_representation(n: usize, d: usize, seed: u64) -> Result<Representation> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidRepresentation(format!(
            "need n >= 1 and d >= 1, got n = {n}, d = {d}"
        )));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::TooManyElements(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ground = Ground::new((0..n).map(|i| format!("e{i}")))?;
    let orders = (0..d)
        .map(|_| {
            let mut seq: Vec<Element> = (0..n).map(Element::new).collect();
            seq.shuffle(&mut rng);
            LinearOrder::from_sequence(seq)
        })
        .collect::<Result<Vec<_>>>()?;
    Representation::new(ground, orders)
}
