//! Seeded inputs shared by the benchmarks.

use lyndon_lz::Text;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Uniform string of length `n` over the first `sigma` letters.
pub fn random_text(n: usize, sigma: u8, seed: u64) -> Text {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Text::new((0..n).map(|_| b'a' + rng.gen_range(0..sigma)).collect::<Vec<u8>>())
}

/// Fibonacci word of at least `n` symbols, truncated to `n`. Highly repetitive.
pub fn fibonacci_text(n: usize) -> Text {
    let (mut a, mut b) = (b"a".to_vec(), b"ab".to_vec());
    while b.len() < n {
        let next = [b.as_slice(), a.as_slice()].concat();
        a = std::mem::replace(&mut b, next);
    }
    b.truncate(n);
    Text::new(b)
}
