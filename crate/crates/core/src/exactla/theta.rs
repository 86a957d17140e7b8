//! Generic parameters: one random invertible block per color class.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::PrimeField;
use super::matrix::rank;

/// Block matrix `Θ`, one block per color. Block `c` has at least
/// `sizes[c]` rows and exactly `sizes[c]` columns; `get(c, i, v)` is the
/// entry in row `i`, column `v`.
///
/// The leading square part of every block is invertible. Rows beyond the
/// square part only appear when a caller asks for more slots than the color
/// class has vertices; they are plain uniform draws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theta {
    pub field: PrimeField,
    pub seed: u64,
    blocks: Vec<Vec<Vec<u64>>>,
}

impl Theta {
    /// Samples blocks for the given color sizes. `min_rows[c]` (if present)
    /// raises the row count of block `c`.
    pub fn sample(field: PrimeField, seed: u64, sizes: &[usize], min_rows: &[usize]) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks = sizes
            .iter()
            .enumerate()
            .map(|(c, &n)| {
                let square = loop {
                    let b: Vec<Vec<u64>> =
                        (0..n).map(|_| (0..n).map(|_| field.random(&mut rng)).collect()).collect();
                    if rank(&field, &b, n) == n {
                        break b;
                    }
                };
                let extra = min_rows.get(c).copied().unwrap_or(0).saturating_sub(n);
                let mut block = square;
                block.extend((0..extra).map(|_| (0..n).map(|_| field.random(&mut rng)).collect()));
                block
            })
            .collect();
        Self { field, seed, blocks }
    }

    #[inline]
    pub fn get(&self, color: usize, row: usize, vertex: usize) -> u64 {
        self.blocks[color][row][vertex]
    }

    pub fn n_colors(&self) -> usize {
        self.blocks.len()
    }

    pub fn rows(&self, color: usize) -> usize {
        self.blocks[color].len()
    }

    pub fn block(&self, color: usize) -> &[Vec<u64>] {
        &self.blocks[color]
    }
}

/// Convenience wrapper with the default field.
pub fn sample_theta(seed: u64, block_sizes: &[usize]) -> Theta {
    Theta::sample(PrimeField::default(), seed, block_sizes, &[])
}
