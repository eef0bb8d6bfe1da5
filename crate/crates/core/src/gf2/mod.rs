//! Dense linear algebra over GF(2) with bit-packed rows.
//!
//! Rows are packed 64 bits to a word; padding bits past the logical column
//! count are kept at zero so whole-word XOR, AND, and popcount implement row
//! operations and dot products directly. All operations are pure functions on
//! immutable inputs and every algorithm is deterministic (first-nonzero-column
//! pivoting, no heuristics), so results are reproducible bit for bit.

mod matrix;
mod symplectic;
mod vector;

pub use matrix::{Gf2Matrix, Rref};
pub use symplectic::SymplecticVector;
pub use vector::Gf2Vector;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// OR `src` (a packed bit run of length `src_bits`) into `dst` starting at
/// bit position `offset`. Bits of `src` past `src_bits` must be zero.
pub(crate) fn or_shifted(dst: &mut [u64], src: &[u64], src_bits: usize, offset: usize) {
    if src_bits == 0 {
        return;
    }
    let word = offset / WORD_BITS;
    let shift = offset % WORD_BITS;
    let src_words = words_for(src_bits);
    for (t, &w) in src.iter().take(src_words).enumerate() {
        dst[word + t] |= w << shift;
        if shift > 0 && word + t + 1 < dst.len() {
            dst[word + t + 1] |= w >> (WORD_BITS - shift);
        }
    }
}

/// Parity of the AND of two equal-length packed runs.
///
/// XOR-folding word-wise AND products preserves popcount parity.
pub(crate) fn and_parity(a: &[u64], b: &[u64]) -> bool {
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    acc.count_ones() & 1 == 1
}
