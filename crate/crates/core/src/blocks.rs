//! Structure-theorem block builders for R and G, and the equivalent
//! shift-relation predicates for term `n + 2^k` in terms of term `n`.
//!
//! * `R_1 = 01`; `R_{k+1} = R_k ∥ S_k` where `S_k` is `R_k` with its
//!   first `2^{k-1}` entries complemented.
//! * `G_0 = 0`; for even k, `G_{k+1} = G_k ∥ complement(G_k)`; for odd
//!   k, `G_{k+1} = G_k ∥ H_k` where `H_k` is `G_k` with only its last
//!   `(2/3)(2^{k-1} - 1)` entries complemented.

use thiserror::Error;

use crate::sequences::{g, r, Bit, Word};

/// Blocks are materialized eagerly; 2^24 entries is the cap.
pub const MAX_BLOCK_K: u32 = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BlockError {
    #[error("block index k={k} outside {min}..={max}")]
    KOutOfRange { k: u32, min: u32, max: u32 },
    #[error("index {n} outside 0..2^{k}")]
    IndexOutOfRange { k: u32, n: u64 },
}

/// The first `2^k` terms of R, built by the concatenation rule.
pub fn block_r(k: u32) -> Result<Word, BlockError> {
    if !(1..=MAX_BLOCK_K).contains(&k) {
        return Err(BlockError::KOutOfRange {
            k,
            min: 1,
            max: MAX_BLOCK_K,
        });
    }
    let mut block: Word = vec![0, 1];
    for level in 1..k {
        let half = 1usize << (level - 1);
        let mut tail: Word = block.clone();
        for bit in tail.iter_mut().take(half) {
            *bit = 1 - *bit;
        }
        block.extend(tail);
        debug_assert_eq!(block.len(), 1 << (level + 1));
    }
    Ok(block)
}

/// The first `2^k` terms of G, built by the concatenation rule.
pub fn block_g(k: u32) -> Result<Word, BlockError> {
    if k > MAX_BLOCK_K {
        return Err(BlockError::KOutOfRange {
            k,
            min: 0,
            max: MAX_BLOCK_K,
        });
    }
    let mut block: Word = vec![0];
    for level in 0..k {
        let mut tail: Word = block.clone();
        if level % 2 == 0 {
            for bit in tail.iter_mut() {
                *bit = 1 - *bit;
            }
        } else {
            // (2/3)(2^{level-1} - 1) must be integral for odd level
            let numerator = (1u64 << (level - 1)) - 1;
            assert_eq!(numerator % 3, 0, "2^{{k-1}}-1 not divisible by 3 at odd k={level}");
            let flip = (2 * numerator / 3) as usize;
            let len = tail.len();
            for bit in tail.iter_mut().skip(len - flip) {
                *bit = 1 - *bit;
            }
        }
        block.extend(tail);
    }
    Ok(block)
}

/// Predicted `r_{n + 2^k}` from `r_n`: complemented on the lower half
/// of the block, unchanged on the upper half.
pub fn shift_relation_r(k: u32, n: u64) -> Result<Bit, BlockError> {
    if k < 1 || n >= 1 << k {
        return Err(BlockError::IndexOutOfRange { k, n });
    }
    Ok(if n < 1 << (k - 1) { 1 - r(n) } else { r(n) })
}

/// Predicted `g_{2^k + m}` from `g_m`: full complement for even k;
/// for odd k, unchanged below `2^k - (2/3)(2^{k-1} - 1)` and
/// complemented at or above it.
pub fn shift_relation_g(k: u32, m: u64) -> Result<Bit, BlockError> {
    if k < 1 || m >= 1 << k {
        return Err(BlockError::IndexOutOfRange { k, n: m });
    }
    if k % 2 == 0 {
        return Ok(1 - g(m));
    }
    let boundary = (1u64 << k) - 2 * ((1u64 << (k - 1)) - 1) / 3;
    Ok(if m < boundary { g(m) } else { 1 - g(m) })
}
