//! Term-level generators for the three sequences.
//!
//! Every sequence has two routes: an iterative recurrence (`t`, `r`, `g`)
//! and a digit-definition oracle (`t` is its own definition; `r_direct`,
//! `g_direct` read the digit counts off the numeral systems). The two
//! routes are kept independent so they can cross-check each other.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numerals;

/// One term of T, R or G; always 0 or 1.
///
/// A plain integer rather than a bool so that identities like `1 - x`
/// read directly.
pub type Bit = u8;

/// The ±1 form `u(n) = (-1)^{t_n}`.
pub type SignTerm = i8;

/// A finite 0/1 word (a prefix or factor of a sequence).
pub type Word = Vec<Bit>;

/// Which of the three sequences is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Thue-Morse: parity of the number of 1 bits of `n`.
    T,
    /// Parity of the number of runs of 1's in binary `n`.
    R,
    /// Parity of the number of 1 digits of `n` in base −2.
    G,
}

impl SequenceId {
    /// The `n`-th term, via the recurrence route.
    pub fn term(self, n: u64) -> Bit {
        match self {
            SequenceId::T => t(n),
            SequenceId::R => r(n),
            SequenceId::G => g(n),
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceId::T => "T",
            SequenceId::R => "R",
            SequenceId::G => "G",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown sequence id `{0}`, expected T, R or G")]
pub struct ParseSequenceIdError(String);

impl FromStr for SequenceId {
    type Err = ParseSequenceIdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "T" | "t" => Ok(SequenceId::T),
            "R" | "r" => Ok(SequenceId::R),
            "G" | "g" => Ok(SequenceId::G),
            other => Err(ParseSequenceIdError(other.to_string())),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RangeError {
    #[error("stream range start={start} count={count} overflows the 2^63-1 index domain")]
    Overflow { start: u64, count: u64 },
}

/// Thue-Morse term `t_n`: parity of the popcount of `n`.
///
/// Agrees with the recurrence t_0 = 0, t_{2n} = t_n, t_{2n+1} = 1 - t_n.
pub fn t(n: u64) -> Bit {
    (n.count_ones() & 1) as Bit
}

/// Runs-parity term `r_n` via the recurrence
/// r_0 = 0; r_{2n} = r_n; r_{2n+1} = 1 - r_n (n even), r_n (n odd).
pub fn r(mut n: u64) -> Bit {
    let mut acc = 0u8;
    while n > 0 {
        if n & 1 == 1 {
            n >>= 1;
            // r_{2n+1}: complement only when n is even
            if n & 1 == 0 {
                acc ^= 1;
            }
        } else {
            n >>= 1;
        }
    }
    acc
}

/// Negabinary-parity term `g_n` via the recurrence
/// g_0 = 0; g_{4n} = g_n; g_{4n+1} = 1 - g_n; g_{4n+2} = 1 - g_{n+1};
/// g_{4n+3} = g_{n+1}. Peels two bits per step.
pub fn g(mut n: u64) -> Bit {
    let mut acc = 0u8;
    while n > 0 {
        match n & 3 {
            0 => n >>= 2,
            1 => {
                acc ^= 1;
                n >>= 2;
            }
            2 => {
                acc ^= 1;
                n = (n >> 2) + 1;
            }
            _ => n = (n >> 2) + 1,
        }
    }
    acc
}

/// Definition-route oracle for `r_n`: run count of binary `n`, mod 2.
pub fn r_direct(n: u64) -> Bit {
    (numerals::runs_of_ones(n) & 1) as Bit
}

/// Definition-route oracle for `g_n`: number of 1 digits in the
/// negabinary expansion, mod 2.
pub fn g_direct(n: u64) -> Bit {
    (numerals::to_negabinary(n).ones() & 1) as Bit
}

/// `u(n) = (-1)^{t_n}`.
pub fn u(n: u64) -> SignTerm {
    1 - 2 * t(n) as SignTerm
}

/// The terms `seq[start .. start + count - 1]`.
pub fn stream(seq: SequenceId, start: u64, count: u64) -> Result<Word, RangeError> {
    match start.checked_add(count) {
        Some(end) if end < 1 << 63 => Ok((start..end).map(|n| seq.term(n)).collect()),
        _ => Err(RangeError::Overflow { start, count }),
    }
}

/// Renders a word as a string of '0'/'1' characters.
pub fn word_to_string(w: &[Bit]) -> String {
    w.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
}
