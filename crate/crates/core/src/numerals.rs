//! Digit-level numeral systems: binary runs of 1's, base −2 (negabinary)
//! conversion in both directions, the balanced ±1 binary representation,
//! and the closed-form negabinary digit patterns for `2^m - 1`,
//! `2^{m+k+1} - 2^m - 1` and `2(2^{k+1} - 1)`.
//!
//! Digit vectors are stored least-significant-first; all display is
//! most-significant-first. Zero renders as the single digit `0`.

use std::fmt;

use thiserror::Error;

use crate::sequences::Bit;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumeralError {
    #[error("digit {digit} at index {index} is not in {{0,1}}")]
    MalformedDigit { index: usize, digit: u8 },
    #[error("{name} requires {requirement}, got {got}")]
    Domain {
        name: &'static str,
        requirement: &'static str,
        got: u64,
    },
}

/// Base −2 digits over {0,1}, least-significant first.
///
/// Canonical: the highest-index digit is 1 unless the value is zero,
/// which is the single digit 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegabinaryDigits(Vec<Bit>);

impl NegabinaryDigits {
    /// Builds from raw least-significant-first digits, validating and
    /// canonicalizing (trailing high zeros stripped, zero kept as `[0]`).
    pub fn from_lsb_digits(digits: Vec<Bit>) -> Result<Self, NumeralError> {
        for (index, &digit) in digits.iter().enumerate() {
            if digit > 1 {
                return Err(NumeralError::MalformedDigit { index, digit });
            }
        }
        let mut digits = digits;
        while digits.len() > 1 && *digits.last().unwrap() == 0 {
            digits.pop();
        }
        if digits.is_empty() {
            digits.push(0);
        }
        Ok(Self(digits))
    }

    /// Least-significant-first digits.
    pub fn digits(&self) -> &[Bit] {
        &self.0
    }

    /// Number of 1 digits.
    pub fn ones(&self) -> u32 {
        self.0.iter().map(|&d| d as u32).sum()
    }

    /// The represented integer, Σ d[i]·(−2)^i.
    pub fn value(&self) -> i64 {
        from_negabinary(&self.0).expect("digits validated at construction")
    }
}

impl fmt::Display for NegabinaryDigits {
    /// MSB-first digit string, e.g. `11011` for 7.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in self.0.iter().rev() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Balanced binary digits over {−1,0,1} in radix 2, least-significant
/// first. Digit sum is always zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedDigits(Vec<i8>);

impl BalancedDigits {
    /// Least-significant-first digits.
    pub fn digits(&self) -> &[i8] {
        &self.0
    }

    /// Σ digits[i]·2^i.
    pub fn value(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &d)| d as i64 * (1i64 << i))
            .sum()
    }

    /// Σ digits[i]; zero for every representation produced here.
    pub fn digit_sum(&self) -> i64 {
        self.0.iter().map(|&d| d as i64).sum()
    }

    /// Number of +1 digits (equals the run count of the source integer).
    pub fn plus_ones(&self) -> u32 {
        self.0.iter().filter(|&&d| d == 1).count() as u32
    }
}

impl fmt::Display for BalancedDigits {
    /// Signed-tuple rendering, MSB first: `(1,0,0,-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &d) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Number of maximal blocks of consecutive 1 bits in binary `n`.
pub fn runs_of_ones(n: u64) -> u32 {
    // each run contributes exactly one bit that has no 1 above it
    (n & !(n >> 1)).count_ones()
}

/// Canonical base −2 digits of `n`.
///
/// Repeatedly takes `d = n mod 2` and replaces `n` by `(n - d) / (-2)`.
pub fn to_negabinary(n: u64) -> NegabinaryDigits {
    assert!(n < 1 << 62, "negabinary conversion domain is n < 2^62");
    if n == 0 {
        return NegabinaryDigits(vec![0]);
    }
    let mut v = n as i64;
    let mut digits = Vec::new();
    while v != 0 {
        let d = v.rem_euclid(2);
        digits.push(d as Bit);
        v = (v - d) / -2;
    }
    NegabinaryDigits(digits)
}

/// Evaluates least-significant-first base −2 digits: Σ d[i]·(−2)^i.
pub fn from_negabinary(digits: &[Bit]) -> Result<i64, NumeralError> {
    let mut acc: i128 = 0;
    let mut weight: i128 = 1;
    for (index, &digit) in digits.iter().enumerate() {
        if digit > 1 {
            return Err(NumeralError::MalformedDigit { index, digit });
        }
        acc += digit as i128 * weight;
        weight *= -2;
    }
    Ok(acc as i64)
}

/// Balanced binary representation of `n`: each maximal run of 1's over
/// bit positions a..b becomes +1 at position b+1 and −1 at position a.
pub fn to_balanced(n: u64) -> BalancedDigits {
    assert!(n < 1 << 62, "balanced conversion domain is n < 2^62");
    if n == 0 {
        return BalancedDigits(Vec::new());
    }
    let top = 63 - n.leading_zeros() as usize;
    let mut digits = vec![0i8; top + 2];
    let mut in_run = false;
    for pos in 0..=top + 1 {
        let bit = (n >> pos) & 1 == 1;
        if bit && !in_run {
            // run start a: -1 at position a
            digits[pos] = -1;
            in_run = true;
        } else if !bit && in_run {
            // run over bits a..b: +1 at position b+1
            digits[pos] = 1;
            in_run = false;
        }
    }
    while let Some(&0) = digits.last() {
        digits.pop();
    }
    BalancedDigits(digits)
}

/// Assembles MSB-first pattern pieces into canonical LSB-first digits.
fn pattern(msb_first: &[(Bit, usize)]) -> NegabinaryDigits {
    let mut digits: Vec<Bit> = msb_first
        .iter()
        .flat_map(|&(d, reps)| std::iter::repeat_n(d, reps))
        .collect();
    digits.reverse();
    NegabinaryDigits(digits)
}

/// Closed-form negabinary digits of `2^m - 1` for `m >= 2`:
/// `1 0^{m-2} 1 1` for even m, `1 1 0^{m-2} 1 1` for odd m.
pub fn lemma1_form(m: u32) -> Result<NegabinaryDigits, NumeralError> {
    if m < 2 {
        return Err(NumeralError::Domain {
            name: "lemma1_form",
            requirement: "m >= 2",
            got: m as u64,
        });
    }
    let zeros = (m - 2) as usize;
    Ok(if m % 2 == 0 {
        pattern(&[(1, 1), (0, zeros), (1, 2)])
    } else {
        pattern(&[(1, 2), (0, zeros), (1, 2)])
    })
}

/// `g_{2^m - 1}` in closed form: 0 for m=0, 1 for m=1, 1 for even
/// m >= 2, 0 for odd m >= 3.
pub fn corollary1_value(m: u32) -> Bit {
    match m {
        0 => 0,
        1 => 1,
        _ if m % 2 == 0 => 1,
        _ => 0,
    }
}

/// Closed-form negabinary digits of `2^{m+k+1} - 2^m - 1` for odd
/// `m >= 3`: `1 0^k 1 0^{m-2} 1 1` for even k, `1 1 0^k 1 0^{m-2} 1 1`
/// for odd k.
pub fn lemma2_form_a(m: u32, k: u32) -> Result<NegabinaryDigits, NumeralError> {
    if m < 3 || m % 2 == 0 {
        return Err(NumeralError::Domain {
            name: "lemma2_form_a",
            requirement: "odd m >= 3",
            got: m as u64,
        });
    }
    let inner_zeros = (m - 2) as usize;
    Ok(if k % 2 == 0 {
        pattern(&[(1, 1), (0, k as usize), (1, 1), (0, inner_zeros), (1, 2)])
    } else {
        pattern(&[(1, 2), (0, k as usize), (1, 1), (0, inner_zeros), (1, 2)])
    })
}

/// Closed-form negabinary digits of `2(2^{k+1} - 1)`:
/// `1 0^k 1 0` for even k, `1 1 0^k 1 0` for odd k.
pub fn lemma2_form_b(k: u32) -> NegabinaryDigits {
    if k % 2 == 0 {
        pattern(&[(1, 1), (0, k as usize), (1, 1), (0, 1)])
    } else {
        pattern(&[(1, 2), (0, k as usize), (1, 1), (0, 1)])
    }
}
