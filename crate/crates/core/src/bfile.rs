//! OEIS b-file interchange (`index value` lines, consecutive indices,
//! `#` comments) and digit export of the binary constants 0.T, 0.R,
//! 0.G. b-files are the cross-validation vehicle against A010060,
//! A268411, A269027 and A039724.

use std::fmt::Write as _;

use num_bigint::BigUint;
use thiserror::Error;

use crate::numerals::to_negabinary;
use crate::sequences::{stream, word_to_string, SequenceId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BFileError {
    #[error("line {line}: expected `index value`, got `{content}`")]
    Parse { line: usize, content: String },
    #[error("line {line}: index {found} does not follow {previous} (gap)")]
    Gap {
        line: usize,
        previous: i64,
        found: i64,
    },
    #[error("b-file contains no entries")]
    Empty,
}

/// Parsed b-file: `(index, value)` pairs with consecutive indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub entries: Vec<(i64, i64)>,
}

impl BFile {
    /// First index of the file.
    pub fn offset(&self) -> i64 {
        self.entries[0].0
    }
}

/// Parses b-file text. Blank lines and `#` comments are skipped;
/// malformed lines and index gaps are reported with line numbers.
pub fn parse_bfile(text: &str) -> Result<BFile, BFileError> {
    let mut entries: Vec<(i64, i64)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let parsed = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => a
                .parse::<i64>()
                .and_then(|idx| b.parse::<i64>().map(|val| (idx, val)))
                .ok(),
            _ => None,
        };
        let (index, value) = parsed.ok_or_else(|| BFileError::Parse {
            line,
            content: trimmed.to_string(),
        })?;
        if let Some(&(previous, _)) = entries.last() {
            if index != previous + 1 {
                return Err(BFileError::Gap {
                    line,
                    previous,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    if entries.is_empty() {
        return Err(BFileError::Empty);
    }
    Ok(BFile { entries })
}

/// Renders entries in b-file format, one `index value` line each.
pub fn write_bfile(entries: &[(i64, i64)]) -> String {
    let mut out = String::new();
    for &(index, value) in entries {
        writeln!(out, "{index} {value}").unwrap();
    }
    out
}

/// A term-by-term mismatch between the local sequence and a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub ours: i64,
    pub theirs: i64,
}

/// Compares `seq` with the b-file over the file's index range; returns
/// the first differing index, or `None` if every term matches.
/// Negative file indices cannot match (the sequences start at 0) and
/// are reported as mismatches with `ours = -1`.
pub fn verify_against_bfile(seq: SequenceId, file: &BFile) -> Option<Mismatch> {
    for &(index, theirs) in &file.entries {
        let ours = if index >= 0 { seq.term(index as u64) as i64 } else { -1 };
        if ours != theirs {
            return Some(Mismatch {
                index,
                ours,
                theirs,
            });
        }
    }
    None
}

/// A039724-style comparison: entry `n` holds the negabinary digits of
/// `n` rendered as a decimal numeral (e.g. 7 → 11011). Compared as
/// digit strings, not as integers.
pub fn verify_negabinary_bfile(file: &BFile) -> Option<(i64, String, String)> {
    for &(index, value) in &file.entries {
        let theirs = value.to_string();
        let ours = if index >= 0 {
            to_negabinary(index as u64).to_string()
        } else {
            String::new()
        };
        if ours != theirs {
            return Some((index, ours, theirs));
        }
    }
    None
}

/// `"0."` followed by the first `count` terms of `seq` as binary digits.
pub fn constant_digits(seq: SequenceId, count: u64) -> String {
    assert!(count <= 1 << 24, "digit export capped at 2^24");
    let w = stream(seq, 0, count).expect("count fits the index domain");
    format!("0.{}", word_to_string(&w))
}

/// Decimal approximation of the constant 0.seq truncated to `count`
/// binary digits, correctly rounded (half away from zero) to
/// `decimals` places. Exact dyadic arithmetic throughout.
pub fn constant_decimal(seq: SequenceId, count: u64, decimals: usize) -> String {
    assert!(count <= 1 << 24, "digit export capped at 2^24");
    let w = stream(seq, 0, count).expect("count fits the index domain");
    // numerator of Σ b_i / 2^{i+1} over the common denominator 2^count
    let mut numerator = BigUint::from(0u32);
    for &b in &w {
        numerator = (numerator << 1) + b;
    }
    let scaled = numerator * BigUint::from(10u32).pow(decimals as u32);
    let quotient = &scaled >> count as usize;
    let remainder = scaled - (&quotient << count as usize);
    let rounded = if count > 0 && (remainder << 1) >= (BigUint::from(1u32) << count as usize) {
        quotient + 1u32
    } else {
        quotient
    };
    let digits = format!("{rounded:0>width$}", width = decimals);
    let split = digits.len() - decimals;
    let (int_part, frac_part) = digits.split_at(split);
    format!(
        "{}.{}",
        if int_part.is_empty() { "0" } else { int_part },
        frac_part
    )
}
