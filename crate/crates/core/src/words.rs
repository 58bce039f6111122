//! k-th power detection in finite 0/1 words, and prefix scans that
//! confirm cube-freeness of G and quint-freeness of R empirically.
//!
//! The core scanner sweeps, for each candidate period p, the run
//! lengths of the match indicator `w[i] == w[i+p]`; a run of
//! `(k-1)·p` matches is exactly an occurrence of `X^k` with `|X| = p`.
//! Periods are swept in parallel and the witness tie-break (smallest
//! position, then smallest period) is applied after joining.

use std::fmt;

use rayon::prelude::*;

use crate::sequences::{stream, Bit, SequenceId};

/// An occurrence of `X^k`: `word[position .. position + power·period]`
/// consists of `power` copies of a block of length `period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerOccurrence {
    pub position: usize,
    pub period: usize,
    pub power: u32,
}

impl PowerOccurrence {
    /// Re-checks the defining equalities against `word`.
    pub fn is_valid_in(&self, word: &[Bit]) -> bool {
        let span = self.power as usize * self.period;
        if self.period == 0 || self.position + span > word.len() {
            return false;
        }
        (0..span - self.period)
            .all(|j| word[self.position + j] == word[self.position + j + self.period])
    }
}

/// Outcome of a power-freeness scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    PowerFree,
    Violation(PowerOccurrence),
}

/// A scoped power-freeness claim: the scanned prefix length, the power
/// looked for, the period cap in force, and the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub seq: SequenceId,
    pub power: u32,
    pub scanned_length: usize,
    pub max_period: usize,
    pub verdict: Verdict,
}

impl ScanReport {
    pub fn is_power_free(&self) -> bool {
        matches!(self.verdict, Verdict::PowerFree)
    }
}

impl fmt::Display for ScanReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seq={} k={} len={} max_period={} verdict=",
            self.seq, self.power, self.scanned_length, self.max_period
        )?;
        match self.verdict {
            Verdict::PowerFree => write!(f, "ok"),
            Verdict::Violation(occ) => {
                write!(f, "FAIL pos={} period={}", occ.position, occ.period)
            }
        }
    }
}

/// Earliest start of a k-th power with this exact period, if any.
fn sweep_period(w: &[Bit], k: u32, period: usize) -> Option<usize> {
    let needed = (k as usize - 1) * period;
    let mut run = 0usize;
    for (i, (a, b)) in w.iter().zip(&w[period..]).enumerate() {
        if a == b {
            run += 1;
            if run >= needed {
                return Some(i + 1 - needed);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// First occurrence (smallest position, then smallest period) of a
/// k-th power `X^k` with `1 <= |X| <= max_period`, or `None`.
pub fn find_power(w: &[Bit], k: u32, max_period: usize) -> Option<PowerOccurrence> {
    assert!(k >= 2, "power exponent must be at least 2");
    let cap = max_period.min(w.len() / k as usize);
    (1..=cap)
        .into_par_iter()
        .filter_map(|period| sweep_period(w, k, period).map(|position| (position, period)))
        .min()
        .map(|(position, period)| PowerOccurrence {
            position,
            period,
            power: k,
        })
}

/// Brute-force oracle with the same return contract as [`find_power`]:
/// substring equality over all (position, period) pairs. Exists only to
/// validate the scanner.
pub fn find_power_naive(w: &[Bit], k: u32, max_period: usize) -> Option<PowerOccurrence> {
    assert!(k >= 2, "power exponent must be at least 2");
    let cap = max_period.min(w.len() / k as usize);
    for position in 0..w.len() {
        for period in 1..=cap {
            let span = k as usize * period;
            if position + span > w.len() {
                break;
            }
            let is_power = (0..span - period)
                .all(|j| w[position + j] == w[position + j + period]);
            if is_power {
                return Some(PowerOccurrence {
                    position,
                    period,
                    power: k,
                });
            }
        }
    }
    None
}

/// Scans the first `length` terms of `seq` for k-th powers. `max_period`
/// of `None` means the full range `length / k`; a `Some` cap is recorded
/// in the report so the claim stays scoped.
pub fn verify_power_free(
    seq: SequenceId,
    k: u32,
    length: usize,
    max_period: Option<usize>,
) -> ScanReport {
    assert!(length <= 1 << 24, "scan length capped at 2^24");
    let cap = max_period
        .unwrap_or(usize::MAX)
        .min(length / k as usize);
    let w = stream(seq, 0, length as u64).expect("length fits the index domain");
    let verdict = match find_power(&w, k, cap) {
        Some(occ) => Verdict::Violation(occ),
        None => Verdict::PowerFree,
    };
    ScanReport {
        seq,
        power: k,
        scanned_length: length,
        max_period: cap,
        verdict,
    }
}
