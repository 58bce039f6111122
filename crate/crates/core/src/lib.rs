//! The Thue-Morse sequence `T` and two of its analogs:
//!
//! * `R` — the parity of the number of runs of 1's in the binary
//!   representation of `n` (OEIS A268411);
//! * `G` — the parity of the number of 1 digits in the negabinary
//!   (base −2) representation of `n` (OEIS A269027).
//!
//! Each sequence is available through two independent routes — a
//! recurrence and a digit-definition oracle — together with the numeral
//! systems behind them ([`numerals`]), block-level structure builders
//! ([`blocks`]), a k-th-power repetition scanner ([`words`]), numerical
//! probes of the open record conjectures ([`probes`]), and OEIS b-file
//! interchange ([`bfile`]).

pub mod bfile;
pub mod blocks;
pub mod numerals;
pub mod probes;
pub mod sequences;
pub mod words;

pub use sequences::{stream, Bit, SequenceId, SignTerm, Word};
