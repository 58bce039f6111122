//! `tma` — command-line front end for the Thue-Morse analog sequences.
//!
//! Exit codes: 0 = success/verified, 1 = property violation or mismatch
//! found, 2 = usage or parse error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tm_analogs::bfile::{self, parse_bfile};
use tm_analogs::blocks as blk;
use tm_analogs::numerals;
use tm_analogs::probes;
use tm_analogs::sequences::{stream, word_to_string, SequenceId};
use tm_analogs::words;

#[derive(Parser)]
#[command(
    name = "tma",
    about = "Thue-Morse sequence T and its analogs R (runs-of-1's parity) and G (negabinary 1's parity)",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqArg {
    #[value(name = "T")]
    T,
    #[value(name = "R")]
    R,
    #[value(name = "G")]
    G,
}

impl From<SeqArg> for SequenceId {
    fn from(s: SeqArg) -> Self {
        match s {
            SeqArg::T => SequenceId::T,
            SeqArg::R => SequenceId::R,
            SeqArg::G => SequenceId::G,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BlockSeqArg {
    #[value(name = "R")]
    R,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    Bits,
    Bfile,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    /// Base -2 digits, MSB first.
    Neg2,
    /// Balanced {-1,0,1} digits as a signed tuple.
    Balanced,
    /// Plain binary.
    Bin,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordKind {
    Agree,
    Disagree,
}

#[derive(Subcommand)]
enum Command {
    /// Emit sequence terms.
    Gen(GenArgs),
    /// Convert an integer between numeral systems.
    Convert(ConvertArgs),
    /// Emit a structure-theorem block of R or G.
    Blocks(BlocksArgs),
    /// Scan a sequence prefix for k-th powers (exit 1 on violation).
    Powerfree(PowerfreeArgs),
    /// Records scan of the agreement/disagreement lengths with shifted T.
    Records(RecordsArgs),
    /// Test a shift triple {a,b,c} against the Thue-Morse sequence.
    Triples(TriplesArgs),
    /// Periodicity report for the ±1 subsequences at shift a.
    Periodb(PeriodbArgs),
    /// Verify a sequence against an OEIS b-file (exit 1 on mismatch).
    Verify(VerifyArgs),
    /// Emit the binary constant 0.T / 0.R / 0.G.
    Constant(ConstantArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum, ignore_case = true)]
    seq: SeqArg,
    #[arg(long)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    start: u64,
    #[arg(long, value_enum, default_value = "bits")]
    format: GenFormat,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long)]
    n: u64,
    #[arg(long, value_enum)]
    to: ConvertTarget,
}

#[derive(Args)]
struct BlocksArgs {
    #[arg(long, value_enum, ignore_case = true)]
    seq: BlockSeqArg,
    #[arg(long)]
    k: u32,
    /// Also compare the block against the streamed terms.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct PowerfreeArgs {
    #[arg(long, value_enum, ignore_case = true)]
    seq: SeqArg,
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
    power: u32,
    #[arg(long)]
    length: usize,
    #[arg(long)]
    max_period: Option<usize>,
}

#[derive(Args)]
struct RecordsArgs {
    #[arg(long, value_enum)]
    kind: RecordKind,
    #[arg(long)]
    limit: u64,
    /// Per-shift scan cap; defaults to 4*limit + 64.
    #[arg(long)]
    cap: Option<u64>,
    /// Compare the records against the conjectured closed forms.
    #[arg(long)]
    check_conjecture: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: RecordsFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordsFormat {
    /// Aligned text table.
    Table,
    /// `position value` lines, b-file style.
    Bfile,
}

#[derive(Args)]
struct TriplesArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    b: u64,
    #[arg(long)]
    c: u64,
    #[arg(long)]
    limit: u64,
}

#[derive(Args)]
struct PeriodbArgs {
    #[arg(long)]
    a: u64,
    #[arg(long)]
    count: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, ignore_case = true)]
    seq: SeqArg,
    #[arg(long)]
    bfile: std::path::PathBuf,
}

#[derive(Args)]
struct ConstantArgs {
    #[arg(long, value_enum, ignore_case = true)]
    seq: SeqArg,
    #[arg(long)]
    count: u64,
    /// Also print a correctly rounded decimal approximation.
    #[arg(long)]
    decimals: Option<usize>,
}

const OK: u8 = 0;
const VIOLATION: u8 = 1;
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Gen(args) => gen(args),
        Command::Convert(args) => convert(args),
        Command::Blocks(args) => blocks(args),
        Command::Powerfree(args) => powerfree(args),
        Command::Records(args) => records(args),
        Command::Triples(args) => triples(args),
        Command::Periodb(args) => periodb(args),
        Command::Verify(args) => verify(args),
        Command::Constant(args) => constant(args),
    };
    ExitCode::from(code)
}

fn gen(args: GenArgs) -> u8 {
    let seq: SequenceId = args.seq.into();
    let word = match stream(seq, args.start, args.count) {
        Ok(w) => w,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    match args.format {
        GenFormat::Bits => println!("{}", word_to_string(&word)),
        GenFormat::Bfile => {
            for (i, &b) in word.iter().enumerate() {
                println!("{} {}", args.start + i as u64, b);
            }
        }
        GenFormat::Csv => {
            println!("n,{seq}");
            for (i, &b) in word.iter().enumerate() {
                println!("{},{}", args.start + i as u64, b);
            }
        }
    }
    OK
}

fn convert(args: ConvertArgs) -> u8 {
    if args.n >= 1 << 62 {
        eprintln!("error: n must be below 2^62");
        return USAGE;
    }
    match args.to {
        ConvertTarget::Neg2 => println!("{}", numerals::to_negabinary(args.n)),
        ConvertTarget::Balanced => println!("{}", numerals::to_balanced(args.n)),
        ConvertTarget::Bin => println!("{:b}", args.n),
    }
    OK
}

fn blocks(args: BlocksArgs) -> u8 {
    let (result, seq) = match args.seq {
        BlockSeqArg::R => (blk::block_r(args.k), SequenceId::R),
        BlockSeqArg::G => (blk::block_g(args.k), SequenceId::G),
    };
    let block = match result {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    println!("{}", word_to_string(&block));
    if args.check {
        let streamed = stream(seq, 0, block.len() as u64).expect("block length in domain");
        if block == streamed {
            eprintln!("check: block matches streamed terms");
        } else {
            eprintln!("check: MISMATCH between block and streamed terms");
            return VIOLATION;
        }
    }
    OK
}

fn powerfree(args: PowerfreeArgs) -> u8 {
    if args.length > 1 << 24 {
        eprintln!("error: length must be at most 2^24");
        return USAGE;
    }
    let report = words::verify_power_free(args.seq.into(), args.power, args.length, args.max_period);
    println!("{report}");
    if report.is_power_free() {
        OK
    } else {
        VIOLATION
    }
}

fn records(args: RecordsArgs) -> u8 {
    let cap = args.cap.unwrap_or(4 * args.limit + 64);
    let kind = match args.kind {
        RecordKind::Agree => probes::ScanKind::Agree,
        RecordKind::Disagree => probes::ScanKind::Disagree,
    };
    let scan = probes::records(kind, args.limit, cap);
    match args.format {
        RecordsFormat::Table => {
            println!("{:>4}  {:>12}  {:>12}", "n", "position", "value");
            for (i, entry) in scan.entries.iter().enumerate() {
                println!("{:>4}  {:>12}  {:>12}", i, entry.position, entry.value);
            }
        }
        RecordsFormat::Bfile => {
            for entry in &scan.entries {
                println!("{} {}", entry.position, entry.value);
            }
        }
    }
    if scan.capped {
        eprintln!("records: scan hit cap {cap}; rerun with a larger --cap");
        return VIOLATION;
    }
    if args.check_conjecture {
        return check_conjecture(kind, &scan.entries);
    }
    OK
}

fn check_conjecture(kind: probes::ScanKind, entries: &[probes::RecordEntry]) -> u8 {
    // formulas are guarded to n <= 15; compare as far as both sides go
    let upto = entries.len().min(16);
    for (i, entry) in entries.iter().enumerate().take(upto) {
        let verdict = match kind {
            probes::ScanKind::Agree => match probes::conjecture_c(i as u32) {
                Ok(expected) => (expected.position, Some(expected.value)),
                Err(e) => {
                    eprintln!("conjecture: {e}");
                    return VIOLATION;
                }
            },
            probes::ScanKind::Disagree => match probes::conjecture_d(i as u32) {
                Ok(pair) => pair,
                Err(e) => {
                    eprintln!("conjecture: {e}");
                    return VIOLATION;
                }
            },
        };
        let (position, value) = verdict;
        let value_ok = value.is_none_or(|v| v == entry.value);
        if entry.position != position || !value_ok {
            eprintln!(
                "conjecture: DEVIATION at record {i}: scanned ({}, {}), conjectured ({}, {})",
                entry.position,
                entry.value,
                position,
                value.map_or_else(|| "-".to_string(), |v| v.to_string()),
            );
            return VIOLATION;
        }
    }
    eprintln!("conjecture: first {upto} records match the closed forms");
    OK
}

fn triples(args: TriplesArgs) -> u8 {
    if !(args.a < args.b && args.b < args.c) {
        eprintln!("error: shifts must satisfy a < b < c");
        return USAGE;
    }
    match probes::check_triple(args.a, args.b, args.c, args.limit) {
        None => println!(
            "triple {{{},{},{}}} survives the scan to n < {}",
            args.a, args.b, args.c, args.limit
        ),
        Some(n) => println!(
            "counterexample n={n}: t(n+x) differs from t(n) for all x in {{{},{},{}}}",
            args.a, args.b, args.c
        ),
    }
    OK
}

fn periodb(args: PeriodbArgs) -> u8 {
    if args.a == 0 || args.count < 2 {
        eprintln!("error: need a >= 1 and count >= 2");
        return USAGE;
    }
    match probes::period_report(args.a, args.count) {
        Ok(report) => {
            let fmt = |p: Option<usize>| p.map_or_else(|| "none".to_string(), |v| v.to_string());
            println!(
                "a={} val2(a)={} expected_period={} beta_period={} gamma_period={} antisymmetric={}",
                report.shift,
                probes::val2(report.shift),
                1u64 << (probes::val2(report.shift) + 1),
                fmt(report.beta_period),
                fmt(report.gamma_period),
                report.antisymmetric,
            );
            OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            USAGE
        }
    }
}

fn verify(args: VerifyArgs) -> u8 {
    let text = match fs::read_to_string(&args.bfile) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.bfile.display());
            return USAGE;
        }
    };
    let file = match parse_bfile(&text) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {e}");
            return USAGE;
        }
    };
    let seq: SequenceId = args.seq.into();
    match bfile::verify_against_bfile(seq, &file) {
        None => {
            println!(
                "verified: {seq} matches {} entries from index {}",
                file.entries.len(),
                file.offset()
            );
            OK
        }
        Some(m) => {
            println!(
                "mismatch at index {}: computed {} but b-file has {}",
                m.index, m.ours, m.theirs
            );
            VIOLATION
        }
    }
}

fn constant(args: ConstantArgs) -> u8 {
    if args.count > 1 << 24 {
        eprintln!("error: count must be at most 2^24");
        return USAGE;
    }
    let seq: SequenceId = args.seq.into();
    println!("{}", bfile::constant_digits(seq, args.count));
    if let Some(decimals) = args.decimals {
        println!("{}", bfile::constant_decimal(seq, args.count, decimals));
    }
    OK
}
