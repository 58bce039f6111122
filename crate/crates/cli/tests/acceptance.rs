//! Acceptance suite: one test per criterion, one pass/fail line each.
//! All sequence values are exact integers; every assertion is exact
//! equality. Run with `cargo test --test acceptance`.

use std::process::Command;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tm_analogs::bfile::{parse_bfile, verify_against_bfile, write_bfile};
use tm_analogs::blocks::{block_g, block_r, shift_relation_g, shift_relation_r};
use tm_analogs::numerals::{
    corollary1_value, lemma1_form, lemma2_form_a, lemma2_form_b, to_negabinary,
};
use tm_analogs::probes::{beta_gamma, check_triple, conjecture_c, conjecture_d, records, smallest_period, val2, ScanKind};
use tm_analogs::sequences::{g, g_direct, r, r_direct, stream, word_to_string, SequenceId};
use tm_analogs::words::{find_power, find_power_naive, verify_power_free, Verdict};

fn pass(n: u32, what: &str) {
    println!("criterion {n}: pass — {what}");
}

#[test]
fn criterion_01_golden_prefixes() {
    assert_eq!(
        word_to_string(&stream(SequenceId::T, 0, 14).unwrap()),
        "01101001100101"
    );
    assert_eq!(
        word_to_string(&stream(SequenceId::R, 0, 11).unwrap()),
        "01111011100"
    );
    assert_eq!(
        word_to_string(&stream(SequenceId::G, 0, 10).unwrap()),
        "0101101001"
    );
    pass(1, "0.T, 0.R, 0.G golden prefixes match digit-for-digit");
}

#[test]
fn criterion_02_recurrence_definition_equivalence() {
    for n in 0..1u64 << 20 {
        assert_eq!(r(n), r_direct(n), "r mismatch at n={n}");
        assert_eq!(g(n), g_direct(n), "g mismatch at n={n}");
    }
    pass(2, "r and g recurrences equal their digit-definition oracles for n < 2^20");
}

#[test]
fn criterion_03_recursion_identities() {
    for n in 0..1u64 << 18 {
        assert_eq!(r(4 * n), r(n));
        assert_eq!(r(4 * n + 1), 1 - r(n));
        assert_eq!(r(4 * n + 2), r(2 * n + 1));
        assert_eq!(r(4 * n + 3), r(2 * n + 1));
        assert_eq!(g(4 * n), g(n));
        assert_eq!(g(4 * n + 1), 1 - g(n));
        assert_eq!(g(4 * n + 2), 1 - g(n + 1));
        assert_eq!(g(4 * n + 3), g(n + 1));
    }
    pass(3, "all eight mod-4 recursion identities hold for n < 2^18");
}

#[test]
fn criterion_04_structure_theorems() {
    for k in 1..=20u32 {
        assert_eq!(
            block_r(k).unwrap(),
            stream(SequenceId::R, 0, 1 << k).unwrap(),
            "block_R k={k}"
        );
        assert_eq!(
            block_g(k).unwrap(),
            stream(SequenceId::G, 0, 1 << k).unwrap(),
            "block_G k={k}"
        );
    }
    assert_eq!(block_g(0).unwrap(), stream(SequenceId::G, 0, 1).unwrap());
    for k in 1..=16u32 {
        for n in 0..1u64 << k {
            assert_eq!(shift_relation_r(k, n).unwrap(), r(n + (1 << k)));
            assert_eq!(shift_relation_g(k, n).unwrap(), g(n + (1 << k)));
        }
    }
    pass(4, "blocks equal streamed prefixes (k <= 20) and shift relations hold (k <= 16)");
}

#[test]
fn criterion_05_closed_forms() {
    for m in 2..=40u32 {
        assert_eq!(
            lemma1_form(m).unwrap(),
            to_negabinary((1u64 << m) - 1),
            "lemma1 m={m}"
        );
    }
    for m in 0..=40u32 {
        assert_eq!(corollary1_value(m), g((1u64 << m) - 1), "corollary1 m={m}");
    }
    for m in (3..=21u32).step_by(2) {
        for k in 0..=20u32 {
            let value = (1u64 << (m + k + 1)) - (1u64 << m) - 1;
            assert_eq!(
                lemma2_form_a(m, k).unwrap(),
                to_negabinary(value),
                "lemma2a m={m} k={k}"
            );
        }
    }
    for k in 0..=40u32 {
        assert_eq!(
            lemma2_form_b(k),
            to_negabinary((1u64 << (k + 2)) - 2),
            "lemma2b k={k}"
        );
    }
    pass(5, "lemma 1/2 and corollary 1 closed forms match the converter");
}

#[test]
fn criterion_06_power_freeness() {
    let report = verify_power_free(SequenceId::G, 3, 1 << 16, None);
    assert!(report.is_power_free(), "{report}");
    let report = verify_power_free(SequenceId::R, 5, 1 << 16, None);
    assert!(report.is_power_free(), "{report}");
    let report = verify_power_free(SequenceId::G, 3, 1 << 20, Some(4096));
    assert!(report.is_power_free(), "{report}");
    assert_eq!(report.max_period, 4096);
    let report = verify_power_free(SequenceId::R, 5, 1 << 20, Some(4096));
    assert!(report.is_power_free(), "{report}");

    // tightness: the exponents in the theorems are minimal
    let report = verify_power_free(SequenceId::G, 2, 1 << 10, None);
    match report.verdict {
        Verdict::Violation(occ) => assert_eq!((occ.position, occ.period), (0, 2)),
        Verdict::PowerFree => panic!("expected a square in G"),
    }
    let report = verify_power_free(SequenceId::R, 4, 1 << 10, None);
    match report.verdict {
        Verdict::Violation(occ) => assert_eq!((occ.position, occ.period), (1, 1)),
        Verdict::PowerFree => panic!("expected a 4th power in R"),
    }
    pass(6, "G cube-free and R quint-free at desk scale; exponents tight");
}

#[test]
fn criterion_07_scanner_oracle_equivalence() {
    for len in 1..=16usize {
        for bits in 0u32..1 << len {
            let word: Vec<u8> = (0..len).map(|i| ((bits >> i) & 1) as u8).collect();
            for k in [2u32, 3, 4, 5] {
                let cap = len / k as usize;
                if cap == 0 {
                    continue;
                }
                assert_eq!(
                    find_power(&word, k, cap),
                    find_power_naive(&word, k, cap),
                    "word={} k={k}",
                    word_to_string(&word)
                );
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=256usize);
        let word: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2u8)).collect();
        for k in [2u32, 3, 4, 5] {
            let cap = len / k as usize;
            if cap == 0 {
                continue;
            }
            assert_eq!(
                find_power(&word, k, cap),
                find_power_naive(&word, k, cap),
                "word={} k={k}",
                word_to_string(&word)
            );
        }
    }
    pass(7, "find_power equals the brute-force oracle exhaustively and on 10^4 random words");
}

#[test]
fn criterion_08_conjecture_c_records() {
    let scan = records(ScanKind::Agree, 20_000, 100_000);
    assert!(!scan.capped, "scan hit the cap; rerun larger");
    assert!(scan.entries.len() >= 8, "expected at least 8 records");
    for n in 0..=6u32 {
        let expected = conjecture_c(n).unwrap();
        assert_eq!(
            scan.entries[n as usize], expected,
            "record {n} deviates from the conjectured closed form — possible falsification, investigate"
        );
    }
    // limit 20000 also exposes the n=7 record; it must agree too
    assert_eq!(scan.entries[7], conjecture_c(7).unwrap());
    pass(8, "agree-records scan reproduces conjectured (l(n), a(n)) for n = 0..7");
}

#[test]
fn criterion_09_conjecture_d_records() {
    let scan = records(ScanKind::Disagree, 20_000, 100_000);
    assert!(!scan.capped, "scan hit the cap; rerun larger");
    assert!(scan.entries.len() >= 8, "expected at least 8 records");
    // paper-given anchors: m(0)=0, m(1)=1; b values come from the scan
    assert_eq!(scan.entries[0].position, 0);
    assert_eq!(scan.entries[1].position, 1);
    // hand-verifiable anchor (m,b) = (2,6)
    assert_eq!((scan.entries[2].position, scan.entries[2].value), (2, 6));
    for n in 2..=7u32 {
        let (m, b) = conjecture_d(n).unwrap();
        assert_eq!(
            (scan.entries[n as usize].position, scan.entries[n as usize].value),
            (m, b.unwrap()),
            "record {n} deviates from the conjectured closed form — possible falsification, investigate"
        );
    }
    pass(9, "disagree-records scan reproduces conjectured (m(n), b(n)) for n = 2..7 plus given anchors");
}

#[test]
fn criterion_10_problem_b_periodicity() {
    for a in 1..=64u64 {
        let expected = 1usize << (val2(a) + 1);
        let prefix_len = 1usize << (val2(a) + 3);
        let bg = beta_gamma(a, prefix_len).unwrap();
        assert_eq!(smallest_period(&bg.beta), Some(expected), "beta a={a}");
        assert_eq!(smallest_period(&bg.gamma), Some(expected), "gamma a={a}");
        for (i, (&x, &y)) in bg.beta.iter().zip(bg.gamma.iter()).enumerate() {
            assert_eq!(x, -y, "antisymmetry a={a} n={i}");
        }
    }
    pass(10, "beta/gamma prefixes have smallest period 2^(val2(a)+1) and beta = -gamma for a <= 64");
}

#[test]
fn criterion_11_problem_a_family() {
    for a in 1..=3u64 {
        for k in 0..=5u32 {
            assert_eq!(
                check_triple(a, a + (1 << k), a + (1 << (k + 1)), 100_000),
                None,
                "a={a} k={k}"
            );
        }
    }
    pass(11, "known-suitable triples {a, a+2^k, a+2^(k+1)} survive 10^5-term scans");
}

#[test]
fn criterion_12_bfile_round_trip_and_fault_injection() {
    // round trip: write then read yields identical entries
    let entries: Vec<(i64, i64)> = (0..64).map(|n| (n, g(n as u64) as i64)).collect();
    let parsed = parse_bfile(&write_bfile(&entries)).unwrap();
    assert_eq!(parsed.entries, entries);
    assert_eq!(verify_against_bfile(SequenceId::G, &parsed), None);

    // flip one value and check library-level detection
    let mut flipped = entries.clone();
    flipped[37].1 ^= 1;
    let bad = parse_bfile(&write_bfile(&flipped)).unwrap();
    let mismatch = verify_against_bfile(SequenceId::G, &bad).unwrap();
    assert_eq!(mismatch.index, 37);

    // and the CLI exit-code contract on the same files
    let dir = std::env::temp_dir().join("tma-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let good_path = dir.join("good.txt");
    let bad_path = dir.join("bad.txt");
    std::fs::write(&good_path, write_bfile(&entries)).unwrap();
    std::fs::write(&bad_path, write_bfile(&flipped)).unwrap();

    let ok = Command::new(env!("CARGO_BIN_EXE_tma"))
        .args(["verify", "--seq", "G", "--bfile"])
        .arg(&good_path)
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0), "{ok:?}");

    let fail = Command::new(env!("CARGO_BIN_EXE_tma"))
        .args(["verify", "--seq", "G", "--bfile"])
        .arg(&bad_path)
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1), "{fail:?}");
    let stdout = String::from_utf8_lossy(&fail.stdout);
    assert!(stdout.contains("index 37"), "stdout: {stdout}");

    pass(12, "b-file write/read identity; flipped value detected at index 37 with exit code 1");
}
