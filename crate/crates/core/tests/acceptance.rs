//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use holeorbit::chains::{anchor, anchor_sequence, chain_word, enumerate_chains, psi, Chain};
use holeorbit::critical::{
    classify_beta, komornik_loreti, partition_table, sample, tau, Classification,
};
use holeorbit::extremal::{brute_max_lyndon, brute_min_perron, max_lyndon, min_perron};
use holeorbit::numerics::{beta_from_perron_word, BetaParam};
use holeorbit::oracle::{brute_tau, enumerate_lyndon};
use holeorbit::words::{farey_index, farey_word, w, PeriodicSequence, Word};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pow10_recip(e: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), e as usize))
}

fn ch(s: &str) -> Chain {
    s.parse().unwrap()
}

/// The chain whose interval holds `β`; above the last endpoint that is the
/// last chain.
fn chain_of(m: u64, c: Classification) -> Option<Chain> {
    match c {
        Classification::BelowFirst => None,
        Classification::AboveLast => Some(Chain::last(m).unwrap()),
        Classification::In(c) => Some(c),
    }
}

fn criterion_1() {
    assert_eq!(psi(8), 9);
    for m in 2..=60 {
        assert_eq!(enumerate_chains(m).unwrap().len() as u64, psi(m), "m = {m}");
    }
}

fn criterion_2() {
    let chains: Vec<Chain> = [
        "(8,1)",
        "(8,2,1)",
        "(8,3)",
        "(8,4,1)",
        "(8,4,2,1)",
        "(8,4,3)",
        "(8,5)",
        "(8,6,1)",
        "(8,7)",
    ]
    .iter()
    .map(|s| ch(s))
    .collect();
    let words = [
        "00000001", "00001001", "00100101", "00101011", "00101101", "00110101", "01011011",
        "01101111", "01111111",
    ];
    let anchors = [
        "10000000", "10010000", "10100100", "11001010", "11010010", "11010100", "11011010",
        "11110110", "11111110",
    ];
    assert_eq!(enumerate_chains(8).unwrap(), chains);
    for ((c, word), a) in chains.iter().zip(words).zip(anchors) {
        assert_eq!(chain_word(c), w(word), "chain {c}");
        assert_eq!(anchor(c), w(a), "chain {c}");
        assert_eq!(anchor_sequence(c), PeriodicSequence::new(w(a)).unwrap());
    }
}

fn criterion_3() {
    let table = [
        (1, 8, "00000001"),
        (3, 8, "00100101"),
        (5, 8, "01011011"),
        (7, 8, "01111111"),
        (1, 4, "0001"),
        (3, 4, "0111"),
        (1, 2, "01"),
    ];
    for (p, qq, word) in table {
        assert_eq!(farey_word(p, qq).unwrap(), w(word), "{p}/{qq}");
    }
    for qq in 2..=200u64 {
        for p in 1..qq {
            if num_integer::gcd(p, qq) == 1 {
                let r = farey_index(&farey_word(p, qq).unwrap()).unwrap();
                assert_eq!((*r.numer(), *r.denom()), (p, qq));
            }
        }
    }
}

fn criterion_4() {
    for m in 2..=14u64 {
        for k in 1..m {
            assert_eq!(
                max_lyndon(m, k).unwrap(),
                brute_max_lyndon(m, k).unwrap(),
                "max ({m},{k})"
            );
            assert_eq!(
                min_perron(m, k).unwrap(),
                brute_min_perron(m, k).unwrap(),
                "min ({m},{k})"
            );
        }
    }
}

fn criterion_5() {
    let kl = komornik_loreti(&pow10_recip(7)).unwrap();
    assert!(kl.width() <= pow10_recip(7));
    let target = q(178723, 100000);
    let tol = q(5, 1_000_000);
    assert!(
        (kl.lo() - &target).abs() <= tol && (kl.hi() - &target).abs() <= tol,
        "enclosure {kl}"
    );
    let beta = BetaParam::approximate(kl).unwrap();
    let table = [
        (2, 0.45574, "(2,1)"),
        (3, 0.21236, "(3,1)"),
        (4, 0.30286, "(4,2,1)"),
        (5, 0.24335, "(5,2)"),
        (6, 0.26894, "(6,3,1)"),
        (7, 0.25149, "(7,3)"),
        (8, 0.27292, "(8,4,2,1)"),
        (9, 0.25391, "(9,4)"),
        (10, 0.26988, "(10,5,2)"),
    ];
    for (m, value, chain) in table {
        let t = tau(m, &beta).unwrap();
        assert!(
            (t.value.lo_f64() - value).abs() <= 1e-4 && (t.value.hi_f64() - value).abs() <= 1e-4,
            "m = {m}: {} vs {value}",
            t.value
        );
        let c = chain_of(m, classify_beta(m, &beta).unwrap());
        assert_eq!(c, Some(ch(chain)), "m = {m}");
    }
}

/// Endpoint-adjacent bases first, then uniform rationals, 50 in all.
fn oracle_grid(m: u64, rng: &mut ChaCha8Rng) -> Vec<BigRational> {
    let offset = pow10_recip(4);
    let mut grid = Vec::new();
    for row in partition_table(m, &pow10_recip(15)).unwrap() {
        let e = row.left_endpoint.mid();
        for b in [&e - &offset, &e + &offset] {
            if b > BigRational::one() && b <= q(2, 1) {
                grid.push(b);
            }
        }
    }
    grid.truncate(50);
    while grid.len() < 50 {
        grid.push(q(rng.gen_range(1_000_001..=2_000_000), 1_000_000));
    }
    grid
}

fn criterion_6() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tol = pow10_recip(9);
    for m in 2..=12u64 {
        for b in oracle_grid(m, &mut rng) {
            let beta = BetaParam::exact(b.clone()).unwrap();
            let fast = tau(m, &beta).unwrap();
            let slow = brute_tau(m as usize, &beta).unwrap();
            assert_eq!(fast.expansion, slow.expansion, "m = {m}, β = {b}");
            let diff = (fast.exact.unwrap() - slow.exact.unwrap()).abs();
            assert!(diff <= tol, "m = {m}, β = {b}");
        }
    }
}

fn criterion_7() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let m: u64 = rng.gen_range(2..=20);
        let last = Chain::last(m).unwrap();
        let left = beta_from_perron_word(&anchor(&last), &pow10_recip(15)).unwrap();
        let lo = left.hi().to_f64().unwrap();
        let b = lo + (2.0 - lo) * rng.gen_range(0.001..=1.0);
        let b = BigRational::from_float(b).unwrap().min(q(2, 1));
        assert!(&b > left.hi());
        let t = tau(m, &BetaParam::exact(b.clone()).unwrap()).unwrap();
        let one = BigRational::one();
        let closed = (num_traits::pow(b.clone(), m as usize - 1) - &one)
            / ((&b - &one) * (num_traits::pow(b.clone(), m as usize) - &one));
        let diff = (t.exact.unwrap() - closed).abs();
        assert!(diff <= pow10_recip(12), "m = {m}, β = {b}");
    }
}

fn criterion_8() {
    let points = sample(8, &q(101, 100), &q(2, 1), 2000).unwrap();
    let rows = partition_table(8, &pow10_recip(12)).unwrap();
    let mut changes = Vec::new();
    for pair in points.windows(2) {
        if pair[0].tau.expansion != pair[1].tau.expansion {
            changes.push(pair[1].beta.clone());
        }
    }
    assert_eq!(changes.len(), 9, "changes at {changes:?}");
    let near = pow10_recip(3);
    for (b, row) in changes.iter().zip(&rows) {
        assert!(
            (b - row.left_endpoint.mid()).abs() <= near,
            "change at {b} vs endpoint {}",
            row.left_endpoint
        );
    }
}

fn criterion_9() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let random_word = |rng: &mut ChaCha8Rng, n: usize| {
        Word::from_digits((0..n).map(|_| rng.gen_range(0..=1)).collect()).unwrap()
    };
    let ops = left_operands(6);
    let rs: Vec<Word> = (2..=5).flat_map(|n| enumerate_lyndon(n).unwrap()).collect();
    for s in &ops {
        for r in &rs {
            check_bullet_length(s, r);
            check_bullet_closure(s, r);
            check_bullet_max_commutation(s, r);
            check_u_commutation(s, r);
        }
    }
    let small = left_operands(4);
    for a in &small {
        for b in &small {
            for c in &rs {
                check_bullet_associativity(a, b, c);
            }
        }
    }
    for _ in 0..1000 {
        let s = &ops[rng.gen_range(0..ops.len())];
        let n = rng.gen_range(1..=8);
        let (c, d) = (random_word(&mut rng, n), random_word(&mut rng, n));
        check_bullet_monotone(s, &c, &d);
    }
    for qq in 2..=60u64 {
        for p in 1..qq {
            if num_integer::gcd(p, qq) == 1 {
                check_farey_laws(p, qq);
            }
        }
    }
    for _ in 0..1000 {
        let beta = BetaParam::ratio(rng.gen_range(1001..=2000), 1000).unwrap();
        check_delta_admissible(&beta, rng.gen_range(1..=200));
    }
    check_gamma_sets(8, 12);
    for m in 2..=12 {
        check_conjugate_duality(m);
    }
    for m in 2..=30 {
        check_anchor_monotone(m);
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, fn()); 9] = [
        ("1 psi counts", Duration::from_secs(5), criterion_1),
        ("2 m=8 chain table", Duration::from_secs(1), criterion_2),
        ("3 Farey words", Duration::from_secs(5), criterion_3),
        ("4 extremal words", Duration::from_secs(60), criterion_4),
        (
            "5 Komornik-Loreti table",
            Duration::from_secs(30),
            criterion_5,
        ),
        (
            "6 oracle equivalence",
            Duration::from_secs(600),
            criterion_6,
        ),
        (
            "7 closed form above the last endpoint",
            Duration::from_secs(5),
            criterion_7,
        ),
        ("8 staircase shape", Duration::from_secs(30), criterion_8),
        ("9 property suites", Duration::from_secs(300), criterion_9),
    ];
    let mut failed = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= budget => "PASS",
            Ok(()) => "FAIL (over time budget)",
            Err(_) => "FAIL",
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!(
            "{verdict} criterion {name} ({:.2}s, budget {}s)",
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
