//! Checks shared by the property suites and the acceptance runner. Each
//! function panics with a description of the first counterexample.

#![allow(dead_code)]

use std::cmp::Ordering;

use holeorbit::bullet::bullet;
use holeorbit::chains::{anchor_sequence, enumerate_chains};
use holeorbit::numerics::{quasi_greedy_delta, BetaParam};
use holeorbit::oracle::{enumerate_lyndon, gamma_set_check};
use holeorbit::words::{
    bump_down, conjugate, cyclic_max, farey_word, is_perron, lex_cmp_periodic, substitute_u,
    PeriodicSequence, Word,
};

/// Every word of length `n`, in lexicographic order.
pub fn all_words(n: usize) -> Vec<Word> {
    (0u32..(1 << n))
        .map(|bits| {
            let digits = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
            Word::from_digits(digits).unwrap()
        })
        .collect()
}

/// Lyndon words with `2 <= |s| <= max_len`, the valid left operands of `•`.
pub fn left_operands(max_len: usize) -> Vec<Word> {
    (2..=max_len)
        .flat_map(|n| enumerate_lyndon(n).unwrap())
        .collect()
}

pub fn check_bullet_length(s: &Word, r: &Word) {
    let b = bullet(s, r).unwrap();
    assert_eq!(b.len(), s.len() * r.len(), "{s} • {r} = {b}");
}

pub fn check_bullet_closure(s: &Word, r: &Word) {
    let b = bullet(s, r).unwrap();
    assert!(
        holeorbit::words::is_lyndon(&b),
        "{s} • {r} = {b} is not Lyndon"
    );
}

pub fn check_bullet_max_commutation(s: &Word, r: &Word) {
    let lhs = cyclic_max(&bullet(s, r).unwrap()).unwrap();
    let rhs = bullet(s, &cyclic_max(r).unwrap()).unwrap();
    assert_eq!(lhs, rhs, "L({s} • {r}) vs {s} • L({r})");
}

pub fn check_bullet_associativity(a: &Word, b: &Word, c: &Word) {
    let lhs = bullet(&bullet(a, b).unwrap(), c).unwrap();
    let rhs = bullet(a, &bullet(b, c).unwrap()).unwrap();
    assert_eq!(lhs, rhs, "({a} • {b}) • {c} vs {a} • ({b} • {c})");
}

/// `c < d` iff `s • c < s • d`, for words of equal length.
pub fn check_bullet_monotone(s: &Word, c: &Word, d: &Word) {
    assert_eq!(c.len(), d.len());
    let bc = bullet(s, c).unwrap();
    let bd = bullet(s, d).unwrap();
    assert_eq!(c.cmp(d), bc.cmp(&bd), "{s} • {c} = {bc}, {s} • {d} = {bd}");
}

pub fn check_u_commutation(s: &Word, r: &Word) {
    for d in ["0", "1"] {
        let code: Word = d.parse().unwrap();
        let lhs = substitute_u(&code, &bullet(s, r).unwrap());
        let rhs = bullet(&substitute_u(&code, s), r).unwrap();
        assert_eq!(lhs, rhs, "U_{d}({s} • {r})");
    }
}

/// `w⁻` is a palindrome and `L(w)` is the reversal of `w`.
pub fn check_farey_laws(p: u64, q: u64) {
    let w = farey_word(p, q).unwrap();
    assert!(bump_down(&w).unwrap().is_palindrome(), "w_{p}/{q} = {w}");
    assert_eq!(cyclic_max(&w).unwrap(), w.reversed(), "w_{p}/{q} = {w}");
}

/// Every certified prefix of `δ(β)` dominates its own suffixes.
pub fn check_delta_admissible(beta: &BetaParam, n: usize) {
    let p = quasi_greedy_delta(beta, n).unwrap();
    let d = p.digits();
    for k in 1..n {
        assert!(d[k..] <= d[..n - k], "shift {k} of {p} exceeds the prefix");
    }
}

/// `Γ_s` is exactly the orbit of `s^∞` for every Farey word with
/// `2 <= |s| <= max_len`.
pub fn check_gamma_sets(max_len: u64, max_period: usize) -> usize {
    let mut checked = 0;
    for q in 2..=max_len {
        for p in 1..q {
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let s = farey_word(p, q).unwrap();
            assert_eq!(gamma_set_check(&s, max_period), Ok(true), "s = {s}");
            checked += 1;
        }
    }
    checked
}

/// Conjugation maps the Lyndon words with `k` ones onto the Perron words
/// with `m - k` ones. The Perron side is found by filtering all words.
pub fn check_conjugate_duality(m: usize) {
    let perron: Vec<Word> = all_words(m)
        .into_iter()
        .filter(|u| is_perron(u).unwrap_or(false))
        .collect();
    for k in 1..m {
        let mut lhs: Vec<Word> = enumerate_lyndon(m)
            .unwrap()
            .into_iter()
            .filter(|w| w.ones() == k)
            .map(|w| cyclic_max(&conjugate(&w)).unwrap())
            .collect();
        lhs.sort();
        let rhs: Vec<Word> = perron
            .iter()
            .filter(|u| u.ones() == m - k)
            .cloned()
            .collect();
        assert_eq!(lhs, rhs, "m = {m}, k = {k}");
    }
}

/// Anchors strictly increase along the chain order.
pub fn check_anchor_monotone(m: u64) -> usize {
    let chains = enumerate_chains(m).unwrap();
    let anchors: Vec<PeriodicSequence> = chains.iter().map(anchor_sequence).collect();
    for (i, pair) in anchors.windows(2).enumerate() {
        assert_eq!(
            lex_cmp_periodic(&pair[0], &pair[1]),
            Ordering::Less,
            "{} then {}",
            chains[i],
            chains[i + 1]
        );
    }
    chains.len()
}
