//! Critical hole sizes for periodic orbits of the β-transformation
//! `x ↦ βx mod 1` with a hole `(0, t)`.
//!
//! For a period `m` and a base `β ∈ (1, 2]`, [`critical::tau`] computes the
//! largest `t` for which some orbit of smallest period `m` avoids the hole,
//! together with the Lyndon word describing that orbit. The supporting word
//! combinatorics (Farey, Lyndon and Perron words, the bullet substitution,
//! admissible chains) live in their own modules, and [`oracle`] provides an
//! independent brute-force check of everything.

pub mod bullet;
pub mod chains;
pub mod critical;
pub mod error;
pub mod extremal;
pub mod numerics;
pub mod oracle;
pub mod words;

pub use error::{Error, Result};
