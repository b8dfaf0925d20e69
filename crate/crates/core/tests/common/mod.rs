#![allow(dead_code)]

use dnc_core::arith::{int, ratio, BigNat, Rational};

/// The coefficient grid every sweep runs over.
pub fn a_grid() -> Vec<Rational> {
    vec![
        int(1),
        int(-1),
        ratio(1, 2),
        ratio(-1, 2),
        int(2),
        int(4),
        int(3),
        ratio(2, 3),
        int(-2),
    ]
}

/// All `(r, t)` with `r + t <= deg`.
pub fn monomials(deg: u32) -> Vec<(u32, u32)> {
    (0..=deg).flat_map(|s| (0..=s).map(move |r| (r, s - r))).collect()
}

pub fn n(v: u64) -> BigNat {
    BigNat::from(v)
}
