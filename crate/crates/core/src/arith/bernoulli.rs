//! Bernoulli numbers of the first kind (`B_1 = -1/2`) and Bernoulli polynomials.
//!
//! Numbers come from the recurrence `sum_{k=0}^{m} C(m+1, k) B_k = 0` with
//! `B_0 = 1`, held in a process-wide cache. The cache is filled eagerly up to
//! [`DEFAULT_CACHE_BOUND`] on first use and grows on demand behind a lock.

use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use super::rational::{binom, int, pow, Rational};

/// Covers every `B_j` needed by monomials with `r + t <= 63`.
pub const DEFAULT_CACHE_BOUND: usize = 64;

/// Environment variable consulted by [`init_from_env`].
pub const CACHE_ENV_VAR: &str = "DNC_BERNOULLI_CACHE";

static CACHE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

fn cache() -> &'static RwLock<Vec<Rational>> {
    CACHE.get_or_init(|| {
        let mut v = Vec::new();
        extend(&mut v, DEFAULT_CACHE_BOUND);
        RwLock::new(v)
    })
}

fn extend(v: &mut Vec<Rational>, len: usize) {
    if v.is_empty() {
        v.push(Rational::one());
    }
    while v.len() < len {
        let m = v.len() as i64;
        let sum = v
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, b)| acc + binom(m + 1, k as i64) * b);
        v.push(-sum / int(m + 1));
    }
}

/// Makes sure `B_0 ..= B_{bound-1}` are cached before concurrent use.
pub fn precompute(bound: usize) {
    let lock = cache();
    if lock.read().unwrap().len() >= bound {
        return;
    }
    let mut w = lock.write().unwrap();
    extend(&mut w, bound);
}

/// Applies the cache bound from `DNC_BERNOULLI_CACHE`, if set and valid.
/// Returns the bound in effect.
pub fn init_from_env() -> usize {
    let bound = std::env::var(CACHE_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(DEFAULT_CACHE_BOUND);
    precompute(bound);
    cached_len().max(bound)
}

pub fn cached_len() -> usize {
    cache().read().unwrap().len()
}

/// `B_m`.
pub fn bernoulli(m: usize) -> Rational {
    {
        let r = cache().read().unwrap();
        if let Some(b) = r.get(m) {
            return b.clone();
        }
    }
    let mut w = cache().write().unwrap();
    extend(&mut w, m + 1);
    w[m].clone()
}

/// `B_m(x) = sum_{k=0}^{m} C(m, k) B_k x^{m-k}`.
pub fn bernoulli_poly(m: usize, x: &Rational) -> Rational {
    precompute(m + 1);
    (0..=m).fold(Rational::zero(), |acc, k| {
        acc + binom(m as i64, k as i64) * bernoulli(k) * pow(x, (m - k) as u64)
    })
}
