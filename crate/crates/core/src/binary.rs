//! Binary decomposition `n = 2^{q_1} + ... + 2^{q_s}` with suffix sums
//! `M_i = sum_{j >= i} 2^{q_j}`, and exact power-of-two classification of `a`.

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::rational::{log2_exact, nat, BigNat, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinDecomp {
    n: BigNat,
    q: Vec<u64>,
    m: Vec<BigNat>,
}

impl BinDecomp {
    pub fn new(n: &BigNat) -> Result<Self> {
        if n.is_zero() {
            return Err(Error::ZeroIndex);
        }
        let q: Vec<u64> = (0..n.bits()).filter(|&b| n.bit(b)).collect();
        let mut m = vec![BigNat::zero(); q.len()];
        let mut acc = BigNat::zero();
        for (i, &e) in q.iter().enumerate().rev() {
            acc += BigNat::one() << e;
            m[i] = acc.clone();
        }
        Ok(Self { n: n.clone(), q, m })
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        Self::new(&BigNat::from(n))
    }

    pub fn n(&self) -> &BigNat {
        &self.n
    }

    /// Binary weight `s_n`.
    pub fn s(&self) -> usize {
        self.q.len()
    }

    /// `q_i` for `1 <= i <= s`, with `q_0 = 0`.
    pub fn q(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.q[i - 1]
        }
    }

    /// Largest exponent `q_s = floor(log2 n)`.
    pub fn top(&self) -> u64 {
        *self.q.last().unwrap()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.q
    }

    /// `M_i`, with `M_0 = n + 1` and `M_i = 0` past `s`.
    pub fn m(&self, i: usize) -> BigNat {
        match i {
            0 => &self.n + 1u32,
            i if i > self.q.len() => BigNat::zero(),
            i => self.m[i - 1].clone(),
        }
    }

    pub fn m_rat(&self, i: usize) -> Rational {
        nat(&self.m(i))
    }
}

pub fn decompose(n: &BigNat) -> Result<BinDecomp> {
    BinDecomp::new(n)
}

/// Whether `a` is exactly `2^j` for some integer `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerOfTwoClass {
    Power(i64),
    Other,
}

impl PowerOfTwoClass {
    pub fn of(a: &Rational) -> Self {
        let num = log2_exact(a.numer());
        let den = log2_exact(a.denom());
        match (num, den) {
            (Some(i), Some(j)) => Self::Power(i as i64 - j as i64),
            _ => Self::Other,
        }
    }

    pub fn exponent(self) -> Option<i64> {
        match self {
            Self::Power(j) => Some(j),
            Self::Other => None,
        }
    }
}

/// `log2(a) - t` when `a` is an exact power of two.
pub fn ell_of(a: &Rational, t: u32) -> Option<i64> {
    PowerOfTwoClass::of(a).exponent().map(|j| j - t as i64)
}

pub fn delta_ell(a: &Rational, r: u32, t: u32) -> bool {
    r > 0 && matches!(ell_of(a, t), Some(l) if (0..r as i64).contains(&l))
}

/// Composition of `phi_0 = floor(./2)` and `phi_1 = ceil(./2)` given as
/// `bits = [b_m, ..., b_0]`, evaluated as `floor((n + sum b_i 2^i) / 2^{m+1})`.
pub fn thompson_phi(bits: &[u8], n: &BigNat) -> BigNat {
    let offset = bits
        .iter()
        .fold(BigNat::zero(), |acc, &b| (acc << 1u32) + BigNat::from(b));
    (n + offset) >> bits.len()
}

/// The same composition applied one halving at a time, `b_0` first.
pub fn phi_compose(bits: &[u8], n: &BigNat) -> BigNat {
    bits.iter().rev().fold(n.clone(), |v, &b| {
        let (h, rem) = v.div_rem(&BigNat::from(2u32));
        if b == 1 && !rem.is_zero() {
            h + 1u32
        } else {
            h
        }
    })
}

/// `ceil(n/2)` and `floor(n/2)`.
pub fn halves(n: &BigNat) -> (BigNat, BigNat) {
    let lo = n >> 1u32;
    let hi = n - &lo;
    (hi, lo)
}
