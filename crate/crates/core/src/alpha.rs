//! Auxiliary sums over binary decompositions:
//!
//! - `S^{(d,m)}_n = sum_{j=1}^{s_n-1} q_j^d (2^{-m} a)^{q_j} M_{j+1}^m`
//! - `alpha^{(d,m)}_n(a) = sum_{k=1}^{n-1} S^{(d,m)}_k`
//! - `gamma^{(d,p,m)}_l = sum_{k=1}^{2^l-1} sum_{i=1}^{s_k} q_i^d (2^{-m} a)^{q_i} M_{i+1}^p`

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::bernoulli::{bernoulli, bernoulli_poly};
use crate::arith::power_sums::t_closed;
use crate::arith::rational::{binom, int, pow, pow2, pow_nat, powi, BigNat, Rational};
use crate::binary::BinDecomp;
use crate::error::{Error, Result};

fn check_a(a: &Rational) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroCoefficient)
    } else {
        Ok(())
    }
}

pub fn s_sum(d: u32, m: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    check_a(a)?;
    Ok(s_sum_at(d, m, &BinDecomp::new(n)?, a))
}

pub fn s_sum_at(d: u32, m: u32, b: &BinDecomp, a: &Rational) -> Rational {
    let base = a * pow2(-(m as i64));
    let mut acc = Rational::zero();
    for j in 1..b.s() {
        let q = b.q(j);
        acc += pow_nat(q, d) * pow(&base, q) * pow(&b.m_rat(j + 1), m as u64);
    }
    acc
}

/// Closed form of `alpha^{(d,m)}_n(a)` for `d` in `{0, 1}`.
pub fn alpha_closed(d: u32, m: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    check_a(a)?;
    alpha_closed_at(d, m, &BinDecomp::new(n)?, a)
}

pub fn alpha_closed_at(d: u32, m: u32, b: &BinDecomp, a: &Rational) -> Result<Rational> {
    let mi = m as i64;
    let top = b.top();
    // The per-bit sums run over integers scaled by a fixed denominator;
    // normalizing big rationals at every step dominates otherwise.
    let mut head = Rational::zero();
    for j in 0..=mi {
        let w = binom(mi + 1, j) * bernoulli(j as usize) * pow2(j);
        if w.is_zero() {
            continue;
        }
        let t = ScaledT::new(d, &(a * pow2(j - mi)), top)?;
        let e = (m as i64 + 1 - j) as u32;
        let mut prev = BigInt::zero();
        let mut sum = BigInt::zero();
        for i in 1..=b.s() {
            let cur = t.at(b.q(i));
            sum += BigInt::from(b.m(i).pow(e)) * (&cur - &prev);
            prev = cur;
        }
        head += w * Rational::new(sum, t.scale.clone());
    }
    let mut acc = head / int(2 * (mi + 1));

    let base = a * pow2(-mi);
    let (bn, bd) = (base.numer(), base.denom());
    let n = BigInt::from(b.n().clone());
    let mut tail = BigInt::zero();
    for i in 1..b.s() {
        let q = b.q(i);
        let qd = BigInt::from(q).pow(d);
        let lower = &n - BigInt::from(b.m(i));
        tail += qd * bn.pow(q as u32) * bd.pow((top - q) as u32) * lower * BigInt::from(b.m(i + 1).pow(m));
    }
    acc += Rational::new(tail, bd.pow(top as u32));
    if m == 0 {
        acc -= t_closed(d, top, &(a * int(2)))?;
    }
    Ok(acc)
}

/// `T(d, q, x) * scale` as an integer, for `0 <= q <= top`, with `scale`
/// depending only on `d`, `x` and `top`.
struct ScaledT {
    d: u32,
    one: bool,
    xn: BigInt,
    xd: BigInt,
    top: u64,
    scale: BigInt,
}

impl ScaledT {
    fn new(d: u32, x: &Rational, top: u64) -> Result<Self> {
        if x.is_zero() {
            return Err(Error::ZeroBase);
        }
        if d > 1 {
            return Err(Error::UnsupportedDegree(d));
        }
        let (xn, xd) = (x.numer().clone(), x.denom().clone());
        let one = xn == xd;
        // T(0, q, x) = (xn^q - xd^q) / (xd^{q-1} (xn - xd)), and
        // T(1, q, x) = (q xn^q (xn - xd) - xn (xn^q - xd^q)) / (xd^{q-1} (xn - xd)^2)
        let scale = if one {
            BigInt::from(d + 1)
        } else {
            xd.pow(top.saturating_sub(1) as u32) * (&xn - &xd).pow(d + 1)
        };
        Ok(Self { d, one, xn, xd, top, scale })
    }

    fn at(&self, q: u64) -> BigInt {
        let qb = BigInt::from(q);
        if self.one {
            return if self.d == 0 { qb } else { &qb * (&qb - 1) };
        }
        if q == 0 {
            return BigInt::zero();
        }
        let xq = self.xn.pow(q as u32);
        let dq = self.xd.pow(q as u32);
        let p = if self.d == 0 {
            &xq - &dq
        } else {
            qb * &xq * (&self.xn - &self.xd) - &self.xn * (&xq - &dq)
        };
        p * self.xd.pow((self.top - q) as u32)
    }
}

/// `alpha^{(d,m)}_n(a)` by literal double summation. Test oracle.
pub fn alpha_ref(d: u32, m: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    check_a(a)?;
    let mut acc = Rational::zero();
    let mut k = BigNat::from(1u32);
    while &k < n {
        acc += s_sum_at(d, m, &BinDecomp::new(&k)?, a);
        k += 1u32;
    }
    Ok(acc)
}

/// `gamma^{(d,p,m)}_l(a)` by literal summation over `k < 2^l`. Test oracle.
pub fn gamma_ref(d: u32, p: u32, m: u32, l: u32, a: &Rational) -> Result<Rational> {
    check_a(a)?;
    if p >= m {
        return Err(Error::GammaOrder { p, m });
    }
    let base = a * pow2(-(m as i64));
    let mut acc = Rational::zero();
    for k in 1..(1u64 << l) {
        let b = BinDecomp::from_u64(k)?;
        for i in 1..=b.s() {
            let q = b.q(i);
            acc += pow_nat(q, d) * pow(&base, q) * pow(&b.m_rat(i + 1), p as u64);
        }
    }
    Ok(acc)
}

/// Closed form of `gamma^{(d,p,m)}_l(a)`.
pub fn gamma_closed(d: u32, p: u32, m: u32, l: u32, a: &Rational) -> Result<Rational> {
    check_a(a)?;
    if p >= m {
        return Err(Error::GammaOrder { p, m });
    }
    if l == 0 {
        return Ok(Rational::zero());
    }
    let (li, pi, mi) = (l as i64, p as i64, m as i64);
    let bp1 = bernoulli(p as usize + 1);
    let ratio = a.recip() * pow2(mi - pi - 1);
    let mut inner = Rational::zero();
    for t in 1..li {
        let b2t = bernoulli_poly(p as usize + 1, &pow2(t));
        inner += pow_nat((li - t - 1) as u64, d) * powi(&ratio, t) * (b2t - &bp1);
    }
    let scale = powi(a, li - 1) * pow2(-(mi - 1) * (li - 1) + pi * li) / int(pi + 1);
    let mut acc = scale * inner;
    if p == 0 {
        acc += powi(&(a * pow2(-(mi - 1))), li - 1) * pow_nat(l as u64 - 1, d);
    }
    Ok(acc)
}
