//! The case-by-case closed forms of `x_n^{(r,t)}(a)`, one function per case.
//! These only exist to be checked against [`crate::solver::x_rt`].

use num_traits::{One, Zero};

use crate::arith::bernoulli::bernoulli;
use crate::arith::rational::{binom, int, pow, pow2, ratio, BigNat, Rational};
use crate::binary::PowerOfTwoClass;
use crate::error::{Error, Result};
use crate::solver::EvalPoint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    /// `r = 0`
    A,
    /// `t = 0`, `a = 1/2`
    B1,
    /// `t = 0`, `a = 1`
    B2,
    /// `t = 0`, `a` not in `{1/2, 1, ..., 2^{r-1}}`
    B3,
    /// `t = 0`, `a = 2^ell`, `1 <= ell <= r-1`
    B4(u32),
    /// `t >= 1`, `a = 1/2`
    C1,
    /// `t >= 1`, `a = 1`
    C2,
    /// `t >= 1`, `a` not in `{1/2, 1, 2^t, ..., 2^{r+t-1}}`
    C3,
    /// `t >= 1`, `a = 2^{t+ell}`, `0 <= ell <= r-1`
    C4(u32),
}

pub fn branch(r: u32, t: u32, a: &Rational) -> Branch {
    let j = PowerOfTwoClass::of(a).exponent();
    let (ri, ti) = (r as i64, t as i64);
    match (r, t, j) {
        (0, _, _) => Branch::A,
        (_, 0, Some(-1)) => Branch::B1,
        (_, 0, Some(0)) => Branch::B2,
        (_, 0, Some(l)) if (1..ri).contains(&l) => Branch::B4(l as u32),
        (_, 0, _) => Branch::B3,
        (_, _, Some(-1)) => Branch::C1,
        (_, _, Some(0)) => Branch::C2,
        (_, _, Some(j)) if (ti..ri + ti).contains(&j) => Branch::C4((j - ti) as u32),
        _ => Branch::C3,
    }
}

pub fn x_rt_special(r: u32, t: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    x_rt_special_at(r, t, &mut EvalPoint::new(n, a)?)
}

pub fn x_rt_special_at(r: u32, t: u32, p: &mut EvalPoint) -> Result<Rational> {
    if p.is_one() {
        return Ok(Rational::zero());
    }
    let a = p.a().clone();
    match branch(r, t, &a) {
        Branch::A => case_a(t, p),
        Branch::B1 => case_b1(r, p),
        Branch::B2 => case_b2(r, p),
        Branch::B3 => case_b3(r, p),
        Branch::B4(l) => case_b4(r, l, p),
        Branch::C1 => case_c1(r, t, p),
        Branch::C2 => case_c2(r, t, p),
        Branch::C3 => case_c3(r, t, p),
        Branch::C4(l) => case_c4(r, t, l, p),
    }
}

fn nonzero(d: Rational) -> Result<Rational> {
    if d.is_zero() {
        Err(Error::Defect("vanishing denominator in a case formula"))
    } else {
        Ok(d)
    }
}

/// `sum_{k=k0}^{r+t} (sum_{j=k, j != skip}^{r+t} C(r, j-t-1) C(j, k) B_{j-k} / (j den(j))) n^k`,
/// dropping terms whose binomial already vanishes.
fn power_block(
    r: i64,
    t: i64,
    k0: i64,
    skip: Option<i64>,
    den: impl Fn(i64) -> Rational,
    p: &EvalPoint,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for k in k0..=r + t {
        let mut c = Rational::zero();
        for j in k..=r + t {
            let b = binom(r, j - t - 1);
            if Some(j) == skip || b.is_zero() {
                continue;
            }
            c += b * binom(j, k) * bernoulli((j - k) as usize) / nonzero(int(j) * den(j))?;
        }
        acc += c * pow(p.n(), k as u64);
    }
    Ok(acc)
}

/// `q + n 2^{-q} - 1`
fn geo_half(p: &EvalPoint) -> Rational {
    int(p.top() as i64) + p.n() * pow2(-(p.top() as i64)) - int(1)
}

/// `((2a)^q - 1)/(2a - 1) + n a^q - (2a)^q`
fn geo(p: &EvalPoint) -> Result<Rational> {
    let two_a = p.a() * int(2);
    Ok((p.two_a_q() - int(1)) / nonzero(two_a - int(1))? + p.n() * p.a_q() - p.two_a_q())
}

/// `(((2a-1) q - 2a)(2a)^q + 2a)/(2a-1)^2 + q a^q (n - 2^q)`
fn resonant_geo(p: &EvalPoint) -> Result<Rational> {
    let q = int(p.top() as i64);
    let two_a = p.a() * int(2);
    let d = nonzero(&two_a - int(1))?;
    let head = ((&d * &q - &two_a) * p.two_a_q() + &two_a) / (&d * &d);
    Ok(head + q * p.a_q() * (p.n() - pow2(p.top() as i64)))
}

fn case_a(t: u32, p: &mut EvalPoint) -> Result<Rational> {
    let ti = t as i64;
    let mut acc = if *p.a() == ratio(1, 2) { geo_half(p) } else { geo(p)? };
    for i in 0..ti {
        acc += pow2(-i) * binom(ti, i) * p.alpha(0, i as u32)?;
    }
    Ok(acc)
}

fn case_b1(r: u32, p: &mut EvalPoint) -> Result<Rational> {
    let ri = r as i64;
    let mut acc = int(2) * power_block(ri, 0, 1, None, |j| pow2(j) - int(1), p)? - int(2);
    let mut g = Rational::one();
    for l in 0..ri {
        g -= int(2) * binom(ri, l) / (pow2(l + 1) - int(1));
    }
    acc += g * geo_half(p);
    for i in 0..ri {
        let mut c = pow2(-i) * binom(ri, i);
        for l in i + 1..ri {
            c += int(2) * binom(ri, l) * binom(l, i) / (pow2(l + 1) - int(1));
        }
        acc -= c * p.alpha(0, i as u32)?;
    }
    Ok(acc)
}

fn case_b2(r: u32, p: &mut EvalPoint) -> Result<Rational> {
    let ri = r as i64;
    let q = p.top() as i64;
    let mut acc = power_block(ri, 0, 2, None, |j| pow2(j - 1) - int(1), p)?;
    let mut lin = int(q + 1);
    let mut cst = int(1) - pow2(q + 1);
    for j in 1..ri {
        let w = binom(ri, j) / (pow2(j) - int(1));
        lin += &w * (bernoulli(j as usize) - int(1));
        cst += w;
    }
    acc += lin * p.n() + cst;
    for i in 0..ri {
        let mut c = pow2(-i) * binom(ri, i);
        for l in i + 1..ri {
            c += binom(ri, l) * binom(l, i) / (pow2(l) - int(1));
        }
        acc -= c * p.alpha(0, i as u32)?;
    }
    Ok(acc)
}

/// Shared shape of (b.3) and (b.4); `ell` marks the skipped resonant index.
fn case_b_general(r: u32, ell: Option<i64>, p: &mut EvalPoint) -> Result<Rational> {
    let ri = r as i64;
    let a = p.a().clone();
    let skip = ell.map(|l| l + 1);
    let mut acc = power_block(ri, 0, 1, skip, |j| pow2(j - 1) - &a, p)?;
    acc += (&a - int(1)).recip();
    let mut g = Rational::one();
    for l in (0..ri).filter(|&l| Some(l) != ell) {
        g -= binom(ri, l) / nonzero(pow2(l) - &a)?;
    }
    acc += g * geo(p)?;
    for i in 0..ri {
        let mut c = pow2(-i) * binom(ri, i);
        for l in (i + 1..ri).filter(|&l| Some(l) != ell) {
            c += binom(ri, l) * binom(l, i) / nonzero(pow2(l) - &a)?;
        }
        acc -= c * p.alpha(0, i as u32)?;
    }
    Ok(acc)
}

fn case_b3(r: u32, p: &mut EvalPoint) -> Result<Rational> {
    case_b_general(r, None, p)
}

fn case_b4(r: u32, ell: u32, p: &mut EvalPoint) -> Result<Rational> {
    let (ri, li) = (r as i64, ell as i64);
    let mut acc = case_b_general(r, Some(li), p)?;
    let lead = binom(ri, li) / p.a();
    acc += &lead * resonant_geo(p)?;
    for i in 0..li {
        acc += &lead * binom(li, i) * p.alpha(1, i as u32)?;
    }
    Ok(acc)
}

/// `sum_i (2^{-i} C(r+t, i) - 2^{-i+1} C(r, i-t) - sum_{l >= i-t+1} C(r,l) C(t+l,i) w(l)) alpha^{(0,i)}`
fn alpha_block_c(
    r: i64,
    t: i64,
    w: impl Fn(i64) -> Option<Rational>,
    p: &mut EvalPoint,
) -> Result<Rational> {
    let mut acc = Rational::zero();
    for i in 0..r + t {
        let mut c = pow2(-i) * binom(r + t, i) - pow2(1 - i) * binom(r, i - t);
        for l in (i - t + 1).max(0)..r {
            if let Some(wl) = w(l) {
                c -= binom(r, l) * binom(t + l, i) * wl;
            }
        }
        acc += c * p.alpha(0, i as u32)?;
    }
    Ok(acc)
}

fn case_c1(r: u32, t: u32, p: &mut EvalPoint) -> Result<Rational> {
    let (ri, ti) = (r as i64, t as i64);
    let mut acc = int(2) * power_block(ri, ti, 1, None, |j| pow2(j) - int(1), p)?;
    let mut g = Rational::one();
    for l in 0..ri {
        g -= int(2) * binom(ri, l) / (pow2(ti + l + 1) - int(1));
    }
    acc += g * geo_half(p);
    acc += alpha_block_c(ri, ti, |l| Some(int(2) / (pow2(ti + l + 1) - int(1))), p)?;
    Ok(acc)
}

fn case_c2(r: u32, t: u32, p: &mut EvalPoint) -> Result<Rational> {
    let (ri, ti) = (r as i64, t as i64);
    let mut acc = power_block(ri, ti, 2, None, |j| pow2(j - 1) - int(1), p)?;
    let mut lin = int(1);
    for j in 1..ri + ti {
        lin += binom(ri, j - ti) * (bernoulli(j as usize) - int(1)) / (pow2(j) - int(1));
    }
    acc += lin * p.n() - int(1);
    for l in 0..ri {
        acc += binom(ri, l) / (pow2(ti + l) - int(1));
    }
    acc += alpha_block_c(ri, ti, |l| Some((pow2(ti + l) - int(1)).recip()), p)?;
    Ok(acc)
}

/// Shared shape of (c.3) and (c.4).
fn case_c_general(r: u32, t: u32, ell: Option<i64>, p: &mut EvalPoint) -> Result<Rational> {
    let (ri, ti) = (r as i64, t as i64);
    let a = p.a().clone();
    let skip = ell.map(|l| ti + l + 1);
    let mut acc = power_block(ri, ti, 1, skip, |j| pow2(j - 1) - &a, p)?;
    let mut g = Rational::one();
    for l in (0..ri).filter(|&l| Some(l) != ell) {
        g -= binom(ri, l) / nonzero(pow2(ti + l) - &a)?;
    }
    acc += g * geo(p)?;
    acc += alpha_block_c(
        ri,
        ti,
        |l| (Some(l) != ell).then(|| (pow2(ti + l) - &a).recip()),
        p,
    )?;
    Ok(acc)
}

fn case_c3(r: u32, t: u32, p: &mut EvalPoint) -> Result<Rational> {
    case_c_general(r, t, None, p)
}

fn case_c4(r: u32, t: u32, ell: u32, p: &mut EvalPoint) -> Result<Rational> {
    let (ri, ti, li) = (r as i64, t as i64, ell as i64);
    let mut acc = case_c_general(r, t, Some(li), p)?;
    let lead = binom(ri, li) / p.a();
    // printed as (q (2a)^q - (2a)^{q+1} + 2a)/(2a-1)^2 in the source, which
    // drops the (2a-1) factor on q (2a)^q; this is T(1, q, 2a) in full
    acc += &lead * resonant_geo(p)?;
    for i in 0..ti + li {
        acc += &lead * binom(ti + li, i) * p.alpha(1, i as u32)?;
    }
    Ok(acc)
}
