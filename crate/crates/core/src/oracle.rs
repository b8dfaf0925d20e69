//! Ground truth independent of the closed form: direct memoized recursion and
//! two expressions for the first differences `y_n = x_n - x_{n-1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alpha::s_sum_at;
use crate::arith::rational::{binom, checked_div, int, nat, pow, pow2, BigNat, Rational};
use crate::binary::{delta_ell, ell_of, halves, BinDecomp};
use crate::error::{Error, Result};
use crate::poly::Recurrence;

/// Values of one recurrence keyed by `n`, filled by direct recursion.
#[derive(Debug, Clone)]
pub struct MemoTable {
    rec: Recurrence,
    values: HashMap<BigNat, Rational>,
}

impl MemoTable {
    pub fn new(rec: &Recurrence) -> Self {
        let mut values = HashMap::new();
        values.insert(BigNat::one(), rec.x1.clone());
        Self { rec: rec.clone(), values }
    }

    pub fn get(&mut self, n: &BigNat) -> Result<Rational> {
        if n.is_zero() {
            return Err(Error::ZeroIndex);
        }
        if let Some(v) = self.values.get(n) {
            return Ok(v.clone());
        }
        // iterative descent so huge n cannot overflow the stack
        let mut pending = vec![n.clone()];
        while let Some(k) = pending.last().cloned() {
            let (hi, lo) = halves(&k);
            let missing: Vec<BigNat> =
                [&hi, &lo].into_iter().filter(|v| !self.values.contains_key(*v)).cloned().collect();
            if missing.is_empty() {
                let v = self.step(&hi, &lo);
                self.values.insert(k, v);
                pending.pop();
            } else {
                pending.extend(missing);
            }
        }
        Ok(self.values[n].clone())
    }

    fn step(&self, hi: &BigNat, lo: &BigNat) -> Rational {
        let a = &self.rec.a;
        a * &self.values[hi] + a * &self.values[lo] + self.rec.poly.eval(&nat(hi), &nat(lo))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries that fail to satisfy the recurrence against their stored parents.
    pub fn audit(&self) -> Vec<BigNat> {
        let mut bad: Vec<BigNat> = self
            .values
            .iter()
            .filter(|(n, v)| {
                if n.is_one() {
                    return **v != self.rec.x1;
                }
                let (hi, lo) = halves(n);
                match (self.values.contains_key(&hi), self.values.contains_key(&lo)) {
                    (true, true) => self.step(&hi, &lo) != **v,
                    _ => true,
                }
            })
            .map(|(n, _)| n.clone())
            .collect();
        bad.sort();
        bad
    }
}

pub fn oracle_solve(rec: &Recurrence, n: &BigNat) -> Result<Rational> {
    MemoTable::new(rec).get(n)
}

fn ipow(v: &BigInt, e: u32) -> Rational {
    Rational::from_integer(v.pow(e))
}

/// `y_n^{(r,t)}` from the explicit halving expansion, floors taken on integers.
pub fn y_diff(r: u32, t: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    if n < &BigNat::from(2u32) {
        return Err(Error::ZeroIndex);
    }
    let m = BigInt::from(n - 1u32);
    let big_l = BinDecomp::new(&(n - 1u32))?.top();
    let mut acc = pow(a, big_l);
    let mut ak = Rational::one();
    for k in 1..=big_l {
        let fl = &m >> k;
        // floor((n-1)/2^k + 1/2) = floor((2(n-1) + 2^k) / 2^{k+1})
        let half = ((&m << 1u32) + (BigInt::one() << k)) >> (k + 1);
        let term = ipow(&(&fl + 1), r) * ipow(&half, t) - ipow(&half, r) * ipow(&fl, t);
        acc += &ak * term;
        ak *= a;
    }
    Ok(acc)
}

/// `y_n^{(r,t)}` from its expression through the `S^{(0,i)}_{n-1}` sums.
pub fn y_prop(r: u32, t: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    if n < &BigNat::from(2u32) {
        return Err(Error::ZeroIndex);
    }
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    let b = BinDecomp::new(&(n - 1u32))?;
    let m = nat(b.n());
    let (ri, ti) = (r as i64, t as i64);
    let ell = ell_of(a, t);
    let a_l = pow(a, b.top());
    let over = |x: Rational, l: i64| checked_div(&x, &(pow2(ti + l) - a));

    let mut acc = a_l.clone();
    for l in (0..ri).filter(|&l| Some(l) != ell) {
        acc += over(binom(ri, l) * (pow(&m, (ti + l) as u64) - &a_l), l)?;
    }
    for i in 0..ri + ti {
        let mut c = pow2(-i) * binom(ri + ti, i) - pow2(1 - i) * binom(ri, i - ti);
        for l in ((i - ti + 1).max(0)..ri).filter(|&l| Some(l) != ell) {
            c -= over(binom(ri, l) * binom(ti + l, i), l)?;
        }
        acc += c * s_sum_at(0, i as u32, &b, a);
    }
    if delta_ell(a, r, t) {
        let l = ell.unwrap();
        acc += binom(ri, l) / a * resonant_sum(&b, (ti + l) as u32);
    }
    Ok(acc)
}

/// `sum_{j=0}^{s-1} M_{j+1}^e (q_{j+1} - q_j)` over the decomposition `b`.
pub fn resonant_sum(b: &BinDecomp, e: u32) -> Rational {
    (0..b.s()).fold(Rational::zero(), |acc, j| {
        acc + pow(&b.m_rat(j + 1), e as u64) * int((b.q(j + 1) - b.q(j)) as i64)
    })
}
