//! Power-weighted geometric sums `T(d, n, x) = sum_{k=0}^{n-1} k^d x^k` and
//! Faulhaber power sums.

use num_traits::{One, Zero};

use super::bernoulli::bernoulli;
use super::rational::{binom, int, nat, pow, pow_nat, BigNat, Rational};
use crate::error::{Error, Result};

/// Closed form of `T(d, n, x)` for `d` in `{0, 1}`.
pub fn t_closed(d: u32, n: u64, x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::ZeroBase);
    }
    if d > 1 {
        return Err(Error::UnsupportedDegree(d));
    }
    let nr = Rational::from_integer(n.into());
    if x.is_one() {
        return Ok(if d == 0 {
            nr
        } else {
            &nr * (&nr - int(1)) / int(2)
        });
    }
    let xn = pow(x, n);
    let xm1 = x - int(1);
    Ok(if d == 0 {
        (xn - int(1)) / xm1
    } else {
        (&nr * &xn * &xm1 - x * (&xn - int(1))) / (&xm1 * &xm1)
    })
}

/// Literal summation of `T(d, n, x)`, any `d`. Test oracle.
pub fn t_ref(d: u32, n: u64, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut xk = Rational::one();
    for k in 0..n {
        acc += pow_nat(k, d) * &xk;
        xk *= x;
    }
    acc
}

/// `sum_{k=1}^{n-1} k^d` by Faulhaber's formula.
pub fn faulhaber_sum(d: u32, n: &BigNat) -> Rational {
    let n = &nat(n);
    let d1 = d as i64 + 1;
    let mut acc = Rational::zero();
    for j in 0..=d1 {
        acc += binom(d1, j) * bernoulli(j as usize) * pow(n, (d1 - j) as u64);
    }
    let b = bernoulli(d1 as usize);
    if d % 2 == 0 {
        acc += b;
    } else {
        acc -= b;
    }
    acc / int(d1)
}
