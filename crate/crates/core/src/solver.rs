//! Closed-form evaluation of `x_n^{(r,t)}(a)`, the solution for the monomial
//! toll `ceil(n/2)^r floor(n/2)^t` with `x_1 = 0`, and of full recurrences.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::alpha::alpha_closed_at;
use crate::arith::bernoulli::bernoulli;
use crate::arith::power_sums::t_closed;
use crate::arith::rational::{binom, checked_div, int, nat, pow, pow2, BigNat, Rational};
use crate::binary::{delta_ell, ell_of, BinDecomp};
use crate::error::{Error, Result};
use crate::poly::Recurrence;

fn div(x: Rational, y: &Rational, what: &'static str) -> Result<Rational> {
    checked_div(&x, y).map_err(|_| Error::Defect(what))
}

/// Everything about a single `n` (and `a`) that the formulas share: the
/// decomposition, the powers `a^q`, `(2a)^q` with `q = q_{s_n}`, and a memo of
/// the alpha sums already computed.
#[derive(Debug, Clone)]
pub struct EvalPoint {
    a: Rational,
    decomp: BinDecomp,
    n: Rational,
    q: u64,
    a_q: Rational,
    two_a_q: Rational,
    alphas: HashMap<(u32, u32), Rational>,
}

impl EvalPoint {
    pub fn new(n: &BigNat, a: &Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let decomp = BinDecomp::new(n)?;
        let q = decomp.top();
        Ok(Self {
            a: a.clone(),
            n: nat(n),
            q,
            a_q: pow(a, q),
            two_a_q: pow(&(a * int(2)), q),
            decomp,
            alphas: HashMap::new(),
        })
    }

    pub fn decomp(&self) -> &BinDecomp {
        &self.decomp
    }

    pub fn is_one(&self) -> bool {
        self.decomp.n().is_one()
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn n(&self) -> &Rational {
        &self.n
    }

    /// `q_{s_n}`
    pub fn top(&self) -> u64 {
        self.q
    }

    #[cfg(feature = "special-cases")]
    pub(crate) fn a_q(&self) -> &Rational {
        &self.a_q
    }

    #[cfg(feature = "special-cases")]
    pub(crate) fn two_a_q(&self) -> &Rational {
        &self.two_a_q
    }

    pub fn alpha(&mut self, d: u32, m: u32) -> Result<Rational> {
        if let Some(v) = self.alphas.get(&(d, m)) {
            return Ok(v.clone());
        }
        let v = alpha_closed_at(d, m, &self.decomp, &self.a)?;
        self.alphas.insert((d, m), v.clone());
        Ok(v)
    }

    /// `n a^q - (2a)^q`
    fn tail(&self) -> Rational {
        &self.n * &self.a_q - &self.two_a_q
    }

    /// `sum_{k=1}^{n-1} a^{q_{s_k}(k)} = T(0, q, 2a) + n a^q - (2a)^q`
    fn geometric(&self) -> Result<Rational> {
        Ok(t_closed(0, self.q, &(&self.a * int(2)))? + self.tail())
    }

    /// `sum_{k=1}^{n-1} q_{s_k}(k) a^{q_{s_k}(k)} = T(1, q, 2a) + q (n a^q - (2a)^q)`
    fn weighted_geometric(&self) -> Result<Rational> {
        Ok(t_closed(1, self.q, &(&self.a * int(2)))? + self.tail() * int(self.q as i64))
    }

    /// Coefficient of `x_1` in the solution.
    pub fn homogeneous_factor(&self) -> Rational {
        &self.two_a_q + (&self.a * int(2) - int(1)) * self.tail()
    }
}

/// The `n`-independent part of the formula for one monomial `(r, t)` and one `a`.
#[derive(Debug, Clone)]
pub struct XrtPlan {
    r: u32,
    t: u32,
    a: Rational,
    /// coefficient of `n^k` at index `k - 1`
    powers: Vec<Rational>,
    constant: Rational,
    geometric: Rational,
    /// coefficient of `alpha^{(0,i)}` at index `i`
    alpha0: Vec<Rational>,
    /// `(1/a) C(r, ell)` and the `C(t + ell, i)` weights of `alpha^{(1,i)}`, when `delta_ell = 1`
    resonant: Option<(Rational, Vec<Rational>)>,
}

impl XrtPlan {
    pub fn new(r: u32, t: u32, a: &Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let (ri, ti) = (r as i64, t as i64);
        let rt = ri + ti;
        let ell = ell_of(a, t);
        let skip_i = ell.map(|l| ti + l + 1);
        let skip_l = ell;

        let mut powers = Vec::with_capacity(rt as usize);
        for k in 1..=rt {
            let mut c = Rational::zero();
            for i in k..=rt {
                let top = binom(ri, i - ti - 1);
                if Some(i) == skip_i || top.is_zero() {
                    continue;
                }
                let num = top * binom(i, k) * bernoulli((i - k) as usize);
                c += div(num, &(int(i) * (pow2(i - 1) - a)), "power-sum block")?;
            }
            powers.push(c);
        }

        let constant = if r > 0 && t == 0 && !a.is_one() {
            (a - int(1)).recip()
        } else {
            Rational::zero()
        };

        let mut geometric = Rational::one();
        for l in 0..ri {
            if Some(l) != skip_l {
                geometric -= div(binom(ri, l), &(pow2(ti + l) - a), "geometric block")?;
            }
        }

        let mut alpha0 = Vec::with_capacity(rt as usize);
        for i in 0..rt {
            let mut c = pow2(-i) * binom(rt, i) - pow2(1 - i) * binom(ri, i - ti);
            for l in (i - ti + 1).max(0)..ri {
                if Some(l) == skip_l {
                    continue;
                }
                let num = binom(ri, l) * binom(ti + l, i);
                if !num.is_zero() {
                    c -= div(num, &(pow2(ti + l) - a), "alpha block")?;
                }
            }
            alpha0.push(c);
        }

        let resonant = if delta_ell(a, r, t) {
            let l = ell.unwrap();
            let lead = binom(ri, l) / a;
            let weights = (0..ti + l).map(|i| binom(ti + l, i)).collect();
            Some((lead, weights))
        } else {
            None
        };

        Ok(Self { r, t, a: a.clone(), powers, constant, geometric, alpha0, resonant })
    }

    pub fn exponents(&self) -> (u32, u32) {
        (self.r, self.t)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// `x_n^{(r,t)}(a)` at the point `p`, which must carry the same `a`.
    pub fn eval(&self, p: &mut EvalPoint) -> Result<Rational> {
        debug_assert_eq!(p.a, self.a);
        if p.is_one() {
            return Ok(Rational::zero());
        }
        let mut acc = self.constant.clone();
        let mut nk = Rational::one();
        for c in &self.powers {
            nk *= &p.n;
            if !c.is_zero() {
                acc += c * &nk;
            }
        }
        if !self.geometric.is_zero() {
            acc += &self.geometric * p.geometric()?;
        }
        for (i, c) in self.alpha0.iter().enumerate() {
            if !c.is_zero() {
                acc += c * p.alpha(0, i as u32)?;
            }
        }
        if let Some((lead, weights)) = &self.resonant {
            let mut inner = p.weighted_geometric()?;
            for (i, w) in weights.iter().enumerate() {
                inner += w * p.alpha(1, i as u32)?;
            }
            acc += lead * inner;
        }
        Ok(acc)
    }
}

/// `x_n^{(r,t)}(a)`: the solution with toll `ceil(n/2)^r floor(n/2)^t` and `x_1 = 0`.
pub fn x_rt(r: u32, t: u32, n: &BigNat, a: &Rational) -> Result<Rational> {
    XrtPlan::new(r, t, a)?.eval(&mut EvalPoint::new(n, a)?)
}

/// Contribution of the initial condition: `((2a)^q + (2a-1)(n a^q - (2a)^q)) x_1`.
pub fn homogeneous_term(n: &BigNat, a: &Rational, x1: &Rational) -> Result<Rational> {
    Ok(EvalPoint::new(n, a)?.homogeneous_factor() * x1)
}

/// A recurrence with every monomial plan prepared once.
#[derive(Debug, Clone)]
pub struct Solver {
    rec: Recurrence,
    plans: Vec<(Rational, XrtPlan)>,
}

impl Solver {
    pub fn new(rec: &Recurrence) -> Result<Self> {
        let plans = rec
            .poly
            .terms()
            .map(|(r, t, c)| Ok((c.clone(), XrtPlan::new(r, t, &rec.a)?)))
            .collect::<Result<_>>()?;
        Ok(Self { rec: rec.clone(), plans })
    }

    pub fn recurrence(&self) -> &Recurrence {
        &self.rec
    }

    pub fn solve(&self, n: &BigNat) -> Result<Rational> {
        self.solve_at(&mut EvalPoint::new(n, &self.rec.a)?)
    }

    pub fn solve_at(&self, p: &mut EvalPoint) -> Result<Rational> {
        if p.is_one() {
            return Ok(self.rec.x1.clone());
        }
        let mut acc = p.homogeneous_factor() * &self.rec.x1;
        for (c, plan) in &self.plans {
            acc += c * plan.eval(p)?;
        }
        Ok(acc)
    }

    pub fn sequence(&self, n_max: &BigNat) -> Result<Vec<Rational>> {
        let mut out = Vec::new();
        let mut n = BigNat::one();
        while &n <= n_max {
            out.push(self.solve(&n)?);
            n += 1u32;
        }
        Ok(out)
    }
}

pub fn solve(rec: &Recurrence, n: &BigNat) -> Result<Rational> {
    Solver::new(rec)?.solve(n)
}

/// `[x_1, ..., x_{n_max}]`.
pub fn solve_sequence(rec: &Recurrence, n_max: &BigNat) -> Result<Vec<Rational>> {
    if n_max.is_zero() {
        return Err(Error::ZeroIndex);
    }
    Solver::new(rec)?.sequence(n_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;
    use crate::poly::TollPolynomial;

    fn n(v: u64) -> BigNat {
        BigNat::from(v)
    }

    fn rec(a: Rational, poly: &str, x1: Rational) -> Recurrence {
        Recurrence::new(a, poly.parse().unwrap(), x1).unwrap()
    }

    #[test]
    fn second_term_is_one() {
        for a in [int(1), int(-1), ratio(1, 2), int(2), int(4), int(3), ratio(2, 3)] {
            for r in 0..4 {
                for t in 0..4 {
                    assert_eq!(x_rt(r, t, &n(2), &a).unwrap(), int(1), "r={r} t={t} a={a}");
                    assert_eq!(x_rt(r, t, &n(1), &a).unwrap(), int(0));
                }
            }
        }
    }

    #[test]
    fn constant_toll_at_one() {
        for v in 1..100u64 {
            assert_eq!(x_rt(0, 0, &n(v), &int(1)).unwrap(), int(v as i64 - 1));
        }
    }

    #[test]
    fn sackin_from_monomials() {
        for v in 2..200u64 {
            let q = 63 - v.leading_zeros() as i64;
            let expect = int((q + 2) * v as i64 - (1 << (q + 1)));
            let got = x_rt(1, 0, &n(v), &int(1)).unwrap() + x_rt(0, 1, &n(v), &int(1)).unwrap();
            assert_eq!(got, expect, "n = {v}");
        }
    }

    #[test]
    fn homogeneous_examples() {
        assert_eq!(homogeneous_term(&n(1), &ratio(-2, 3), &int(5)).unwrap(), int(5));
        assert_eq!(homogeneous_term(&n(9), &int(1), &ratio(1, 3)).unwrap(), int(3));
        assert_eq!(homogeneous_term(&n(7), &int(2), &int(1)).unwrap(), int(52));
        let h = |v: u64| homogeneous_term(&n(v), &int(2), &int(1)).unwrap();
        assert_eq!(h(7), int(2) * h(4) + int(2) * h(3));
    }

    #[test]
    fn solve_examples() {
        let sq = rec(int(2), "0,1:1;1,0:-1", int(1));
        for v in 1..300u64 {
            assert_eq!(solve(&sq, &n(v)).unwrap(), int((v * v) as i64));
        }
        let sackin = rec(int(1), "1,0:1;0,1:1", int(0));
        assert_eq!(solve(&sackin, &n(7)).unwrap(), int(20));
        assert_eq!(solve(&sackin, &n(1)).unwrap(), int(0));
        let odd = rec(ratio(-2, 7), "3,1:5", ratio(4, 9));
        assert_eq!(solve(&odd, &n(1)).unwrap(), ratio(4, 9));
    }

    #[test]
    fn sequences() {
        let sackin = rec(int(1), "1,0:1;0,1:1", int(0));
        assert_eq!(solve_sequence(&sackin, &n(4)).unwrap(), vec![int(0), int(2), int(5), int(8)]);
        let zero = Recurrence::new(int(3), TollPolynomial::zero(), int(0)).unwrap();
        assert_eq!(solve_sequence(&zero, &n(3)).unwrap(), vec![int(0); 3]);
        let ones = rec(int(1), "0,0:1", int(0));
        assert_eq!(
            solve_sequence(&ones, &n(5)).unwrap(),
            (0..5).map(int).collect::<Vec<_>>()
        );
        assert_eq!(solve_sequence(&ones, &n(0)), Err(Error::ZeroIndex));
    }

    #[test]
    fn huge_square() {
        let sq = rec(int(2), "0,1:1;1,0:-1", int(1));
        let v: BigNat = "1000000007".parse().unwrap();
        assert_eq!(solve(&sq, &v).unwrap(), nat(&(&v * &v)));
    }
}
