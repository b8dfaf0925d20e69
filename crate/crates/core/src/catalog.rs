//! Named recurrences with published closed forms, and the transformation of
//! OEIS-style bisection recurrences into a single halving recurrence.

use num_traits::Zero;

use crate::arith::rational::{binom, int, nat, parse_rational, pow, pow2, ratio, BigNat, Rational};
use crate::binary::BinDecomp;
use crate::error::{Error, Result};
use crate::poly::{Recurrence, TollPolynomial};

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub oeis_id: Option<&'static str>,
    pub description: &'static str,
    pub a: &'static str,
    pub poly: &'static str,
    pub x1: &'static str,
    /// The OEIS term `a(n - shift)` equals `x_n`.
    pub shift: u32,
    closed_form: fn(&BinDecomp) -> Rational,
}

impl CatalogEntry {
    pub fn recurrence(&self) -> Recurrence {
        Recurrence::new(
            parse_rational(self.a).unwrap(),
            self.poly.parse().unwrap(),
            parse_rational(self.x1).unwrap(),
        )
        .unwrap()
    }

    pub fn closed_form(&self, n: &BigNat) -> Result<Rational> {
        Ok((self.closed_form)(&BinDecomp::new(n)?))
    }
}

fn q(b: &BinDecomp, i: usize) -> i64 {
    b.q(i) as i64
}

fn sackin(b: &BinDecomp) -> Rational {
    let top = b.top() as i64;
    int(top + 2) * nat(b.n()) - pow2(top + 1)
}

fn colless(b: &BinDecomp) -> Rational {
    let s = b.s() as i64;
    (1..b.s()).fold(Rational::zero(), |acc, i| {
        acc + pow2(q(b, i)) * int(q(b, b.s()) - q(b, i) - 2 * (s - i as i64 - 1))
    })
}

fn nsquared(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    &n * &n
}

fn lebesgue(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    (1..=b.s()).fold(int(b.s() as i64), |acc, i| {
        acc - pow2(-q(b, i)) * (&n - b.m_rat(i))
    })
}

fn neg_one_pow(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn a005536(b: &BinDecomp) -> Rational {
    let s = b.s();
    let mut acc = Rational::zero();
    for i in 1..=s {
        let tail: i64 = (i + 1..=s).map(|j| neg_one_pow(q(b, j))).sum();
        acc += pow2(q(b, i)) * int(1 - neg_one_pow(q(b, i)) + 4 * tail);
    }
    acc / int(4)
}

fn a087733(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    let s = b.s();
    let mut acc = &n * &n / int(6);
    for i in 1..=s {
        acc -= pow(&int(-2), b.q(i)) / int(6);
    }
    for i in 1..s {
        let tail: i64 = (i + 1..=s).map(|j| neg_one_pow(q(b, j))).sum();
        acc += ratio(2, 3) * pow2(q(b, i)) * int(tail);
    }
    acc
}

fn cophenetic(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    let mut acc = &n * (&n - int(1)) / int(2) - int(b.s() as i64) * &n;
    for i in 1..=b.s() {
        acc -= pow2(q(b, i) - 1) * int(q(b, i) - 2 * i as i64);
    }
    acc
}

fn rqi(b: &BinDecomp) -> Rational {
    let n = b.n().clone();
    let nr = nat(&n);
    let mut sum_a = BigNat::zero();
    let mut sum_b = BigNat::zero();
    for i in 1..=b.s() {
        // M_i 2^{-q_i} = floor(n / 2^{q_i})
        let f = &n >> b.q(i);
        sum_a += (&f + 1u32) * (&f * 3u32 + 1u32);
        sum_b += b.m(i) * (&f + 1u32) * (&f + 1u32);
    }
    let poly = int(9) * pow(&nr, 4) - int(42) * pow(&nr, 3) + int(63) * pow(&nr, 2) - int(6) * &nr;
    (poly + int(6) * &nr * nat(&sum_a) - int(18) * nat(&sum_b)) / int(504)
}

fn a006581(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    let mut acc = Rational::zero();
    for i in 1..=b.s() {
        let p = pow2(q(b, i));
        acc += int(q(b, i)) * &p * (&n - &p - int(2) * b.m_rat(i + 1)) / int(2);
        acc -= (&n - b.m_rat(i)) * b.m_rat(i + 1);
    }
    acc
}

fn a006583(b: &BinDecomp) -> Rational {
    let n = nat(b.n());
    int(2) * (&n - int(1)) * (&n - int(2)) / int(2) - a006581(b)
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "sackin",
        oeis_id: Some("A003314"),
        description: "minimum total Sackin index of a bifurcating tree with n leaves",
        a: "1",
        poly: "1,0:1;0,1:1",
        x1: "0",
        shift: 0,
        closed_form: sackin,
    },
    CatalogEntry {
        name: "colless",
        oeis_id: Some("A296062"),
        description: "minimum Colless index of a bifurcating tree with n leaves",
        a: "1",
        poly: "1,0:1;0,1:-1",
        x1: "0",
        shift: 0,
        closed_form: colless,
    },
    CatalogEntry {
        name: "nsquared",
        oeis_id: Some("A000290"),
        description: "the squares n^2",
        a: "2",
        poly: "0,1:1;1,0:-1",
        x1: "1",
        shift: 0,
        closed_form: nsquared,
    },
    CatalogEntry {
        name: "lebesgue",
        oeis_id: None,
        description: "Lebesgue constants of the Walsh system",
        a: "1/2",
        poly: "1,0:1/2;0,1:-1/2",
        x1: "1",
        shift: 0,
        closed_form: lebesgue,
    },
    CatalogEntry {
        name: "a005536",
        oeis_id: Some("A005536"),
        description: "A005536, as x_n = a(n-1)",
        a: "-1",
        poly: "0,1:1",
        x1: "0",
        shift: 1,
        closed_form: a005536,
    },
    CatalogEntry {
        name: "a087733",
        oeis_id: Some("A087733"),
        description: "A087733, as x_n = a(n-1)",
        a: "-1",
        poly: "1,1:1",
        x1: "0",
        shift: 1,
        closed_form: a087733,
    },
    CatalogEntry {
        name: "cophenetic",
        oeis_id: Some("A174605"),
        description: "minimum total cophenetic index of a bifurcating tree with n leaves",
        a: "1",
        poly: "2,0:1/2;1,0:-1/2;0,2:1/2;0,1:-1/2",
        x1: "0",
        shift: 0,
        closed_form: cophenetic,
    },
    CatalogEntry {
        name: "rqi",
        oeis_id: Some("A300445"),
        description: "maximum rooted quartet index of a bifurcating tree with n leaves",
        a: "1",
        poly: "1,1:1/4;2,1:-1/4;1,2:-1/4;2,2:1/4",
        x1: "0",
        shift: 0,
        closed_form: rqi,
    },
    CatalogEntry {
        name: "a006581",
        oeis_id: Some("A006581"),
        description: "A006581, as x_n = a(n-1)",
        a: "2",
        poly: "1,1:1;0,2:-1",
        x1: "0",
        shift: 1,
        closed_form: a006581,
    },
    CatalogEntry {
        name: "a006583",
        oeis_id: Some("A006583"),
        description: "A006583, as x_n = a(n-1)",
        a: "2",
        poly: "0,1:4;1,0:2;0,0:-6;1,1:-1;0,2:1",
        x1: "0",
        shift: 1,
        closed_form: a006583,
    },
];

pub fn names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

pub fn lookup(name: &str) -> Result<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry {
        name: name.to_string(),
        available: names().join(", "),
    })
}

pub fn catalog_eval(name: &str, n: &BigNat) -> Result<Rational> {
    lookup(name)?.closed_form(n)
}

/// Univariate polynomial as coefficients of `1, z, z^2, ...`.
pub type Univariate = Vec<Rational>;

pub fn eval_univariate(p: &[Rational], z: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * z + c)
}

/// Turns `a(2n) = C a(n) + C a(n-1) + P(n)`, `a(2n+1) = 2C a(n) + Q(n)` into the
/// halving recurrence for `x_n = a(n-1)`, whose toll is
/// `Q(y-1) + (x-y)(P(y) - Q(y-1))` with `x = ceil(n/2)`, `y = floor(n/2)`.
/// The caller supplies `x_1 = a(0)`.
pub fn stephan_transform(c: &Rational, p: &[Rational], q: &[Rational], x1: &Rational) -> Result<Recurrence> {
    // Q(y - 1) expanded in powers of y
    let mut q_shift: Univariate = vec![Rational::zero(); q.len()];
    for (k, qk) in q.iter().enumerate() {
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { int(1) } else { int(-1) };
            q_shift[j] += qk * binom(k as i64, j as i64) * sign;
        }
    }
    let len = p.len().max(q_shift.len());
    let diff: Univariate = (0..len)
        .map(|j| {
            p.get(j).cloned().unwrap_or_else(Rational::zero)
                - q_shift.get(j).cloned().unwrap_or_else(Rational::zero)
        })
        .collect();
    let mut toll = TollPolynomial::zero();
    for (j, c) in q_shift.iter().enumerate() {
        toll.add_term(0, j as u32, c.clone());
    }
    for (j, d) in diff.iter().enumerate() {
        toll.add_term(1, j as u32, d.clone());
        toll.add_term(0, j as u32 + 1, -d.clone());
    }
    Recurrence::new(c.clone(), toll, x1.clone())
}

/// `a(0), ..., a(len-1)` straight from the two bisection rules. Test oracle.
pub fn bisection_sequence(c: &Rational, p: &[Rational], q: &[Rational], a0: &Rational, len: usize) -> Vec<Rational> {
    let mut a: Vec<Rational> = Vec::with_capacity(len);
    for k in 0..len {
        let v = if k == 0 {
            a0.clone()
        } else if k % 2 == 0 {
            let m = k / 2;
            c * &a[m] + c * &a[m - 1] + eval_univariate(p, &int(m as i64))
        } else {
            let m = (k - 1) / 2;
            int(2) * c * &a[m] + eval_univariate(q, &int(m as i64))
        };
        a.push(v);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn n(v: u64) -> BigNat {
        BigNat::from(v)
    }

    #[test]
    fn spot_values() {
        assert_eq!(catalog_eval("sackin", &n(7)).unwrap(), int(20));
        assert_eq!(catalog_eval("nsquared", &n(13)).unwrap(), int(169));
        assert_eq!(catalog_eval("lebesgue", &n(3)).unwrap(), ratio(3, 2));
        assert_eq!(catalog_eval("colless", &n(1)).unwrap(), int(0));
        assert_eq!(catalog_eval("sackin", &n(1)).unwrap(), int(0));
    }

    #[test]
    fn unknown_name_lists_entries() {
        match catalog_eval("nope", &n(3)) {
            Err(Error::UnknownEntry { name, available }) => {
                assert_eq!(name, "nope");
                assert!(available.contains("sackin") && available.contains("a006583"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn entries_parse() {
        assert_eq!(ENTRIES.len(), 10);
        for e in ENTRIES {
            let rec = e.recurrence();
            assert!(!rec.a.is_zero());
            assert!(rec.poly.terms().count() > 0, "{}", e.name);
        }
    }

    #[test]
    fn stephan_examples() {
        let one = || vec![Rational::zero(), Rational::one()];
        let rec = stephan_transform(&int(1), &[int(5)], &[int(5)], &int(0)).unwrap();
        assert_eq!(rec.poly, TollPolynomial::monomial(0, 0, int(5)));
        let rec = stephan_transform(&int(2), &[int(0), int(0), int(1)], &[], &int(0)).unwrap();
        assert_eq!(rec.poly, TollPolynomial::from_terms([((1, 2), int(1)), ((0, 3), int(-1))]));
        // P(n) = n, Q(n) = n + 1 reproduces the A005536 toll floor(n/2)
        let rec = stephan_transform(&int(-1), &one(), &[int(1), int(1)], &int(0)).unwrap();
        assert_eq!(rec, lookup("a005536").unwrap().recurrence());
        // P = Q = n gives ceil(n/2) - 1
        let rec = stephan_transform(&int(-1), &one(), &one(), &int(0)).unwrap();
        assert_eq!(rec.poly, TollPolynomial::from_terms([((1, 0), int(1)), ((0, 0), int(-1))]));
    }
}
