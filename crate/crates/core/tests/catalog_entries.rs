mod common;

use common::n;
use dnc_core::arith::{int, ratio, Rational};
use dnc_core::catalog::{bisection_sequence, catalog_eval, eval_univariate, stephan_transform, ENTRIES};
use dnc_core::oracle::MemoTable;
use dnc_core::solver::Solver;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

#[test]
fn closed_forms_match_solver_and_oracle() {
    for e in ENTRIES {
        let rec = e.recurrence();
        let solver = Solver::new(&rec).unwrap();
        let mut memo = MemoTable::new(&rec);
        for v in 1..=1024u64 {
            let c = e.closed_form(&n(v)).unwrap();
            assert_eq!(c, solver.solve(&n(v)).unwrap(), "{} n={v}", e.name);
            assert_eq!(c, memo.get(&n(v)).unwrap(), "{} n={v}", e.name);
        }
    }
}

#[test]
fn a006583_cross_identity() {
    for v in 1..=1024i64 {
        let lhs = catalog_eval("a006583", &n(v as u64)).unwrap();
        let rhs = int((v - 1) * (v - 2)) - catalog_eval("a006581", &n(v as u64)).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn published_prefixes() {
    // leading OEIS terms
    let terms = |name: &str, len: u64| -> Vec<Rational> {
        (1..=len).map(|v| catalog_eval(name, &n(v)).unwrap()).collect()
    };
    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<_>>();
    assert_eq!(terms("sackin", 10), ints(&[0, 2, 5, 8, 12, 16, 20, 24, 29, 34]));
    assert_eq!(terms("colless", 8), ints(&[0, 0, 1, 0, 2, 2, 2, 0]));
    assert_eq!(terms("lebesgue", 4), vec![int(1), int(1), ratio(3, 2), int(1)]);
}

fn poly() -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec((-5i64..6, 1i64..4), 0..4)
        .prop_map(|v| v.into_iter().map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stephan_respects_both_rules(c in (-3i64..4).prop_filter("c != 0", |c| *c != 0), p in poly(), q in poly(), a0 in -4i64..5) {
        let c = int(c);
        let rec = stephan_transform(&c, &p, &q, &int(a0)).unwrap();
        let solver = Solver::new(&rec).unwrap();
        let a: Vec<Rational> = (1..=514u64).map(|v| solver.solve(&n(v)).unwrap()).collect();
        for m in 1..=256usize {
            let even = &c * &a[m] + &c * &a[m - 1] + eval_univariate(&p, &int(m as i64));
            prop_assert_eq!(&a[2 * m], &even);
        }
        for m in 0..=256usize {
            let odd = int(2) * &c * &a[m] + eval_univariate(&q, &int(m as i64));
            prop_assert_eq!(&a[2 * m + 1], &odd);
        }
        prop_assert_eq!(bisection_sequence(&c, &p, &q, &int(a0), 514), a);
    }
}

#[test]
fn stephan_shift_for_catalog_entries() {
    // A005536 from its bisection rules, read through x_n = a(n-1)
    let one = vec![Rational::zero(), int(1)];
    let seq = bisection_sequence(&int(-1), &one, &[int(1), int(1)], &int(0), 200);
    for (k, v) in seq.iter().enumerate() {
        assert_eq!(*v, catalog_eval("a005536", &n(k as u64 + 1)).unwrap());
    }
}
