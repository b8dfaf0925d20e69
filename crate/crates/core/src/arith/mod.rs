pub mod bernoulli;
pub mod power_sums;
pub mod rational;

pub use bernoulli::{bernoulli, bernoulli_poly};
pub use power_sums::{faulhaber_sum, t_closed, t_ref};
pub use rational::{
    binomial, format_rational, int, nat, parse_nat, parse_rational, pow, powi, ratio, BigNat,
    Rational,
};
