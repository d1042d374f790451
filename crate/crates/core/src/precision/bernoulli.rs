//! Exact Bernoulli numbers (convention `B_1 = -1/2`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Precision, Real};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub const DEFAULT_BERNOULLI_MAX: usize = 64;

pub fn bernoulli(k: usize) -> Result<Rational> {
    bernoulli_with_limit(k, DEFAULT_BERNOULLI_MAX)
}

pub fn bernoulli_with_limit(k: usize, max: usize) -> Result<Rational> {
    if k > max {
        return Err(Error::LimitExceeded { requested: k, max });
    }
    Ok(bernoulli_table(k).pop().expect("non-empty table"))
}

/// `B_0 ..= B_n` from `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
pub fn bernoulli_table(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    // binomial row C(m+1, 0..=m+1), starting at m = 1
    let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::from(2), BigInt::one()];
    for m in 1..=n {
        if m >= 3 && m % 2 == 1 {
            b.push(Rational::zero());
        } else {
            let mut acc = Rational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += Rational::from_integer(row[j].clone()) * bj;
                }
            }
            b.push(-acc / Rational::from_integer(BigInt::from(m + 1)));
        }
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    b
}

pub fn rational_to_real(r: &Rational, p: Precision) -> Real {
    let num = Real::parse(&r.numer().to_string(), p).expect("integer literal");
    let den = Real::parse(&r.denom().to_string(), p).expect("integer literal");
    num / den
}
