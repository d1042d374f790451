//! Extended-precision kernel: reals, exact rationals, Γ, Bernoulli numbers,
//! Pochhammer and q-Pochhammer symbols.

mod bernoulli;
mod gamma;
mod pochhammer;
mod real;

pub use bernoulli::{
    bernoulli, bernoulli_table, bernoulli_with_limit, rational_to_real, Rational,
    DEFAULT_BERNOULLI_MAX,
};
pub use gamma::{gamma, ln_gamma};
pub use pochhammer::{pochhammer, q_pochhammer_finite, q_pochhammer_infinite, QContext};
pub use real::{Precision, Real};

/// `n!` as a real.
pub fn factorial(n: usize, p: Precision) -> Real {
    let mut acc = Real::one(p);
    for k in 2..=n as i64 {
        acc *= k;
    }
    acc
}
