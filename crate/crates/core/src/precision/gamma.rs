//! Euler's gamma function at arbitrary working precision.
//!
//! For positive arguments the value is shifted into `[1, 2)` by the
//! functional equation and then obtained from the convergent expansion of the
//! lower incomplete gamma function,
//!
//! ```text
//! γ(y, N) = N^y e^{-N} Σ_{k≥0} N^k / (y (y+1) ⋯ (y+k)),
//! ```
//!
//! with `N` large enough that the neglected `Γ(y, N) ≤ 2 N e^{-N}` sits
//! below the working precision. All series terms are positive, so no digits
//! are lost to cancellation. Negative non-integers go through reflection.

use super::{Precision, Real};
use crate::error::{Error, Result};

pub fn gamma(x: &Real) -> Result<Real> {
    let p = x.precision();
    check_pole(x)?;
    if x.is_positive() {
        return Ok(gamma_positive(x).with_precision(p));
    }
    // Γ(x) Γ(1-x) = π / sin(πx)
    let work = p.with_extra_bits(32);
    let xw = x.with_precision(work);
    let one_minus = Real::one(work) - &xw;
    let pi = Real::pi(work);
    let s = (&pi * &xw).sin();
    let g = gamma_positive(&one_minus);
    Ok((pi / (s * g)).with_precision(p))
}

/// `ln |Γ(x)|`.
pub fn ln_gamma(x: &Real) -> Result<Real> {
    Ok(gamma(x)?.abs().ln())
}

fn check_pole(x: &Real) -> Result<()> {
    if x.is_positive() {
        return Ok(());
    }
    let n = x.round();
    let half = -(x.precision().decimal_digits() as i32) / 2;
    let near = (x - &n).abs() <= Real::pow10(half, x.precision());
    if near {
        return Err(Error::Pole { x: x.to_f64() });
    }
    Ok(())
}

fn gamma_positive(x: &Real) -> Real {
    let work = x.precision().with_extra_bits(32);
    let mut y = x.with_precision(work);
    let one = Real::one(work);
    let two = Real::from_i64(2, work);

    // Γ(x) = Γ(y) * up / down with y in [1, 2)
    let mut up = Real::one(work);
    let mut down = Real::one(work);
    while y < one {
        down *= &y;
        y += 1;
    }
    while y >= two {
        y -= 1;
        up *= &y;
    }
    incomplete_lower(&y, work) * up / down
}

/// Smallest integer `N` with `2 N e^{-N}` below `2^-(bits+10)`.
fn cutoff(bits: usize) -> u64 {
    let target = -((bits + 10) as f64) * std::f64::consts::LN_2;
    let mut n = ((bits + 10) as f64 * std::f64::consts::LN_2)
        .ceil()
        .max(4.0);
    while (2.0 * n).ln() - n > target {
        n += 1.0;
    }
    n as u64
}

/// γ(y, N) for `y` in `[1, 2)`; equals Γ(y) to working precision.
fn incomplete_lower(y: &Real, p: Precision) -> Real {
    let n_cut = cutoff(p.bits());
    let n = Real::from_u64(n_cut, p);
    let threshold_exp = -(p.bits() as i64) - 8;

    let mut term = y.recip();
    let mut sum = term.clone();
    let mut k: u64 = 0;
    loop {
        k += 1;
        term = term * &n / (y + &Real::from_u64(k, p));
        sum += &term;
        if k >= 2 * n_cut {
            let small = match (term.exponent2(), sum.exponent2()) {
                (Some(te), Some(se)) => te - se < threshold_exp,
                _ => true,
            };
            if small {
                break;
            }
        }
    }
    let prefactor = (y * &n.ln() - &n).exp();
    sum * prefactor
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn factorials() {
        let mut fact = Real::one(p());
        for n in 1..=10i64 {
            let g = gamma(&Real::from_i64(n, p())).unwrap();
            assert!(g.rel_close(&fact, &p().tolerance(0)), "Γ({n}) = {g}");
            fact *= n;
        }
    }

    #[test]
    fn half_integer() {
        let g = gamma(&Real::from_ratio(1, 2, p())).unwrap();
        let want = Real::pi(p()).sqrt();
        assert!(g.rel_close(&want, &p().tolerance(5)));
        // Γ(-1/2) = -2 √π
        let g = gamma(&Real::from_ratio(-1, 2, p())).unwrap();
        assert!(g.rel_close(&(want * -2), &p().tolerance(5)));
    }

    #[test]
    fn poles_rejected() {
        for x in [0i64, -1, -7] {
            assert!(matches!(
                gamma(&Real::from_i64(x, p())),
                Err(Error::Pole { .. })
            ));
        }
        let near = Real::from_i64(-3, p()) + Real::pow10(-40, p());
        assert!(matches!(gamma(&near), Err(Error::Pole { .. })));
        let fine = Real::from_i64(-3, p()) + Real::pow10(-10, p());
        assert!(gamma(&fine).is_ok());
    }

    #[test]
    fn ln_gamma_matches() {
        let x = Real::from_ratio(37, 3, p());
        let lg = ln_gamma(&x).unwrap();
        let g = gamma(&x).unwrap();
        assert!(lg.exp().rel_close(&g, &p().tolerance(8)));
    }

    #[test]
    fn scales_with_precision() {
        let hi = Precision::digits(120);
        let g = gamma(&Real::from_ratio(1, 2, hi)).unwrap();
        assert!(g.rel_close(&Real::pi(hi).sqrt(), &hi.tolerance(5)));
    }
}
