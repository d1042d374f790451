//! Rising factorials and q-shifted factorials.

use super::{Precision, Real};
use crate::error::{Error, Result};

/// `(a)_n = a (a+1) ⋯ (a+n-1)`.
pub fn pochhammer(a: &Real, n: usize) -> Real {
    let mut acc = Real::one(a.precision());
    let mut f = a.clone();
    for _ in 0..n {
        acc *= &f;
        f += 1;
    }
    acc
}

/// `(z; q)_n = Π_{k<n} (1 - z q^k)`.
pub fn q_pochhammer_finite(z: &Real, q: &Real, n: usize) -> Real {
    let p = z.precision().max(q.precision());
    let mut acc = Real::one(p);
    let mut zq = z.with_precision(p);
    for _ in 0..n {
        acc *= Real::one(p) - &zq;
        zq *= q;
    }
    acc
}

/// `(z; q)_∞`, truncated once `|z q^n| < 10^(-P-10)`.
pub fn q_pochhammer_infinite(z: &Real, q: &Real) -> Result<Real> {
    let ctx = QContext::new(q.clone())?;
    Ok(ctx.infinite(z))
}

/// A validated base `q ∈ (0, 1)` with the truncation rule for infinite products.
#[derive(Debug, Clone)]
pub struct QContext {
    q: Real,
    precision: Precision,
}

impl QContext {
    pub fn new(q: Real) -> Result<Self> {
        let p = q.precision();
        if !(q.is_positive() && q < Real::one(p)) {
            return Err(Error::Domain(format!(
                "q must lie in (0, 1), got {}",
                q.to_decimal(12)
            )));
        }
        Ok(QContext { q, precision: p })
    }

    pub fn q(&self) -> &Real {
        &self.q
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Factor magnitude below which the infinite product is cut.
    pub fn truncation_threshold(&self) -> Real {
        Real::pow10(
            -(self.precision.decimal_digits() as i32) - 10,
            self.precision,
        )
    }

    pub fn finite(&self, z: &Real, n: usize) -> Real {
        q_pochhammer_finite(z, &self.q, n)
    }

    pub fn infinite(&self, z: &Real) -> Real {
        let p = self.precision.max(z.precision()).with_extra_bits(16);
        let tiny = self.truncation_threshold();
        let mut acc = Real::one(p);
        let mut zq = z.with_precision(p);
        // After the cut every remaining factor is within 10^(-P-10) of one and
        // the logarithm of their product is bounded by |z q^n| / (1 - q).
        while zq.abs() >= tiny {
            acc *= Real::one(p) - &zq;
            zq *= &self.q;
        }
        acc.with_precision(self.precision.max(z.precision()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn rising_factorial() {
        assert_eq!(pochhammer(&Real::from_i64(7, p()), 0), Real::one(p()));
        assert_eq!(pochhammer(&Real::one(p()), 5), Real::from_i64(120, p()));
        assert_eq!(
            pochhammer(&Real::from_ratio(3, 2, p()), 3),
            Real::from_ratio(105, 8, p())
        );
    }

    #[test]
    fn finite_q_products() {
        let h = Real::from_ratio(1, 2, p());
        assert_eq!(q_pochhammer_finite(&h, &h, 0), Real::one(p()));
        assert_eq!(q_pochhammer_finite(&h, &h, 2), Real::from_ratio(3, 8, p()));
        let v = q_pochhammer_finite(
            &Real::parse("0.3", p()).unwrap(),
            &Real::parse("0.7", p()).unwrap(),
            5,
        );
        let want = Real::parse("0.392689198434883", p()).unwrap();
        assert!(v.rel_close(&want, &p().tolerance(5)));
    }

    #[test]
    fn infinite_needs_valid_base() {
        let z = Real::from_ratio(1, 3, p());
        assert!(q_pochhammer_infinite(&z, &Real::one(p())).is_err());
        assert!(q_pochhammer_infinite(&z, &Real::zero(p())).is_err());
        let one = q_pochhammer_infinite(&Real::zero(p()), &z).unwrap();
        assert_eq!(one, Real::one(p()));
    }
}
