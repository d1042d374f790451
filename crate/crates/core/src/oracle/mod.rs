//! Independent checks: locate the zeros themselves and sum their powers.
//!
//! Zeros are isolated by sign changes and refined by bisection only. Every
//! reported zero keeps its final bracket, so a truncated power sum carries
//! both the uncertainty of the zeros and an estimate of the omitted tail.

mod eval;
mod finders;
mod tail;

pub use eval::{AiryFn, BesselFn, QAiryFn, QBesselFn, SeriesFunction, SignEvaluator, Signed};
pub use finders::{
    airy_zeros, bessel_zeros, dirichlet_zeros, qairy_zeros, qbessel_zeros, xi_zeros,
    xi_zeros_kernel, AIRY_MAX_ZEROS, BESSEL_MAX_ZEROS, XI_MAX_ZEROS,
};
pub use tail::{BoundKind, TailEstimate, TailModel};

use crate::newton::Family;
use crate::precision::{Precision, Real};

/// Whether `λ_k` is the reciprocal of the zero or of its square.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExponentMode {
    Squared,
    Plain,
}

/// Zeros in increasing order, each with a bracket that carries a verified
/// sign change.
#[derive(Debug, Clone)]
pub struct ZeroList {
    family: Family,
    zeros: Vec<Real>,
    brackets: Vec<(Real, Real)>,
    residuals: Vec<Real>,
    mode: ExponentMode,
    tail: TailModel,
    precision: Precision,
}

impl ZeroList {
    pub(crate) fn new(
        family: Family,
        mode: ExponentMode,
        tail: TailModel,
        precision: Precision,
    ) -> Self {
        ZeroList {
            family,
            zeros: Vec::new(),
            brackets: Vec::new(),
            residuals: Vec::new(),
            mode,
            tail,
            precision,
        }
    }

    pub(crate) fn push(&mut self, lo: Real, hi: Real, residual: Real) {
        let mid = ((&lo + &hi) / 2).with_precision(self.precision);
        self.zeros.push(mid);
        self.brackets.push((lo, hi));
        self.residuals.push(residual);
    }

    /// A list from explicit values with degenerate brackets, for tests and
    /// for callers with zeros known in closed form.
    pub fn from_values(
        family: Family,
        mode: ExponentMode,
        tail: TailModel,
        zeros: Vec<Real>,
    ) -> Self {
        let precision = zeros.first().map(|z| z.precision()).unwrap_or_default();
        let mut zl = ZeroList::new(family, mode, tail, precision);
        for z in zeros {
            zl.push(z.clone(), z, Real::zero(precision));
        }
        zl
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn zeros(&self) -> &[Real] {
        &self.zeros
    }

    pub fn brackets(&self) -> &[(Real, Real)] {
        &self.brackets
    }

    /// `|f|` at each reported zero, at the evaluation precision.
    pub fn residuals(&self) -> &[Real] {
        &self.residuals
    }

    pub fn count(&self) -> usize {
        self.zeros.len()
    }

    pub fn mode(&self) -> ExponentMode {
        self.mode
    }

    pub fn tail_model(&self) -> &TailModel {
        &self.tail
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// `λ^n` for a zero `x`: `x^{-2n}` or `x^{-n}`.
    pub fn lambda_power(&self, x: &Real, n: usize) -> Real {
        let e = match self.mode {
            ExponentMode::Squared => 2 * n as i64,
            ExponentMode::Plain => n as i64,
        };
        x.powi(-e)
    }

    /// Tail estimate for `Σ_{k>K} λ_k^n` from this list's model.
    pub fn tail(&self, n: usize) -> TailEstimate {
        tail::estimate(self, n)
    }
}

/// A truncated power sum with its uncertainty.
#[derive(Debug, Clone)]
pub struct PowerSumInterval {
    /// `Σ_{k≤K} λ_k^n` at the reported zeros.
    pub partial: Real,
    /// `partial` plus the tail estimate.
    pub estimate: Real,
    /// Half-width of the interval around `estimate`: the tail uncertainty
    /// plus the effect of the zero brackets.
    pub error_bound: Real,
}

impl PowerSumInterval {
    pub fn lower(&self) -> Real {
        &self.estimate - &self.error_bound
    }

    pub fn upper(&self) -> Real {
        &self.estimate + &self.error_bound
    }

    pub fn contains(&self, x: &Real) -> bool {
        (x - &self.estimate).abs() <= self.error_bound
    }
}

/// `Σ_{k≤K} λ_k^n` over the list, completed by `tail`.
pub fn truncated_power_sum(
    zl: &ZeroList,
    n: usize,
    mode: ExponentMode,
    tail: &TailEstimate,
) -> PowerSumInterval {
    assert!(n >= 1, "power sums start at n = 1");
    let p = zl.precision();
    let e = match mode {
        ExponentMode::Squared => 2 * n as i64,
        ExponentMode::Plain => n as i64,
    };
    let mut partial = Real::zero(p);
    let mut spread = Real::zero(p);
    for (z, (lo, hi)) in zl.zeros().iter().zip(zl.brackets()) {
        partial += z.powi(-e);
        spread += (lo.powi(-e) - hi.powi(-e)).abs();
    }
    let estimate = &partial + &tail.value;
    let error_bound = tail.half_width() + spread;
    PowerSumInterval {
        partial,
        estimate,
        error_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_zero_sum() {
        let p = Precision::default();
        let z = Real::from_i64(3, p);
        let zl = ZeroList::from_values(
            Family::Finite,
            ExponentMode::Squared,
            TailModel::None,
            vec![z],
        );
        let t = zl.tail(1);
        let s = truncated_power_sum(&zl, 1, ExponentMode::Squared, &t);
        assert_eq!(s.estimate, Real::from_ratio(1, 9, p));
        assert!(s.error_bound.is_zero());
        let s = truncated_power_sum(&zl, 2, ExponentMode::Plain, &t);
        assert_eq!(s.partial, Real::from_ratio(1, 9, p));
    }
}
