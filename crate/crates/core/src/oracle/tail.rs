//! Estimates of `Σ_{k>K} λ_k^n` beyond the last located zero.

use std::fmt;

use super::{ExponentMode, ZeroList};
use crate::precision::Real;
use crate::zeta::Kernel;

/// How the zeros beyond the list are modelled.
#[derive(Debug, Clone, PartialEq)]
pub enum TailModel {
    /// The list is complete.
    None,
    /// Spacing between consecutive zeros tends monotonically to `π`.
    Bessel,
    /// `i_k ≥ 3^{1/3} (3π(4k-1)/8)^{2/3}`, with the ratio to that bound
    /// decreasing towards one.
    Airy,
    /// Zeros grow geometrically; `λ_{k+1}/λ_k → q^2`.
    Geometric { q: Real },
    /// Smoothed zero counting function of a `Ξ` function.
    Xi(Kernel),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Exact,
    AsymptoticDensity,
    GeometricRatio,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::AsymptoticDensity => "asymptotic-density",
            BoundKind::GeometricRatio => "geometric-ratio",
        })
    }
}

/// Interval `[lower, upper]` for the omitted tail; `value` is its midpoint.
#[derive(Debug, Clone)]
pub struct TailEstimate {
    pub lower: Real,
    pub upper: Real,
    pub value: Real,
    pub bound_kind: BoundKind,
    pub confidence_note: String,
}

impl TailEstimate {
    fn from_bounds(
        lower: Real,
        upper: Real,
        bound_kind: BoundKind,
        note: impl Into<String>,
    ) -> Self {
        let (lower, upper) = if lower <= upper {
            (lower, upper)
        } else {
            (upper, lower)
        };
        let value = (&lower + &upper) / 2;
        TailEstimate {
            lower,
            upper,
            value,
            bound_kind,
            confidence_note: note.into(),
        }
    }

    pub fn half_width(&self) -> Real {
        (&self.upper - &self.lower) / 2
    }
}

fn exponent(mode: ExponentMode, n: usize) -> i64 {
    match mode {
        ExponentMode::Squared => 2 * n as i64,
        ExponentMode::Plain => n as i64,
    }
}

pub(super) fn estimate(zl: &ZeroList, n: usize) -> TailEstimate {
    let p = zl.precision();
    let zero = || Real::zero(p);
    let k = zl.count();
    if k == 0 || matches!(zl.tail_model(), TailModel::None) {
        return TailEstimate::from_bounds(zero(), zero(), BoundKind::Exact, "no omitted zeros");
    }
    let e = exponent(zl.mode(), n);
    let last = &zl.zeros()[k - 1];
    match zl.tail_model() {
        TailModel::None => unreachable!(),
        TailModel::Bessel => {
            let pi = Real::pi(p);
            let d = if k >= 2 {
                last - &zl.zeros()[k - 2]
            } else {
                pi.clone()
            };
            let (dmin, dmax) = (d.min(&pi), d.max(&pi));
            let em1 = Real::from_i64(e - 1, p);
            let upper = last.powi(1 - e) / (&em1 * &dmin);
            let lower = (last + &dmax).powi(1 - e) / (&em1 * &dmax);
            TailEstimate::from_bounds(
                lower,
                upper,
                BoundKind::AsymptoticDensity,
                "zeros beyond the list spaced between the last observed spacing and π",
            )
        }
        TailModel::Airy => {
            let pi = Real::pi(p);
            let c = Real::from_i64(3, p).cbrt() * (&pi * 3 / 8).powi(2).cbrt();
            let t = |idx: &Real| &c * (idx * 4 - 1).powi(2).cbrt();
            let kk = Real::from_i64(k as i64, p);
            let rho = (last / t(&kk)).max(&Real::one(p));
            // ∫_a^∞ (C (4x-1)^{2/3})^{-e} dx
            let expo = Real::from_ratio(3 - 2 * e, 3, p);
            let integral = |a: &Real| {
                c.powi(-e) * (a * 4 - 1).pow(&expo) / (Real::from_ratio(2 * e - 3, 3, p) * 4)
            };
            let upper = integral(&(&kk + Real::from_ratio(1, 2, p)));
            let lower = integral(&(&kk + 1)) * rho.powi(-e);
            TailEstimate::from_bounds(
                lower,
                upper,
                BoundKind::AsymptoticDensity,
                format!(
                    "i_k between the lower bound 3^(1/3)(3π(4k-1)/8)^(2/3) and {} times it (last observed ratio)",
                    rho.to_decimal(12)
                ),
            )
        }
        TailModel::Geometric { q } => {
            let lam = |x: &Real| zl.lambda_power(x, 1);
            let q2 = q * q;
            let observed = if k >= 2 {
                lam(last) / lam(&zl.zeros()[k - 2])
            } else {
                q2.clone()
            };
            let up = observed.max(&q2);
            let lo = observed.min(&q2);
            let lk = lam(last).powi(n as i64);
            let geo = |r: &Real| {
                let rn = r.powi(n as i64);
                &lk * &rn / (Real::one(p) - &rn)
            };
            TailEstimate::from_bounds(
                geo(&lo),
                geo(&up),
                BoundKind::GeometricRatio,
                format!(
                    "successive ratios assumed between q^2 and the last observed {}",
                    observed.to_decimal(12)
                ),
            )
        }
        TailModel::Xi(kernel) => {
            let tf = last.to_f64();
            let pi2 = Real::pi(p) * 2;
            let c = Real::from_i64(kernel.modulus() as i64, p) / &pi2;
            let em1 = Real::from_i64(e - 1, p);
            // ∫_T^∞ t^{-e} ln(cT)/(2π) dt
            let main = last.powi(1 - e) * ((&c * last).ln() / &em1 + em1.powi(-2)) / &pi2;
            let excess = Real::from_f64(kernel.zero_count_estimate(tf) - k as f64, p);
            let value = main + excess * last.powi(-e);
            let half = last.powi(-e) * 2;
            TailEstimate::from_bounds(
                &value - &half,
                &value + &half,
                BoundKind::AsymptoticDensity,
                "smoothed zero count; the fluctuation |S(t)| is assumed below 2 (heuristic)",
            )
        }
    }
}
