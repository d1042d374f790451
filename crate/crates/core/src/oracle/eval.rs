//! Sign-reliable evaluation of the defining series on the real line.
//!
//! Each function is a power series whose terms grow enormously before they
//! decay, so its sum cancels. [`SeriesFunction::sum`] returns the sum together
//! with `Σ |term|`; the rounding error is a small multiple of
//! `Σ |term| · 2^{-bits}`, and the sign is trusted only when the sum clears
//! that bound. Otherwise the working precision grows, up to a fixed budget.

use std::cell::RefCell;

use crate::error::{Error, Result};
use crate::precision::{gamma, Precision, Real};

/// A real entire function given by a power series, evaluated on `x > 0`.
pub trait SeriesFunction {
    /// The sum and `Σ |term|` at working precision `w`.
    fn sum(&self, x: &Real, w: Precision) -> (Real, Real);

    /// `log10` of the largest term at `x`, in `f64`.
    fn log10_peak(&self, x: f64) -> f64;
}

/// Cached per-index multipliers, rebuilt when the working precision changes.
#[derive(Debug, Default)]
struct Multipliers {
    cache: RefCell<Option<(usize, Vec<Real>)>>,
}

impl Multipliers {
    fn with<T>(
        &self,
        w: Precision,
        need: usize,
        make: impl Fn(usize, Precision) -> Real,
        f: impl FnOnce(&[Real]) -> T,
    ) -> T {
        let mut slot = self.cache.borrow_mut();
        let fresh = !matches!(&*slot, Some((bits, _)) if *bits == w.bits());
        if fresh {
            *slot = Some((w.bits(), Vec::new()));
        }
        let v = &mut slot.as_mut().expect("initialised").1;
        while v.len() < need {
            let k = v.len();
            v.push(make(k, w));
        }
        f(v)
    }
}

impl Clone for Multipliers {
    fn clone(&self) -> Self {
        Multipliers::default()
    }
}

/// `Σ_k c_k u^k` where `c_{k+1} = c_k · m_k`, with `m_k` from `mult`.
fn ratio_series(
    u: &Real,
    w: Precision,
    mults: &Multipliers,
    make: impl Fn(usize, Precision) -> Real,
) -> (Real, Real) {
    let tiny_rel = Real::pow10(-(w.decimal_digits() as i32) - 10, w);
    let mut acc = Real::zero(w);
    let mut abs = Real::zero(w);
    let mut term = Real::one(w);
    let mut k = 0usize;
    let mut chunk = 64usize;
    loop {
        let done = mults.with(w, k + chunk, &make, |m| {
            for mk in &m[k..k + chunk] {
                let a = term.abs();
                acc += &term;
                abs += &a;
                if a <= &tiny_rel * &abs && k > 2 {
                    return true;
                }
                term = &term * u * mk;
                k += 1;
            }
            false
        });
        if done {
            return (acc, abs);
        }
        chunk *= 2;
    }
}

/// `2^ν Γ(ν+1) z^{-ν} J_ν(z) = Σ_k (-z^2/4)^k / (k! (ν+1)_k)`.
#[derive(Debug, Clone)]
pub struct BesselFn {
    nu: Real,
    nu_f: f64,
    mults: Multipliers,
}

impl BesselFn {
    pub fn new(nu: &Real) -> Self {
        BesselFn {
            nu: nu.clone(),
            nu_f: nu.to_f64(),
            mults: Multipliers::default(),
        }
    }
}

impl SeriesFunction for BesselFn {
    fn sum(&self, x: &Real, w: Precision) -> (Real, Real) {
        let x = x.with_precision(w);
        let u = -(&x * &x);
        let nu = self.nu.with_precision(w);
        ratio_series(&u, w, &self.mults, |k, w| {
            let k1 = k as i64 + 1;
            ((&nu + k1) * (4 * k1)).with_precision(w).recip()
        })
    }

    fn log10_peak(&self, x: f64) -> f64 {
        let u = x * x / 4.0;
        let (mut lt, mut best) = (0.0f64, 0.0f64);
        for k in 1..100_000 {
            let k = k as f64;
            lt += (u / (k * (self.nu_f + k))).log10();
            best = best.max(lt);
            if u < k * (self.nu_f + k) {
                break;
            }
        }
        best
    }
}

/// `A(x)`: the Airy-type solution of `y'' + (x/3) y = 0` given by two series
/// in `(-x/3)^3`.
#[derive(Debug, Clone, Default)]
pub struct AiryFn {
    first: Multipliers,
    second: Multipliers,
    consts: RefCell<Option<(usize, Real, Real)>>,
}

impl AiryFn {
    pub fn new() -> Self {
        AiryFn::default()
    }

    /// `π / (3 Γ(2/3))` and `π / (9 Γ(4/3))` at precision `w`.
    fn constants(&self, w: Precision) -> (Real, Real) {
        let mut slot = self.consts.borrow_mut();
        match &*slot {
            Some((bits, a, b)) if *bits == w.bits() => (a.clone(), b.clone()),
            _ => {
                let pi = Real::pi(w);
                let a = &pi / (gamma(&Real::from_ratio(2, 3, w)).expect("not a pole") * 3);
                let b = &pi / (gamma(&Real::from_ratio(4, 3, w)).expect("not a pole") * 9);
                *slot = Some((w.bits(), a.clone(), b.clone()));
                (a, b)
            }
        }
    }
}

impl SeriesFunction for AiryFn {
    fn sum(&self, x: &Real, w: Precision) -> (Real, Real) {
        let x = x.with_precision(w);
        let u = -(&x * &x * &x);
        let (ca, cb) = self.constants(w);
        // term ratios (-x^3/27) / ((n+1)(n+2/3)) and (-x^3/27) / ((n+1)(n+4/3))
        let (s1, a1) = ratio_series(&u, w, &self.first, |n, w| {
            let n = n as i64;
            Real::from_i64(9 * (n + 1) * (3 * n + 2), w).recip()
        });
        let (s2, a2) = ratio_series(&u, w, &self.second, |n, w| {
            let n = n as i64;
            Real::from_i64(9 * (n + 1) * (3 * n + 4), w).recip()
        });
        let xb = &x * &cb;
        let sum = &ca * s1 + &xb * s2;
        let abs = ca * a1 + xb.abs() * a2;
        (sum, abs)
    }

    fn log10_peak(&self, x: f64) -> f64 {
        let u = x.powi(3) / 27.0;
        let (mut lt, mut best) = (0.0f64, 0.0f64);
        for n in 0..100_000 {
            let n = n as f64;
            let d = (n + 1.0) * (n + 2.0 / 3.0);
            lt += (u / d).log10();
            best = best.max(lt);
            if u < d {
                break;
            }
        }
        best + x.max(1.0).log10()
    }
}

/// `A_q(x) = Σ q^{k^2} (-x)^k / (q;q)_k`.
#[derive(Debug, Clone)]
pub struct QAiryFn {
    q: Real,
    q_f: f64,
    mults: Multipliers,
}

impl QAiryFn {
    pub fn new(q: &Real) -> Self {
        QAiryFn {
            q: q.clone(),
            q_f: q.to_f64(),
            mults: Multipliers::default(),
        }
    }
}

impl SeriesFunction for QAiryFn {
    fn sum(&self, x: &Real, w: Precision) -> (Real, Real) {
        let u = -x.with_precision(w);
        let q = self.q.with_precision(w);
        // q^{2k+1} / (1 - q^{k+1})
        ratio_series(&u, w, &self.mults, |k, w| {
            let k = k as i64;
            (q.powi(2 * k + 1) / (Real::one(w) - q.powi(k + 1))).with_precision(w)
        })
    }

    fn log10_peak(&self, x: f64) -> f64 {
        let (mut lt, mut best) = (0.0f64, 0.0f64);
        let lq = self.q_f.log10();
        for k in 0..1_000_000 {
            let kf = k as f64;
            let step = x.log10() + (2.0 * kf + 1.0) * lq - (1.0 - self.q_f.powi(k + 1)).log10();
            lt += step;
            best = best.max(lt);
            if step < 0.0 {
                break;
            }
        }
        best
    }
}

/// `(x/2)^{-ν} J_ν^{(2)}(x; q)` without its constant positive prefactor:
/// `Σ (-1)^k q^{k(k+ν)} (x/2)^{2k} / ((q;q)_k (q^{ν+1};q)_k)`.
#[derive(Debug, Clone)]
pub struct QBesselFn {
    nu: Real,
    q: Real,
    nu_f: f64,
    q_f: f64,
    mults: Multipliers,
}

impl QBesselFn {
    pub fn new(nu: &Real, q: &Real) -> Self {
        QBesselFn {
            nu: nu.clone(),
            q: q.clone(),
            nu_f: nu.to_f64(),
            q_f: q.to_f64(),
            mults: Multipliers::default(),
        }
    }
}

impl SeriesFunction for QBesselFn {
    fn sum(&self, x: &Real, w: Precision) -> (Real, Real) {
        let x = x.with_precision(w);
        let u = -(&x * &x);
        let q = self.q.with_precision(w);
        let qnu = q.pow(&self.nu.with_precision(w));
        // q^{2k+1+ν} / (4 (1 - q^{k+1}) (1 - q^{ν+k+1}))
        ratio_series(&u, w, &self.mults, |k, w| {
            let k = k as i64;
            let qk1 = q.powi(k + 1);
            let num = &qnu * q.powi(2 * k + 1);
            let den = (Real::one(w) - &qk1) * (Real::one(w) - &qnu * &qk1) * 4;
            (num / den).with_precision(w)
        })
    }

    fn log10_peak(&self, x: f64) -> f64 {
        let (mut lt, mut best) = (0.0f64, 0.0f64);
        let lq = self.q_f.log10();
        for k in 0..1_000_000 {
            let kf = k as f64;
            let qk1 = self.q_f.powi(k + 1);
            let den = 4.0 * (1.0 - qk1) * (1.0 - self.q_f.powf(self.nu_f) * qk1);
            let step = 2.0 * x.log10() + (2.0 * kf + 1.0 + self.nu_f) * lq - den.log10();
            lt += step;
            best = best.max(lt);
            if step < 0.0 {
                break;
            }
        }
        best
    }
}

/// Evaluates a [`SeriesFunction`] with enough guard digits to trust signs.
#[derive(Debug, Clone)]
pub struct SignEvaluator<F> {
    f: F,
    target: Precision,
}

/// Outcome of a sign query.
#[derive(Debug, Clone)]
pub struct Signed {
    /// `-1`, `1`, or `0` when the value cannot be separated from zero
    /// within the precision budget.
    pub sign: i32,
    pub value: Real,
    /// Bound on the rounding error of `value`.
    pub error: Real,
    pub digits: u32,
}

impl<F: SeriesFunction> SignEvaluator<F> {
    pub fn new(f: F, target: Precision) -> Self {
        SignEvaluator { f, target }
    }

    pub fn function(&self) -> &F {
        &self.f
    }

    /// Guard budget: the cancellation estimate twice over plus the target.
    fn budget(&self, peak: f64) -> u32 {
        2 * self.target.decimal_digits() + 2 * peak.max(0.0).ceil() as u32 + 50
    }

    pub fn eval(&self, x: &Real) -> Result<Signed> {
        let peak = self.f.log10_peak(x.to_f64());
        let budget = self.budget(peak);
        let mut digits = self.target.decimal_digits() + peak.max(0.0).ceil() as u32 + 10;
        loop {
            let w = Precision::digits(digits);
            let (value, abs) = self.f.sum(x, w);
            let error = abs * Real::pow10(8 - w.decimal_digits() as i32, w);
            if value.abs() > error {
                return Ok(Signed {
                    sign: value.signum(),
                    value,
                    error,
                    digits,
                });
            }
            if digits >= budget {
                return Ok(Signed {
                    sign: 0,
                    value,
                    error,
                    digits,
                });
            }
            let deficit = if value.is_zero() {
                20.0
            } else {
                error.log10_abs() - value.log10_abs()
            };
            digits = (digits + deficit.max(0.0).ceil() as u32 + 20).min(budget);
        }
    }

    /// Like [`SignEvaluator::eval`], but an undecided sign is an error.
    pub fn sign(&self, x: &Real) -> Result<Signed> {
        let s = self.eval(x)?;
        if s.sign == 0 {
            return Err(Error::PrecisionExhausted {
                z: x.to_f64(),
                digits: s.digits,
            });
        }
        Ok(s)
    }
}
