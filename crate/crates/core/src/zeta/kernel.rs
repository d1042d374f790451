//! The kernels `φ(t)` and `φ(t | χ, a)` whose cosine transforms are `Ξ`.
//!
//! Both kernels are even. The series as usually written,
//! `φ(t) = 4π Σ (2π n^4 e^{-9t/2} - 3 n^2 e^{-5t/2}) exp(-n^2 π e^{-2t})`,
//! converges slowly and cancels heavily for large positive `t`, so the
//! default evaluators use evenness and sum at `-|t|`, where every term is
//! damped by `exp(-n^2 π e^{2|t|})`. The `*_direct` variants sum the series
//! exactly as written at signed `t`; they exist to test evenness and are only
//! practical for moderate `|t|`.

use super::character::DirichletCharacter;
use crate::precision::{Precision, Real};

/// The kernel of a `Ξ` function.
#[derive(Debug, Clone, PartialEq)]
pub enum Kernel {
    Riemann,
    Dirichlet(DirichletCharacter),
}

impl Kernel {
    pub fn phi(&self, t: &Real) -> Real {
        match self {
            Kernel::Riemann => phi_riemann(t),
            Kernel::Dirichlet(chi) => phi_chi(t, chi),
        }
    }

    /// The modulus entering `exp(-n^2 π e^{2|t|} / m)`; 1 for Riemann.
    pub fn modulus(&self) -> u32 {
        match self {
            Kernel::Riemann => 1,
            Kernel::Dirichlet(chi) => chi.modulus(),
        }
    }

    /// Smoothed zero count `N(T)` of `Ξ` on `(0, T)`.
    pub fn zero_count_estimate(&self, t: f64) -> f64 {
        let x = t / (2.0 * std::f64::consts::PI);
        match self {
            Kernel::Riemann => x * x.ln() - x + 7.0 / 8.0,
            Kernel::Dirichlet(chi) => {
                x * (chi.modulus() as f64 * x).ln() - x + (2.0 * chi.parity_a() as f64 - 1.0) / 8.0
            }
        }
    }

    /// Upper estimate of `log10 |φ(t)|` for `t ≥ 0` from the leading term.
    pub fn log10_bound(&self, t: f64) -> f64 {
        let m = self.modulus() as f64;
        let e2 = (2.0 * t).exp();
        let ln = match self {
            Kernel::Riemann => {
                (8.0 * std::f64::consts::PI.powi(2)).ln() + 4.5 * t - std::f64::consts::PI * e2
            }
            Kernel::Dirichlet(chi) => {
                4f64.ln() + (0.5 + chi.parity_a() as f64) * t - std::f64::consts::PI * e2 / m
            }
        };
        ln * std::f64::consts::LOG10_E
    }
}

/// Term cutoff `10^{-P-10}` relative to the running sum.
fn cutoff(p: Precision) -> Real {
    Real::pow10(-(p.decimal_digits() as i32) - 10, p)
}

/// `Σ_{n≥1} c_n w^{n^2}` where `c_n` is supplied per index, stopping once the
/// terms fall below the cutoff and are decreasing.
fn theta_sum(w: &Real, coeff: impl Fn(i64) -> Option<Real>) -> Real {
    let p = w.precision();
    let tiny = cutoff(p);
    let w2 = w * w;
    let mut wn2 = w.clone(); // w^{n^2}
    let mut step = &w2 * w; // w^{2n+1}
    let mut acc = Real::zero(p);
    let mut n = 1i64;
    loop {
        if let Some(c) = coeff(n) {
            let term = c * &wn2;
            let small = term.abs() <= &tiny * &acc.abs();
            acc += term;
            if small && !acc.is_zero() {
                break;
            }
        }
        if wn2.is_zero() || wn2.log10_abs() < acc.log10_abs() - p.decimal_digits() as f64 - 40.0 {
            break;
        }
        wn2 *= &step;
        step *= &w2;
        n += 1;
    }
    acc
}

/// `φ(t)` for the Riemann `Ξ`, summed at `-|t|`.
pub fn phi_riemann(t: &Real) -> Real {
    let p = t.precision();
    let u = t.abs();
    let pi = Real::pi(p);
    let e_half = (&u / 2).exp();
    let e2 = e_half.powi(4);
    let w = (-(&pi * &e2)).exp();
    let a = &pi * 2 * e_half.powi(9);
    let b = e_half.powi(5) * 3;
    let s = theta_sum(&w, |n| {
        let n2 = Real::from_i64(n * n, p);
        Some(&a * &n2 * &n2 - &b * &n2)
    });
    s * pi * 4
}

/// `φ(t | χ, a)`, summed at `-|t|`.
pub fn phi_chi(t: &Real, chi: &DirichletCharacter) -> Real {
    let p = t.precision();
    let u = t.abs();
    let pi = Real::pi(p);
    let a = chi.parity_a() as i64;
    let e2 = (&u * 2).exp();
    let w = (-(pi * e2 / chi.modulus() as i64)).exp();
    let s = theta_sum(&w, |n| match chi.value(n) {
        0 => None,
        c => Some(Real::from_i64(c as i64 * if a == 1 { n } else { 1 }, p)),
    });
    let pre = (&u * (2 * a + 1) / 2).exp();
    s * pre * 4
}

/// Sum a signed-`t` series at increasing guard digits until two passes agree.
fn with_guard(t: &Real, f: impl Fn(&Real) -> Real) -> Real {
    let p = t.precision();
    let mut guard = 20;
    let mut prev = f(&t.with_precision(p.with_extra_digits(guard)));
    loop {
        guard *= 2;
        let next = f(&t.with_precision(p.with_extra_digits(guard)));
        if next.rel_close(&prev, &p.tolerance(0)) || guard > 5000 {
            return next.with_precision(p);
        }
        prev = next;
    }
}

fn signed_theta(t: &Real, m: i64, coeff: impl Fn(i64, &Real) -> Option<Real>) -> Real {
    let p = t.precision();
    let pi = Real::pi(p);
    let x = (-(t * 2)).exp() * &pi / m; // the exponent is -n^2 x
    let w = (-&x).exp();
    let tiny = cutoff(p);
    let mut acc = Real::zero(p);
    let mut big = Real::zero(p);
    let mut n = 1i64;
    loop {
        let wn2 = w.powi(n * n);
        if let Some(term) = coeff(n, &wn2) {
            let mag = term.abs();
            big = big.max(&mag);
            acc += term;
            // past the peak of n^4 e^{-n^2 x} every later term is smaller
            if Real::from_i64(n * n, p) * &x > Real::from_i64(4, p) && mag <= &tiny * &big {
                break;
            }
        }
        n += 1;
    }
    acc
}

/// `φ(t)` summed exactly as written at signed `t`.
pub fn phi_riemann_direct(t: &Real) -> Real {
    with_guard(t, |t| {
        let p = t.precision();
        let pi = Real::pi(p);
        let a = &pi * 2 * (-(t * 9) / 2).exp();
        let b = (-(t * 5) / 2).exp() * 3;
        let s = signed_theta(t, 1, |n, wn2| {
            let n2 = Real::from_i64(n * n, p);
            Some((&a * &n2 * &n2 - &b * &n2) * wn2)
        });
        s * pi * 4
    })
}

/// `φ(t | χ, a)` summed over `n ∈ Z` exactly as written at signed `t`.
pub fn phi_chi_direct(t: &Real, chi: &DirichletCharacter) -> Real {
    let a = chi.parity_a() as i64;
    with_guard(t, |t| {
        let s = signed_theta(t, chi.modulus() as i64, |n, wn2| {
            // n and -n contribute equally: χ(-n) n^a (-1)^a = χ(n) n^a
            match chi.value(n) {
                0 => None,
                c => Some(wn2 * (2 * c as i64 * if a == 1 { n } else { 1 })),
            }
        });
        s * (-(t * (2 * a + 1)) / 2).exp() * 2
    })
    .with_precision(t.precision())
}

/// `Σ_{n∈Z} n^a χ(n) e^{-n^2 π x / m}`.
fn theta_chi(chi: &DirichletCharacter, x: &Real) -> Real {
    let p = x.precision();
    let a = chi.parity_a() as i64;
    let w = (-(Real::pi(p) * x / chi.modulus() as i64)).exp();
    let s = theta_sum(&w, |n| match chi.value(n) {
        0 => None,
        c => Some(Real::from_i64(c as i64 * if a == 1 { n } else { 1 }, p)),
    });
    s * 2
}

/// `|θ(x) - x^{-1/2-a} θ(1/x)|` for `θ(x) = Σ_{n∈Z} n^a χ(n) e^{-n^2 π x/m}`.
pub fn theta_selfcheck(chi: &DirichletCharacter, x: &Real) -> Real {
    let p = x.precision();
    let lhs = theta_chi(chi, x);
    let rhs_sum = theta_chi(chi, &x.recip());
    let expo = Real::from_ratio(-(1 + 2 * chi.parity_a() as i64), 2, p);
    let rhs = x.pow(&expo) * rhs_sum;
    (lhs - rhs).abs()
}
