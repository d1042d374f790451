//! Coefficient providers `σ_0 ..= σ_N` for each function family, and the
//! known closed forms of the first few power sums.
//!
//! | family  | zeros `λ_k`          | `σ_n`                                    |
//! |---------|----------------------|------------------------------------------|
//! | sinc    | `1/k^2`              | `π^{2n} / (2n+1)!`                       |
//! | Bessel  | `1/j_{ν,k}^2`        | `1 / (n! 4^n (ν+1)_n)`                   |
//! | Airy    | `1/i_k^2`            | `α_n / α_0`                              |
//! | q-Bessel| `1/j_{ν,k}(q)^2`     | `q^{n(n+ν)} / (4^n (q, q^{ν+1}; q)_n)`   |
//! | q-Airy  | `1/i_k(q)`           | `q^{n^2} / (q; q)_n`                     |
//!
//! Here `i_k = 3^{1/3} a_k` are the zeros of `A(x) = Ai(-x / 3^{1/3})`, the
//! solution of `y'' + (x/3) y = 0` decaying on the negative axis, and `α_n` is
//! `√3 Γ(2/3)^2 / (4^{1/3} π) · 16^{n/3} Γ(n/3 + 1/6) Γ(n/3 + 1/2) / (2n)!`.

use crate::error::{Error, Result};
use crate::newton::{CoefficientSeries, Family, Source};
use crate::precision::{gamma, pochhammer, q_pochhammer_finite, Precision, QContext, Real};

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InsufficientCoefficients {
            requested: 1,
            available: 1,
        });
    }
    Ok(())
}

fn check_k(k: usize, max: usize) -> Result<()> {
    if k == 0 || k > max {
        return Err(Error::OutOfRange { k, max });
    }
    Ok(())
}

/// `σ_n = π^{2n}/(2n+1)!`, the coefficients of `sin(π√z)/(π√z)`.
pub fn sinc_sigmas(n: usize, p: Precision) -> Result<CoefficientSeries> {
    check_order(n)?;
    let pi2 = Real::pi(p).powi(2);
    let mut sig = Vec::with_capacity(n + 1);
    sig.push(Real::one(p));
    for k in 1..=n as i64 {
        let next = &sig[k as usize - 1] * &pi2 / (2 * k * (2 * k + 1));
        sig.push(next);
    }
    CoefficientSeries::new(sig, Source::new(Family::Sinc))
}

#[derive(Debug, Clone)]
pub struct BesselParams {
    nu: Real,
}

impl BesselParams {
    pub fn new(nu: Real) -> Result<Self> {
        if nu <= Real::from_i64(-1, nu.precision()) {
            return Err(Error::Domain(format!(
                "Bessel order must exceed -1, got {}",
                nu.to_decimal(12)
            )));
        }
        Ok(BesselParams { nu })
    }

    pub fn nu(&self) -> &Real {
        &self.nu
    }
}

/// `σ_n = 1/(n! 4^n (ν+1)_n)`.
pub fn bessel_sigmas(params: &BesselParams, n: usize) -> Result<CoefficientSeries> {
    check_order(n)?;
    let nu = &params.nu;
    let p = nu.precision();
    let mut sig = Vec::with_capacity(n + 1);
    sig.push(Real::one(p));
    for k in 1..=n as i64 {
        let den = (nu + k) * (4 * k);
        let next = &sig[k as usize - 1] / den;
        sig.push(next);
    }
    CoefficientSeries::new(
        sig,
        Source::new(Family::Bessel).with("nu", nu.to_decimal(20)),
    )
}

/// Closed forms of `s_1 ..= s_5 = Σ j_{ν,k}^{-2n}`.
pub fn bessel_s_closed(params: &BesselParams, k: usize) -> Result<Real> {
    check_k(k, 5)?;
    let nu = &params.nu;
    let p = nu.precision();
    let nu1 = nu + 1;
    let nu2 = nu + 2;
    // Π_{j=1}^{k} (ν+1)_j
    let mut den = Real::one(p);
    for j in 1..=k {
        den *= pochhammer(&nu1, j);
    }
    den *= Real::from_i64(4, p).powi(k as i64);
    let num = match k {
        1 | 2 => Real::one(p),
        3 => pochhammer(&nu2, 1) * 2,
        4 => (nu * 5 + 11) * pochhammer(&nu2, 2),
        _ => (nu * 7 + 19) * pochhammer(&nu2, 2) * pochhammer(&nu2, 3) * 2,
    };
    Ok(num / den)
}

/// The leading constant of `α_n` and the value `α_0` it produces.
#[derive(Debug, Clone)]
pub struct AiryNormalization {
    pub alpha0: Real,
    pub normalized: bool,
}

fn airy_prefactor(p: Precision) -> Result<Real> {
    let g = gamma(&Real::from_ratio(2, 3, p))?;
    let three = Real::from_i64(3, p);
    Ok(three.sqrt() * g.powi(2) / (Real::from_i64(4, p).cbrt() * Real::pi(p)))
}

/// `α_0 ..= α_N` exactly as the Airy product formula states them.
pub fn airy_raw_alphas(n: usize, p: Precision) -> Result<Vec<Real>> {
    let w = p.with_extra_digits(5);
    let pre = airy_prefactor(w)?;
    let c16 = Real::from_i64(16, w).cbrt();
    let mut out = Vec::with_capacity(n + 1);
    let mut pow16 = Real::one(w);
    let mut fact = Real::one(w);
    for k in 0..=n as i64 {
        if k > 0 {
            pow16 *= &c16;
            fact = fact * (2 * k - 1) * (2 * k);
        }
        let g1 = gamma(&Real::from_ratio(2 * k + 1, 6, w))?;
        let g2 = gamma(&Real::from_ratio(2 * k + 3, 6, w))?;
        out.push((&pre * &pow16 * g1 * g2 / &fact).with_precision(p));
    }
    Ok(out)
}

pub fn airy_normalization(p: Precision) -> Result<AiryNormalization> {
    let alpha0 = airy_raw_alphas(0, p)?.remove(0);
    Ok(AiryNormalization {
        alpha0,
        normalized: true,
    })
}

/// `σ_n = α_n / α_0`, so that `σ_0 = 1`.
pub fn airy_sigmas(n: usize, p: Precision) -> Result<CoefficientSeries> {
    check_order(n)?;
    let raw = airy_raw_alphas(n, p)?;
    let a0 = raw[0].clone();
    let mut sig: Vec<Real> = raw.iter().map(|a| a / &a0).collect();
    sig[0] = Real::one(p);
    CoefficientSeries::new(
        sig,
        Source::new(Family::Airy).with("alpha0", a0.to_decimal(20)),
    )
}

/// `κ^2 = Σ i_k^{-2} = 3 Γ(2/3)^4 / (4π^2)`.
pub fn airy_kappa_squared(p: Precision) -> Result<Real> {
    let g = gamma(&Real::from_ratio(2, 3, p))?;
    Ok(g.powi(4) * 3 / (Real::pi(p).powi(2) * 4))
}

#[derive(Debug, Clone)]
pub struct QBesselParams {
    nu: Real,
    q: QContext,
}

impl QBesselParams {
    pub fn new(nu: Real, q: Real) -> Result<Self> {
        let bessel = BesselParams::new(nu)?;
        let q = QContext::new(q)?;
        Ok(QBesselParams { nu: bessel.nu, q })
    }

    pub fn nu(&self) -> &Real {
        &self.nu
    }

    pub fn q(&self) -> &Real {
        self.q.q()
    }

    fn q_nu(&self) -> Real {
        self.q().pow(&self.nu)
    }
}

/// `σ_n = q^{n(n+ν)} / (4^n (q;q)_n (q^{ν+1};q)_n)`.
pub fn qbessel_sigmas(params: &QBesselParams, n: usize) -> Result<CoefficientSeries> {
    check_order(n)?;
    let q = params.q();
    let p = q.precision().max(params.nu.precision());
    let qnu = params.q_nu();
    let mut sig = Vec::with_capacity(n + 1);
    sig.push(Real::one(p));
    // q^{2k-1+ν}, q^k and q^{ν+k}, advanced each step
    let mut num = &qnu * q;
    let mut qk = q.clone();
    let mut qnuk = &qnu * q;
    let q2 = q * q;
    for k in 1..=n {
        let den = (Real::one(p) - &qk) * (Real::one(p) - &qnuk) * 4;
        let next = &sig[k - 1] * &num / den;
        sig.push(next);
        num *= &q2;
        qk *= q;
        qnuk *= q;
    }
    CoefficientSeries::new(
        sig,
        Source::new(Family::QBessel)
            .with("nu", params.nu.to_decimal(20))
            .with("q", q.to_decimal(20)),
    )
}

/// Closed forms of `s_1 ..= s_3 = Σ j_{ν,k}(q)^{-2n}`.
pub fn qbessel_s_closed(params: &QBesselParams, k: usize) -> Result<Real> {
    check_k(k, 3)?;
    let q = params.q();
    let p = q.precision();
    let one = Real::one(p);
    let a = params.q_nu() * q; // q^{ν+1}
    let qp = |e: i64| q.powi(e);
    let val = match k {
        1 => &a / ((&one - q) * (&one - &a) * 4),
        2 => {
            let num = a.powi(2) * (&one + q * 2 - &a * q);
            let den = (&one - qp(2)) * (&one - &a) * q_pochhammer_finite(&a, q, 2) * 16;
            num / den
        }
        _ => {
            let poly = &one + q * 3 + qp(2) * 3 + qp(3) * 3 - &a * q - &a * qp(2) - &a * qp(3) * 3
                + a.powi(2) * qp(3);
            let num = a.powi(3) * poly;
            let den = (&one - qp(3)) * (&one - &a).powi(2) * q_pochhammer_finite(&a, q, 3) * 64;
            num / den
        }
    };
    Ok(val)
}

fn qairy_context(q: &Real) -> Result<QContext> {
    QContext::new(q.clone())
}

/// `σ_n = q^{n^2} / (q;q)_n`.
pub fn qairy_sigmas(q: &Real, n: usize) -> Result<CoefficientSeries> {
    check_order(n)?;
    qairy_context(q)?;
    let p = q.precision();
    let mut sig = Vec::with_capacity(n + 1);
    sig.push(Real::one(p));
    let mut num = q.clone();
    let mut qk = q.clone();
    let q2 = q * q;
    for k in 1..=n {
        let next = &sig[k - 1] * &num / (Real::one(p) - &qk);
        sig.push(next);
        num *= &q2;
        qk *= q;
    }
    CoefficientSeries::new(sig, Source::new(Family::QAiry).with("q", q.to_decimal(20)))
}

/// Closed forms of `s_1 ..= s_5 = Σ i_k(q)^{-n}`.
pub fn qairy_s_closed(q: &Real, k: usize) -> Result<Real> {
    check_k(k, 5)?;
    qairy_context(q)?;
    let p = q.precision();
    let poly = |coeffs: &[i64]| {
        let mut acc = Real::zero(p);
        for c in coeffs.iter().rev() {
            acc = acc * q + *c;
        }
        acc
    };
    let body = match k {
        1 => Real::one(p),
        2 => poly(&[1, 2]),
        3 => poly(&[1, 3, 3, 3]),
        4 => poly(&[1, 2, 0, 2]) * poly(&[1, 2, 2, 2]),
        _ => poly(&[1, 5, 10, 15, 20, 20, 20, 15, 10, 5, 5]),
    };
    let qk = q.powi(k as i64);
    Ok(&qk * body / (Real::one(p) - &qk))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::power_sums_recurrence;

    fn p() -> Precision {
        Precision::default()
    }

    fn r(n: i64, d: i64) -> Real {
        Real::from_ratio(n, d, p())
    }

    fn close(a: &Real, b: &Real) -> bool {
        a.rel_close(b, &p().tolerance(3))
    }

    #[test]
    fn sinc_coefficients() {
        let c = sinc_sigmas(3, p()).unwrap();
        assert_eq!(c.sigma(0), &Real::one(p()));
        let pi = Real::pi(p());
        assert!(close(c.sigma(1), &(pi.powi(2) / 6)));
        assert!(close(c.sigma(2), &(pi.powi(4) / 120)));
        let zeta2 = Real::parse("1.6449340668482264364724151666460251892189", p()).unwrap();
        assert!(c.sigma(1).rel_close(&zeta2, &Real::pow10(-38, p())));
        let s = power_sums_recurrence(&c, 1).unwrap();
        assert!(close(s.s(1), &(pi.powi(2) / 6)));
    }

    #[test]
    fn bessel_coefficients() {
        let b0 = BesselParams::new(Real::zero(p())).unwrap();
        let c = bessel_sigmas(&b0, 2).unwrap();
        assert!(close(c.sigma(1), &r(1, 4)));
        let b1 = BesselParams::new(Real::one(p())).unwrap();
        let c = bessel_sigmas(&b1, 2).unwrap();
        assert!(close(c.sigma(2), &r(1, 192)));
        assert!(BesselParams::new(r(-1, 1)).is_err());
        assert!(BesselParams::new(r(-3, 2)).is_err());
    }

    #[test]
    fn bessel_closed_forms() {
        let b0 = BesselParams::new(Real::zero(p())).unwrap();
        let b1 = BesselParams::new(Real::one(p())).unwrap();
        assert!(close(&bessel_s_closed(&b0, 1).unwrap(), &r(1, 4)));
        assert!(close(&bessel_s_closed(&b0, 2).unwrap(), &r(1, 32)));
        assert!(close(&bessel_s_closed(&b1, 1).unwrap(), &r(1, 8)));
        assert!(matches!(
            bessel_s_closed(&b0, 6),
            Err(Error::OutOfRange { k: 6, max: 5 })
        ));
        assert!(matches!(
            bessel_s_closed(&b0, 0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn airy_normalization_constant() {
        let norm = airy_normalization(p()).unwrap();
        let two_pi = Real::pi(p()) * 2;
        assert!(norm.alpha0.rel_close(&two_pi, &p().tolerance(5)));
        let c = airy_sigmas(4, p()).unwrap();
        assert_eq!(c.sigma(0), &Real::one(p()));
        let kappa = airy_kappa_squared(p()).unwrap();
        assert!(close(c.sigma(1), &kappa));
        let reference = Real::parse("0.25549798814417204187270424556399976", p()).unwrap();
        assert!(kappa.rel_close(&reference, &Real::pow10(-33, p())));
    }

    #[test]
    fn qbessel_coefficients() {
        let h = r(1, 2);
        let params = QBesselParams::new(Real::zero(p()), h.clone()).unwrap();
        let c = qbessel_sigmas(&params, 2).unwrap();
        assert!(close(c.sigma(1), &r(1, 2)));
        assert!(close(c.sigma(2), &r(1, 36)));
        assert!(close(&qbessel_s_closed(&params, 1).unwrap(), &r(1, 2)));
        assert!(close(&qbessel_s_closed(&params, 2).unwrap(), &r(7, 36)));
        assert!(QBesselParams::new(Real::zero(p()), Real::one(p())).is_err());
        assert!(QBesselParams::new(r(-2, 1), h).is_err());
    }

    #[test]
    fn qairy_coefficients() {
        let h = r(1, 2);
        let c = qairy_sigmas(&h, 2).unwrap();
        assert!(close(c.sigma(1), &r(1, 1)));
        assert!(close(c.sigma(2), &r(1, 6)));
        assert!(close(&qairy_s_closed(&h, 1).unwrap(), &r(1, 1)));
        assert!(close(&qairy_s_closed(&h, 2).unwrap(), &r(2, 3)));
        assert!(close(&qairy_s_closed(&h, 3).unwrap(), &r(29, 56)));
        assert!(qairy_sigmas(&r(3, 2), 2).is_err());
        assert!(matches!(
            qairy_s_closed(&h, 6),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn closed_forms_match_recurrence() {
        for q in ["0.1", "0.3", "0.5", "0.9"] {
            let q = Real::parse(q, p()).unwrap();
            let rec = power_sums_recurrence(&qairy_sigmas(&q, 5).unwrap(), 5).unwrap();
            for k in 1..=5 {
                assert!(rec
                    .s(k)
                    .rel_close(&qairy_s_closed(&q, k).unwrap(), &p().tolerance(20)));
            }
            for nu in [r(0, 1), r(1, 2), r(2, 1)] {
                let params = QBesselParams::new(nu, q.clone()).unwrap();
                let rec = power_sums_recurrence(&qbessel_sigmas(&params, 3).unwrap(), 3).unwrap();
                for k in 1..=3 {
                    assert!(rec
                        .s(k)
                        .rel_close(&qbessel_s_closed(&params, k).unwrap(), &p().tolerance(20)));
                }
            }
        }
        for nu in [r(-1, 2), r(0, 1), r(1, 2), r(1, 1), r(5, 1)] {
            let params = BesselParams::new(nu).unwrap();
            let rec = power_sums_recurrence(&bessel_sigmas(&params, 5).unwrap(), 5).unwrap();
            for k in 1..=5 {
                assert!(rec
                    .s(k)
                    .rel_close(&bessel_s_closed(&params, k).unwrap(), &p().tolerance(20)));
            }
        }
    }
}
