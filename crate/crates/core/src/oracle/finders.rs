//! Bracketing and bisection for each family.

use super::eval::{AiryFn, BesselFn, QAiryFn, QBesselFn, SeriesFunction, SignEvaluator};
use super::tail::TailModel;
use super::{ExponentMode, ZeroList};
use crate::error::{Error, Result};
use crate::newton::Family;
use crate::precision::{Precision, Real};
use crate::series::{BesselParams, QBesselParams};
use crate::zeta::{DirichletCharacter, Kernel, QuadratureConfig, XiEvaluator};

pub const BESSEL_MAX_ZEROS: usize = 500;
pub const AIRY_MAX_ZEROS: usize = 200;
pub const XI_MAX_ZEROS: usize = 50;

/// Sign and value at a point; sign 0 means "cannot tell from zero".
type Probe<'a> = dyn FnMut(&Real) -> Result<(i32, Real)> + 'a;

/// Bisect `[lo, hi]` (sign `s_lo` at `lo`) until its width is below
/// `10^{-P/2}` relative to `hi`. Returns the bracket and `|f|` at its midpoint.
fn bisect(
    probe: &mut Probe<'_>,
    mut lo: Real,
    mut hi: Real,
    s_lo: i32,
    p: Precision,
) -> Result<(Real, Real, Real)> {
    let rel = Real::pow10(-(p.decimal_digits() as i32) / 2, p);
    'outer: loop {
        let width = &hi - &lo;
        if width <= &rel * hi.abs() {
            break;
        }
        for frac in [(1, 2), (3, 8), (5, 8)] {
            let x = &lo + &width * frac.0 / frac.1;
            let (s, _) = probe(&x)?;
            if s == 0 {
                continue;
            }
            if s == s_lo {
                lo = x;
            } else {
                hi = x;
            }
            continue 'outer;
        }
        // undecided at all three probes: shrink around the midpoint
        let mid = (&lo + &hi) / 2;
        let quarter = &width / 4;
        lo = &mid - &quarter / 8;
        hi = &mid + &quarter / 8;
        if probe(&lo)?.0 != s_lo || probe(&hi)?.0 != -s_lo {
            return Err(Error::PrecisionExhausted {
                z: mid.to_f64(),
                digits: p.decimal_digits(),
            });
        }
    }
    let mid = (&lo + &hi) / 2;
    let (_, v) = probe(&mid)?;
    Ok((lo, hi, v.abs()))
}

fn series_probe<F: SeriesFunction>(
    ev: &SignEvaluator<F>,
) -> impl FnMut(&Real) -> Result<(i32, Real)> + '_ {
    move |x| {
        let s = ev.eval(x)?;
        Ok((s.sign, s.value))
    }
}

/// Find the sign change in `[lo, hi]`, widening `hi` in steps of `grow` up to
/// `tries` times.
fn bracket_from<F: SeriesFunction>(
    ev: &SignEvaluator<F>,
    lo: Real,
    hi: Real,
    grow: &Real,
    tries: usize,
    index: usize,
) -> Result<(Real, Real, i32)> {
    let s_lo = ev.sign(&lo)?.sign;
    let mut hi = hi;
    for _ in 0..=tries {
        if ev.sign(&hi)?.sign != s_lo {
            return Ok((lo, hi, s_lo));
        }
        hi += grow;
    }
    Err(Error::BracketFailure { index })
}

/// First `k` positive zeros `j_{ν,1} < … < j_{ν,k}` of `z^{-ν} J_ν(z)`.
pub fn bessel_zeros(nu: &Real, k: usize, p: Precision) -> Result<ZeroList> {
    BesselParams::new(nu.clone())?;
    if k > BESSEL_MAX_ZEROS {
        return Err(Error::LimitExceeded {
            requested: k,
            max: BESSEL_MAX_ZEROS,
        });
    }
    let ev = SignEvaluator::new(BesselFn::new(nu), p);
    let mut probe = series_probe(&ev);
    let mut zl = ZeroList::new(Family::Bessel, ExponentMode::Squared, TailModel::Bessel, p);
    let pi = Real::pi(p);
    let half_pi = &pi / 2;
    let tiny = Real::pow10(-3, p);
    let mut floor = tiny.clone();
    for idx in 1..=k {
        let beta = (Real::from_i64(idx as i64, p) + nu / 2 - Real::from_ratio(1, 4, p)) * &pi;
        let lo = (&beta - &half_pi).max(&floor);
        let hi = (&beta + &half_pi).max(&(&lo + &tiny));
        let (lo, hi, s_lo) = bracket_from(&ev, lo, hi, &(&pi / 4), 8, idx)?;
        let (lo, hi, r) = bisect(&mut probe, lo, hi, s_lo, p)?;
        floor = &hi + &tiny;
        zl.push(lo, hi, r);
    }
    Ok(zl)
}

/// First `k` zeros `i_1 < … < i_k` of `A(x)`.
pub fn airy_zeros(k: usize, p: Precision) -> Result<ZeroList> {
    if k > AIRY_MAX_ZEROS {
        return Err(Error::LimitExceeded {
            requested: k,
            max: AIRY_MAX_ZEROS,
        });
    }
    let ev = SignEvaluator::new(AiryFn::new(), p);
    let mut probe = series_probe(&ev);
    let mut zl = ZeroList::new(Family::Airy, ExponentMode::Squared, TailModel::Airy, p);
    let c3 = 3f64.cbrt();
    let mut floor = Real::zero(p);
    for idx in 1..=k {
        let t = 3.0 * std::f64::consts::PI * (4.0 * idx as f64 - 1.0) / 8.0;
        let seed = c3 * t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t));
        let spacing = c3 * std::f64::consts::PI * t.powf(-1.0 / 3.0);
        let lo = Real::from_f64(seed - 0.3 * spacing, p).max(&floor);
        let hi = Real::from_f64(seed + 0.3 * spacing, p);
        let (lo, hi, s_lo) = bracket_from(&ev, lo, hi, &Real::from_f64(0.2 * spacing, p), 5, idx)?;
        let (lo, hi, r) = bisect(&mut probe, lo, hi, s_lo, p)?;
        floor = hi.clone();
        zl.push(lo, hi, r);
    }
    Ok(zl)
}

/// Scan upwards on a geometric grid from `start`, bisecting each sign change.
fn geometric_scan<F: SeriesFunction>(
    ev: &SignEvaluator<F>,
    start: f64,
    ratio: f64,
    k: usize,
    zl: &mut ZeroList,
) -> Result<()> {
    let p = zl.precision();
    let mut probe = series_probe(ev);
    let step = Real::from_f64(ratio, p);
    let mut x = Real::from_f64(start, p);
    let mut s = ev.sign(&x)?.sign;
    let mut steps = 0usize;
    while zl.count() < k {
        steps += 1;
        if steps > 200_000 || x.log10_abs() > 1000.0 {
            return Err(Error::ScanExhausted {
                found: zl.count(),
                wanted: k,
            });
        }
        let next = &x * &step;
        let sn = match ev.sign(&next) {
            Ok(v) => v.sign,
            Err(Error::PrecisionExhausted { .. }) => {
                return Err(Error::ScanExhausted {
                    found: zl.count(),
                    wanted: k,
                });
            }
            Err(e) => return Err(e),
        };
        if sn != s {
            let (lo, hi, r) = bisect(&mut probe, x.clone(), next.clone(), s, p)?;
            zl.push(lo, hi, r);
        }
        x = next;
        s = sn;
    }
    Ok(())
}

fn scan_ratio(q: &Real) -> f64 {
    // four sub-steps per factor √(1/q)
    q.to_f64().recip().powf(1.0 / 8.0)
}

/// First `k` zeros of `A_q(x)`.
pub fn qairy_zeros(q: &Real, k: usize, p: Precision) -> Result<ZeroList> {
    crate::precision::QContext::new(q.clone())?;
    let qf = q.to_f64();
    if qf > 0.9 + 1e-12 {
        return Err(Error::Domain(format!(
            "zero scan supports q ≤ 0.9, got {qf}"
        )));
    }
    let ev = SignEvaluator::new(QAiryFn::new(q), p);
    let mut zl = ZeroList::new(
        Family::QAiry,
        ExponentMode::Plain,
        TailModel::Geometric { q: q.clone() },
        p,
    );
    // i_1 > 1/σ_1 = (1-q)/q
    geometric_scan(&ev, 0.5 * (1.0 - qf) / qf, scan_ratio(q), k, &mut zl)?;
    Ok(zl)
}

/// First `k` positive zeros of `z^{-ν} J_ν^{(2)}(z; q)`.
pub fn qbessel_zeros(nu: &Real, q: &Real, k: usize, p: Precision) -> Result<ZeroList> {
    QBesselParams::new(nu.clone(), q.clone())?;
    let (qf, nuf) = (q.to_f64(), nu.to_f64());
    if qf > 0.9 + 1e-12 {
        return Err(Error::Domain(format!(
            "zero scan supports q ≤ 0.9, got {qf}"
        )));
    }
    let ev = SignEvaluator::new(QBesselFn::new(nu, q), p);
    let mut zl = ZeroList::new(
        Family::QBessel,
        ExponentMode::Squared,
        TailModel::Geometric { q: q.clone() },
        p,
    );
    // j_1^2 > 1/σ_1
    let qn1 = qf.powf(nuf + 1.0);
    let sigma1 = qn1 / (4.0 * (1.0 - qf) * (1.0 - qn1));
    geometric_scan(&ev, 0.5 / sigma1.sqrt(), scan_ratio(q), k, &mut zl)?;
    Ok(zl)
}

/// First `k` positive zeros of the Riemann `Ξ`.
pub fn xi_zeros(k: usize, cfg: &QuadratureConfig) -> Result<ZeroList> {
    xi_zeros_kernel(Kernel::Riemann, k, cfg)
}

/// First `k` positive zeros of `Ξ(z | χ, a)`, assuming they are real.
pub fn dirichlet_zeros(
    chi: &DirichletCharacter,
    k: usize,
    cfg: &QuadratureConfig,
) -> Result<ZeroList> {
    xi_zeros_kernel(Kernel::Dirichlet(chi.clone()), k, cfg)
}

pub fn xi_zeros_kernel(kernel: Kernel, k: usize, cfg: &QuadratureConfig) -> Result<ZeroList> {
    if k > XI_MAX_ZEROS {
        return Err(Error::LimitExceeded {
            requested: k,
            max: XI_MAX_ZEROS,
        });
    }
    let p = cfg.precision();
    let (start, mut step) = match kernel {
        Kernel::Riemann => (10.0, 0.5),
        Kernel::Dirichlet(_) => (0.0, 0.25),
    };
    let mut z_max = start + 10.0;
    while kernel.zero_count_estimate(z_max) < k as f64 + 2.0 {
        z_max += 1.0;
    }
    z_max = z_max * 1.05 + 2.0;
    let mut ev = XiEvaluator::new(kernel.clone(), cfg, z_max)?;
    for _ in 0..5 {
        match xi_scan(&ev, start, step, k, p)? {
            Scan::Found(zl) => {
                let top = zl.zeros()[k - 1].to_f64();
                if (zl.count() as f64) >= kernel.zero_count_estimate(top) - 2.0 {
                    return Ok(zl);
                }
                step /= 2.0;
            }
            Scan::OutOfRange => {
                z_max *= 1.5;
                ev = XiEvaluator::new(kernel.clone(), cfg, z_max)?;
            }
        }
    }
    Err(Error::ScanExhausted {
        found: 0,
        wanted: k,
    })
}

enum Scan {
    Found(ZeroList),
    OutOfRange,
}

fn xi_scan(ev: &XiEvaluator, start: f64, step: f64, k: usize, p: Precision) -> Result<Scan> {
    let bound = ev.error_bound().clone();
    let mut probe = |x: &Real| -> Result<(i32, Real)> {
        let v = ev.eval(x);
        let s = if v.abs() > bound { v.signum() } else { 0 };
        Ok((s, v))
    };
    let mut zl = ZeroList::new(
        Family::Riemann,
        ExponentMode::Squared,
        TailModel::Xi(ev.kernel().clone()),
        p,
    );
    if let Kernel::Dirichlet(_) = ev.kernel() {
        zl = ZeroList::new(
            Family::Dirichlet,
            ExponentMode::Squared,
            TailModel::Xi(ev.kernel().clone()),
            p,
        );
    }
    let h = Real::from_f64(step, p);
    let mut x = Real::from_f64(start, p);
    let mut s = probe(&x)?.0;
    if s == 0 {
        return Err(Error::PrecisionExhausted {
            z: start,
            digits: ev.working_precision().decimal_digits(),
        });
    }
    while zl.count() < k {
        if x.to_f64() + step > ev.z_max() {
            return Ok(Scan::OutOfRange);
        }
        let mut next = &x + &h;
        let mut sn = probe(&next)?.0;
        if sn == 0 {
            next += &h / 16;
            sn = probe(&next)?.0;
            if sn == 0 {
                return Err(Error::PrecisionExhausted {
                    z: next.to_f64(),
                    digits: ev.working_precision().decimal_digits(),
                });
            }
        }
        if sn != s {
            let (lo, hi, r) = bisect(&mut probe, x.clone(), next.clone(), s, p)?;
            zl.push(lo, hi, r);
        }
        x = next;
        s = sn;
    }
    Ok(Scan::Found(zl))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn bessel_first_zeros() {
        let zl = bessel_zeros(&Real::zero(p()), 3, p()).unwrap();
        let j01 = Real::parse("2.404825557695772768621631879326454643", p()).unwrap();
        assert!(zl.zeros()[0].rel_close(&j01, &Real::pow10(-24, p())));
        let half = bessel_zeros(&Real::from_ratio(1, 2, p()), 4, p()).unwrap();
        for (i, z) in half.zeros().iter().enumerate() {
            let kpi = Real::pi(p()) * (i as i64 + 1);
            assert!(z.rel_close(&kpi, &Real::pow10(-24, p())));
        }
        let minus = bessel_zeros(&Real::from_ratio(-1, 2, p()), 3, p()).unwrap();
        let first = Real::pi(p()) / 2;
        assert!(minus.zeros()[0].rel_close(&first, &Real::pow10(-24, p())));
        assert!(matches!(
            bessel_zeros(&Real::zero(p()), 501, p()),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn airy_first_zero() {
        let zl = airy_zeros(2, p()).unwrap();
        let i1 = Real::parse("3.37213440806816633030488996630811729186", p()).unwrap();
        assert!(zl.zeros()[0].rel_close(&i1, &Real::pow10(-24, p())));
        assert!(zl.zeros()[0] < zl.zeros()[1]);
    }

    #[test]
    fn q_families_scan() {
        let q = Real::from_ratio(1, 2, p());
        let zl = qairy_zeros(&q, 6, p()).unwrap();
        assert_eq!(zl.count(), 6);
        assert!(zl.zeros().windows(2).all(|w| w[0] < w[1]));
        let zl = qbessel_zeros(&Real::zero(p()), &q, 5, p()).unwrap();
        assert_eq!(zl.count(), 5);
        assert!(qairy_zeros(&Real::parse("0.95", p()).unwrap(), 3, p()).is_err());
    }
}
