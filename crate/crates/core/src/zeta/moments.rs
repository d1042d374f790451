//! Moments `b_n = ∫_0^∞ t^{2n} φ(t) dt` and `β_n = b_n / ((2n)! b_0)`.

use super::character::DirichletCharacter;
use super::kernel::Kernel;
use super::quadrature::{GaussLegendre, Grid, QuadratureConfig};
use crate::error::{Error, Result};
use crate::newton::{CoefficientSeries, Family, Source};
use crate::precision::{factorial, Precision, Real};

/// Highest moment order computed by default.
pub const MAX_MOMENT_ORDER: usize = 12;

#[derive(Debug, Clone)]
pub struct MomentTable {
    kernel: Kernel,
    b: Vec<Real>,
    beta: Vec<Real>,
    quadrature_error: Vec<Real>,
    precision: Precision,
}

impl MomentTable {
    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn b(&self) -> &[Real] {
        &self.b
    }

    pub fn beta(&self) -> &[Real] {
        &self.beta
    }

    /// Absolute error bound of each `b_n`.
    pub fn quadrature_error(&self) -> &[Real] {
        &self.quadrature_error
    }

    /// Bound on `|β_n - β_n^{true}|` from the errors of `b_n` and `b_0`.
    pub fn beta_error(&self) -> Vec<Real> {
        let e0 = &self.quadrature_error[0] / self.b[0].abs();
        self.beta
            .iter()
            .zip(&self.b)
            .zip(&self.quadrature_error)
            .enumerate()
            .map(|(k, ((beta, b), e))| {
                if k == 0 {
                    Real::zero(self.precision)
                } else if b.is_zero() {
                    e.clone()
                } else {
                    beta.abs() * (e / b.abs() + &e0)
                }
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.b.len() - 1
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// The coefficient series `σ_n = β_n` of `Ξ(√z) / b_0`.
    pub fn to_series(&self) -> Result<CoefficientSeries> {
        let source = match &self.kernel {
            Kernel::Riemann => Source::new(Family::Riemann),
            Kernel::Dirichlet(chi) => {
                let s = Source::new(Family::Dirichlet);
                match chi.discriminant() {
                    Some(d) => s.with("discriminant", d.to_string()),
                    None => s.with("modulus", chi.modulus().to_string()),
                }
                .with("a", chi.parity_a().to_string())
            }
        };
        CoefficientSeries::new(self.beta.clone(), source)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_MOMENT_ORDER {
        return Err(Error::LimitExceeded {
            requested: n,
            max: MAX_MOMENT_ORDER,
        });
    }
    if n == 0 {
        return Err(Error::InsufficientCoefficients {
            requested: 1,
            available: 1,
        });
    }
    Ok(())
}

/// Integrate all moments on one grid, doubling the panel count until two
/// successive grids agree to the target relative to `∫ t^{2n} |φ|`.
pub fn kernel_moments(kernel: Kernel, n: usize, cfg: &QuadratureConfig) -> Result<MomentTable> {
    check_order(n)?;
    let digits = cfg.target_digits + 5;
    let work = Precision::digits(digits + cfg.series_cutoff);
    let out = Precision::digits(cfg.target_digits);
    let t_max = cfg.cutoff_for(&kernel, digits, n);
    let gl = GaussLegendre::new(cfg.nodes_per_panel, work);
    let mut panels = cfg.initial_panels;
    let (mut b, _) = Grid::new(&kernel, &gl, t_max, panels, work).moments(n);
    let tail = {
        let t = Real::from_f64(t_max, work);
        (t.powi(2 * n as i64) * kernel.phi(&t)).abs()
    };
    loop {
        if panels * 2 > cfg.max_panels {
            return Err(Error::AccuracyNotReached {
                target: cfg.target_digits,
                estimate: f64::NAN,
            });
        }
        panels *= 2;
        let (next, babs) = Grid::new(&kernel, &gl, t_max, panels, work).moments(n);
        let diffs: Vec<Real> = b.iter().zip(&next).map(|(x, y)| (x - y).abs()).collect();
        let ok = diffs
            .iter()
            .zip(&babs)
            .all(|(d, s)| *d <= s * Real::pow10(-(digits as i32), work));
        b = next;
        if ok {
            let errors: Vec<Real> = diffs
                .iter()
                .map(|d| (d + &tail).with_precision(out))
                .collect();
            return finish(kernel, b, errors, out);
        }
    }
}

fn finish(kernel: Kernel, b: Vec<Real>, errors: Vec<Real>, p: Precision) -> Result<MomentTable> {
    let b0 = &b[0];
    if b0.abs() <= errors[0] {
        return Err(Error::B0Vanishes {
            bound: errors[0].to_f64(),
        });
    }
    let beta: Vec<Real> = b
        .iter()
        .enumerate()
        .map(|(k, bk)| {
            if k == 0 {
                Real::one(p)
            } else {
                (bk / (factorial(2 * k, b0.precision()) * b0)).with_precision(p)
            }
        })
        .collect();
    let b = b.into_iter().map(|x| x.with_precision(p)).collect();
    Ok(MomentTable {
        kernel,
        b,
        beta,
        quadrature_error: errors,
        precision: p,
    })
}

pub fn riemann_moments(n: usize, cfg: &QuadratureConfig) -> Result<MomentTable> {
    kernel_moments(Kernel::Riemann, n, cfg)
}

pub fn dirichlet_moments(
    chi: &DirichletCharacter,
    n: usize,
    cfg: &QuadratureConfig,
) -> Result<MomentTable> {
    kernel_moments(Kernel::Dirichlet(chi.clone()), n, cfg)
}

/// `Σ_{n≤N} (-1)^n b_n z^{2n} / (2n)!`.
pub fn taylor_xi(table: &MomentTable, z: &Real) -> Real {
    let p = table.precision();
    let z2 = z * z;
    let mut acc = Real::zero(p);
    let mut zk = Real::one(p);
    for (k, b) in table.b().iter().enumerate() {
        let term = b * &zk / factorial(2 * k, p);
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        zk *= &z2;
    }
    acc
}

/// `s_1 ..= s_4` written directly in the moments `b_0 ..= b_4`.
pub fn moment_s_closed(table: &MomentTable, k: usize) -> Result<Real> {
    if k == 0 || k > 4 {
        return Err(Error::OutOfRange { k, max: 4 });
    }
    if table.order() < k {
        return Err(Error::InsufficientCoefficients {
            requested: k,
            available: table.order(),
        });
    }
    let b = table.b();
    let b0 = &b[0];
    let val = match k {
        1 => &b[1] / (b0 * 2),
        2 => (b[1].powi(2) * 3 - b0 * &b[2]) / (b0.powi(2) * 12),
        3 => {
            (b[1].powi(3) * 30 - b0 * &b[1] * &b[2] * 15 + b0.powi(2) * &b[3]) / (b0.powi(3) * 240)
        }
        _ => {
            (b[1].powi(4) * 630 - b0 * b[1].powi(2) * &b[2] * 420
                + b0.powi(2) * b[2].powi(2) * 35
                + b0.powi(2) * &b[1] * &b[3] * 28
                - b0.powi(3) * &b[4])
                / (b0.powi(4) * 10080)
        }
    };
    Ok(val)
}

#[cfg(test)]
mod tests {
    use super::super::character::kronecker_character;
    use super::*;

    fn parse(s: &str, p: Precision) -> Real {
        Real::parse(s, p).unwrap()
    }

    #[test]
    fn riemann_table() {
        let cfg = QuadratureConfig::new(40);
        let t = riemann_moments(4, &cfg).unwrap();
        let p = t.precision();
        let refs = [
            "0.4971207781883141099127737396853977198073",
            "0.02297194431514543753524987649763217026459",
            "0.002962848433687632165368298995876427315264",
            "0.0005992959465975794918434262826081269066109",
            "0.0001609665745501956108849228970054451600547",
        ];
        for (b, r) in t.b().iter().zip(refs) {
            assert!(b.rel_close(&parse(r, p), &Real::pow10(-38, p)), "{b}");
        }
        assert_eq!(t.beta()[0], Real::one(p));
        assert!(t
            .quadrature_error()
            .iter()
            .all(|e| *e < Real::pow10(-40, p)));
        assert!(t.b().iter().all(|b| b.is_positive()));
    }

    #[test]
    fn dirichlet_tables() {
        let cfg = QuadratureConfig::new(30);
        for (d, b0, b1) in [
            (
                -3,
                "0.56923003844227513115385",
                "0.0645519141047326759449596",
            ),
            (
                -4,
                "0.98071361405771350407137194920328",
                "0.15302040184343335379437382415870",
            ),
            (
                5,
                "0.94375143798668721342198016523290836",
                "0.14808801834489031945279281886500605",
            ),
        ] {
            let chi = kronecker_character(d).unwrap();
            let t = dirichlet_moments(&chi, 1, &cfg).unwrap();
            let p = t.precision();
            assert!(
                t.b()[0].rel_close(&parse(b0, p), &Real::pow10(-22, p)),
                "{d}"
            );
            assert!(
                t.b()[1].rel_close(&parse(b1, p), &Real::pow10(-22, p)),
                "{d}"
            );
        }
    }

    #[test]
    fn order_cap() {
        let cfg = QuadratureConfig::new(30);
        assert!(matches!(
            riemann_moments(13, &cfg),
            Err(Error::LimitExceeded {
                requested: 13,
                max: 12
            })
        ));
    }

    #[test]
    fn closed_forms_in_moments() {
        let cfg = QuadratureConfig::new(40);
        let t = riemann_moments(4, &cfg).unwrap();
        let rec = crate::newton::power_sums_recurrence(&t.to_series().unwrap(), 4).unwrap();
        for k in 1..=4 {
            let c = moment_s_closed(&t, k).unwrap();
            assert!(
                c.rel_close(rec.s(k), &Real::pow10(-30, t.precision())),
                "{k}"
            );
        }
        assert!(moment_s_closed(&t, 5).is_err());
    }
}
