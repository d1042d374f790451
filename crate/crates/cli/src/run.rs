use zerosum::newton::{power_sums_determinant, power_sums_recurrence};
use zerosum::oracle::{
    airy_zeros, bessel_zeros, dirichlet_zeros, qairy_zeros, qbessel_zeros, truncated_power_sum,
    xi_zeros, ZeroList,
};
use zerosum::precision::{bernoulli, factorial, rational_to_real};
use zerosum::series::{
    airy_kappa_squared, airy_normalization, airy_sigmas, bessel_s_closed, bessel_sigmas,
    qairy_s_closed, qairy_sigmas, qbessel_s_closed, qbessel_sigmas, sinc_sigmas, BesselParams,
    QBesselParams,
};
use zerosum::zeta::{
    dirichlet_moments, kronecker_character, moment_s_closed, riemann_moments, theta_selfcheck,
    DirichletCharacter, MomentTable, QuadratureConfig,
};
use zerosum::{CoefficientSeries, Family, PowerSumReport, Real};

use crate::config::{Failure, RunConfig};
use crate::report::{Check, MomentRow, OracleRow, Report, SumRow, ZeroRow};
use crate::MethodArg;

fn character(cfg: &RunConfig) -> Result<DirichletCharacter, Failure> {
    Ok(kronecker_character(cfg.discriminant.expect("validated"))?)
}

fn moments(cfg: &RunConfig, n: usize) -> Result<MomentTable, Failure> {
    let qc = QuadratureConfig::new(cfg.digits);
    Ok(match cfg.family {
        Family::Riemann => riemann_moments(n, &qc)?,
        Family::Dirichlet => dirichlet_moments(&character(cfg)?, n, &qc)?,
        f => {
            return Err(Failure::Config(format!(
                "moments are defined for zeta and dirichlet, not {f}"
            )))
        }
    })
}

fn series(cfg: &RunConfig) -> Result<CoefficientSeries, Failure> {
    let n = cfg.order;
    let p = cfg.precision;
    let nu = || cfg.nu.clone().expect("validated");
    let q = || cfg.q.clone().expect("validated");
    Ok(match cfg.family {
        Family::Sinc => sinc_sigmas(n, p)?,
        Family::Bessel => bessel_sigmas(&BesselParams::new(nu())?, n)?,
        Family::Airy => airy_sigmas(n, p)?,
        Family::QBessel => qbessel_sigmas(&QBesselParams::new(nu(), q())?, n)?,
        Family::QAiry => qairy_sigmas(&q(), n)?,
        Family::Riemann | Family::Dirichlet => moments(cfg, n)?.to_series()?,
        Family::Finite => unreachable!("rejected by config"),
    })
}

fn base_report(cfg: &RunConfig, uses_scale: bool) -> Result<Report, Failure> {
    let mut params = Vec::new();
    if let Some(nu) = &cfg.nu {
        params.push(("nu".to_string(), cfg.fmt(nu)));
    }
    if let Some(q) = &cfg.q {
        params.push(("q".to_string(), cfg.fmt(q)));
    }
    if let Some(d) = cfg.discriminant {
        params.push(("discriminant".to_string(), d.to_string()));
        params.push(("a".to_string(), character(cfg)?.parity_a().to_string()));
    }
    if uses_scale {
        params.push(("scale".to_string(), cfg.fmt(&cfg.scale)));
    }
    Ok(Report {
        function: cfg.family.name().to_string(),
        params,
        precision: cfg.digits,
        ..Report::default()
    })
}

struct Sums {
    rec: Option<PowerSumReport>,
    det: Option<PowerSumReport>,
}

fn compute(cfg: &RunConfig, c: &CoefficientSeries, method: MethodArg) -> Result<Sums, Failure> {
    let rec = match method {
        MethodArg::Determinant => None,
        _ => Some(power_sums_recurrence(c, cfg.order)?),
    };
    let det = match method {
        MethodArg::Recurrence => None,
        _ => Some(power_sums_determinant(c, &cfg.scale, cfg.order)?),
    };
    Ok(Sums { rec, det })
}

fn sum_rows(cfg: &RunConfig, sums: &Sums) -> Vec<SumRow> {
    let mut rows = Vec::new();
    for n in 1..=cfg.order {
        for (rep, method) in [(&sums.rec, "recurrence"), (&sums.det, "determinant")] {
            if let Some(r) = rep {
                rows.push(SumRow {
                    n,
                    value: cfg.fmt(r.s(n)),
                    method,
                });
            }
        }
    }
    rows
}

fn sigma_rows(cfg: &RunConfig, c: &CoefficientSeries) -> Option<Vec<String>> {
    cfg.sigmas.then(|| {
        c.sigmas()[..=cfg.order]
            .iter()
            .map(|s| cfg.fmt(s))
            .collect()
    })
}

pub fn cmd_sums(cfg: &RunConfig) -> Result<Report, Failure> {
    let c = series(cfg)?;
    let sums = compute(cfg, &c, cfg.method)?;
    let mut rep = base_report(cfg, cfg.method != MethodArg::Recurrence)?;
    rep.sigmas = sigma_rows(cfg, &c);
    rep.sums = sum_rows(cfg, &sums);
    Ok(rep)
}

pub fn cmd_moments(cfg: &RunConfig) -> Result<Report, Failure> {
    let table = moments(cfg, cfg.order)?;
    let mut rep = base_report(cfg, false)?;
    let beta_err = table.beta_error();
    rep.moments = Some(
        (0..=table.order())
            .map(|n| MomentRow {
                n,
                b: cfg.fmt(&table.b()[n]),
                beta: cfg.fmt(&table.beta()[n]),
                error: table.quadrature_error()[n].to_decimal(3),
                beta_error: beta_err[n].to_decimal(3),
            })
            .collect(),
    );
    Ok(rep)
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn close_check(cfg: &RunConfig, name: String, got: &Real, want: &Real, slack: i32) -> Check {
    let d = got.rel_diff(want);
    let passed = d <= cfg.precision.tolerance(slack);
    check(
        name,
        passed,
        format!("relative difference {}", d.to_decimal(3)),
    )
}

fn closed_form_checks(cfg: &RunConfig, rec: &PowerSumReport) -> Result<Vec<Check>, Failure> {
    let p = cfg.precision;
    let n = cfg.order;
    let mut out = Vec::new();
    let mut push = |k: usize, want: Real| {
        out.push(close_check(
            cfg,
            format!("closed-form s_{k}"),
            rec.s(k),
            &want,
            20,
        ));
    };
    match cfg.family {
        Family::Sinc => {
            // ζ(2k) from exact Bernoulli numbers
            let two_pi = Real::pi(p) * 2;
            for k in 1..=n.min(32) {
                let b = rational_to_real(&bernoulli(2 * k)?, p);
                push(
                    k,
                    (b * two_pi.powi(2 * k as i64) / (factorial(2 * k, p) * 2)).abs(),
                );
            }
        }
        Family::Bessel => {
            let params = BesselParams::new(cfg.nu.clone().expect("validated"))?;
            for k in 1..=n.min(5) {
                push(k, bessel_s_closed(&params, k)?);
            }
        }
        Family::Airy => push(1, airy_kappa_squared(p)?),
        Family::QBessel => {
            let params = QBesselParams::new(
                cfg.nu.clone().expect("validated"),
                cfg.q.clone().expect("validated"),
            )?;
            for k in 1..=n.min(3) {
                push(k, qbessel_s_closed(&params, k)?);
            }
        }
        Family::QAiry => {
            let q = cfg.q.clone().expect("validated");
            for k in 1..=n.min(5) {
                push(k, qairy_s_closed(&q, k)?);
            }
        }
        Family::Riemann | Family::Dirichlet => {
            let table = moments(cfg, n.min(4))?;
            for k in 1..=n.min(4) {
                push(k, moment_s_closed(&table, k)?);
            }
        }
        Family::Finite => {}
    }
    Ok(out)
}

fn extra_checks(cfg: &RunConfig) -> Result<Vec<Check>, Failure> {
    let p = cfg.precision;
    let mut out = Vec::new();
    match cfg.family {
        Family::Airy => {
            let norm = airy_normalization(p)?;
            let two_pi = Real::pi(p) * 2;
            let d = norm.alpha0.rel_diff(&two_pi);
            out.push(check(
                "airy-normalization",
                d <= p.tolerance(20),
                format!(
                    "the product formula gives alpha_0 = 2π (relative difference {}), so sigma_n = alpha_n / alpha_0",
                    d.to_decimal(3)
                ),
            ));
        }
        Family::Dirichlet => {
            let chi = character(cfg)?;
            for (a, b) in [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)] {
                let r = theta_selfcheck(&chi, &Real::from_ratio(a, b, p));
                out.push(check(
                    format!("theta x={a}/{b}"),
                    r <= p.tolerance(10),
                    format!("residual {}", r.to_decimal(3)),
                ));
            }
        }
        _ => {}
    }
    Ok(out)
}

fn default_zero_count(family: Family) -> usize {
    match family {
        Family::Sinc | Family::Bessel => 200,
        Family::Airy => 100,
        Family::QBessel | Family::QAiry => 40,
        Family::Riemann => 30,
        Family::Dirichlet => 20,
        Family::Finite => 0,
    }
}

/// Zeros of the family and the factor that turns their power sums into the
/// family's `s_n` (`π^{2n}` for sinc, whose zeros come from `J_{1/2}`).
fn zero_list(cfg: &RunConfig) -> Result<(ZeroList, Option<Real>), Failure> {
    let p = cfg.precision;
    let k = cfg.zeros.unwrap_or_else(|| default_zero_count(cfg.family));
    let nu = || cfg.nu.clone().expect("validated");
    let q = || cfg.q.clone().expect("validated");
    let qc = QuadratureConfig::new(cfg.digits);
    Ok(match cfg.family {
        Family::Sinc => (
            bessel_zeros(&Real::from_ratio(1, 2, p), k, p)?,
            Some(Real::pi(p).powi(2)),
        ),
        Family::Bessel => (bessel_zeros(&nu(), k, p)?, None),
        Family::Airy => (airy_zeros(k, p)?, None),
        Family::QBessel => (qbessel_zeros(&nu(), &q(), k, p)?, None),
        Family::QAiry => (qairy_zeros(&q(), k, p)?, None),
        Family::Riemann => (xi_zeros(k, &qc)?, None),
        Family::Dirichlet => (dirichlet_zeros(&character(cfg)?, k, &qc)?, None),
        Family::Finite => unreachable!("rejected by config"),
    })
}

fn oracle_rows(
    cfg: &RunConfig,
    rec: &PowerSumReport,
    max_n: usize,
) -> Result<(ZeroList, Vec<OracleRow>, Vec<Check>), Failure> {
    let (zl, factor) = zero_list(cfg)?;
    let mut rows = Vec::new();
    let mut checks = Vec::new();
    for n in 1..=max_n {
        let tail = zl.tail(n);
        let s = truncated_power_sum(&zl, n, zl.mode(), &tail);
        let f = factor
            .as_ref()
            .map(|f| f.powi(n as i64))
            .unwrap_or_else(|| Real::one(cfg.precision));
        let (partial, tail_v, est, err) = (
            &s.partial * &f,
            &tail.value * &f,
            &s.estimate * &f,
            &s.error_bound * &f,
        );
        let newton = rec.s(n);
        let inside = (newton - &est).abs() <= err;
        checks.push(check(
            format!("oracle s_{n}"),
            inside,
            format!(
                "{} zeros: [{}, {}] {} newton {}",
                zl.count(),
                (&est - &err).to_decimal(15),
                (&est + &err).to_decimal(15),
                if inside { "contains" } else { "misses" },
                newton.to_decimal(15)
            ),
        ));
        rows.push(OracleRow {
            n,
            partial: cfg.fmt(&partial),
            tail: cfg.fmt(&tail_v),
            estimate: cfg.fmt(&est),
            error_bound: err.to_decimal(6),
            newton: cfg.fmt(newton),
            bound_kind: tail.bound_kind.to_string(),
            note: tail.confidence_note.clone(),
        });
    }
    Ok((zl, rows, checks))
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Report, Failure> {
    let c = series(cfg)?;
    let sums = compute(cfg, &c, MethodArg::Both)?;
    let (rec, det) = (
        sums.rec.as_ref().expect("both"),
        sums.det.as_ref().expect("both"),
    );
    let mut rep = base_report(cfg, true)?;
    rep.sigmas = sigma_rows(cfg, &c);
    rep.sums = sum_rows(cfg, &sums);
    let mut checks = Vec::new();
    let (mut worst, mut worst_n) = (Real::zero(cfg.precision), 1);
    for n in 1..=cfg.order {
        let d = rec.s(n).rel_diff(det.s(n));
        if d > worst {
            worst = d;
            worst_n = n;
        }
    }
    checks.push(check(
        "recurrence-vs-determinant",
        worst <= cfg.precision.tolerance(15),
        format!(
            "n = 1..{}, worst relative difference {} at n = {worst_n}",
            cfg.order,
            worst.to_decimal(3)
        ),
    ));
    checks.extend(closed_form_checks(cfg, rec)?);
    checks.extend(extra_checks(cfg)?);
    if cfg.oracle {
        let (_, _, oc) = oracle_rows(cfg, rec, cfg.order.min(3))?;
        checks.extend(oc);
    }
    rep.checks = Some(checks);
    Ok(rep)
}

pub fn cmd_oracle(cfg: &RunConfig) -> Result<Report, Failure> {
    let c = series(cfg)?;
    let rec = power_sums_recurrence(&c, cfg.order)?;
    let mut rep = base_report(cfg, false)?;
    rep.sums = sum_rows(
        cfg,
        &Sums {
            rec: Some(rec.clone()),
            det: None,
        },
    );
    let (zl, rows, checks) = oracle_rows(cfg, &rec, cfg.order)?;
    rep.zeros = Some(
        zl.zeros()
            .iter()
            .zip(zl.brackets())
            .enumerate()
            .map(|(i, (z, (lo, hi)))| ZeroRow {
                k: i + 1,
                value: cfg.fmt(z),
                lo: cfg.fmt(lo),
                hi: cfg.fmt(hi),
            })
            .collect(),
    );
    rep.oracle = Some(rows);
    rep.checks = Some(checks);
    Ok(rep)
}
