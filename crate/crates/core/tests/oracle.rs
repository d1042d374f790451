use zerosum::newton::power_sums_recurrence;
use zerosum::oracle::{
    airy_zeros, bessel_zeros, dirichlet_zeros, qairy_zeros, qbessel_zeros, truncated_power_sum,
    xi_zeros, BesselFn, SignEvaluator, ZeroList,
};
use zerosum::series::{
    airy_sigmas, bessel_sigmas, qairy_sigmas, qbessel_sigmas, BesselParams, QBesselParams,
};
use zerosum::zeta::{dirichlet_moments, kronecker_character, riemann_moments, QuadratureConfig};
use zerosum::{CoefficientSeries, Precision, Real};

fn p() -> Precision {
    Precision::default()
}

fn r(n: i64, d: i64) -> Real {
    Real::from_ratio(n, d, p())
}

fn assert_brackets_newton(zl: &ZeroList, series: &CoefficientSeries, orders: usize) {
    let newton = power_sums_recurrence(series, orders).unwrap();
    for n in 1..=orders {
        let t = zl.tail(n);
        assert!(!t.value.is_negative());
        let s = truncated_power_sum(zl, n, zl.mode(), &t);
        assert!(
            s.contains(newton.s(n)),
            "{} n={n}: {} ± {} vs {}",
            series.source(),
            s.estimate.to_decimal(20),
            s.error_bound.to_decimal(4),
            newton.s(n).to_decimal(20)
        );
    }
}

fn strictly_increasing(zl: &ZeroList) -> bool {
    zl.zeros().windows(2).all(|w| w[0] < w[1])
}

#[test]
fn bessel_brackets_carry_sign_changes() {
    let nu = r(1, 3);
    let zl = bessel_zeros(&nu, 30, p()).unwrap();
    let ev = SignEvaluator::new(BesselFn::new(&nu), p());
    for (lo, hi) in zl.brackets() {
        assert_eq!(ev.sign(lo).unwrap().sign * ev.sign(hi).unwrap().sign, -1);
    }
    assert!(strictly_increasing(&zl));
    let tol = p().tolerance(25);
    assert!(zl.residuals().iter().all(|x| *x < tol));
}

#[test]
fn bessel_zeros_interlace() {
    let z: Vec<ZeroList> = (0..3)
        .map(|nu| bessel_zeros(&r(nu, 1), 21, p()).unwrap())
        .collect();
    for nu in 0..2 {
        for k in 0..20 {
            assert!(z[nu].zeros()[k] < z[nu + 1].zeros()[k]);
            assert!(z[nu + 1].zeros()[k] < z[nu].zeros()[k + 1]);
        }
    }
}

#[test]
fn bessel_oracle_brackets_newton() {
    for nu in [r(0, 1), r(1, 1), r(5, 2)] {
        let zl = bessel_zeros(&nu, 100, p()).unwrap();
        let c = bessel_sigmas(&BesselParams::new(nu).unwrap(), 3).unwrap();
        assert_brackets_newton(&zl, &c, 3);
    }
}

#[test]
fn airy_oracle_brackets_newton() {
    let zl = airy_zeros(60, p()).unwrap();
    assert!(strictly_increasing(&zl));
    assert!(zl.zeros()[0].is_positive());
    assert_brackets_newton(&zl, &airy_sigmas(3, p()).unwrap(), 3);
}

#[test]
fn q_families_grow_geometrically() {
    for q in [r(1, 10), r(3, 10), r(1, 2)] {
        let zl = qairy_zeros(&q, 25, p()).unwrap();
        let ratios: Vec<f64> = zl
            .zeros()
            .windows(2)
            .map(|w| (&w[1] / &w[0]).to_f64())
            .collect();
        assert!(ratios.iter().all(|&x| x > 1.0));
        let target = 1.0 / (q.to_f64() * q.to_f64());
        assert!((ratios.last().unwrap() / target - 1.0).abs() < 1e-3);
        assert_brackets_newton(&zl, &qairy_sigmas(&q, 3).unwrap(), 3);

        let zl = qbessel_zeros(&r(1, 2), &q, 25, p()).unwrap();
        assert!(strictly_increasing(&zl));
        let params = QBesselParams::new(r(1, 2), q.clone()).unwrap();
        assert_brackets_newton(&zl, &qbessel_sigmas(&params, 3).unwrap(), 3);
    }
}

#[test]
fn xi_oracle() {
    let cfg = QuadratureConfig::new(50);
    let zl = xi_zeros(30, &cfg).unwrap();
    let g1 = zl.zeros()[0].to_f64();
    assert!(g1 > 14.0 && g1 < 14.2);
    assert!(strictly_increasing(&zl));
    let table = riemann_moments(3, &cfg).unwrap();
    assert_brackets_newton(&zl, &table.to_series().unwrap(), 3);
}

#[test]
fn dirichlet_oracle() {
    let cfg = QuadratureConfig::new(40);
    let chi = kronecker_character(-4).unwrap();
    let zl = dirichlet_zeros(&chi, 20, &cfg).unwrap();
    assert!(strictly_increasing(&zl));
    let table = dirichlet_moments(&chi, 3, &cfg).unwrap();
    assert_brackets_newton(&zl, &table.to_series().unwrap(), 3);
}
