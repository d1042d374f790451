use zerosum::precision::factorial;
use zerosum::zeta::{
    fundamental_discriminants, kronecker_character, riemann_moments, taylor_xi, theta_selfcheck,
    xi_cosine, Kernel, QuadratureConfig, XiEvaluator,
};
use zerosum::{Precision, Real};

fn p() -> Precision {
    Precision::default()
}

#[test]
fn xi_is_even() {
    let cfg = QuadratureConfig::new(40);
    let ev = XiEvaluator::new(Kernel::Riemann, &cfg, 20.0).unwrap();
    for z in [1, 5, 10, 20] {
        let z = Real::from_i64(z, ev.working_precision());
        let d = (ev.eval(&z) - ev.eval(&-&z)).abs();
        assert!(d <= *ev.error_bound());
    }
}

#[test]
fn taylor_series_matches_integral() {
    let cfg = QuadratureConfig::new(40);
    let table = riemann_moments(12, &cfg).unwrap();
    let bq = Precision::digits(40);
    let b12 = table.b()[12].clone();
    for z in 0..=5 {
        let zr = Real::from_i64(z, bq);
        let series = taylor_xi(&table, &zr);
        let integral = xi_cosine(&zr, &cfg).unwrap();
        // first omitted term is bounded by ten times the last kept one
        let trunc = &b12 * zr.powi(24) / factorial(24, bq) * 10;
        let qerr = table
            .quadrature_error()
            .iter()
            .enumerate()
            .fold(Real::zero(bq), |a, (k, e)| {
                a + e * zr.powi(2 * k as i64) / factorial(2 * k, bq)
            });
        let budget = qerr + trunc + Real::pow10(-35, bq);
        assert!((&series - &integral).abs() <= budget, "z = {z}");
    }
}

#[test]
fn riemann_moments_positive() {
    let table = riemann_moments(12, &QuadratureConfig::new(30)).unwrap();
    assert!(table.b().iter().all(|b| b.is_positive()));
    assert_eq!(table.beta()[0], Real::one(table.precision()));
}

#[test]
fn theta_law_for_small_discriminants() {
    let xs = [(1, 3), (1, 2), (1, 1), (2, 1), (3, 1)];
    for d in fundamental_discriminants(20) {
        let chi = kronecker_character(d).unwrap();
        for (a, b) in xs {
            let r = theta_selfcheck(&chi, &Real::from_ratio(a, b, p()));
            assert!(r < p().tolerance(10), "d = {d}, x = {a}/{b}");
        }
    }
}

#[test]
fn characters_multiplicative() {
    for d in fundamental_discriminants(20) {
        let chi = kronecker_character(d).unwrap();
        let m = chi.modulus() as i64;
        for a in 0..m {
            for b in 0..m {
                assert_eq!(chi.value(a * b), chi.value(a) * chi.value(b), "d = {d}");
            }
        }
    }
}
