//! From elementary symmetric sums to power sums.
//!
//! For an absolutely summable sequence `λ_k` write
//! `f(z) = Π (1 - z λ_k) = Σ (-1)^n σ_n z^n` and `s_n = Σ λ_k^n`. The power
//! sums follow from the `σ_n` in two independent ways:
//!
//! * Newton's recurrence
//!   `s_n = (-1)^{n-1} n σ_n + Σ_{j=1}^{n-1} (-1)^{j-1} σ_j s_{n-j}`;
//! * Cramer's rule on the triangular system behind it, which gives
//!   `s_n / c^n` as the determinant of an `n × n` lower-Hessenberg matrix for
//!   any non-zero scale `c`.
//!
//! The determinant is evaluated by Gaussian elimination with partial
//! pivoting, not by expanding along the Hessenberg structure (which would
//! just replay the recurrence). Finite-list helpers compute `σ_n`, `s_n` and
//! the derivative ratio `(-1)^n f^{(n)}(z) / (n! f(z))` directly, and serve as
//! oracles in tests.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::precision::{Precision, Real};

/// Function families with a coefficient provider.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sinc,
    Bessel,
    Airy,
    QBessel,
    QAiry,
    Riemann,
    Dirichlet,
    /// Coefficients built from an explicit finite list of `λ`.
    Finite,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sinc => "sinc",
            Family::Bessel => "bessel",
            Family::Airy => "airy",
            Family::QBessel => "qbessel",
            Family::QAiry => "qairy",
            Family::Riemann => "zeta",
            Family::Dirichlet => "dirichlet",
            Family::Finite => "finite",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "sinc" | "sin" => Family::Sinc,
            "bessel" => Family::Bessel,
            "airy" => Family::Airy,
            "qbessel" => Family::QBessel,
            "qairy" => Family::QAiry,
            "zeta" | "riemann" => Family::Riemann,
            "dirichlet" => Family::Dirichlet,
            "finite" => Family::Finite,
            _ => return Err(Error::Domain(format!("unknown function family '{s}'"))),
        })
    }
}

/// Provenance of a coefficient series: which family, which parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct Source {
    pub family: Family,
    pub params: Vec<(String, String)>,
}

impl Source {
    pub fn new(family: Family) -> Self {
        Source {
            family,
            params: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.push((key.to_string(), value.into()));
        self
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        for (k, v) in &self.params {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// A finite prefix `σ_0 ..= σ_N` with `σ_0 = 1`.
#[derive(Debug, Clone)]
pub struct CoefficientSeries {
    sigmas: Vec<Real>,
    source: Source,
    precision: Precision,
}

impl CoefficientSeries {
    pub fn new(sigmas: Vec<Real>, source: Source) -> Result<Self> {
        if sigmas.len() < 2 {
            return Err(Error::InsufficientCoefficients {
                requested: 1,
                available: sigmas.len(),
            });
        }
        let p = sigmas[0].precision();
        if sigmas[0] != Real::one(p) {
            return Err(Error::Unnormalized {
                got: sigmas[0].to_decimal(20),
            });
        }
        Ok(CoefficientSeries {
            sigmas,
            source,
            precision: p,
        })
    }

    pub fn sigmas(&self) -> &[Real] {
        &self.sigmas
    }

    pub fn sigma(&self, n: usize) -> &Real {
        &self.sigmas[n]
    }

    /// Number of stored coefficients (`N + 1`).
    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    /// Highest index `N`.
    pub fn order(&self) -> usize {
        self.sigmas.len() - 1
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if n == 0 || n >= self.sigmas.len() {
            return Err(Error::InsufficientCoefficients {
                requested: n,
                available: self.sigmas.len(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Recurrence,
    Determinant,
    /// Direct summation over an explicit list of `λ`.
    Direct,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::Determinant => "determinant",
            Method::Direct => "direct",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Power sums `s_1 ..= s_N` and how they were obtained.
#[derive(Debug, Clone)]
pub struct PowerSumReport {
    sums: Vec<Real>,
    method: Method,
    scale: Option<Real>,
    precision: Precision,
}

impl PowerSumReport {
    pub fn sums(&self) -> &[Real] {
        &self.sums
    }

    /// `s_n`, one-based.
    pub fn s(&self, n: usize) -> &Real {
        &self.sums[n - 1]
    }

    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// The determinant scale `c`, when the determinant route was used.
    pub fn scale(&self) -> Option<&Real> {
        self.scale.as_ref()
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }
}

fn alternate(x: &Real, k: usize) -> Real {
    if k.is_multiple_of(2) {
        x.clone()
    } else {
        -x
    }
}

pub fn power_sums_recurrence(c: &CoefficientSeries, n: usize) -> Result<PowerSumReport> {
    c.check_order(n)?;
    let sig = c.sigmas();
    let mut s: Vec<Real> = Vec::with_capacity(n);
    for m in 1..=n {
        let mut acc = alternate(&sig[m], m - 1) * m as i64;
        for j in 1..m {
            acc += alternate(&(&sig[j] * &s[m - j - 1]), j - 1);
        }
        s.push(acc);
    }
    Ok(PowerSumReport {
        sums: s,
        method: Method::Recurrence,
        scale: None,
        precision: c.precision(),
    })
}

/// The `n × n` lower-Hessenberg matrix whose determinant is `s_n / c^n`.
///
/// Strictly below the diagonal of the first `n-1` columns, entry `(i, j)` is
/// `(-1)^{i-j} σ_{i-j} / c^{i-j}`; the diagonal is one; the last column holds
/// `(-1)^i (i+1) σ_{i+1} / c^{i+1}` (zero-based `i`).
pub fn newton_matrix(c: &CoefficientSeries, scale: &Real, n: usize) -> Result<Vec<Vec<Real>>> {
    c.check_order(n)?;
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let p = c.precision();
    let sig = c.sigmas();
    // scaled[k] = (-1)^k σ_k / c^k
    let inv = scale.recip();
    let mut scaled = Vec::with_capacity(n + 1);
    let mut pow = Real::one(p);
    for (k, s) in sig.iter().enumerate().take(n + 1) {
        scaled.push(alternate(&(s * &pow), k));
        pow *= &inv;
    }
    let mut m = vec![vec![Real::zero(p); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate().take(n - 1) {
            if i == j {
                *cell = Real::one(p);
            } else if i > j {
                *cell = scaled[i - j].clone();
            }
        }
        // (-1)^i (i+1) σ_{i+1}/c^{i+1} = -(i+1) * scaled[i+1]
        row[n - 1] = -(&scaled[i + 1] * (i as i64 + 1));
    }
    Ok(m)
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn determinant(mut m: Vec<Vec<Real>>) -> Real {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    let p = m
        .first()
        .and_then(|r| r.first())
        .map(|x| x.precision())
        .unwrap_or_default();
    let mut det = Real::one(p);
    for k in 0..n {
        let pivot = (k..n)
            .max_by(|&a, &b| {
                m[a][k]
                    .abs()
                    .partial_cmp(&m[b][k].abs())
                    .expect("finite entries")
            })
            .expect("non-empty range");
        if m[pivot][k].is_zero() {
            return Real::zero(p);
        }
        if pivot != k {
            m.swap(pivot, k);
            det = -det;
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let prow = &upper[k];
        for row in lower.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] / &prow[k];
            for j in k + 1..n {
                let d = &factor * &prow[j];
                row[j] -= d;
            }
            row[k] = Real::zero(p);
        }
        det *= &m[k][k];
    }
    det
}

pub fn power_sums_determinant(
    c: &CoefficientSeries,
    scale: &Real,
    n: usize,
) -> Result<PowerSumReport> {
    c.check_order(n)?;
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let p = c.precision();
    let work = p.with_extra_digits(10);
    let widened = CoefficientSeries {
        sigmas: c.sigmas()[..=n]
            .iter()
            .map(|s| s.with_precision(work))
            .collect(),
        source: c.source().clone(),
        precision: work,
    };
    let scale_w = scale.with_precision(work);
    let mut sums = Vec::with_capacity(n);
    for m in 1..=n {
        let det = determinant(newton_matrix(&widened, &scale_w, m)?);
        sums.push((det * scale_w.powi(m as i64)).with_precision(p));
    }
    Ok(PowerSumReport {
        sums,
        method: Method::Determinant,
        scale: Some(scale.clone()),
        precision: p,
    })
}

/// `e_0 ..= e_nmax` of a finite list, by the one-pass product recurrence.
pub fn elementary_symmetric_all(lambdas: &[Real], nmax: usize) -> Vec<Real> {
    let p = lambdas.first().map(|l| l.precision()).unwrap_or_default();
    let mut e = vec![Real::zero(p); nmax + 1];
    e[0] = Real::one(p);
    for (i, lam) in lambdas.iter().enumerate() {
        let top = (i + 1).min(nmax);
        for k in (1..=top).rev() {
            let t = lam * &e[k - 1];
            e[k] += t;
        }
    }
    e
}

/// `e_n(λ)`; zero when `n` exceeds the list length.
pub fn elementary_symmetric_finite(lambdas: &[Real], n: usize) -> Real {
    if n > lambdas.len() {
        let p = lambdas.first().map(|l| l.precision()).unwrap_or_default();
        return Real::zero(p);
    }
    elementary_symmetric_all(lambdas, n)
        .pop()
        .expect("non-empty")
}

/// Coefficient series of `Π (1 - z λ_k)` for an explicit list.
pub fn series_from_lambdas(lambdas: &[Real]) -> Result<CoefficientSeries> {
    let e = elementary_symmetric_all(lambdas, lambdas.len());
    CoefficientSeries::new(
        e,
        Source::new(Family::Finite).with("count", lambdas.len().to_string()),
    )
}

/// Both sides of `(-1)^n f^{(n)}(z) / (n! f(z)) = e_n(λ_k / (1 - z λ_k))`
/// for `f(z) = Π (1 - z λ_k)`.
///
/// The left side differentiates the expanded polynomial; the right side
/// works with the shifted list `λ_k / (1 - z λ_k)`.
pub fn derivative_ratio_check(lambdas: &[Real], z: &Real, n: usize) -> Result<(Real, Real)> {
    let p = z.precision();
    let eps = p.tolerance(5);
    let mut shifted = Vec::with_capacity(lambdas.len());
    for (index, lam) in lambdas.iter().enumerate() {
        let d = Real::one(p) - z * lam;
        if d.abs() <= eps {
            return Err(Error::Singular { index });
        }
        shifted.push(lam / d);
    }
    let m = lambdas.len();
    let e = elementary_symmetric_all(lambdas, m);
    // f(z) = Σ a_k z^k with a_k = (-1)^k e_k
    let coeff = |k: usize| alternate(&e[k], k);
    let mut f = Real::zero(p);
    let mut zk = Real::one(p);
    for k in 0..=m {
        f += coeff(k) * &zk;
        zk *= z;
    }
    // f^{(n)}(z)/n! = Σ_{k≥n} C(k, n) a_k z^{k-n}
    let mut deriv = Real::zero(p);
    let mut zk = Real::one(p);
    let mut binom = Real::one(p);
    for k in n..=m {
        deriv += coeff(k) * &binom * &zk;
        zk *= z;
        // C(k+1, n) = C(k, n) (k+1) / (k+1-n)
        binom = binom * (k as i64 + 1) / (k as i64 + 1 - n as i64);
    }
    let lhs = alternate(&(deriv / f), n);
    let rhs = elementary_symmetric_finite(&shifted, n);
    Ok((lhs, rhs))
}

/// `s_n = Σ λ_k^n` by direct summation.
pub fn power_sums_finite(lambdas: &[Real], n: usize) -> PowerSumReport {
    let p = lambdas.first().map(|l| l.precision()).unwrap_or_default();
    let mut sums = vec![Real::zero(p); n];
    for lam in lambdas {
        let mut pw = lam.clone();
        for s in sums.iter_mut() {
            *s += &pw;
            pw *= lam;
        }
    }
    PowerSumReport {
        sums,
        method: Method::Direct,
        scale: None,
        precision: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::default()
    }

    fn r(n: i64, d: i64) -> Real {
        Real::from_ratio(n, d, p())
    }

    fn thirds() -> Vec<Real> {
        vec![r(1, 1), r(1, 2), r(1, 3)]
    }

    #[test]
    fn unnormalized_series_rejected() {
        let err = CoefficientSeries::new(vec![r(2, 1), r(1, 1)], Source::new(Family::Finite));
        assert!(matches!(err, Err(Error::Unnormalized { .. })));
        let err = CoefficientSeries::new(vec![r(1, 1)], Source::new(Family::Finite));
        assert!(matches!(err, Err(Error::InsufficientCoefficients { .. })));
    }

    #[test]
    fn single_zero() {
        let lam = r(3, 7);
        let c = CoefficientSeries::new(
            vec![r(1, 1), lam.clone(), r(0, 1), r(0, 1), r(0, 1)],
            Source::new(Family::Finite),
        )
        .unwrap();
        let rep = power_sums_recurrence(&c, 4).unwrap();
        for n in 1..=4 {
            assert!(rep.s(n).rel_close(&lam.powi(n as i64), &p().tolerance(2)));
        }
        assert_eq!(rep.s(1), &lam);
    }

    #[test]
    fn three_point_example() {
        let c = CoefficientSeries::new(
            vec![r(1, 1), r(11, 6), r(1, 1), r(1, 6)],
            Source::new(Family::Finite),
        )
        .unwrap();
        let rec = power_sums_recurrence(&c, 2).unwrap();
        assert!(rec.s(2).rel_close(&r(49, 36), &p().tolerance(2)));
        let det = power_sums_determinant(&c, &r(-1, 1), 3).unwrap();
        assert!(det.s(2).rel_close(&r(49, 36), &p().tolerance(2)));
        assert!(det.s(1).rel_close(&r(11, 6), &p().tolerance(2)));
        assert_eq!(det.scale(), Some(&r(-1, 1)));
        let direct = power_sums_finite(&thirds(), 3);
        assert!(direct.s(3).rel_close(det.s(3), &p().tolerance(2)));
    }

    #[test]
    fn order_and_scale_errors() {
        let c = series_from_lambdas(&thirds()).unwrap();
        assert!(matches!(
            power_sums_recurrence(&c, 4),
            Err(Error::InsufficientCoefficients { .. })
        ));
        assert!(matches!(
            power_sums_recurrence(&c, 0),
            Err(Error::InsufficientCoefficients { .. })
        ));
        assert!(matches!(
            power_sums_determinant(&c, &r(0, 1), 2),
            Err(Error::ZeroScale)
        ));
    }

    #[test]
    fn elementary_symmetric_examples() {
        let l = thirds();
        assert_eq!(elementary_symmetric_finite(&l, 0), r(1, 1));
        assert!(elementary_symmetric_finite(&l, 2).rel_close(&r(1, 1), &p().tolerance(2)));
        assert!(elementary_symmetric_finite(&l, 3).rel_close(&r(1, 6), &p().tolerance(2)));
        assert!(elementary_symmetric_finite(&l, 4).is_zero());
    }

    #[test]
    fn derivative_ratio_edges() {
        let l = thirds();
        let z0 = Real::zero(p());
        let (lhs, rhs) = derivative_ratio_check(&l, &z0, 3).unwrap();
        assert!(lhs.rel_close(&r(1, 6), &p().tolerance(3)));
        assert!(rhs.rel_close(&r(1, 6), &p().tolerance(3)));
        let (lhs, rhs) = derivative_ratio_check(&l, &z0, 1).unwrap();
        assert!(lhs.rel_close(&r(11, 6), &p().tolerance(3)));
        assert!(rhs.rel_close(&r(11, 6), &p().tolerance(3)));
        // z = 1/λ_2 = 2 makes the second factor vanish
        assert!(matches!(
            derivative_ratio_check(&l, &r(2, 1), 1),
            Err(Error::Singular { index: 1 })
        ));
    }

    #[test]
    fn determinant_basics() {
        let m = vec![vec![r(0, 1), r(2, 1)], vec![r(3, 1), r(4, 1)]];
        assert_eq!(determinant(m), r(-6, 1));
        let m = vec![vec![r(1, 1), r(2, 1)], vec![r(2, 1), r(4, 1)]];
        assert!(determinant(m).is_zero());
    }

    #[test]
    fn power_sums_of_repeated_ones() {
        let rep = power_sums_finite(&[r(1, 1), r(1, 1)], 5);
        assert!(rep.sums().iter().all(|s| *s == r(2, 1)));
        assert_eq!(rep.method(), Method::Direct);
    }
}
