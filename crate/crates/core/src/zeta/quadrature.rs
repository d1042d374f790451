//! Composite Gauss–Legendre quadrature of the kernels on `[0, T]`.

use super::kernel::Kernel;
use crate::error::{Error, Result};
use crate::precision::{Precision, Real};

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<Real>,
    weights: Vec<Real>,
}

impl GaussLegendre {
    /// Roots of `P_n` by Newton iteration from the usual cosine seeds.
    pub fn new(order: usize, p: Precision) -> Self {
        assert!(order >= 1);
        let n = order as i64;
        let eps = Real::pow10(-(p.decimal_digits() as i32) - 5, p);
        let mut nodes = vec![Real::zero(p); order];
        let mut weights = vec![Real::zero(p); order];
        for i in 0..order.div_ceil(2) {
            let seed = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut x = Real::from_f64(seed, p);
            let mut dp;
            loop {
                let (pn, d) = legendre(n, &x);
                dp = d;
                let dx = pn / &dp;
                x -= &dx;
                if dx.abs() <= eps {
                    break;
                }
            }
            let (_, d) = legendre(n, &x);
            dp = d;
            let w = Real::from_i64(2, p) / ((Real::one(p) - &x * &x) * &dp * &dp);
            nodes[i] = -&x;
            nodes[order - 1 - i] = x;
            weights[i] = w.clone();
            weights[order - 1 - i] = w;
        }
        if order % 2 == 1 {
            nodes[order / 2] = Real::zero(p);
        }
        GaussLegendre { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes in increasing order.
    pub fn nodes(&self) -> &[Real] {
        &self.nodes
    }

    pub fn weights(&self) -> &[Real] {
        &self.weights
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: i64, x: &Real) -> (Real, Real) {
    let p = x.precision();
    let mut p0 = Real::one(p);
    let mut p1 = x.clone();
    for k in 2..=n {
        let p2 = (x * &p1 * (2 * k - 1) - &p0 * (k - 1)) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = (x * &p1 - &p0) * n / (x * x - 1);
    (p1, d)
}

/// Accuracy targets and discretisation limits for kernel integrals.
#[derive(Debug, Clone)]
pub struct QuadratureConfig {
    /// Decimal digits the results must carry.
    pub target_digits: u32,
    /// Upper integration limit; chosen from the kernel's tail bound when `None`.
    pub t_cutoff: Option<f64>,
    /// Extra digits below the target at which kernel-series terms are dropped.
    pub series_cutoff: u32,
    pub nodes_per_panel: usize,
    pub initial_panels: usize,
    pub max_panels: usize,
}

impl QuadratureConfig {
    pub fn new(target_digits: u32) -> Self {
        QuadratureConfig {
            target_digits,
            t_cutoff: None,
            series_cutoff: 10,
            nodes_per_panel: 24,
            initial_panels: 8,
            max_panels: 2048,
        }
    }

    pub fn for_precision(p: Precision) -> Self {
        Self::new(p.decimal_digits())
    }

    pub fn precision(&self) -> Precision {
        Precision::digits(self.target_digits)
    }

    /// Smallest `T` on a grid of quarter units with
    /// `T^{2n} |φ(T)| < 10^{-digits-5}`; `n` is the highest moment needed.
    pub fn cutoff_for(&self, kernel: &Kernel, digits: u32, n: usize) -> f64 {
        if let Some(t) = self.t_cutoff {
            return t;
        }
        let mut t = 0.5f64;
        while kernel.log10_bound(t) + 2.0 * n as f64 * t.log10() >= -(digits as f64) - 5.0 {
            t += 0.25;
        }
        t
    }
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self::for_precision(Precision::default())
    }
}

/// Kernel samples on a composite Gauss–Legendre grid over `[0, T]` with
/// `M` equal panels.
#[derive(Debug, Clone)]
pub(crate) struct Grid {
    pub panel: Real,
    pub panels: usize,
    /// offsets of the nodes inside a panel, `H (1 + x_i) / 2`
    pub offsets: Vec<Real>,
    /// `w_i H / 2`
    pub weights: Vec<Real>,
    /// `φ(t)` at node `i` of panel `j`, row-major by panel
    pub phi: Vec<Vec<Real>>,
}

impl Grid {
    pub fn new(
        kernel: &Kernel,
        gl: &GaussLegendre,
        t_max: f64,
        panels: usize,
        p: Precision,
    ) -> Self {
        let panel = Real::from_f64(t_max, p) / panels as i64;
        let half = &panel / 2;
        let offsets: Vec<Real> = gl.nodes().iter().map(|x| (x + 1) * &half).collect();
        let weights: Vec<Real> = gl.weights().iter().map(|w| w * &half).collect();
        let phi = (0..panels)
            .map(|j| {
                let a = &panel * j as i64;
                offsets.iter().map(|c| kernel.phi(&(&a + c))).collect()
            })
            .collect();
        Grid {
            panel,
            panels,
            offsets,
            weights,
            phi,
        }
    }

    /// `∫ t^{2n} φ(t) dt` for `n = 0..=nmax`, and the same with `|φ|`.
    pub fn moments(&self, nmax: usize) -> (Vec<Real>, Vec<Real>) {
        let p = self.panel.precision();
        let mut b = vec![Real::zero(p); nmax + 1];
        let mut babs = vec![Real::zero(p); nmax + 1];
        for (j, row) in self.phi.iter().enumerate() {
            let a = &self.panel * j as i64;
            for ((c, w), f) in self.offsets.iter().zip(&self.weights).zip(row) {
                let t = &a + c;
                let t2 = &t * &t;
                let mut g = w * f;
                for n in 0..=nmax {
                    babs[n] += g.abs();
                    b[n] += &g;
                    g *= &t2;
                }
            }
        }
        (b, babs)
    }

    /// `∫ φ(t) cos(zt) dt`, rotating panel phases instead of calling `cos`
    /// at every node.
    pub fn cosine(&self, z: &Real) -> Real {
        let p = self.panel.precision();
        let cs: Vec<(Real, Real)> = self
            .offsets
            .iter()
            .map(|c| ((z * c).cos(), (z * c).sin()))
            .collect();
        let zh = z * &self.panel;
        let (ch, sh) = (zh.cos(), zh.sin());
        let (mut ca, mut sa) = (Real::one(p), Real::zero(p));
        let mut acc = Real::zero(p);
        for row in &self.phi {
            let mut cpart = Real::zero(p);
            let mut spart = Real::zero(p);
            for ((w, f), (c, s)) in self.weights.iter().zip(row).zip(&cs) {
                let g = w * f;
                cpart += &g * c;
                spart += g * s;
            }
            acc += &ca * cpart - &sa * spart;
            let next_c = &ca * &ch - &sa * &sh;
            sa = &sa * &ch + &ca * &sh;
            ca = next_c;
        }
        acc
    }
}

/// Repeated evaluation of `Ξ(z) = ∫_0^∞ φ(t) cos(zt) dt` for `|z| ≤ z_max`.
///
/// `Ξ(z)` decays like `e^{-π|z|/4}` while the integrand stays of order one,
/// so the working precision carries about `z_max π/4 · log10 e` extra digits
/// on top of the target.
#[derive(Debug, Clone)]
pub struct XiEvaluator {
    kernel: Kernel,
    grid: Grid,
    z_max: f64,
    error_bound: Real,
    target: Precision,
}

impl XiEvaluator {
    pub fn new(kernel: Kernel, cfg: &QuadratureConfig, z_max: f64) -> Result<Self> {
        let z_max = z_max.abs();
        let lost = (z_max * std::f64::consts::FRAC_PI_4 * std::f64::consts::LOG10_E).ceil() as u32;
        let digits = cfg.target_digits + lost + 10;
        let work = Precision::digits(digits + cfg.series_cutoff);
        let t_max = cfg.cutoff_for(&kernel, digits, 0);
        let gl = GaussLegendre::new(cfg.nodes_per_panel, work);
        let tol = Real::pow10(-(digits as i32), work);
        let probes: Vec<Real> = [0.0, 0.5 * z_max, z_max]
            .iter()
            .map(|&z| Real::from_f64(z, work))
            .collect();
        let mut panels = cfg.initial_panels;
        let mut grid = Grid::new(&kernel, &gl, t_max, panels, work);
        let mut vals: Vec<Real> = probes.iter().map(|z| grid.cosine(z)).collect();
        loop {
            if panels * 2 > cfg.max_panels {
                let worst = vals[0].abs().log10_abs();
                return Err(Error::AccuracyNotReached {
                    target: digits,
                    estimate: worst,
                });
            }
            panels *= 2;
            let finer = Grid::new(&kernel, &gl, t_max, panels, work);
            let next: Vec<Real> = probes.iter().map(|z| finer.cosine(z)).collect();
            let err = vals
                .iter()
                .zip(&next)
                .map(|(a, b)| (a - b).abs())
                .fold(Real::zero(work), |m, d| m.max(&d));
            grid = finer;
            vals = next;
            if err <= tol {
                return Ok(XiEvaluator {
                    kernel,
                    grid,
                    z_max,
                    error_bound: err.max(&tol),
                    target: Precision::digits(cfg.target_digits),
                });
            }
        }
    }

    pub fn kernel(&self) -> &Kernel {
        &self.kernel
    }

    pub fn z_max(&self) -> f64 {
        self.z_max
    }

    /// Absolute error bound of each evaluation.
    pub fn error_bound(&self) -> &Real {
        &self.error_bound
    }

    pub fn working_precision(&self) -> Precision {
        self.grid.panel.precision()
    }

    pub fn target_precision(&self) -> Precision {
        self.target
    }

    pub fn node_count(&self) -> usize {
        self.grid.panels * self.grid.offsets.len()
    }

    /// `Ξ(z)` at working precision.
    pub fn eval(&self, z: &Real) -> Real {
        self.grid
            .cosine(&z.with_precision(self.working_precision()))
    }
}

/// `∫_0^∞ φ(t) cos(zt) dt` for the Riemann kernel, at the config's target.
pub fn xi_cosine(z: &Real, cfg: &QuadratureConfig) -> Result<Real> {
    xi_cosine_kernel(&Kernel::Riemann, z, cfg)
}

pub fn xi_cosine_kernel(kernel: &Kernel, z: &Real, cfg: &QuadratureConfig) -> Result<Real> {
    let ev = XiEvaluator::new(kernel.clone(), cfg, z.to_f64().abs().max(1.0))?;
    Ok(ev
        .eval(z)
        .with_precision(z.precision().max(cfg.precision())))
}
