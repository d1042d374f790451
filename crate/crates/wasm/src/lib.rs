//! Browser bindings for the demo page in `www/`.
//!
//! Every function returns a JSON string; numbers are decimal strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zerosum::newton::{power_sums_determinant, power_sums_recurrence};
use zerosum::oracle::{
    airy_zeros, bessel_zeros, qairy_zeros, qbessel_zeros, truncated_power_sum, ZeroList,
};
use zerosum::series::{
    airy_sigmas, bessel_sigmas, qairy_sigmas, qbessel_sigmas, sinc_sigmas, BesselParams,
    QBesselParams,
};
use zerosum::zeta::{dirichlet_moments, kronecker_character, riemann_moments, QuadratureConfig};
use zerosum::{CoefficientSeries, Family, Precision, Real};

const MAX_ORDER: usize = 40;
const MAX_ZEROS: usize = 60;

fn precision(digits: u32) -> Result<Precision, String> {
    if digits > 200 {
        return Err("the demo caps precision at 200 digits".into());
    }
    Precision::checked_digits(digits).map_err(|e| e.to_string())
}

fn real(s: &str, p: Precision, name: &str) -> Result<Real, String> {
    Real::parse(s, p).map_err(|_| format!("cannot read {name} = '{s}'"))
}

fn series(
    family: Family,
    nu: &str,
    q: &str,
    d: i64,
    order: usize,
    p: Precision,
) -> Result<CoefficientSeries, String> {
    let e = |e: zerosum::Error| e.to_string();
    match family {
        Family::Sinc => sinc_sigmas(order, p).map_err(e),
        Family::Bessel => {
            bessel_sigmas(&BesselParams::new(real(nu, p, "ν")?).map_err(e)?, order).map_err(e)
        }
        Family::Airy => airy_sigmas(order, p).map_err(e),
        Family::QBessel => {
            let params = QBesselParams::new(real(nu, p, "ν")?, real(q, p, "q")?).map_err(e)?;
            qbessel_sigmas(&params, order).map_err(e)
        }
        Family::QAiry => qairy_sigmas(&real(q, p, "q")?, order).map_err(e),
        Family::Riemann => riemann_moments(order, &QuadratureConfig::for_precision(p))
            .and_then(|t| t.to_series())
            .map_err(e),
        Family::Dirichlet => {
            let chi = kronecker_character(d).map_err(e)?;
            dirichlet_moments(&chi, order, &QuadratureConfig::for_precision(p))
                .and_then(|t| t.to_series())
                .map_err(e)
        }
        Family::Finite => Err("no provider for the finite family".into()),
    }
}

/// Power sums by both routes, with their relative difference.
pub fn sums_json(
    function: &str,
    nu: &str,
    q: &str,
    d: i64,
    order: u32,
    digits: u32,
) -> Result<String, String> {
    let p = precision(digits)?;
    let family: Family = function
        .parse()
        .map_err(|e: zerosum::Error| e.to_string())?;
    let order = order as usize;
    if order == 0 || order > MAX_ORDER {
        return Err(format!("order must lie in 1..={MAX_ORDER}"));
    }
    let c = series(family, nu, q, d, order, p)?;
    let rec = power_sums_recurrence(&c, order).map_err(|e| e.to_string())?;
    let det =
        power_sums_determinant(&c, &Real::from_i64(-1, p), order).map_err(|e| e.to_string())?;
    let rows: Vec<Value> = (1..=order)
        .map(|n| {
            json!({
                "n": n,
                "sigma": c.sigma(n).to_decimal(digits),
                "recurrence": rec.s(n).to_decimal(digits),
                "determinant": det.s(n).to_decimal(digits),
                "difference": rec.s(n).rel_diff(det.s(n)).to_decimal(3),
            })
        })
        .collect();
    Ok(
        json!({"function": family.name(), "source": c.source().to_string(), "rows": rows})
            .to_string(),
    )
}

fn zero_list(
    family: Family,
    nu: &str,
    q: &str,
    k: usize,
    p: Precision,
) -> Result<ZeroList, String> {
    let e = |e: zerosum::Error| e.to_string();
    match family {
        Family::Bessel => bessel_zeros(&real(nu, p, "ν")?, k, p).map_err(e),
        Family::Airy => airy_zeros(k, p).map_err(e),
        Family::QBessel => qbessel_zeros(&real(nu, p, "ν")?, &real(q, p, "q")?, k, p).map_err(e),
        Family::QAiry => qairy_zeros(&real(q, p, "q")?, k, p).map_err(e),
        f => Err(format!(
            "the demo locates zeros for bessel, airy, qbessel and qairy, not {f}"
        )),
    }
}

/// The first `count` zeros and the oracle intervals for `s_1 ..= s_order`.
pub fn zeros_json(
    function: &str,
    nu: &str,
    q: &str,
    count: u32,
    order: u32,
    digits: u32,
) -> Result<String, String> {
    let p = precision(digits)?;
    let family: Family = function
        .parse()
        .map_err(|e: zerosum::Error| e.to_string())?;
    let k = count as usize;
    if k == 0 || k > MAX_ZEROS {
        return Err(format!("zero count must lie in 1..={MAX_ZEROS}"));
    }
    let order = (order as usize).clamp(1, 6);
    let zl = zero_list(family, nu, q, k, p)?;
    let newton = power_sums_recurrence(&series(family, nu, q, 0, order, p)?, order)
        .map_err(|e| e.to_string())?;
    let zeros: Vec<String> = zl
        .zeros()
        .iter()
        .map(|z| z.to_decimal(digits / 2))
        .collect();
    let sums: Vec<Value> = (1..=order)
        .map(|n| {
            let tail = zl.tail(n);
            let s = truncated_power_sum(&zl, n, zl.mode(), &tail);
            json!({
                "n": n,
                "lower": s.lower().to_decimal(20),
                "upper": s.upper().to_decimal(20),
                "newton": newton.s(n).to_decimal(20),
                "contains": s.contains(newton.s(n)),
                "tail": tail.bound_kind.to_string(),
            })
        })
        .collect();
    Ok(json!({"function": family.name(), "zeros": zeros, "sums": sums}).to_string())
}

#[wasm_bindgen]
pub fn power_sums(
    function: &str,
    nu: &str,
    q: &str,
    discriminant: i32,
    order: u32,
    digits: u32,
) -> Result<String, JsError> {
    sums_json(function, nu, q, discriminant as i64, order, digits).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn locate_zeros(
    function: &str,
    nu: &str,
    q: &str,
    count: u32,
    order: u32,
    digits: u32,
) -> Result<String, JsError> {
    zeros_json(function, nu, q, count, order, digits).map_err(|e| JsError::new(&e))
}
