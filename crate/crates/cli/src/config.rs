use std::fmt;

use zerosum::{Error, Family, Precision, Real};

use crate::{Format, MethodArg, Opts};

/// Why a run stopped before producing a report.
#[derive(Debug)]
pub enum Failure {
    Config(String),
    Numeric(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Config(_) => 2,
            Failure::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Config(m) | Failure::Numeric(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_)
            | Error::NotFundamental(_)
            | Error::InvalidCharacter(_)
            | Error::InvalidPrecision { .. }
            | Error::Parse(_)
            | Error::LimitExceeded { .. }
            | Error::OutOfRange { .. }
            | Error::InsufficientCoefficients { .. }
            | Error::ZeroScale
            | Error::Pole { .. } => Failure::Config(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    pub nu: Option<Real>,
    pub q: Option<Real>,
    pub discriminant: Option<i64>,
    pub order: usize,
    pub digits: u32,
    pub precision: Precision,
    pub method: MethodArg,
    pub format: Format,
    pub oracle: bool,
    pub sigmas: bool,
    pub scale: Real,
    pub zeros: Option<usize>,
}

fn parse_scale(s: &str, p: Precision) -> Result<Real, Failure> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let v = match body {
        "pi" => Real::pi(p),
        "pi^2" | "pi2" => Real::pi(p).powi(2),
        _ => return Ok(Real::parse(t, p)?),
    };
    Ok(if neg { -v } else { v })
}

fn needs(family: Family) -> (bool, bool, bool) {
    match family {
        Family::Bessel => (true, false, false),
        Family::QBessel => (true, true, false),
        Family::QAiry => (false, true, false),
        Family::Dirichlet => (false, false, true),
        _ => (false, false, false),
    }
}

impl RunConfig {
    pub fn from_opts(o: &Opts) -> Result<Self, Failure> {
        if o.function == Family::Finite {
            return Err(Failure::Config(
                "the finite family has no command-line provider".into(),
            ));
        }
        let precision = Precision::checked_digits(o.precision)?;
        if o.order == 0 {
            return Err(Failure::Config("order must be at least 1".into()));
        }
        let (want_nu, want_q, want_d) = needs(o.function);
        let check = |name: &str, want: bool, have: bool| -> Result<(), Failure> {
            match (want, have) {
                (true, false) => Err(Failure::Config(format!(
                    "--{name} is required for {}",
                    o.function
                ))),
                (false, true) => Err(Failure::Config(format!(
                    "--{name} does not apply to {}",
                    o.function
                ))),
                _ => Ok(()),
            }
        };
        check("nu", want_nu, o.nu.is_some())?;
        check("q", want_q, o.q.is_some())?;
        check("discriminant", want_d, o.discriminant.is_some())?;
        let nu =
            o.nu.as_deref()
                .map(|s| Real::parse(s, precision))
                .transpose()?;
        let q =
            o.q.as_deref()
                .map(|s| Real::parse(s, precision))
                .transpose()?;
        let scale = parse_scale(&o.scale, precision)?;
        if scale.is_zero() {
            return Err(Error::ZeroScale.into());
        }
        if o.zeros == Some(0) {
            return Err(Failure::Config("--zeros must be at least 1".into()));
        }
        Ok(RunConfig {
            family: o.function,
            nu,
            q,
            discriminant: o.discriminant,
            order: o.order,
            digits: o.precision,
            precision,
            method: o.method,
            format: o.format,
            oracle: o.oracle,
            sigmas: o.sigmas,
            scale,
            zeros: o.zeros,
        })
    }

    /// Decimal string at the full working precision.
    pub fn fmt(&self, x: &Real) -> String {
        x.to_decimal(self.digits)
    }
}
