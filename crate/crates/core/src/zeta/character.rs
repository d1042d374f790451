//! Real primitive Dirichlet characters.

use std::fmt;

use num_integer::Integer;

use super::kernel::theta_selfcheck;
use crate::error::{Error, Result};
use crate::precision::{Precision, Real};

/// A real character `χ` mod `m`, stored as the table `χ(0) ..= χ(m-1)`.
///
/// `parity_a` is 0 for even characters (`χ(-1) = 1`) and 1 for odd ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u32,
    values: Vec<i8>,
    parity_a: u8,
    discriminant: Option<i64>,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn parity_a(&self) -> u8 {
        self.parity_a
    }

    /// The fundamental discriminant, for characters built by [`kronecker_character`].
    pub fn discriminant(&self) -> Option<i64> {
        self.discriminant
    }

    pub fn value(&self, n: i64) -> i8 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    /// Validate a user-supplied table.
    ///
    /// The table must be real, vanish exactly off the units, be completely
    /// multiplicative, be primitive, and satisfy the theta transformation law
    /// at `x = 1/2` and `x = 2` to `10^{10-P}` at default precision.
    pub fn from_table(values: Vec<i8>) -> Result<Self> {
        let m = values.len();
        if m < 2 {
            return Err(Error::InvalidCharacter("modulus must be at least 2".into()));
        }
        let chi = DirichletCharacter {
            modulus: m as u32,
            parity_a: 0,
            values,
            discriminant: None,
        };
        chi.check_table()?;
        let parity_a = if chi.values[m - 1] == 1 { 0 } else { 1 };
        let chi = DirichletCharacter { parity_a, ..chi };
        let p = Precision::default();
        let tol = p.tolerance(10);
        for x in [Real::from_ratio(1, 2, p), Real::from_i64(2, p)] {
            let r = theta_selfcheck(&chi, &x);
            if r > tol {
                return Err(Error::InvalidCharacter(format!(
                    "theta transformation fails at x = {} (residual {})",
                    x.to_decimal(3),
                    r.to_decimal(3)
                )));
            }
        }
        Ok(chi)
    }

    fn check_table(&self) -> Result<()> {
        let m = self.modulus as u64;
        let v = &self.values;
        if v.iter().any(|&x| !(-1..=1).contains(&x)) {
            return Err(Error::InvalidCharacter("entries must be -1, 0 or 1".into()));
        }
        for (n, &x) in v.iter().enumerate() {
            let unit = (n as u64).gcd(&m) == 1;
            if unit != (x != 0) {
                return Err(Error::InvalidCharacter(format!(
                    "χ({n}) must be {}",
                    if unit { "±1" } else { "0" }
                )));
            }
        }
        if v[1] != 1 {
            return Err(Error::InvalidCharacter("χ(1) must be 1".into()));
        }
        for a in 1..m {
            for b in a..m {
                if v[((a * b) % m) as usize] != v[a as usize] * v[b as usize] {
                    return Err(Error::InvalidCharacter(format!(
                        "not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        if v.iter().all(|&x| x >= 0) {
            return Err(Error::InvalidCharacter("principal character".into()));
        }
        // induced from modulus d iff χ is constant 1 on units ≡ 1 mod d
        for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
            let induced =
                (1..m).all(|n| v[n as usize] == 0 || n % d != 1 % d || v[n as usize] == 1);
            if induced {
                return Err(Error::InvalidCharacter(format!(
                    "imprimitive: induced from modulus {d}"
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.discriminant {
            Some(d) => write!(f, "({d}|·) mod {}, a = {}", self.modulus, self.parity_a),
            None => write!(f, "χ mod {}, a = {}", self.modulus, self.parity_a),
        }
    }
}

fn squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    if d.rem_euclid(4) == 1 {
        return squarefree(d.unsigned_abs());
    }
    if d.rem_euclid(4) == 0 {
        let k = d / 4;
        return matches!(k.rem_euclid(4), 2 | 3) && squarefree(k.unsigned_abs());
    }
    false
}

fn jacobi(mut a: i64, mut n: i64) -> i8 {
    debug_assert!(n > 0 && n % 2 == 1);
    a = a.rem_euclid(n);
    let mut t = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            t = -t;
        }
        a %= n;
    }
    if n == 1 {
        t
    } else {
        0
    }
}

/// Kronecker symbol `(d | n)` for `n ≥ 1`.
pub fn kronecker_symbol(d: i64, n: u64) -> i8 {
    let mut n = n as i64;
    let mut t = 1;
    while n % 2 == 0 {
        n /= 2;
        t *= match d.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
    }
    t * jacobi(d, n)
}

/// The character `n ↦ (d | n)` of a fundamental discriminant `d ≠ 1`.
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    if d == 1 || !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    let m = d.unsigned_abs();
    let values = (0..m)
        .map(|n| if n == 0 { 0 } else { kronecker_symbol(d, n) })
        .collect();
    Ok(DirichletCharacter {
        modulus: m as u32,
        values,
        parity_a: if d > 0 { 0 } else { 1 },
        discriminant: Some(d),
    })
}

/// Fundamental discriminants `d ≠ 1` with `|d| ≤ bound`, in increasing `|d|`.
pub fn fundamental_discriminants(bound: u32) -> Vec<i64> {
    (2..=bound as i64)
        .flat_map(|k| [-k, k])
        .filter(|&d| is_fundamental_discriminant(d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        let c = kronecker_character(-4).unwrap();
        assert_eq!(c.values(), &[0, 1, 0, -1]);
        assert_eq!(c.parity_a(), 1);
        let c = kronecker_character(5).unwrap();
        assert_eq!(c.values(), &[0, 1, -1, -1, 1]);
        assert_eq!(c.parity_a(), 0);
        let c = kronecker_character(-3).unwrap();
        assert_eq!(c.values(), &[0, 1, -1]);
        assert_eq!(c.parity_a(), 1);
        let c = kronecker_character(8).unwrap();
        assert_eq!(c.values(), &[0, 1, 0, -1, 0, -1, 0, 1]);
    }

    #[test]
    fn rejects_non_fundamental() {
        for d in [0, 1, 2, 3, -1, -2, 4, 9, -8 * 2, 12 * 4, 25] {
            assert!(
                matches!(kronecker_character(d), Err(Error::NotFundamental(_))),
                "{d}"
            );
        }
    }

    #[test]
    fn discriminant_list() {
        assert_eq!(
            fundamental_discriminants(13),
            vec![-3, -4, 5, -7, -8, 8, -11, 12, 13]
        );
    }

    #[test]
    fn parity_and_primitivity() {
        for d in fundamental_discriminants(20) {
            let c = kronecker_character(d).unwrap();
            assert_eq!(c.value(-1) == 1, c.parity_a() == 0);
            assert!(c.check_table().is_ok(), "{d}");
        }
    }

    #[test]
    fn table_validation() {
        let ok = DirichletCharacter::from_table(vec![0, 1, 0, -1]).unwrap();
        assert_eq!(ok.parity_a(), 1);
        assert_eq!(ok.modulus(), 4);
        assert!(DirichletCharacter::from_table(vec![0, 1, 1]).is_err());
        assert!(DirichletCharacter::from_table(vec![0, 1, 2]).is_err());
        assert!(DirichletCharacter::from_table(vec![0, 1, 0, 1]).is_err());
        // the character mod 6 induced by (-3|·)
        assert!(DirichletCharacter::from_table(vec![0, 1, 0, 0, 0, -1]).is_err());
        // not multiplicative
        assert!(DirichletCharacter::from_table(vec![0, 1, 1, -1, -1]).is_err());
    }
}
