//! Algebra parameters: the quantum characteristic `e`, the multicharge and
//! the coefficient field.
//!
//! Residues are stored as plain `i64`. For finite `e` they are kept reduced
//! into `0..e`; for `e = inf` they are arbitrary integers. All arithmetic on
//! residues goes through [`AlgebraConfig`] so the two cases never mix.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the index set `I` (either `Z/eZ` or `Z`).
pub type Residue = i64;

/// The quantum characteristic `e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum QuantumChar {
    Finite(u32),
    Infinite,
}

impl fmt::Display for QuantumChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuantumChar::Finite(e) => write!(f, "{e}"),
            QuantumChar::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for QuantumChar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(QuantumChar::Infinite);
        }
        let e: u32 = s
            .parse()
            .map_err(|_| Error::Parse(format!("e must be an integer >= 2 or 'inf', got {s:?}")))?;
        if e < 2 {
            return Err(Error::Parse(format!("e must be at least 2, got {e}")));
        }
        Ok(QuantumChar::Finite(e))
    }
}

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s.eq_ignore_ascii_case("rational") {
            return Ok(FieldKind::Rational);
        }
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix("GF"))
            .ok_or_else(|| Error::Parse(format!("field must be Q or F<p>, got {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad prime in field {s:?}")))?;
        if !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::Parse(format!("prime {p} is too large (must be below 2^31)")));
        }
        Ok(FieldKind::Prime(p))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The data `(e, kappa, F)` fixing a KLR algebra and its Specht modules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraConfig {
    pub e: QuantumChar,
    pub kappa: Vec<Residue>,
    pub field: FieldKind,
}

impl AlgebraConfig {
    /// Builds a configuration over the rationals, reducing `kappa` mod `e`.
    pub fn new(e: QuantumChar, kappa: &[Residue]) -> Result<Self> {
        Self::with_field(e, kappa, FieldKind::Rational)
    }

    pub fn with_field(e: QuantumChar, kappa: &[Residue], field: FieldKind) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::InvalidInput("multicharge must have level at least 1".into()));
        }
        if let FieldKind::Prime(p) = field {
            if !is_prime(p) {
                return Err(Error::InvalidInput(format!("{p} is not prime")));
            }
        }
        let mut cfg = AlgebraConfig { e, kappa: Vec::new(), field };
        cfg.kappa = kappa.iter().map(|&k| cfg.norm(k)).collect();
        Ok(cfg)
    }

    /// Shorthand for a finite `e` over the rationals.
    pub fn finite(e: u32, kappa: &[Residue]) -> Self {
        Self::new(QuantumChar::Finite(e), kappa).expect("valid configuration")
    }

    pub fn level(&self) -> usize {
        self.kappa.len()
    }

    /// The same `e` and field with a different multicharge.
    pub fn with_kappa(&self, kappa: &[Residue]) -> Self {
        Self::with_field(self.e, kappa, self.field).expect("level is positive")
    }

    pub fn with_field_kind(&self, field: FieldKind) -> Self {
        AlgebraConfig { field, ..self.clone() }
    }

    /// Reduces an integer into the residue set.
    pub fn norm(&self, x: i64) -> Residue {
        match self.e {
            QuantumChar::Finite(e) => x.rem_euclid(e as i64),
            QuantumChar::Infinite => x,
        }
    }

    /// True for `e = 2`, where neighbouring residues are joined by a double arrow.
    pub fn is_e2(&self) -> bool {
        self.e == QuantumChar::Finite(2)
    }

    /// `i -> j` in the quiver: `e != 2` and `j = i - 1`.
    pub fn arrow(&self, i: Residue, j: Residue) -> bool {
        !self.is_e2() && self.norm(i - 1) == self.norm(j)
    }

    /// `i <=> j` in the quiver: `e = 2` and `j = i - 1`.
    pub fn double_arrow(&self, i: Residue, j: Residue) -> bool {
        self.is_e2() && self.norm(i - 1) == self.norm(j)
    }

    /// Cartan matrix entry `a_ij = 2 delta_ij - delta_{i,j+1} - delta_{i,j-1}`.
    pub fn cartan(&self, i: Residue, j: Residue) -> i64 {
        let mut a = 0;
        if self.norm(i) == self.norm(j) {
            a += 2;
        }
        if self.norm(i) == self.norm(j + 1) {
            a -= 1;
        }
        if self.norm(i) == self.norm(j - 1) {
            a -= 1;
        }
        a
    }

    /// Conjugate multicharge `(-kappa_l, ..., -kappa_1)`.
    pub fn conjugate(&self) -> Self {
        let k: Vec<Residue> = self.kappa.iter().rev().map(|&x| -x).collect();
        self.with_kappa(&k)
    }

    /// Negation in `I`, used by the sign twist.
    pub fn neg(&self, i: Residue) -> Residue {
        self.norm(-i)
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k: Vec<String> = self.kappa.iter().map(|x| x.to_string()).collect();
        write!(f, "e={} kappa=({}) field={}", self.e, k.join(","), self.field)
    }
}

/// Parses a multicharge written as comma-separated integers.
pub fn parse_kappa(s: &str) -> Result<Vec<Residue>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad multicharge entry {t:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matches_affine_type_a() {
        let c3 = AlgebraConfig::finite(3, &[0]);
        assert_eq!(c3.cartan(0, 0), 2);
        assert_eq!(c3.cartan(0, 1), -1);
        assert_eq!(c3.cartan(0, 2), -1);
        let c2 = AlgebraConfig::finite(2, &[0]);
        assert_eq!(c2.cartan(0, 1), -2);
        let inf = AlgebraConfig::new(QuantumChar::Infinite, &[0]).unwrap();
        assert_eq!(inf.cartan(0, 1), -1);
        assert_eq!(inf.cartan(0, 2), 0);
        assert_eq!(inf.cartan(5, 5), 2);
    }

    #[test]
    fn arrows_point_down() {
        let c = AlgebraConfig::finite(3, &[0]);
        assert!(c.arrow(1, 0));
        assert!(c.arrow(0, 2));
        assert!(!c.arrow(0, 1));
        let c2 = AlgebraConfig::finite(2, &[0]);
        assert!(c2.double_arrow(0, 1) && c2.double_arrow(1, 0));
        assert!(!c2.arrow(1, 0));
    }

    #[test]
    fn parse_field_and_e() {
        assert_eq!("Q".parse::<FieldKind>().unwrap(), FieldKind::Rational);
        assert_eq!("F7".parse::<FieldKind>().unwrap(), FieldKind::Prime(7));
        assert!("F8".parse::<FieldKind>().is_err());
        assert_eq!("inf".parse::<QuantumChar>().unwrap(), QuantumChar::Infinite);
        assert!("1".parse::<QuantumChar>().is_err());
    }

    #[test]
    fn kappa_reduced_and_conjugated() {
        let c = AlgebraConfig::finite(3, &[4, -1]);
        assert_eq!(c.kappa, vec![1, 2]);
        assert_eq!(c.conjugate().kappa, vec![1, 2]);
        let c = AlgebraConfig::finite(3, &[0, 1]);
        assert_eq!(c.conjugate().kappa, vec![2, 0]);
    }
}
