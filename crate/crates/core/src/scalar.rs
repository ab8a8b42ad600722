//! Exact scalars over the rationals or a prime field.
//!
//! Rationals are kept as `Ratio<i64>` while they fit and promoted to
//! `BigRational` on overflow, so the common case stays allocation free.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, ToPrimitive, Zero};

use crate::config::FieldKind;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Rat {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
}

impl Rat {
    fn big(&self) -> BigRational {
        match self {
            Rat::Small(r) => BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::Big(b) => (**b).clone(),
        }
    }

    fn from_big(b: BigRational) -> Rat {
        match (b.numer().to_i64(), b.denom().to_i64()) {
            (Some(n), Some(d)) => Rat::Small(Ratio::new_raw(n, d)),
            _ => Rat::Big(Box::new(b)),
        }
    }

    fn op(
        &self,
        other: &Rat,
        small: fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: fn(BigRational, BigRational) -> BigRational,
    ) -> Rat {
        if let (Rat::Small(a), Rat::Small(b)) = (self, other) {
            if let Some(c) = small(a, b) {
                return Rat::Small(c);
            }
        }
        Rat::from_big(big(self.big(), other.big()))
    }

    fn is_zero(&self) -> bool {
        match self {
            Rat::Small(r) => r.is_zero(),
            Rat::Big(b) => b.is_zero(),
        }
    }
}

/// An element of the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Q(Rat),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn from_i64(x: i64, field: FieldKind) -> Self {
        match field {
            FieldKind::Rational => Scalar(Repr::Q(Rat::Small(Ratio::from_integer(x)))),
            FieldKind::Prime(p) => Scalar(Repr::Fp { v: x.rem_euclid(p as i64) as u64, p }),
        }
    }

    pub fn zero(field: FieldKind) -> Self {
        Self::from_i64(0, field)
    }

    pub fn one(field: FieldKind) -> Self {
        Self::from_i64(1, field)
    }

    /// A rational `num/den`; over `F_p` the denominator is inverted.
    pub fn from_ratio(num: i64, den: i64, field: FieldKind) -> Result<Self> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        match field {
            FieldKind::Rational => Ok(Scalar(Repr::Q(Rat::Small(Ratio::new(num, den))))),
            FieldKind::Prime(_) => {
                let d = Self::from_i64(den, field);
                if d.is_zero() {
                    return Err(Error::Parse(format!("denominator {den} vanishes in {field}")));
                }
                Ok(Self::from_i64(num, field).div(&d))
            }
        }
    }

    pub fn field(&self) -> FieldKind {
        match &self.0 {
            Repr::Q(_) => FieldKind::Rational,
            Repr::Fp { p, .. } => FieldKind::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Q(r) => r.is_zero(),
            Repr::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.field())
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Q(r) => {
                let out = match r {
                    Rat::Small(s) => Rat::Small(s.recip()),
                    Rat::Big(b) => Rat::from_big(b.recip()),
                };
                Scalar(Repr::Q(out))
            }
            Repr::Fp { v, p } => Scalar(Repr::Fp { v: pow_mod(*v, p - 2, *p), p: *p }),
        }
    }

    pub fn div(&self, other: &Scalar) -> Self {
        if let (Repr::Q(a), Repr::Q(b)) = (&self.0, &other.0) {
            assert!(!b.is_zero(), "division by zero");
            return Scalar(Repr::Q(a.op(b, |x, y| x.checked_div(y), |x, y| x / y)));
        }
        self * &other.inv()
    }

    /// Integer value when the scalar is a rational integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Q(Rat::Small(r)) if r.is_integer() => Some(*r.numer()),
            _ => None,
        }
    }

    /// Parses `"a"`, `"a/b"` or `"k mod p"`.
    pub fn parse(s: &str, field: FieldKind) -> Result<Self> {
        let s = s.trim();
        if let Some((k, p)) = s.split_once("mod") {
            let p: u64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?;
            if field != FieldKind::Prime(p) {
                return Err(Error::Parse(format!("scalar {s:?} is not in {field}")));
            }
            let k: i64 = k.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
            return Ok(Self::from_i64(k, field));
        }
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: i64 = n.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        let d: i64 = d.trim().parse().map_err(|_| Error::Parse(format!("bad scalar {s:?}")))?;
        Self::from_ratio(n, d, field)
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn same_prime(p: u64, q: u64) -> u64 {
    assert_eq!(p, q, "scalars from different fields");
    p
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a.op(b, |x, y| x.checked_add(y), |x, y| x + y))),
            (Repr::Fp { v, p }, Repr::Fp { v: w, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar(Repr::Fp { v: (v + w) % p, p })
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a.op(b, |x, y| x.checked_sub(y), |x, y| x - y))),
            (Repr::Fp { v, p }, Repr::Fp { v: w, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar(Repr::Fp { v: (v + p - w) % p, p })
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Q(a), Repr::Q(b)) => Scalar(Repr::Q(a.op(b, |x, y| x.checked_mul(y), |x, y| x * y))),
            (Repr::Fp { v, p }, Repr::Fp { v: w, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar(Repr::Fp { v: v * w % p, p })
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Q(a) => Scalar(Repr::Q(match a {
                Rat::Small(r) if *r.numer() != i64::MIN => Rat::Small(-r),
                other => Rat::from_big(-other.big()),
            })),
            Repr::Fp { v, p } => Scalar(Repr::Fp { v: (p - v) % p, p: *p }),
        }
    }
}

impl fmt::Display for Scalar {
    /// Exact text: `"a"` or `"a/b"` over the rationals, `"k mod p"` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Q(r) => {
                let b = r.big();
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
            Repr::Fp { v, p } => write!(f, "{v} mod {p}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_promotes_on_overflow() {
        let q = FieldKind::Rational;
        let big = Scalar::from_i64(i64::MAX, q);
        let sum = &big + &big;
        assert_eq!(sum.to_string(), "18446744073709551614");
        let back = &sum - &big;
        assert_eq!(back, big);
        assert_eq!(back.to_i64(), Some(i64::MAX));
    }

    #[test]
    fn prime_field_inverse() {
        let f = FieldKind::Prime(7);
        let three = Scalar::from_i64(3, f);
        assert!((&three * &three.inv()).is_one());
        assert_eq!(Scalar::from_i64(-1, f).to_string(), "6 mod 7");
    }

    #[test]
    fn parse_round_trip() {
        let q = FieldKind::Rational;
        for s in ["2", "-3/4", "0"] {
            assert_eq!(Scalar::parse(s, q).unwrap().to_string(), s);
        }
        let f = FieldKind::Prime(5);
        assert_eq!(Scalar::parse("3 mod 5", f).unwrap().to_string(), "3 mod 5");
        assert!(Scalar::parse("3 mod 7", f).is_err());
    }
}
