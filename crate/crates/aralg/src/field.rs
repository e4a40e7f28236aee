//! Exact scalar arithmetic: arbitrary-precision rationals and prime fields.
//!
//! Every value in one computation shares a single [`FieldSpec`]; scalars are
//! plain data and all arithmetic is dispatched through the field. Prime field
//! elements are stored as canonical residues in `[0, p)`.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Scalar {
    Rat(BigRational),
    Fp(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Parses "Q" or "Fp:<p>" with p prime.
    pub fn parse(s: &str) -> Result<FieldSpec> {
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(rest) = s.strip_prefix("Fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(s.to_string()))?;
            if p >= 1 << 31 {
                return Err(Error::InvalidField(format!("{p} too large")));
            }
            if !is_prime(p) {
                return Err(Error::InvalidField(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::PrimeField(p));
        }
        Err(Error::InvalidField(s.to_string()))
    }

    pub fn descriptor(&self) -> String {
        match self {
            FieldSpec::Rationals => "Q".to_string(),
            FieldSpec::PrimeField(p) => format!("Fp:{p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let m = n.rem_euclid(*p as i64);
                Scalar::Fp(m as u64)
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp(v) => *v == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + p - y) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(x.recip()).into(),
            (FieldSpec::PrimeField(p), Scalar::Fp(x)) => {
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i128, *p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1);
                Some(Scalar::Fp(s0.rem_euclid(*p as i128) as u64))
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let ib = self.inv(b).expect("division by zero");
        self.mul(a, &ib)
    }

    /// Parses a scalar literal: "3/2" or "-4" over Q, a residue over Fp.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        match self {
            FieldSpec::Rationals => {
                let r = if let Some((n, d)) = s.split_once('/') {
                    let n = BigInt::from_str(n.trim())
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    let d = BigInt::from_str(d.trim())
                        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
                    if d.is_zero() {
                        return Err(Error::Parse(format!("zero denominator in {s:?}")));
                    }
                    BigRational::new(n, d)
                } else {
                    let n = BigInt::from_str(s.trim())
                        .map_err(|_| Error::Parse(format!("bad integer {s:?}")))?;
                    BigRational::from(n)
                };
                Ok(Scalar::Rat(r))
            }
            FieldSpec::PrimeField(p) => {
                let n = i64::from_str(s.trim())
                    .map_err(|_| Error::Parse(format!("bad residue {s:?}")))?;
                Ok(Scalar::Fp(n.rem_euclid(*p as i64) as u64))
            }
        }
    }

    pub fn format_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    format!("{}", r.numer())
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp(v) => format!("{v}"),
        }
    }
}

impl Scalar {
    /// Signed integer value when the scalar is an integer, used by tests.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    let n = r.numer();
                    if n.abs() <= BigInt::from(i64::MAX) {
                        let (sign, digits) = n.to_u64_digits();
                        let mag = *digits.first().unwrap_or(&0) as i64;
                        return Some(match sign {
                            num::bigint::Sign::Minus => -mag,
                            _ => mag,
                        });
                    }
                }
                None
            }
            Scalar::Fp(v) => Some(*v as i64),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Fp(v) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_field_descriptors() {
        assert_eq!(FieldSpec::parse("Q").unwrap(), FieldSpec::Rationals);
        assert_eq!(FieldSpec::parse("Fp:5").unwrap(), FieldSpec::PrimeField(5));
        assert!(FieldSpec::parse("Fp:6").is_err());
        assert!(FieldSpec::parse("R").is_err());
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Rationals;
        let a = f.parse_scalar("3/2").unwrap();
        let b = f.parse_scalar("-1/3").unwrap();
        let s = f.add(&a, &b);
        assert_eq!(f.format_scalar(&s), "7/6");
        let p = f.mul(&a, &b);
        assert_eq!(f.format_scalar(&p), "-1/2");
        let i = f.inv(&a).unwrap();
        assert_eq!(f.format_scalar(&i), "2/3");
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::PrimeField(7);
        let a = f.from_int(5);
        let b = f.from_int(-3); // = 4
        assert_eq!(f.format_scalar(&b), "4");
        assert_eq!(f.format_scalar(&f.add(&a, &b)), "2");
        assert_eq!(f.format_scalar(&f.mul(&a, &b)), "6");
        let i = f.inv(&a).unwrap();
        assert_eq!(f.format_scalar(&f.mul(&a, &i)), "1");
    }
}
