use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The ground field of every computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u32),
}

impl Field {
    /// The prime field `F_p`. The modulus is checked by trial division.
    pub fn prime(p: u64) -> Result<Field> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Modular { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(*p as i64) as u32,
                modulus: *p,
            },
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    /// Parses `"3"`, `"-2"` or `"3/4"`. Over `F_p` a fraction means `a * b^-1`.
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::BadScalar(text.to_string());
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        match self {
            Field::Rationals => {
                let n = BigInt::from_str(num).map_err(|_| bad())?;
                let d = match den {
                    Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
                    None => BigInt::one(),
                };
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(n, d)))
            }
            Field::Prime(p) => {
                let reduce = |s: &str| -> Result<Scalar> {
                    let n = BigInt::from_str(s).map_err(|_| bad())?;
                    let r = ((n % BigInt::from(*p)) + BigInt::from(*p)) % BigInt::from(*p);
                    let value = u32::try_from(r).map_err(|_| bad())?;
                    Ok(Scalar::Modular { value, modulus: *p })
                };
                let n = reduce(num)?;
                match den {
                    Some(d) => {
                        let d = reduce(d)?;
                        let inv = d.inv().ok_or_else(bad)?;
                        Ok(&n * &inv)
                    }
                    None => Ok(n),
                }
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q` and `F_p` (also `F5`, `GF(5)`).
    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(Field::Rationals);
        }
        let digits = s
            .strip_prefix("F_")
            .or_else(|| s.strip_prefix('F'))
            .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| Error::BadField(s.to_string()))?;
        let p: u64 = digits.parse().map_err(|_| Error::BadField(s.to_string()))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a [`Field`]. Rationals are kept in lowest terms by
/// `num_rational`; residues are kept in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Modular { value, modulus } => {
                let v = pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64);
                Scalar::Modular {
                    value: v as u32,
                    modulus: *modulus,
                }
            }
        })
    }

    /// `self += a * b`, the inner-loop primitive of every elimination.
    pub fn add_mul(&mut self, a: &Scalar, b: &Scalar) {
        match (self, a, b) {
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: x, .. },
                Scalar::Modular { value: y, .. },
            ) => {
                let m = *modulus as u64;
                *value = ((*value as u64 + (*x as u64) * (*y as u64) % m) % m) as u32;
            }
            (Scalar::Rational(s), Scalar::Rational(x), Scalar::Rational(y)) => {
                *s += x * y;
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $modular:expr) => {
        impl std::ops::$tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (
                        Scalar::Modular { value: a, modulus },
                        Scalar::Modular {
                            value: b,
                            modulus: m2,
                        },
                    ) => {
                        debug_assert_eq!(modulus, m2);
                        let m = *modulus as u64;
                        Scalar::Modular {
                            value: $modular(*a as u64, *b as u64, m) as u32,
                            modulus: *modulus,
                        }
                    }
                    _ => panic!("scalar field mismatch"),
                }
            }
        }
        impl std::ops::$tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
    };
}

binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, m: u64| (a + b) % m
);
binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, m: u64| (a + m - b) % m
);
binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, m: u64| a * b % m
);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(Field::prime(5).is_ok());
        assert!(Field::prime(2).is_ok());
        assert!(matches!(Field::prime(4), Err(Error::NotPrime(4))));
        assert!(matches!(Field::prime(1), Err(Error::NotPrime(1))));
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(1 << 31).is_err());
        assert!(Field::prime(65_537).is_ok());
    }

    #[test]
    fn field_names() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("F_5".parse::<Field>().unwrap(), Field::Prime(5));
        assert_eq!("GF(7)".parse::<Field>().unwrap(), Field::Prime(7));
        assert!(matches!("F_4".parse::<Field>(), Err(Error::NotPrime(4))));
        assert_eq!(Field::Prime(5).to_string(), "F_5");
    }

    #[test]
    fn rationals_lowest_terms() {
        let q = Field::Rationals;
        let x = q.parse("6/-8").unwrap();
        assert_eq!(x.to_string(), "-3/4");
        let y = q.parse("1/4").unwrap();
        assert_eq!((&x + &y).to_string(), "-1/2");
        assert_eq!((&x * &x.inv().unwrap()), q.one());
    }

    #[test]
    fn modular_arithmetic() {
        let f = Field::Prime(5);
        let two = f.from_i64(2);
        assert_eq!(two.inv().unwrap(), f.from_i64(3));
        assert_eq!(f.parse("1/2").unwrap(), f.from_i64(3));
        assert_eq!(f.parse("-1").unwrap(), f.from_i64(4));
        assert_eq!((&f.from_i64(3) - &f.from_i64(4)), f.from_i64(4));
        assert!(f.zero().inv().is_none());
        let mut acc = f.from_i64(1);
        acc.add_mul(&f.from_i64(3), &f.from_i64(4));
        assert_eq!(acc, f.from_i64(3));
    }
}
