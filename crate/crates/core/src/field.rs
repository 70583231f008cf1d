//! Exact scalars over the rationals or a prime field GF(p).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

/// The ground field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Builds `GF(p)`, rejecting composite or out-of-range moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..=MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn modulus(&self) -> Option<u32> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Scalar::Modular {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// Residue constructor for prime fields; `value` is reduced mod p.
    pub fn residue(&self, value: u64) -> Result<Scalar> {
        match *self {
            FieldSpec::Rationals => Err(Error::UnsupportedField),
            FieldSpec::Prime(p) => Ok(Scalar::Modular {
                value: (value % p as u64) as u32,
                modulus: p,
            }),
        }
    }

    /// Parses `"a"` or `"a/b"` with integer `a`, `b` into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            column: 0,
            message: format!("{msg}: {text:?}"),
        };
        let (num, den) = match text.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text.trim(), "1"),
        };
        let num: BigInt = num.parse().map_err(|_| bad("invalid numerator"))?;
        let den: BigInt = den.parse().map_err(|_| bad("invalid denominator"))?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match *self {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p);
                let n = num.mod_floor(&m).to_u64().unwrap_or(0);
                let d = den.mod_floor(&m).to_u64().unwrap_or(0);
                let n = self.residue(n)?;
                let d = self.residue(d)?;
                Ok(n * d.inv()?)
            }
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.modulus().map(u64::from)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element in canonical form: reduced fraction with positive
/// denominator, or residue in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Modular { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    /// Residue of a prime-field element.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Ok(Scalar::Modular {
                    value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Modular { value: a, modulus: p }, Scalar::Modular { value: b, modulus: q })
                if p == q =>
            {
                Ok(Scalar::Modular {
                    value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                    modulus: *p,
                })
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.try_add(&-rhs)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Modular { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let mut base = *value as u64;
                let mut exp = p - 2;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Ok(Scalar::Modular {
                    value: acc as u32,
                    modulus: *modulus,
                })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

// Operator impls panic on mixed fields; the linear algebra layer validates
// fields once at construction and then uses these.
impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.try_add(rhs).expect("scalar field mismatch")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.try_sub(rhs).expect("scalar field mismatch")
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.try_mul(rhs).expect("scalar field mismatch")
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Whether a rational is non-negative; used by level validation.
pub(crate) fn rational_is_unit_interval(r: &BigRational) -> bool {
    !r.is_negative() && r <= &BigRational::one()
}
