use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::RingError;

/// Residue field of the coefficient ring.
///
/// `Rational` is the exact field of rationals; `Prime(p)` is the prime field
/// with `p` elements. Use [`Field::prime`] to construct the latter, which
/// checks primality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[derive(Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}


fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, RingError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(RingError::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let r = ((n % &m) + &m) % &m;
                Scalar::Prime {
                    value: r.to_u64().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Parses the textual field tags `Q` and `Fp:<p>` (case-insensitive).
    pub fn parse_tag(tag: &str) -> Result<Field, RingError> {
        let t = tag.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let lower = t.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("fp:") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| RingError::BadFieldTag(tag.to_string()))?;
            return Field::prime(p);
        }
        Err(RingError::BadFieldTag(tag.to_string()))
    }

    pub fn tag(self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("Fp:{p}"),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// An element of a [`Field`]. Prime-field elements carry their modulus so
/// that mixing fields is detected at the point of use.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    let m = m as u128;
    let mut acc = 1u128;
    let mut base = b as u128 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    fn check(&self, other: &Scalar) -> Result<(), RingError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(RingError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
                modulus: *modulus,
            },
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.try_add(&other.neg())
    }

    pub fn inverse(&self) -> Result<Scalar, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, RingError> {
        self.try_mul(&other.inverse()?)
    }

    /// Sign used by the renderer: rationals can be negative, prime-field
    /// elements are always printed as their least non-negative residue.
    pub(crate) fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(a) => a.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}
