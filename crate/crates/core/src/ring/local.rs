use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, Scalar};
use super::poly::Polynomial;
use super::RingError;

/// The pi-adic valuation: a non-negative exponent, or infinity for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u32),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<u32> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

/// An element of the valuation ring `F[pi]` localized at `(pi)`, standing in
/// for a power series in `F[[pi]]`.
///
/// Canonical form: `den` has constant term 1, `num` and `den` are coprime and
/// zero is `0/1`. Two equal elements therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalElement {
    num: Polynomial,
    den: Polynomial,
}

impl LocalElement {
    pub fn zero(field: Field) -> Self {
        LocalElement {
            num: Polynomial::zero(field),
            den: Polynomial::one(field),
        }
    }

    pub fn one(field: Field) -> Self {
        Self::from_scalar(field.one())
    }

    pub fn pi(field: Field) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn from_i64(field: Field, n: i64) -> Self {
        Self::from_scalar(field.from_i64(n))
    }

    pub fn from_scalar(c: Scalar) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    /// `c * pi^k`.
    pub fn monomial(c: Scalar, k: u32) -> Self {
        Self::from_polynomial(Polynomial::monomial(c, k as usize))
    }

    /// `±pi^k`, the shape of every weighted boundary entry.
    pub fn signed_power(field: Field, negative: bool, k: u32) -> Self {
        let c = if negative { field.from_i64(-1) } else { field.one() };
        Self::monomial(c, k)
    }

    pub fn from_polynomial(num: Polynomial) -> Self {
        let field = num.field();
        LocalElement {
            num,
            den: Polynomial::one(field),
        }
    }

    /// Builds `num / den`, failing when `den` is zero or the reduced fraction
    /// has a denominator vanishing at `pi = 0` (the value is then not in R).
    pub fn from_fraction(num: Polynomial, den: Polynomial) -> Result<Self, RingError> {
        if num.field() != den.field() {
            return Err(RingError::FieldMismatch(num.field(), den.field()));
        }
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Self::canonical(num, den)
    }

    fn canonical(num: Polynomial, den: Polynomial) -> Result<Self, RingError> {
        let field = num.field();
        if num.is_zero() {
            return Ok(Self::zero(field));
        }
        let (num, den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.degree() == Some(0) {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let c = den.constant_term();
        if c.is_zero() {
            return Err(RingError::NotInRing);
        }
        if c.is_one() {
            return Ok(LocalElement { num, den });
        }
        let inv = c.inverse()?;
        Ok(LocalElement {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn field(&self) -> Field {
        self.num.field()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(0)
    }

    /// True when the element is `c * pi^k` with `c` a field constant.
    pub fn is_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    pub fn valuation(&self) -> Valuation {
        match self.num.lowest_exponent() {
            Some(k) => Valuation::Finite(k as u32),
            None => Valuation::Infinite,
        }
    }

    /// Constant term of the power series expansion: `num(0) / den(0)`.
    pub fn residue(&self) -> Scalar {
        // den(0) = 1 in canonical form
        self.num.constant_term()
    }

    /// Splits a nonzero element as `pi^k * u` with `u` a unit.
    pub fn split_unit(&self) -> Option<(u32, LocalElement)> {
        let k = self.valuation().finite()?;
        let unit = LocalElement {
            num: self.num.shift_down(k as usize),
            den: self.den.clone(),
        };
        Some((k, unit))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(RingError::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::canonical(num, self.den.mul(&other.den))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.field()));
        }
        if self.den.is_one() && other.den.is_one() {
            return Ok(Self::from_polynomial(self.num.mul(&other.num)));
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn neg_ref(&self) -> Self {
        LocalElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Inverse of a unit of R.
    pub fn invert(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::ZeroNotInvertible);
        }
        if !self.is_unit() {
            return Err(RingError::NotAUnit(self.to_string()));
        }
        Self::canonical(self.den.clone(), self.num.clone())
    }

    /// Exact quotient `self / divisor`, defined when the quotient lies in R,
    /// i.e. when `valuation(self) >= valuation(divisor)`.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        self.check(divisor)?;
        let (dk, dunit) = divisor.split_unit().ok_or(RingError::DivisionByZero)?;
        if self.is_zero() {
            return Ok(Self::zero(self.field()));
        }
        let (k, unit) = self.split_unit().expect("nonzero");
        if k < dk {
            return Err(RingError::QuotientNotInRing {
                numerator: k,
                denominator: dk,
            });
        }
        let num = unit.num.mul(&dunit.den).shift_up((k - dk) as usize);
        let den = unit.den.mul(&dunit.num);
        Self::canonical(num, den)
    }
}

impl Neg for &LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        self.neg_ref()
    }
}

impl Neg for LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        self.neg_ref()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&LocalElement> for &LocalElement {
            type Output = LocalElement;
            /// Panics when the operands live over different fields.
            fn $method(self, rhs: &LocalElement) -> LocalElement {
                self.$try(rhs).expect("LocalElement arithmetic")
            }
        }
        impl $tr<LocalElement> for LocalElement {
            type Output = LocalElement;
            fn $method(self, rhs: LocalElement) -> LocalElement {
                (&self).$try(&rhs).expect("LocalElement arithmetic")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl fmt::Display for LocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Q, c)
    }

    fn el(c: &[i64]) -> LocalElement {
        LocalElement::from_polynomial(poly(c))
    }

    fn frac(n: &[i64], d: &[i64]) -> LocalElement {
        LocalElement::from_fraction(poly(n), poly(d)).unwrap()
    }

    #[test]
    fn add_monomials() {
        let s = el(&[0, 1]) + el(&[0, 0, 1]);
        assert_eq!(s.numerator(), &poly(&[0, 1, 1]));
        assert!(s.denominator().is_one());
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let a = frac(&[1], &[1, -1]);
        assert!((a * el(&[1, -1])).is_one());
    }

    #[test]
    fn difference_valuation() {
        let d = el(&[0, 0, 0, 1]) - el(&[0, 1]);
        assert_eq!(d.valuation(), Valuation::Finite(1));
    }

    #[test]
    fn invert_cases() {
        let inv = el(&[1, 1]).invert().unwrap();
        assert_eq!(inv, frac(&[1], &[1, 1]));
        assert!(matches!(el(&[0, 1]).invert(), Err(RingError::NotAUnit(_))));
        assert_eq!(LocalElement::zero(Q).invert(), Err(RingError::ZeroNotInvertible));
        assert_eq!(el(&[2]).invert().unwrap().to_string(), "1/2");
    }

    #[test]
    fn divide_exact_cases() {
        assert_eq!(el(&[0, 0, 0, 0, 1]).divide_exact(&el(&[0, 1])).unwrap(), el(&[0, 0, 0, 1]));
        assert_eq!(el(&[0, 1, 1]).divide_exact(&el(&[1, 1])).unwrap(), el(&[0, 1]));
        assert_eq!(
            el(&[0, 1]).divide_exact(&el(&[0, 0, 1])),
            Err(RingError::QuotientNotInRing { numerator: 1, denominator: 2 })
        );
    }

    #[test]
    fn valuations() {
        assert_eq!(el(&[0, 0, 0, 1, 0, 1]).valuation(), Valuation::Finite(3));
        assert_eq!(LocalElement::zero(Q).valuation(), Valuation::Infinite);
        assert_eq!(frac(&[0, 0, 1], &[1, 1]).valuation(), Valuation::Finite(2));
    }

    #[test]
    fn residues() {
        assert_eq!(el(&[1, 1]).residue(), Q.one());
        assert_eq!(el(&[0, 0, 0, 0, 1]).residue(), Q.zero());
        assert_eq!(frac(&[2, 1], &[1, 1]).residue(), Q.from_i64(2));
    }

    #[test]
    fn canonical_form_is_normal() {
        // (2 + 2pi) / (2 - 2pi^2) == 1 / (1 - pi)
        assert_eq!(frac(&[2, 2], &[2, 0, -2]), frac(&[1], &[1, -1]));
        assert_eq!(frac(&[3], &[3]), el(&[1]));
        assert_eq!(LocalElement::from_fraction(poly(&[1]), poly(&[0, 1])), Err(RingError::NotInRing));
    }

    #[test]
    fn render_fraction() {
        assert_eq!(frac(&[1, 1], &[1, -1]).to_string(), "(1 + pi)/(1 - pi)");
        assert_eq!(el(&[0, 0, 0, 1, 2]).to_string(), "pi^3 + 2*pi^4");
    }
}
