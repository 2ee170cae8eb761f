use std::fmt;

use super::field::{Field, Scalar};

/// Dense univariate polynomial in `pi` over a [`Field`], coefficients indexed
/// by exponent. Trailing zeros are always stripped, so the zero polynomial
/// has an empty coefficient vector.
///
/// Arithmetic between polynomials over different fields panics; callers in
/// this crate check fields at the [`LocalElement`](super::LocalElement) level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero(field: Field) -> Self {
        Polynomial { field, coeffs: Vec::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> Self {
        let field = c.field();
        Self::from_coeffs(field, vec![c])
    }

    /// `c * pi^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: Field, coeffs: Vec<Scalar>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        let mut p = Polynomial { field, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Scalar::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn lowest_exponent(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `pi^k`; the caller guarantees `k <= lowest_exponent`.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.is_zero() || self.lowest_exponent().unwrap() >= k);
        Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().skip(k).cloned().collect(),
        }
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { field: self.field, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| self.coeff(k).try_add(&other.coeff(k)).expect("field mismatch"))
            .collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            field: self.field,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.try_mul(c).expect("field mismatch"))
            .collect();
        Self::from_coeffs(self.field, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = a.try_mul(b).expect("field mismatch");
                coeffs[i + j] = coeffs[i + j].try_add(&t).expect("field mismatch");
            }
        }
        Self::from_coeffs(self.field, coeffs)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let lead = divisor.leading().expect("division by zero polynomial");
        let lead_inv = lead.inverse().expect("nonzero leading coefficient");
        let dd = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(dd) + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap().try_mul(&lead_inv).expect("field mismatch");
            let shift = rd - dd;
            quot[shift] = c.clone();
            rem = rem.sub(&divisor.scale(&c).shift_up(shift));
        }
        (Self::from_coeffs(self.field, quot), rem)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inverse().expect("nonzero")),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(0)
    }

    /// True when the polynomial is `c * pi^k` for a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = if negative { c.neg() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = magnitude.to_string();
            match (k, magnitude.is_one()) {
                (0, _) => f.write_str(&mag)?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("pi")?,
                _ => write!(f, "pi^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(Field::Rational, c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(q(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(q(&[0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (1 + pi)(1 - pi) = 1 - pi^2
        let a = q(&[1, 0, -1]);
        let (quot, rem) = a.div_rem(&q(&[1, 1]));
        assert_eq!(quot, q(&[1, -1]));
        assert!(rem.is_zero());
        let g = q(&[1, 0, -1]).gcd(&q(&[2, 2]));
        assert_eq!(g, q(&[1, 1]));
    }

    #[test]
    fn render() {
        assert_eq!(q(&[0, 0, 0, 1, 2]).to_string(), "pi^3 + 2*pi^4");
        assert_eq!(q(&[1, -1]).to_string(), "1 - pi");
        assert_eq!(q(&[-3]).to_string(), "-3");
        assert_eq!(q(&[]).to_string(), "0");
    }
}
