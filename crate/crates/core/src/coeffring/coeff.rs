//! Exact coefficient fields for the polynomial ring.
//!
//! Polynomials are generic over a [`Coefficient`], which is any exact field
//! with a conjugation. Two implementations ship: plain rationals (real) and
//! Gaussian rationals `a + b i`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Gaussian rational `a + b i` with exact rational parts.
pub type GaussianRational = Complex<BigRational>;

/// An exact coefficient field with conjugation.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn conj(&self) -> Self;

    fn from_rational(r: BigRational) -> Self;

    /// The imaginary unit, when the field contains one.
    fn imaginary_unit() -> Option<Self>;

    /// Inverse of a nonzero element.
    fn inv(&self) -> Option<Self>;

    /// Real and imaginary parts.
    fn parts(&self) -> (BigRational, BigRational);

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn is_real(&self) -> bool {
        self.parts().1.is_zero()
    }
}

impl Coefficient for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.clone(), BigRational::zero())
    }
}

impl Coefficient for GaussianRational {
    fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }

    fn from_rational(r: BigRational) -> Self {
        Complex::new(r, BigRational::zero())
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Complex::new(BigRational::zero(), BigRational::one()))
    }

    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        Some(Complex::new(&self.re / &norm, -&self.im / &norm))
    }

    fn parts(&self) -> (BigRational, BigRational) {
        (self.re.clone(), self.im.clone())
    }
}

/// `p/q` (or `p` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Writes a coefficient as a DSL-readable factor. `unit_elided` controls
/// whether `1` and `-1` print as empty / `-` (for use in front of a monomial).
pub(crate) fn write_coefficient<C: Coefficient>(c: &C, unit_elided: bool) -> (bool, String) {
    let (re, im) = c.parts();
    if im.is_zero() {
        let neg = re.is_negative();
        let mag = re.abs();
        let body = if unit_elided && mag.is_one() {
            String::new()
        } else {
            format_rational(&mag)
        };
        return (neg, body);
    }
    if re.is_zero() {
        let neg = im.is_negative();
        let mag = im.abs();
        let body = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", format_rational(&mag))
        };
        return (neg, body);
    }
    let sign = if im.is_negative() { "-" } else { "+" };
    let im_mag = im.abs();
    let im_body = if im_mag.is_one() {
        "i".to_string()
    } else {
        format!("{}*i", format_rational(&im_mag))
    };
    (false, format!("({} {} {})", format_rational(&re), sign, im_body))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianRational {
        Complex::new(rational(a, 1), rational(b, 1))
    }

    #[test]
    fn gaussian_norm() {
        assert_eq!(g(1, 1) * g(1, -1), g(2, 0));
    }

    #[test]
    fn inverse_roundtrip() {
        let z = Complex::new(rational(3, 4), rational(-2, 5));
        assert_eq!(z.clone() * Coefficient::inv(&z).unwrap(), GaussianRational::one());
        assert!(Coefficient::inv(&GaussianRational::zero()).is_none());
    }

    #[test]
    fn conj_is_involutive() {
        let z = g(3, -7);
        assert_eq!(z.conj().conj(), z);
        assert_eq!(rational(3, 4).conj(), rational(3, 4));
    }

    #[test]
    fn coefficient_rendering() {
        assert_eq!(write_coefficient(&g(0, -1), true), (true, "i".into()));
        assert_eq!(
            write_coefficient(&Complex::new(rational(1, 2), rational(3, 1)), true),
            (false, "(1/2 + 3*i)".into())
        );
        assert_eq!(write_coefficient(&g(-1, 0), true), (true, String::new()));
    }
}
