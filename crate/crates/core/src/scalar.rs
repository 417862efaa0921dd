//! Exact Gaussian rational scalars.
//!
//! Every coefficient in the system is a pair of arbitrary-precision rationals
//! `re + im*i`. There is no floating point anywhere: identities are checked by
//! structural equality of canonical forms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rational = BigRational;

/// Coefficient field selector. `Rational` restricts inputs and operator
/// images to the real rationals; `Gaussian` makes the imaginary unit
/// available (needed for the metaplectic images `i x_i x_j` etc.).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    Gaussian,
}

/// A Gaussian rational `re + im*i`.
///
/// `BigRational` keeps both parts in lowest terms with positive denominators,
/// so two scalars are equal iff their stored parts are identical.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    re: Rational,
    im: Rational,
}

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Scalar {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Scalar::real(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(v: i64) -> Self {
        Scalar::real(Rational::from_integer(BigInt::from(v)))
    }

    /// `num/den` as an exact real scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::real(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        Scalar::real(Rational::new(num, den))
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Multiplicative inverse. Panics on zero; callers divide only by values
    /// they have already proven nonzero (pivots, projector denominators).
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero scalar");
        // 1/(a+bi) = (a-bi)/(a^2+b^2)
        let norm = &self.re * &self.re + &self.im * &self.im;
        Scalar {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = (&*self) * rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let im_mag = self.im.abs();
        let im_str = if im_mag.is_one() {
            "i".to_string()
        } else {
            format!("{}i", im_mag)
        };
        if self.re.is_zero() {
            if self.im.is_negative() {
                write!(f, "-{}", im_str)
            } else {
                write!(f, "{}", im_str)
            }
        } else if self.im.is_negative() {
            write!(f, "{}-{}", self.re, im_str)
        } else {
            write!(f, "{}+{}", self.re, im_str)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_unit_squares_to_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn rationals_stay_reduced() {
        let half = Scalar::from_ratio(2, 4);
        assert_eq!(half, Scalar::from_ratio(1, 2));
        assert_eq!(half.clone() + half, Scalar::one());
    }

    #[test]
    fn inverse_of_gaussian_value() {
        let z = Scalar::new(
            Rational::new(BigInt::from(1), BigInt::from(2)),
            Rational::from_integer(BigInt::from(3)),
        );
        assert!((z.clone() * z.inv()).is_one());
    }

    #[test]
    #[should_panic(expected = "division by zero")]
    fn zero_has_no_inverse() {
        Scalar::zero().inv();
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((Scalar::one() - Scalar::i()).to_string(), "1-i");
    }
}
