//! Exact Gaussian-rational scalars.
//!
//! All symbolic coefficients in this crate live in `Q(i)`: complex numbers
//! whose real and imaginary parts are arbitrary-precision rationals. Every
//! operation is exact; nothing here ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact complex rational `re + im*i`.
///
/// Both parts are kept in canonical reduced form (coprime numerator and
/// denominator, positive denominator) by `BigRational` itself.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den`, exact. Panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `(re_num/re_den) + (im_num/im_den) i`, exact.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// Exact multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Self::new(&self.re / &norm, -(&self.im / &norm)))
    }

    /// Lossy conversion for the numerical layer.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        fn r(x: &BigRational) -> f64 {
            let n = x.numer();
            let d = x.denom();
            // Good enough for the coefficient magnitudes this crate produces.
            str::parse::<f64>(&n.to_string()).unwrap_or(f64::NAN)
                / str::parse::<f64>(&d.to_string()).unwrap_or(f64::NAN)
        }
        (r(&self.re), r(&self.im))
    }

    fn fmt_rational(x: &BigRational) -> String {
        if x.denom().is_one() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical rendering: `0`, `3`, `-1/2`, `i`, `-i`, `2i`, `-1/2i`,
    /// `1+2i`, `3/2-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", Self::fmt_rational(&self.re));
        }
        let im_mag = Self::fmt_rational(&self.im.abs());
        let im_str = if im_mag == "1" {
            "i".to_string()
        } else {
            format!("{im_mag}i")
        };
        if self.re.is_zero() {
            let sign = if self.im.is_negative() { "-" } else { "" };
            return write!(f, "{sign}{im_str}");
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        write!(f, "{}{}{}", Self::fmt_rational(&self.re), sign, im_str)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    /// Exact division. Panics on a zero divisor; use `inv` to handle that case.
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero GaussianRational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! owned_ops {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    )*};
}
owned_ops!(Add, add; Sub, sub; Mul, mul; Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn grat(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
        GaussianRational::from_parts(re_n, re_d, im_n, im_d)
    }

    #[test]
    fn display_canonical_forms() {
        assert_eq!(GaussianRational::zero().to_string(), "0");
        assert_eq!(GaussianRational::from_int(3).to_string(), "3");
        assert_eq!(GaussianRational::from_ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        assert_eq!(grat(0, 1, 2, 1).to_string(), "2i");
        assert_eq!(grat(0, 1, -1, 2).to_string(), "-1/2i");
        assert_eq!(grat(1, 1, 2, 1).to_string(), "1+2i");
        assert_eq!(grat(3, 2, -1, 1).to_string(), "3/2-i");
    }

    #[test]
    fn inverse_of_i() {
        let i = GaussianRational::i();
        assert_eq!(i.inv().unwrap(), -GaussianRational::i());
        assert!(GaussianRational::zero().inv().is_none());
    }

    fn arb_grat() -> impl Strategy<Value = GaussianRational> {
        (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9)
            .prop_map(|(a, b, c, d)| grat(a, b, c, d))
    }

    proptest! {
        #[test]
        fn add_sub_round_trip(a in arb_grat(), b in arb_grat()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn mul_div_round_trip(a in arb_grat(), b in arb_grat()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!(&(&a * &b) / &b, a);
        }

        #[test]
        fn conjugation_is_ring_involution(a in arb_grat(), b in arb_grat()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        }
    }
}
