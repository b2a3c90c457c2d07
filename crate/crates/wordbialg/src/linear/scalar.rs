//! Coefficient rings.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring usable as a coefficient ring.
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    /// Embeds an integer.
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer embedding")
    }

    /// Embeds a wide integer.
    fn int128(n: i128) -> Self {
        match i64::try_from(n) {
            Ok(m) => Self::int(m),
            Err(_) => Self::from_i128(n).expect("integer embedding"),
        }
    }
}

impl<T> Coeff for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// A coefficient ring with exact division by nonzero elements.
pub trait Field: Coeff + Div<Output = Self> {}

impl Field for BigRational {}
impl Field for num_rational::Rational64 {}
impl<const P: u64> Field for Zp<P> {}

/// Coefficient rings with a sign, used by positivity certificates.
pub trait Ordered: Coeff + PartialOrd {}

impl<T: Coeff + PartialOrd> Ordered for T {}

/// Coefficient rings that can tell whether a value is an integer.
pub trait Integral: Coeff {
    fn is_integral(&self) -> bool;
}

impl Integral for BigRational {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Integral for num_rational::Rational64 {
    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Integral for i64 {
    fn is_integral(&self) -> bool {
        true
    }
}

impl<const P: u64> Integral for Zp<P> {
    fn is_integral(&self) -> bool {
        true
    }
}

/// Rational number from numerator and denominator.
pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Residues modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Zp<const P: u64>(u64);

impl<const P: u64> Zp<P> {
    pub fn new(n: i64) -> Self {
        Zp(n.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in Z/{P}");
        self.pow(P - 2)
    }
}

impl<const P: u64> fmt::Debug for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Zp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Zp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Zp(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> AddAssign for Zp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u64> Sub for Zp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Neg for Zp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Zp(P - self.0)
        }
    }
}

impl<const P: u64> Mul for Zp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Zp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Zp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl<const P: u64> Zero for Zp<P> {
    fn zero() -> Self {
        Zp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Zp<P> {
    fn one() -> Self {
        Zp(1 % P)
    }
}

impl<const P: u64> FromPrimitive for Zp<P> {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Zp::new(n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Zp(n % P))
    }
    fn from_i128(n: i128) -> Option<Self> {
        Some(Zp(n.rem_euclid(P as i128) as u64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Zp<7>;

    #[test]
    fn zp_arithmetic() {
        assert_eq!(F7::new(3) + F7::new(5), F7::new(1));
        assert_eq!(F7::new(3) * F7::new(5), F7::new(1));
        assert_eq!(F7::new(-1).value(), 6);
        assert_eq!(F7::new(3).inv() * F7::new(3), F7::one());
        assert_eq!(F7::new(2) / F7::new(4), F7::new(4));
        assert_eq!(<F7 as Coeff>::int(-15), F7::new(6));
    }

    #[test]
    fn rational_display_is_lowest_terms() {
        assert_eq!(rational(6, 4).to_string(), "3/2");
        assert_eq!(rational(-8, 4).to_string(), "-2");
        assert_eq!(rational(0, 5).to_string(), "0");
    }
}
