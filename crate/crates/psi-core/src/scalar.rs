//! Coefficient fields: exact rationals (the default) and an experimental
//! prime-field mode.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! crate. The rational field is backed by arbitrary-precision integers, so
//! `(a/b) + (c/d)` is computed without rounding and every value is kept in
//! lowest terms with a positive denominator.

use crate::error::{Error, Result};
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Exact rational scalar, normalized to lowest terms, denominator > 0.
pub type Rational = num_rational::BigRational;

/// A coefficient field for polynomials and linear algebra.
///
/// `CHARACTERISTIC` is 0 for the rationals and `p` for `Fp<p>`; operations
/// that mechanize a theorem with characteristic hypotheses consult it and
/// refuse unsupported fields.
pub trait Field:
    Clone + PartialEq + Eq + PartialOrd + Ord + Hash + fmt::Debug + fmt::Display + Sized
{
    const CHARACTERISTIC: u64;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// Build `num/den` in this field. Fails when `den` is zero or (in the
    /// prime-field case) divisible by the characteristic.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    /// Sign and magnitude used by the polynomial printer; prime fields have
    /// no meaningful sign and always report non-negative.
    fn display_is_negative(&self) -> bool {
        false
    }
    fn display_magnitude(&self) -> Self {
        self.clone()
    }

    /// Reduce a matrix of rows to reduced row echelon form in place.
    ///
    /// The default is ordinary Gauss-Jordan elimination over the field; the
    /// rational field overrides this with fraction-free (Bareiss)
    /// elimination plus a final normalization pass, which contains the
    /// intermediate coefficient swell that dominates runtime otherwise.
    fn rref_rows(rows: &mut Vec<Vec<Self>>) {
        crate::linalg::gauss_jordan_rref(rows);
    }
}

impl Field for Rational {
    const CHARACTERISTIC: u64 = 0;

    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".to_string()));
        }
        Ok(Rational::new(num.clone(), den.clone()))
    }

    fn display_is_negative(&self) -> bool {
        self.is_negative()
    }
    fn display_magnitude(&self) -> Self {
        self.abs()
    }

    fn rref_rows(rows: &mut Vec<Vec<Self>>) {
        crate::linalg::bareiss_rref(rows);
    }
}

/// Prime field with `P` elements, `P` a prime that fits in `u64`.
///
/// Experimental mode: every theorem-checking operation whose statement
/// assumes characteristic 0 or != 2 refuses this field as appropriate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = Field::mul(&acc, &base);
            }
            base = Field::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1 % P
    }
    fn add(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + (P - rhs.0) as u128) % P as u128) as u64)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            // Fermat: P is prime, so a^(P-2) inverts a.
            Some(self.pow(P - 2))
        }
    }
    fn from_i64(v: i64) -> Self {
        let r = v.rem_euclid(P as i64) as u64;
        Fp(r)
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".to_string()));
        }
        let p = BigInt::from(P);
        let n = num_integer::Integer::mod_floor(num, &p);
        let d = num_integer::Integer::mod_floor(den, &p);
        let n = Fp::<P>(n.try_into().unwrap_or(0));
        let d = Fp::<P>(d.try_into().unwrap_or(0));
        match d.inv() {
            Some(di) => Ok(Field::mul(&n, &di)),
            None => Err(Error::InvalidArgument(
                "denominator divisible by the field characteristic".to_string(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = q(1, 3);
        let b = q(1, 6);
        assert_eq!(Field::add(&a, &b), q(1, 2));
        assert_eq!(Field::mul(&q(2, 3), &q(3, 2)), Field::one());
        assert_eq!(Field::sub(&q(1, 2), &q(1, 2)), Field::zero());
    }

    #[test]
    fn rational_normalized_lowest_terms() {
        let a = q(4, -6);
        assert_eq!(a, q(-2, 3));
        assert!(a.denom() > &BigInt::from(0));
        assert_eq!(a.to_string(), "-2/3");
        assert_eq!(q(6, 2).to_string(), "3");
    }

    #[test]
    fn fp_arithmetic() {
        type F7 = Fp<7>;
        let a = F7::new(3);
        let b = F7::new(5);
        assert_eq!(Field::add(&a, &b), F7::new(1));
        assert_eq!(Field::mul(&a, &b), F7::new(1));
        assert_eq!(a.inv().unwrap(), F7::new(5));
        assert_eq!(Field::neg(&a), F7::new(4));
        assert!(F7::new(0).inv().is_none());
    }

    #[test]
    fn fp_from_ratio_rejects_char_divisor() {
        type F5 = Fp<5>;
        let ok = F5::from_ratio(&BigInt::from(3), &BigInt::from(2)).unwrap();
        assert_eq!(ok, F5::new(4)); // 3 * 2^{-1} = 3 * 3 = 9 = 4
        assert!(F5::from_ratio(&BigInt::from(1), &BigInt::from(10)).is_err());
    }
}
