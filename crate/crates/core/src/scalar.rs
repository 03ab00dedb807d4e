//! Exact scalar types.
//!
//! Everything in this crate is computed over an exact field. The linear
//! algebra layer is generic over [`Scalar`]; the two instances used in
//! practice are [`Rational`] (real data such as `so(p,q)` matrices and
//! exterior forms) and [`GaussianRational`] (spinor modules and Clifford
//! matrices).

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational in canonical form (positive denominator,
/// coprime parts).
pub type Rational = BigRational;

/// An exact field element usable by the generic matrix routines.
///
/// Implementors must keep values canonical so that `==` is mathematical
/// equality.
pub trait Scalar:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Complex conjugate; the identity on real fields.
    fn conj(&self) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self>;

    /// Embeds a rational number.
    fn from_rational(r: Rational) -> Self;

    /// Whether the value lies in the real subfield.
    fn is_real(&self) -> bool;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(rat(v, 1))
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out *= rhs;
        out
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out += rhs;
        out
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

/// Shorthand for the rational `num/den`. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn is_real(&self) -> bool {
        true
    }
}

/// Writes a rational as `<int>/<posint>`, always with an explicit denominator.
pub fn write_rational(f: &mut impl fmt::Write, r: &Rational) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// Exact complex number `re + im·i` with rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    /// `a/b + (c/d)·i` from machine integers.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational::new(rat(a, b), rat(c, d))
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    /// Multiplicative inverse, reporting division by zero as an error.
    pub fn inv(&self) -> Result<Self> {
        self.checked_inv().ok_or(Error::DivisionByZero)
    }

    /// `i^k` for any integer `k`.
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussianRational::one(),
            1 => GaussianRational::i(),
            2 => -GaussianRational::one(),
            _ => -GaussianRational::i(),
        }
    }

    /// Parses the wire grammar `<int>/<posint>(+|-)<int>/<posint>*i`.
    pub fn parse_exact(s: &str) -> Option<Self> {
        let body = s.strip_suffix("*i")?;
        // The split point is the sign that follows the first rational.
        let slash = body.find('/')?;
        let rest = &body[slash + 1..];
        let sign_pos = rest.find(['+', '-'])? + slash + 1;
        let re = parse_rational(&body[..sign_pos])?;
        let (sign, im_str) = body[sign_pos..].split_at(1);
        let mut im = parse_rational(im_str)?;
        if sign == "-" {
            if im.is_negative() {
                return None;
            }
            im = -im;
        } else if im_str.starts_with('-') {
            return None;
        }
        Some(GaussianRational { re, im })
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/')?;
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if !d.is_positive() {
        return None;
    }
    Some(Rational::new(n, d))
}

impl fmt::Display for GaussianRational {
    /// Wire grammar: `<int>/<posint>(+|-)<int>/<posint>*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rational(f, &self.re)?;
        if self.im.is_negative() {
            f.write_str("-")?;
            write_rational(f, &-self.im.clone())?;
        } else {
            f.write_str("+")?;
            write_rational(f, &self.im)?;
        }
        f.write_str("*i")
    }
}

impl serde::Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for GaussianRational {
    fn from(re: Rational) -> Self {
        GaussianRational::real(re)
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::real(rat(v, 1))
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::real(Rational::one())
    }
}

impl Neg for GaussianRational {
    type Output = Self;

    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        -self.clone()
    }
}

impl<'a> AddAssign<&'a GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &'a GaussianRational) {
        if !rhs.re.is_zero() {
            self.re += &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl<'a> SubAssign<&'a GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &'a GaussianRational) {
        if !rhs.re.is_zero() {
            self.re -= &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl<'a> MulAssign<&'a GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &'a GaussianRational) {
        *self = &*self * rhs;
    }
}

impl<'b> Mul<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        // Most Clifford entries are purely real or purely imaginary.
        match (
            self.re.is_zero(),
            self.im.is_zero(),
            rhs.re.is_zero(),
            rhs.im.is_zero(),
        ) {
            (true, true, _, _) | (_, _, true, true) => GaussianRational::zero(),
            (_, true, _, _) => GaussianRational::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (true, _, _, _) => GaussianRational::new(-(&self.im * &rhs.im), &self.im * &rhs.re),
            (_, _, _, true) => GaussianRational::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (_, _, true, _) => GaussianRational::new(-(&self.im * &rhs.im), &self.re * &rhs.im),
            _ => GaussianRational::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Add for GaussianRational {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += &rhs;
        self
    }
}

impl<'b> Add<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &'b GaussianRational) -> GaussianRational {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for GaussianRational {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= &rhs;
        self
    }
}

impl<'b> Sub<&'b GaussianRational> for &GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &'b GaussianRational) -> GaussianRational {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Div for GaussianRational {
    type Output = Self;

    /// Panics on division by zero; use [`GaussianRational::inv`] for a
    /// checked version.
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.checked_inv().expect("division by zero");
        &self * &inv
    }
}

impl Scalar for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(GaussianRational::real(self.re.recip()));
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    fn from_rational(r: Rational) -> Self {
        GaussianRational::real(r)
    }

    fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::from_parts(a, b, c, d)
    }

    #[test]
    fn product_with_conjugate_is_norm() {
        let z = g(1, 2, 1, 1);
        assert_eq!(&z * &z.conj(), g(5, 4, 0, 1));
    }

    #[test]
    fn inverse_of_i() {
        assert_eq!(GaussianRational::i().inv().unwrap(), -GaussianRational::i());
        assert_eq!(GaussianRational::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(g(2, 4, 0, 1), g(1, 2, 0, 3));
        assert_eq!(g(2, 4, 0, 1).re.numer(), &BigInt::from(1));
    }

    #[test]
    fn wire_grammar() {
        assert_eq!(g(1, 2, 1, 1).to_string(), "1/2+1/1*i");
        assert_eq!(g(-3, 1, -2, 6).to_string(), "-3/1-1/3*i");
        assert_eq!(GaussianRational::zero().to_string(), "0/1+0/1*i");
        for z in [g(1, 2, 1, 1), g(-3, 1, -2, 6), g(0, 1, 0, 1), g(7, 5, -1, 9)] {
            assert_eq!(GaussianRational::parse_exact(&z.to_string()), Some(z));
        }
        assert_eq!(GaussianRational::parse_exact("1/2+-1/1*i"), None);
        assert_eq!(GaussianRational::parse_exact("1/0+1/1*i"), None);
    }

    #[test]
    fn i_powers() {
        assert_eq!(GaussianRational::i_pow(3), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(-1), -GaussianRational::i());
        assert_eq!(GaussianRational::i_pow(6), -GaussianRational::one());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }
}
