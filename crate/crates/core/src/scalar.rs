//! Exact coefficient rings.
//!
//! Everything in this crate is generic over [`Scalar`] (a commutative ring
//! with exact arithmetic) or [`Field`]. The concrete instances are prime
//! fields [`Fp`], the integers (`i64`, overflow-checked builds) and
//! arbitrary-precision rationals ([`num_rational::BigRational`]).

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Characteristic of the ring; zero for the integers and the rationals.
    fn characteristic() -> u64;

    /// Image of an integer under the unique ring map from the integers.
    fn from_i64(v: i64) -> Self;

    /// Short tag used in serialized headers: the prime, `Q` or `Z`.
    fn tag() -> String;

    /// Parses a coefficient as written by `Display`.
    fn parse_coeff(s: &str) -> Option<Self>;
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait Field: Scalar + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;
}

/// Residues modulo the prime `P`, stored in `0..P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u32> Fp<P> {
    const CHECK: () = assert!(is_prime(P) && P < (1 << 31), "modulus must be a prime below 2^31");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::CHECK;
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
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
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u32> Scalar for Fp<P> {
    fn characteristic() -> u64 {
        P as u64
    }

    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    fn tag() -> String {
        P.to_string()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let v: u32 = s.parse().ok()?;
        (v < P).then_some(Fp(v))
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }
}

impl Scalar for i64 {
    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        v
    }

    fn tag() -> String {
        "Z".into()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl Scalar for BigRational {
    fn characteristic() -> u64 {
        0
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn tag() -> String {
        "Q".into()
    }

    fn parse_coeff(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (BigInt::from_str(a).ok()?, BigInt::from_str(b).ok()?),
            None => (BigInt::from_str(s).ok()?, BigInt::one()),
        };
        if den.is_zero() || den.is_negative() {
            return None;
        }
        let r = BigRational::new(num.clone(), den.clone());
        // only accept the reduced form so that parsing inverts `Display`
        (r.numer() == &num && r.denom() == &den).then_some(r)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Runtime description of a coefficient ring, as used in file headers and on
/// the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Prime(u32),
    Rationals,
    Integers,
}

impl FieldKind {
    pub fn of<T: Scalar>() -> Self {
        match T::characteristic() {
            0 if T::tag() == "Z" => FieldKind::Integers,
            0 => FieldKind::Rationals,
            p => FieldKind::Prime(p as u32),
        }
    }
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Prime(p) => write!(f, "{p}"),
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::Integers => f.write_str("Z"),
        }
    }
}

impl FromStr for FieldKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" | "q" => Ok(FieldKind::Rationals),
            "Z" | "z" => Ok(FieldKind::Integers),
            _ => {
                let p: u32 = s.parse().map_err(|_| format!("unknown field `{s}`"))?;
                if is_prime(p) {
                    Ok(FieldKind::Prime(p))
                } else {
                    Err(format!("{p} is not a prime"))
                }
            }
        }
    }
}

pub fn is_prime_u32(p: u32) -> bool {
    is_prime(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_axioms() {
        for a in 0..7u64 {
            for b in 0..7u64 {
                let (x, y) = (F7::new(a), F7::new(b));
                assert_eq!((x + y).value() as u64, (a + b) % 7);
                assert_eq!((x * y).value() as u64, (a * b) % 7);
                assert_eq!(x - y + y, x);
                if b != 0 {
                    assert_eq!(x / y * y, x);
                }
            }
        }
        assert_eq!(F7::from_i64(-1), F7::new(6));
        assert!(F7::zero().inv().is_none());
    }

    #[test]
    fn rational_parse_is_canonical() {
        let r = BigRational::new(BigInt::from(-6), BigInt::from(4));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(BigRational::parse_coeff("-3/2"), Some(r));
        assert_eq!(BigRational::parse_coeff("6/4"), None);
        assert_eq!(BigRational::parse_coeff("5"), Some(BigRational::from_i64(5)));
    }

    #[test]
    fn field_kind_round_trip() {
        for s in ["2", "3", "Q", "Z"] {
            assert_eq!(s.parse::<FieldKind>().unwrap().to_string(), s);
        }
        assert!("4".parse::<FieldKind>().is_err());
        assert_eq!(FieldKind::of::<Fp<5>>(), FieldKind::Prime(5));
        assert_eq!(FieldKind::of::<i64>(), FieldKind::Integers);
        assert_eq!(FieldKind::of::<BigRational>(), FieldKind::Rationals);
    }
}
