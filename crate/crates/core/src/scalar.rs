//! Scalars: exact Gaussian rationals and complex doubles.
//!
//! Exact scalars drive every polynomial identity; floats only enter the
//! eigenvalue-branch numerics. Arithmetic across the two modes is refused.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An element of Q(i), stored as a pair of reduced rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn i() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
        }
    }

    /// Integer power; negative exponents invert. `None` for `0^-n`.
    pub fn powi(&self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut n = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Some(acc)
    }

    /// Least common multiple of the denominators of both parts.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

pub(crate) fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

impl Zero for GaussRational {
    fn zero() -> Self {
        Self {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        Self::real(BigRational::one())
    }
}

impl<'a> Add<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn add(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn sub(self, rhs: &GaussRational) -> GaussRational {
        GaussRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussRational> for &'a GaussRational {
    type Output = GaussRational;
    fn mul(self, rhs: &GaussRational) -> GaussRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRational::real(&self.re * &rhs.re);
        }
        GaussRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRational {
    type Output = GaussRational;
    fn neg(self) -> GaussRational {
        GaussRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$f:ident),*) => {$(
        impl $tr<GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $f(self, rhs: GaussRational) -> GaussRational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussRational> for GaussRational {
            type Output = GaussRational;
            fn $f(self, rhs: &GaussRational) -> GaussRational {
                (&self).$f(rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl From<i64> for GaussRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussRational {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

/// Canonical text: `p/q` for real values, `a/b+c/d i` otherwise.
impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{} i", self.re, sign, self.im.abs())
    }
}

impl FromStr for GaussRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Scalar>()? {
            Scalar::Exact(g) => Ok(g),
            Scalar::Float(_) => Err(Error::RequiresExact),
        }
    }
}

/// A potential value or evaluation point.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(GaussRational),
    Float(Complex64),
}

impl Scalar {
    pub fn exact(g: GaussRational) -> Self {
        Scalar::Exact(g)
    }

    pub fn integer(n: i64) -> Self {
        Scalar::Exact(GaussRational::from_integer(n))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::Exact(GaussRational::from_ratio(numer, denom))
    }

    pub fn float(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&GaussRational> {
        match self {
            Scalar::Exact(g) => Some(g),
            Scalar::Float(_) => None,
        }
    }

    pub fn to_exact(&self) -> Result<GaussRational> {
        self.as_exact().cloned().ok_or(Error::RequiresExact)
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Exact(g) => g.to_complex(),
            Scalar::Float(c) => *c,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(g) => g.is_zero(),
            Scalar::Float(c) => c.is_zero(),
        }
    }

    pub fn abs(&self) -> f64 {
        self.to_complex().norm()
    }

    fn combine(
        &self,
        rhs: &Scalar,
        exact: impl FnOnce(&GaussRational, &GaussRational) -> Option<GaussRational>,
        float: impl FnOnce(Complex64, Complex64) -> Complex64,
    ) -> Result<Scalar> {
        match (self, rhs) {
            (Scalar::Exact(a), Scalar::Exact(b)) => {
                exact(a, b).map(Scalar::Exact).ok_or(Error::DivisionByZero)
            }
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(float(*a, *b))),
            _ => Err(Error::MixedMode),
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar> {
        self.combine(rhs, |a, b| Some(a + b), |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar> {
        self.combine(rhs, |a, b| Some(a - b), |a, b| a - b)
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar> {
        self.combine(rhs, |a, b| Some(a * b), |a, b| a * b)
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.combine(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Exact(g) => Scalar::Exact(-g),
            Scalar::Float(c) => Scalar::Float(-*c),
        }
    }
}

impl From<GaussRational> for Scalar {
    fn from(g: GaussRational) -> Self {
        Scalar::Exact(g)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::integer(n)
    }
}

impl From<Complex64> for Scalar {
    fn from(c: Complex64) -> Self {
        Scalar::Float(c)
    }
}

/// Exact scalars print canonically; floats print with `{:?}` so they
/// re-parse to the same bits.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(g) => write!(f, "{g}"),
            Scalar::Float(c) => {
                if c.im == 0.0 {
                    write!(f, "{:?}", c.re)
                } else {
                    let sign = if c.im.is_sign_negative() { '-' } else { '+' };
                    write!(f, "{:?}{}{:?} i", c.re, sign, c.im.abs())
                }
            }
        }
    }
}

enum Part {
    Exact(BigRational),
    Float(f64),
}

fn parse_part(s: &str, whole: &str) -> Result<Part> {
    let bad = || Error::InvalidScalar(whole.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    let is_float = s
        .chars()
        .any(|c| matches!(c, '.' | 'e' | 'E') || c.is_ascii_alphabetic());
    if is_float {
        let x: f64 = s.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        return Ok(Part::Float(x));
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n, d)
        }
        None => BigRational::from_integer(s.parse().map_err(|_| bad())?),
    };
    Ok(Part::Exact(r))
}

/// Position of the sign separating real and imaginary parts, if any.
fn split_sign(s: &str) -> Option<usize> {
    let bytes = s.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
}

/// Parses `p`, `p/q`, `a/b+c/d i`, `c/d i`, or decimal floats
/// (`0.5`, `1e-3`, `1.5-2.0 i`). Any decimal component makes the
/// whole scalar a float.
impl FromStr for Scalar {
    type Err = Error;
    fn from_str(input: &str) -> Result<Self> {
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidScalar(input.to_string());
        if compact.is_empty() {
            return Err(bad());
        }
        let (re_str, im_str) = match compact.strip_suffix('i') {
            Some(body) => match split_sign(body) {
                Some(k) => (&body[..k], Some(&body[k..])),
                None => ("0", Some(body)),
            },
            None => (compact.as_str(), None),
        };
        let re = parse_part(re_str, input)?;
        let im = match im_str {
            None => Part::Exact(BigRational::zero()),
            Some("") | Some("+") => Part::Exact(BigRational::one()),
            Some("-") => Part::Exact(-BigRational::one()),
            Some(s) => parse_part(s, input)?,
        };
        Ok(match (re, im) {
            (Part::Exact(a), Part::Exact(b)) => Scalar::Exact(GaussRational::new(a, b)),
            (a, b) => {
                let f = |p: Part| match p {
                    Part::Exact(r) => ratio_to_f64(&r),
                    Part::Float(x) => x,
                };
                Scalar::Float(Complex64::new(f(a), f(b)))
            }
        })
        .and_then(|s| {
            if let Scalar::Float(c) = &s {
                if !c.re.is_finite() || !c.im.is_finite() {
                    return Err(bad());
                }
            }
            Ok(s)
        })
    }
}

impl Scalar {
    /// Canonical string used in file formats.
    pub fn to_canonical(&self) -> String {
        format!("{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    #[test]
    fn parses_rationals_and_gaussians() {
        assert_eq!(g("3"), GaussRational::from_integer(3));
        assert_eq!(g("-6/4"), GaussRational::from_ratio(-3, 2));
        let z = g("1/2+3/4 i");
        assert_eq!(z.re, BigRational::new(1.into(), 2.into()));
        assert_eq!(z.im, BigRational::new(3.into(), 4.into()));
        assert_eq!(g("-i"), -GaussRational::i());
        assert_eq!(g("2i"), GaussRational::i().scale(&BigRational::from_integer(2.into())));
        assert_eq!(g("1/2-1/3 i").im, BigRational::new((-1).into(), 3.into()));
    }

    #[test]
    fn parses_floats() {
        assert_eq!("0.5".parse::<Scalar>().unwrap(), Scalar::float(0.5, 0.0));
        assert_eq!(
            "1e-3+2.5 i".parse::<Scalar>().unwrap(),
            Scalar::float(1e-3, 2.5)
        );
        assert_eq!(
            "1.5e+2-1 i".parse::<Scalar>().unwrap(),
            Scalar::float(150.0, -1.0)
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "1/0", "abc", "1//2", "nan", "inf", "1+", "3 j"] {
            assert!(s.parse::<Scalar>().is_err(), "{s}");
        }
    }

    #[test]
    fn canonical_display_round_trips() {
        for s in ["0", "-7/3", "1/2+3/4 i", "0-1 i", "5+1 i"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_canonical().parse::<Scalar>().unwrap(), v);
        }
        assert_eq!(g("4/6").to_string(), "2/3");
        assert_eq!(g("1-1/2 i").to_string(), "1-1/2 i");
    }

    #[test]
    fn mixed_mode_is_refused() {
        let a = Scalar::integer(1);
        let b = Scalar::float(1.0, 0.0);
        assert_eq!(a.checked_add(&b), Err(Error::MixedMode));
        assert_eq!(b.checked_mul(&a), Err(Error::MixedMode));
        assert_eq!(
            a.checked_add(&Scalar::ratio(1, 2)).unwrap(),
            Scalar::ratio(3, 2)
        );
        assert_eq!(a.checked_div(&Scalar::integer(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn gaussian_arithmetic() {
        let i = GaussRational::i();
        assert_eq!(&i * &i, -GaussRational::one());
        let z = g("1+2 i");
        assert_eq!(&z * &z.inv().unwrap(), GaussRational::one());
        assert_eq!(z.powi(-2).unwrap(), (&z * &z).inv().unwrap());
        assert_eq!(z.powi(0).unwrap(), GaussRational::one());
        assert!(GaussRational::zero().powi(-1).is_none());
    }
}
