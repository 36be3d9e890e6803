//! Sparse Laurent polynomials in `z_1, …, z_d` that are ordinary
//! polynomials in `λ`.
//!
//! Terms live in a `BTreeMap` keyed by [`Exponent`], ordered
//! lexicographically on `(λ-degree, e_1, …, e_d)`. Zero coefficients are
//! never stored, so structural equality is mathematical equality for exact
//! coefficients.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Debug;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::GaussRational;

/// Largest number of `z` variables a polynomial may carry.
pub const MAX_DIM: usize = 2;

/// Exponent key `(λ^m; z_1^{e_1} … z_d^{e_d})`. Unused `z` slots stay zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Exponent {
    pub lambda: u32,
    pub z: [i32; MAX_DIM],
}

impl Exponent {
    pub fn new(z: &[i32], lambda: u32) -> Self {
        let mut e = Exponent { lambda, z: [0; MAX_DIM] };
        e.z[..z.len()].copy_from_slice(z);
        e
    }

    fn combine(&self, other: &Exponent) -> Exponent {
        let mut z = [0; MAX_DIM];
        for (k, slot) in z.iter_mut().enumerate() {
            *slot = self.z[k] + other.z[k];
        }
        Exponent {
            lambda: self.lambda + other.lambda,
            z,
        }
    }
}

/// Coefficient rings usable in [`LaurentPoly`].
pub trait Coeff:
    Clone + PartialEq + Debug + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn to_complex(&self) -> Complex64;
}

impl Coeff for GaussRational {
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        GaussRational::inv(self)
    }
    fn to_complex(&self) -> Complex64 {
        GaussRational::to_complex(self)
    }
}

impl Coeff for Complex64 {
    fn neg(&self) -> Self {
        -*self
    }
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Complex64::new(1.0, 0.0) / *self)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
}

fn pow_signed<C: Coeff>(x: &C, e: i32) -> Option<C> {
    let base = if e < 0 { x.inv()? } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = C::one();
    let mut sq = base;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * sq.clone();
        }
        n >>= 1;
        if n > 0 {
            sq = sq.clone() * sq;
        }
    }
    Some(acc)
}

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<C = GaussRational> {
    dim: usize,
    terms: BTreeMap<Exponent, C>,
}

/// First difference between two polynomials in canonical key order.
#[derive(Clone, Debug, PartialEq)]
pub struct Difference<C> {
    pub exponent: Exponent,
    pub left: C,
    pub right: C,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "at most {MAX_DIM} Laurent variables");
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: C) -> Self {
        Self::monomial(dim, Exponent::default(), c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, C::one())
    }

    pub fn monomial(dim: usize, exponent: Exponent, c: C) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(exponent, c);
        p
    }

    /// `z_j^power` (zero-based `j`).
    pub fn z(dim: usize, j: usize, power: i32) -> Self {
        assert!(j < dim);
        let mut e = Exponent::default();
        e.z[j] = power;
        Self::monomial(dim, e, C::one())
    }

    /// The variable `λ`.
    pub fn lambda(dim: usize) -> Self {
        Self::monomial(dim, Exponent::new(&[], 1), C::one())
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(dim: usize, terms: impl IntoIterator<Item = (Exponent, C)>) -> Self {
        let mut p = Self::zero(dim);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: C) {
        debug_assert!(e.z[self.dim..].iter().all(|&x| x == 0));
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn lambda_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.lambda).max()
    }

    /// `(min, max)` exponent of `z_j` over all terms.
    pub fn z_range(&self, j: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e.z[j]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Coefficient of `λ^m` as a polynomial in `z` alone.
    pub fn lambda_coeff(&self, m: u32) -> LaurentPoly<C> {
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .filter(|(e, _)| e.lambda == m)
                .map(|(e, c)| (Exponent { lambda: 0, ..*e }, c.clone())),
        )
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_terms(
            self.dim,
            self.terms.iter().map(|(e, c)| (*e, c.clone() * k.clone())),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `z_j -> z_j^t`.
    pub fn substitute_power(&self, j: usize, t: i32) -> Self {
        Self::from_terms(
            self.dim,
            self.terms.iter().map(|(e, c)| {
                let mut e = *e;
                e.z[j] *= t;
                (e, c.clone())
            }),
        )
    }

    /// `z -> z^{-1}` in every variable.
    pub fn invert_z(&self) -> Self {
        (0..self.dim).fold(self.clone(), |p, j| p.substitute_power(j, -1))
    }

    /// `P(z, λ0)`, a polynomial with no `λ`.
    pub fn specialize_lambda(&self, lambda0: &C) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            let w = pow_signed(lambda0, e.lambda as i32).expect("nonnegative power");
            out.add_term(Exponent { lambda: 0, ..*e }, c.clone() * w);
        }
        out
    }

    /// `P(z, λ + a)`.
    pub fn shift_lambda(&self, a: &C) -> Self {
        let mut out = Self::zero(self.dim);
        let shift = {
            let mut s = Self::lambda(self.dim);
            s.add_term(Exponent::default(), a.clone());
            s
        };
        let mut powers: Vec<Self> = alloc::vec![Self::one(self.dim)];
        for (e, c) in &self.terms {
            while powers.len() <= e.lambda as usize {
                let next = powers.last().unwrap() * &shift;
                powers.push(next);
            }
            let rest = Exponent { lambda: 0, ..*e };
            for (pe, pc) in &powers[e.lambda as usize].terms {
                out.add_term(rest.combine(pe), c.clone() * pc.clone());
            }
        }
        out
    }

    /// Exact evaluation; fails if a `z_j` with a negative power is zero.
    pub fn evaluate(&self, z: &[C], lambda: &C) -> Result<C> {
        if z.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: z.len(),
            });
        }
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (zj, &ej) in z.iter().zip(&e.z) {
                t = t * pow_signed(zj, ej).ok_or(Error::ZeroCoordinate)?;
            }
            t = t * pow_signed(lambda, e.lambda as i32).expect("nonnegative power");
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Floating-point evaluation at complex arguments.
    pub fn eval_complex(&self, z: &[Complex64], lambda: Complex64) -> Complex64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_complex() * monomial_value(e, z, lambda))
            .sum()
    }

    /// `Σ |c| |z|^e |λ|^m`: the scale against which rounding in
    /// [`LaurentPoly::eval_complex`] should be judged.
    pub fn eval_abs(&self, z: &[Complex64], lambda: Complex64) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| c.to_complex().norm() * monomial_value(e, z, lambda).norm())
            .sum()
    }

    pub fn to_float(&self) -> LaurentPoly<Complex64> {
        LaurentPoly::from_terms(self.dim, self.terms.iter().map(|(e, c)| (*e, c.to_complex())))
    }

    /// Lowest exponent key where the two polynomials differ, if any.
    pub fn first_difference(&self, other: &Self) -> Option<Difference<C>> {
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ea, ca)), Some((eb, cb))) if ea == eb => {
                    if ca != cb {
                        return Some(Difference {
                            exponent: **ea,
                            left: (*ca).clone(),
                            right: (*cb).clone(),
                        });
                    }
                    a.next();
                    b.next();
                }
                (Some((ea, ca)), Some((eb, _))) if ea < eb => {
                    return Some(Difference {
                        exponent: **ea,
                        left: (*ca).clone(),
                        right: C::zero(),
                    })
                }
                (Some((ea, ca)), None) => {
                    return Some(Difference {
                        exponent: **ea,
                        left: (*ca).clone(),
                        right: C::zero(),
                    })
                }
                (_, Some((eb, cb))) => {
                    return Some(Difference {
                        exponent: **eb,
                        left: C::zero(),
                        right: (*cb).clone(),
                    })
                }
            }
        }
    }
}

fn monomial_value(e: &Exponent, z: &[Complex64], lambda: Complex64) -> Complex64 {
    let mut v = lambda.powu(e.lambda);
    for (zj, &ej) in z.iter().zip(&e.z) {
        v *= zj.powi(ej);
    }
    v
}

/// Outcome of [`laurent_eq`].
#[derive(Clone, Debug, PartialEq)]
pub struct Equality<C> {
    pub equal: bool,
    pub witness: Option<Difference<C>>,
}

/// Structural comparison of two polynomials of the same dimension.
pub fn laurent_eq<C: Coeff>(p: &LaurentPoly<C>, r: &LaurentPoly<C>) -> Result<Equality<C>> {
    if p.dim != r.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            found: r.dim,
        });
    }
    let witness = p.first_difference(r);
    Ok(Equality {
        equal: witness.is_none(),
        witness,
    })
}

/// Compares an exact polynomial with a floating-point one. A tolerance is
/// mandatory; returns the lowest exponent whose coefficients differ by
/// more than `tol`.
pub fn laurent_eq_mixed(
    exact: &LaurentPoly<GaussRational>,
    float: &LaurentPoly<Complex64>,
    tol: Option<f64>,
) -> Result<Option<Exponent>> {
    let tol = tol.ok_or(Error::MissingTolerance)?;
    if exact.dim != float.dim {
        return Err(Error::DimensionMismatch {
            expected: exact.dim,
            found: float.dim,
        });
    }
    let mut keys: Vec<&Exponent> = exact.terms.keys().chain(float.terms.keys()).collect();
    keys.sort();
    keys.dedup();
    Ok(keys
        .into_iter()
        .find(|e| (exact.coeff(e).to_complex() - float.coeff(e)).norm() > tol)
        .copied())
}

impl<'a, C: Coeff> Add<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a, C: Coeff> Sub<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, Coeff::neg(c));
        }
        out
    }
}

impl<'a, C: Coeff> Mul<&'a LaurentPoly<C>> for &'a LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = LaurentPoly::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea.combine(eb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (*e, Coeff::neg(c))).collect(),
        }
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            for (j, &ej) in e.z[..self.dim].iter().enumerate() {
                if ej != 0 {
                    write!(f, "*z{}^{}", j + 1, ej)?;
                }
            }
            if e.lambda != 0 {
                write!(f, "*l^{}", e.lambda)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({self})", self.dim)
    }
}

impl<C: Coeff + fmt::Display> LaurentPoly<C> {
    pub fn to_canonical_string(&self) -> String {
        alloc::format!("{self}")
    }
}

/// A univariate polynomial in `λ`, coefficients in ascending order with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaPoly<C = GaussRational> {
    coeffs: Vec<C>,
}

impl<C: Coeff> LambdaPoly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, m: usize) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn evaluate(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c.to_complex())
    }

    /// Embeds as a `dim`-variable Laurent polynomial independent of `z`.
    pub fn to_laurent(&self, dim: usize) -> LaurentPoly<C> {
        LaurentPoly::from_terms(
            dim,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(m, c)| (Exponent::new(&[], m as u32), c.clone())),
        )
    }
}
