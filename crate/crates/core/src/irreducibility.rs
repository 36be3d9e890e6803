//! Reducibility of two-dimensional Fermi varieties.
//!
//! For coprime periods, `F_{λ0}(V)/Z²` can be reducible only at
//! `λ0 = [V]`, and there exactly when `P_V(z, λ0) = P_0(z, 0)`, where `P_0`
//! is the characteristic polynomial of the zero potential with the same
//! periods. Verdicts here apply that characterization verbatim; no general
//! bivariate factorization is attempted.

use alloc::vec::Vec;

use crate::charpoly::{compute_charpoly, free_charpoly, CharPoly};
use crate::error::{Error, Result};
use crate::laurent::{Difference, Exponent, LaurentPoly};
use crate::potential::Potential;
use crate::scalar::{GaussRational, Scalar};

/// Statement of the criterion every verdict is based on.
pub const CRITERION: &str =
    "coprime periods: F_lambda0(V)/Z^2 is reducible iff lambda0 = [V] and P_V(z,lambda0) = P_0(z,0)";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reducibility {
    Irreducible,
    Reducible,
}

impl Reducibility {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reducibility::Irreducible => "irreducible",
            Reducibility::Reducible => "reducible",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    LambdaNotAverage,
    PolynomialDiffers,
    EqualsFreePolynomial,
}

impl Reason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reason::LambdaNotAverage => "lambda0-ne-average",
            Reason::PolynomialDiffers => "polynomial-differs",
            Reason::EqualsFreePolynomial => "equals-free-polynomial",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReducibilityVerdict {
    pub lambda0: GaussRational,
    pub verdict: Reducibility,
    pub reason: Reason,
    pub witness: Option<Difference<GaussRational>>,
}

fn verdict_from(p: &CharPoly, free_at_zero: &LaurentPoly, lambda0: &GaussRational) -> ReducibilityVerdict {
    if lambda0 != p.average() {
        return ReducibilityVerdict {
            lambda0: lambda0.clone(),
            verdict: Reducibility::Irreducible,
            reason: Reason::LambdaNotAverage,
            witness: None,
        };
    }
    match p.specialize(lambda0).first_difference(free_at_zero) {
        None => ReducibilityVerdict {
            lambda0: lambda0.clone(),
            verdict: Reducibility::Reducible,
            reason: Reason::EqualsFreePolynomial,
            witness: None,
        },
        Some(d) => ReducibilityVerdict {
            lambda0: lambda0.clone(),
            verdict: Reducibility::Irreducible,
            reason: Reason::PolynomialDiffers,
            witness: Some(d),
        },
    }
}

fn prepare(v: &Potential) -> Result<(CharPoly, LaurentPoly)> {
    v.require_coprime_pair()?;
    let p = compute_charpoly(v)?;
    let free = free_charpoly(v.periods())?.specialize(&GaussRational::from_integer(0));
    Ok((p, free))
}

pub fn reducibility_test(v: &Potential, lambda0: &Scalar) -> Result<ReducibilityVerdict> {
    let lambda0 = lambda0.to_exact()?;
    let (p, free) = prepare(v)?;
    Ok(verdict_from(&p, &free, &lambda0))
}

/// Applies [`reducibility_test`] at every grid point, then at `[V]` if the
/// grid does not already contain it.
pub fn scan_lambda(v: &Potential, grid: &[Scalar]) -> Result<Vec<ReducibilityVerdict>> {
    let grid: Vec<GaussRational> = grid.iter().map(Scalar::to_exact).collect::<Result<_>>()?;
    let (p, free) = prepare(v)?;
    let mut out: Vec<_> = grid.iter().map(|l| verdict_from(&p, &free, l)).collect();
    if !grid.contains(p.average()) {
        out.push(verdict_from(&p, &free, p.average()));
    }
    Ok(out)
}

/// `z1 z2 · P_0(z, 0) = (z1 + z2)(z1 z2 + 1)` for a one-site cell.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub factors: [LaurentPoly; 2],
    /// `z1 z2 · P_V(z, λ0)`.
    pub target: LaurentPoly,
    pub verified: bool,
}

/// Exhibits the two components of the Fermi curve of a constant potential
/// on a one-site cell at its average energy.
pub fn factor_constant_q11(v: &Potential, lambda0: &Scalar) -> Result<Factorization> {
    if v.periods() != [1, 1] {
        return Err(Error::UnsupportedPeriods {
            expected: alloc::vec![1, 1],
            found: v.periods().to_vec(),
        });
    }
    let lambda0 = lambda0.to_exact()?;
    let p = compute_charpoly(v)?;
    if &lambda0 != p.average() {
        return Err(Error::LambdaNotAverage);
    }
    let one = GaussRational::from_integer(1);
    let z1 = LaurentPoly::z(2, 0, 1);
    let z2 = LaurentPoly::z(2, 1, 1);
    let first = &z1 + &z2;
    let second = &(&z1 * &z2) + &LaurentPoly::constant(2, one.clone());
    let shift = LaurentPoly::monomial(2, Exponent::new(&[1, 1], 0), one);
    let target = &shift * &p.specialize(&lambda0);
    let verified = &first * &second == target;
    Ok(Factorization {
        factors: [first, second],
        target,
        verified,
    })
}
