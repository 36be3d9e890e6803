//! Floquet and Fermi isospectrality, and the separable rigidity check.
//!
//! Two potentials are Floquet isospectral exactly when their full
//! characteristic polynomials agree, and Fermi isospectral at `λ0` exactly
//! when `P_X(·, λ0) = P_Y(·, λ0)`. Both are decided here by exact
//! polynomial identity.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use sha2::{Digest, Sha256};

use crate::branches::branch_eigenvalues_at;
use crate::charpoly::{compute_charpoly, CharPoly};
use crate::eigen::{eigenvalues, sort_spectrum};
use crate::error::{Error, Result};
use crate::floquet::numeric_floquet;
use crate::laurent::{Difference, LaurentPoly};
use crate::potential::{Potential, SeparablePotential};
use crate::scalar::{GaussRational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoKind {
    FermiAt,
    Floquet,
    K0Spectrum,
}

impl IsoKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            IsoKind::FermiAt => "fermi-at-lambda0",
            IsoKind::Floquet => "floquet",
            IsoKind::K0Spectrum => "k0-spectrum",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// Lowest monomial where the polynomials differ.
    Monomial(Box<Difference<GaussRational>>),
    /// First mismatching eigenvalue in sorted order.
    Eigenvalue {
        index: usize,
        left: Complex64,
        right: Complex64,
    },
}

/// Outcome of an isospectrality test. `witness` is present iff `equal` is
/// false.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoVerdict {
    pub kind: IsoKind,
    pub equal: bool,
    pub witness: Option<Witness>,
    pub lambda0: Option<GaussRational>,
}

fn poly_verdict(
    kind: IsoKind,
    left: &LaurentPoly,
    right: &LaurentPoly,
    lambda0: Option<GaussRational>,
) -> IsoVerdict {
    let witness = left.first_difference(right).map(|d| Witness::Monomial(Box::new(d)));
    IsoVerdict {
        kind,
        equal: witness.is_none(),
        witness,
        lambda0,
    }
}

/// Fermi isospectrality at `λ0` from precomputed characteristic polynomials.
pub fn fermi_verdict(px: &CharPoly, py: &CharPoly, lambda0: &GaussRational) -> IsoVerdict {
    poly_verdict(
        IsoKind::FermiAt,
        &px.specialize(lambda0),
        &py.specialize(lambda0),
        Some(lambda0.clone()),
    )
}

pub fn fermi_isospectral(x: &Potential, y: &Potential, lambda0: &Scalar) -> Result<IsoVerdict> {
    x.require_same_periods(y)?;
    let lambda0 = lambda0.to_exact()?;
    Ok(fermi_verdict(&compute_charpoly(x)?, &compute_charpoly(y)?, &lambda0))
}

pub fn floquet_isospectral(x: &Potential, y: &Potential) -> Result<IsoVerdict> {
    x.require_same_periods(y)?;
    let px = compute_charpoly(x)?;
    let py = compute_charpoly(y)?;
    Ok(poly_verdict(IsoKind::Floquet, px.poly(), py.poly(), None))
}

/// Compares the spectra of `D_X` and `D_Y` at `z = (1, …, 1)` within `tol`.
pub fn isospectral_k0(x: &Potential, y: &Potential, tol: f64) -> Result<IsoVerdict> {
    x.require_same_periods(y)?;
    let ones = alloc::vec![Complex64::new(1.0, 0.0); x.dim()];
    let mut ex = eigenvalues(numeric_floquet(x, &ones)?)?;
    let mut ey = eigenvalues(numeric_floquet(y, &ones)?)?;
    sort_spectrum(&mut ex);
    sort_spectrum(&mut ey);
    let witness = ex
        .iter()
        .zip(&ey)
        .enumerate()
        .find(|(_, (a, b))| (*a - *b).norm() > tol)
        .map(|(index, (a, b))| Witness::Eigenvalue {
            index,
            left: *a,
            right: *b,
        });
    Ok(IsoVerdict {
        kind: IsoKind::K0Spectrum,
        equal: witness.is_none(),
        witness,
        lambda0: None,
    })
}

/// Relative residual of
/// `P_X(z1, z2^{q2}, λ0) = Π_l P_{X1}(z1, λ0 - λ_{X2}^l(z2))`.
///
/// `combined` and `first` are the characteristic polynomials of `X` and
/// `X1`; `second` is `X2`.
pub fn separable_factorization_residual(
    combined: &CharPoly,
    first: &CharPoly,
    second: &Potential,
    lambda0: Complex64,
    z1: Complex64,
    z2: Complex64,
) -> Result<f64> {
    if z1.norm() == 0.0 {
        return Err(Error::ZeroCoordinate);
    }
    let q2 = second.cell_size();
    let branches = branch_eigenvalues_at(second, z2, 0.0)?;
    let point = [z1, z2.powu(q2 as u32)];
    let lhs = combined.eval_complex(&point, lambda0);
    let mut rhs = Complex64::new(1.0, 0.0);
    let mut rhs_scale = 1.0;
    for b in &branches {
        let lam = lambda0 - b;
        rhs *= first.eval_complex(&[z1], lam);
        rhs_scale *= first.poly().eval_abs(&[z1], lam);
    }
    let scale = combined.poly().eval_abs(&point, lambda0).max(rhs_scale);
    Ok((lhs - rhs).norm() / scale)
}

pub fn separable_factorization_check(
    x: &SeparablePotential,
    lambda0: &Scalar,
    z1: Complex64,
    z2: Complex64,
) -> Result<f64> {
    separable_factorization_residual(
        &compute_charpoly(x.combined())?,
        &compute_charpoly(x.first())?,
        x.second(),
        lambda0.to_complex(),
        z1,
        z2,
    )
}

/// Hex SHA-256 of a polynomial's canonical text form.
pub fn poly_digest(p: &LaurentPoly) -> String {
    hex::encode(Sha256::digest(p.to_canonical_string().as_bytes()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RigidityStatus {
    /// Fermi isospectral, and both component pairs are Floquet isospectral
    /// after moving the constant `c`.
    Pass,
    /// Fermi isospectral, but a component pair is not.
    ComponentMismatch,
    /// The inputs are not Fermi isospectral at `λ0`.
    NotFermiIsospectral,
}

impl RigidityStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            RigidityStatus::Pass => "pass",
            RigidityStatus::ComponentMismatch => "component-mismatch",
            RigidityStatus::NotFermiIsospectral => "not-fermi-isospectral",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RigidityReport {
    pub periods: Vec<usize>,
    pub lambda0: GaussRational,
    pub status: RigidityStatus,
    pub fermi: IsoVerdict,
    /// `c = [Y1] - [X1]`; compared pairs are `(X1, Y1 - c)` and `(X2, Y2 + c)`.
    pub shift: Option<GaussRational>,
    pub first: Option<IsoVerdict>,
    pub second: Option<IsoVerdict>,
    /// `(name, digest)` of every polynomial that was compared.
    pub digests: Vec<(String, String)>,
}

impl RigidityReport {
    pub fn passed(&self) -> bool {
        self.status == RigidityStatus::Pass
    }
}

/// Checks, on one instance, that Fermi-isospectral separable potentials have
/// Floquet-isospectral components up to a constant.
///
/// The constant is pinned by the `λ^{Q-1}` coefficient: `c = [Y1] - [X1]`.
pub fn verify_rigidity(
    x: &SeparablePotential,
    y: &SeparablePotential,
    lambda0: &Scalar,
) -> Result<RigidityReport> {
    let (xv, yv) = (x.combined(), y.combined());
    xv.require_same_periods(yv)?;
    xv.require_coprime_pair()?;
    let lambda0 = lambda0.to_exact()?;

    let px = compute_charpoly(xv)?;
    let py = compute_charpoly(yv)?;
    let fx = px.specialize(&lambda0);
    let fy = py.specialize(&lambda0);
    let fermi = poly_verdict(IsoKind::FermiAt, &fx, &fy, Some(lambda0.clone()));
    let mut digests = alloc::vec![
        (String::from("P_X(z,lambda0)"), poly_digest(&fx)),
        (String::from("P_Y(z,lambda0)"), poly_digest(&fy)),
    ];
    let mut report = RigidityReport {
        periods: xv.periods().to_vec(),
        lambda0,
        status: RigidityStatus::NotFermiIsospectral,
        fermi,
        shift: None,
        first: None,
        second: None,
        digests: Vec::new(),
    };
    if !report.fermi.equal {
        report.digests = digests;
        return Ok(report);
    }

    let c = &y.first().exact_average()? - &x.first().exact_average()?;
    let y1 = y.first().add_constant(&Scalar::Exact(-&c))?;
    let y2 = y.second().add_constant(&Scalar::Exact(c.clone()))?;
    let mut compare = |name: &str, a: &Potential, b: &Potential, tag: &str| -> Result<IsoVerdict> {
        let pa = compute_charpoly(a)?;
        let pb = compute_charpoly(b)?;
        digests.push((alloc::format!("P_{name}"), poly_digest(pa.poly())));
        digests.push((alloc::format!("P_{tag}"), poly_digest(pb.poly())));
        Ok(poly_verdict(IsoKind::Floquet, pa.poly(), pb.poly(), None))
    };
    let first = compare("X1", x.first(), &y1, "Y1-c")?;
    let second = compare("X2", x.second(), &y2, "Y2+c")?;
    report.status = if first.equal && second.equal {
        RigidityStatus::Pass
    } else {
        RigidityStatus::ComponentMismatch
    };
    report.shift = Some(c);
    report.first = Some(first);
    report.second = Some(second);
    report.digests = digests;
    Ok(report)
}
