//! Eigenvalue branches of one-dimensional operators for large `|z|`.
//!
//! For `|z|` large the `q` eigenvalues of `D_V(z^q)` sit near the
//! asymptotes `e^{2πil/q} z + [V]`, one per label `l`. Each labeled branch
//! has a Laurent expansion `e^{2πil/q} z + [V] + Σ_k a_k^{(l)} z^{-k}`,
//! whose coefficients are recovered here by sampling the branch on a
//! circle and taking discrete Fourier sums.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::PI;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::charpoly::{compute_charpoly, CharPoly};
use crate::eigen::eigenvalues;
use crate::error::{Error, Result};
use crate::potential::Potential;

/// Multiplier in the default radius `10 (1 + max |V|)`.
pub const RADIUS_FACTOR: f64 = 10.0;

/// Smallest radius on which branch labels are trusted.
pub fn min_radius(v: &Potential) -> f64 {
    RADIUS_FACTOR * (1.0 + v.max_abs())
}

fn unit_root(l: usize, q: usize) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * l as f64 / q as f64)
}

fn require_line(v: &Potential) -> Result<usize> {
    match v.periods() {
        [q] => Ok(*q),
        _ => Err(Error::DimensionMismatch {
            expected: 1,
            found: v.dim(),
        }),
    }
}

/// `(1/q) Σ_n V(n) e^{-2πikn/q}` for `k = 0..q`.
fn fourier_potential(v: &Potential) -> Vec<Complex64> {
    let q = v.cell_size();
    let values = v.complex_values();
    (0..q)
        .map(|k| {
            let sum: Complex64 = values
                .iter()
                .enumerate()
                .map(|(n, x)| x * unit_root(k * n % q, q).conj())
                .sum();
            sum / q as f64
        })
        .collect()
}

/// `D_V(z^q)` in the basis diagonalizing the hopping part: diagonal
/// `e^{2πim/q} z + e^{-2πim/q} z^{-1}` plus the circulant `Ṽ(m - l)`.
fn fourier_floquet(vhat: &[Complex64], z: Complex64) -> DMatrix<Complex64> {
    let q = vhat.len();
    DMatrix::from_fn(q, q, |m, l| {
        let mut e = vhat[(m + q - l) % q];
        if m == l {
            e += unit_root(m, q) * z + unit_root(m, q).conj() / z;
        }
        e
    })
}

/// Polishes `μ = λ - d_l - [V]` for branch `l` by Newton's method on
/// `μ = r^T (μ - B)^{-1} c`, the Schur complement of the `l`-th
/// coordinate. Both sides are small, so `μ` gets relative rather than
/// absolute accuracy. Returns `None` if the iteration does not settle.
fn refine_offset(vhat: &[Complex64], z: Complex64, l: usize, start: Complex64) -> Option<Complex64> {
    let q = vhat.len();
    if q == 1 {
        return Some(Complex64::new(0.0, 0.0));
    }
    let others: Vec<usize> = (0..q).filter(|&m| m != l).collect();
    let n = q - 1;
    let gap = |m: usize| {
        (unit_root(m, q) - unit_root(l, q)) * z + (unit_root(m, q).conj() - unit_root(l, q).conj()) / z
    };
    let b = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            gap(others[i])
        } else {
            vhat[(others[i] + q - others[j]) % q]
        }
    });
    let c = DVector::from_fn(n, |i, _| vhat[(others[i] + q - l) % q]);
    let r = DVector::from_fn(n, |i, _| vhat[(l + q - others[i]) % q]);
    let mut mu = start;
    for _ in 0..30 {
        let shifted = DMatrix::from_diagonal_element(n, n, mu) - &b;
        let lu = shifted.lu();
        let y = lu.solve(&c)?;
        let yy = lu.solve(&y)?;
        let s = r.transpose() * &y;
        let ds = -(r.transpose() * &yy)[(0, 0)];
        let step = (mu - s[(0, 0)]) / (Complex64::new(1.0, 0.0) - ds);
        if !step.is_finite() {
            return None;
        }
        mu -= step;
        if step.norm() <= 4.0 * f64::EPSILON * mu.norm() {
            return Some(mu);
        }
    }
    None
}

/// `λ_V^l(z) - e^{2πil/q} z - [V]` for every label, without the
/// cancellation of forming `λ` first.
fn branch_tails(v: &Potential, z: Complex64, r_min: f64) -> Result<Vec<Complex64>> {
    let q = require_line(v)?;
    if z.norm() < r_min {
        return Err(Error::RadiusTooSmall {
            radius: z.norm(),
            required: r_min,
        });
    }
    if z.norm() == 0.0 {
        return Err(Error::ZeroCoordinate);
    }
    let vhat = fourier_potential(v);
    let avg = vhat[0];
    let vals = eigenvalues(fourier_floquet(&vhat, z))?;
    let mut labeled: Vec<Option<Complex64>> = alloc::vec![None; q];
    for lam in vals {
        let label = (0..q)
            .min_by(|&a, &b| {
                let da = (lam - unit_root(a, q) * z - avg).norm();
                let db = (lam - unit_root(b, q) * z - avg).norm();
                da.total_cmp(&db)
            })
            .expect("q >= 1");
        if labeled[label].replace(lam).is_some() {
            return Err(Error::AmbiguousLabel { radius: z.norm() });
        }
    }
    labeled
        .into_iter()
        .enumerate()
        .map(|(l, lam)| {
            let lam = lam.ok_or(Error::AmbiguousLabel { radius: z.norm() })?;
            let tail = unit_root(l, q).conj() / z;
            let rough = lam - unit_root(l, q) * z - avg - tail;
            let mu = match refine_offset(&vhat, z, l, rough) {
                Some(mu) if (mu - rough).norm() <= 1e-6 * (1.0 + lam.norm()) => mu,
                _ => rough,
            };
            Ok(tail + mu)
        })
        .collect()
}

/// Eigenvalues of `D_V(z^q)` indexed by branch label.
///
/// Each eigenvalue takes the label of its nearest asymptote; the
/// assignment must be a bijection.
pub fn branch_eigenvalues_at(v: &Potential, z: Complex64, r_min: f64) -> Result<Vec<Complex64>> {
    let q = v.cell_size();
    let avg = v.average().to_complex();
    Ok(branch_tails(v, z, r_min)?
        .into_iter()
        .enumerate()
        .map(|(l, t)| t + avg + unit_root(l, q) * z)
        .collect())
}

/// Truncated Laurent expansion of one branch.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchSeries {
    pub label: usize,
    pub period: usize,
    pub radius: f64,
    pub samples: usize,
    /// `e^{2πil/q}`, the coefficient of `z`.
    pub linear: Complex64,
    /// Estimate of the constant term, which should equal `[V]`.
    pub constant: Complex64,
    /// `a_1, …, a_K`.
    pub coefficients: Vec<Complex64>,
    /// Largest change of any coefficient between `N/2` and `N` samples.
    pub aliasing_estimate: f64,
}

impl BranchSeries {
    /// `a_k` for `k >= 1`; zero beyond the truncation.
    pub fn a(&self, k: usize) -> Complex64 {
        assert!(k >= 1);
        self.coefficients
            .get(k - 1)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> usize {
        self.coefficients.len()
    }

    /// Evaluates the truncated series.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let w = Complex64::new(1.0, 0.0) / z;
        let tail = self
            .coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, a| (acc + a) * w);
        self.linear * z + self.constant + tail
    }
}

/// Samples branch `l` at `samples` points on `|z| = radius` and extracts
/// the constant term and `a_1..a_terms`.
pub fn extract_series(
    v: &Potential,
    label: usize,
    radius: f64,
    terms: usize,
    samples: usize,
) -> Result<BranchSeries> {
    let q = require_line(v)?;
    if label >= q {
        return Err(Error::InvalidLabel { label, period: q });
    }
    if samples < 1024 || !samples.is_power_of_two() {
        return Err(Error::InvalidSamples(samples));
    }
    let r_min = min_radius(v);
    if radius < r_min {
        return Err(Error::RadiusTooSmall {
            radius,
            required: r_min,
        });
    }
    let linear = unit_root(label, q);
    let twiddle: Vec<Complex64> = (0..samples)
        .map(|m| Complex64::from_polar(1.0, 2.0 * PI * m as f64 / samples as f64))
        .collect();
    let mut residual = Vec::with_capacity(samples);
    for t in &twiddle {
        residual.push(branch_tails(v, t * radius, 0.0)?[label]);
    }

    // c_k = R^k / N Σ_j g(z_j) e^{2πijk/N}
    let fourier = |k: usize, step: usize| -> Complex64 {
        let n = samples / step;
        let sum: Complex64 = (0..n)
            .map(|j| residual[j * step] * twiddle[(j * step * k) % samples])
            .sum();
        sum * num_traits::Float::powi(radius, k as i32) / n as f64
    };
    let fine: Vec<Complex64> = (0..=terms).map(|k| fourier(k, 1)).collect();
    let aliasing_estimate = (0..=terms)
        .map(|k| (fine[k] - fourier(k, 2)).norm())
        .fold(0.0, f64::max);

    Ok(BranchSeries {
        label,
        period: q,
        radius,
        samples,
        linear,
        constant: fine[0] + v.average().to_complex(),
        coefficients: fine[1..].to_vec(),
        aliasing_estimate,
    })
}

/// `|P_V(z^q, λ) - Π_l (λ_V^l(z) - λ)|`, relative to the magnitude of the
/// terms on either side.
///
/// No radius floor is imposed; a `z` too small for labeling still fails
/// with [`Error::AmbiguousLabel`].
pub fn product_identity_residual(
    charpoly: &CharPoly,
    v: &Potential,
    z: Complex64,
    lambda: Complex64,
) -> Result<f64> {
    let q = require_line(v)?;
    let branches = branch_eigenvalues_at(v, z, 0.0)?;
    let w = [z.powu(q as u32)];
    let lhs = charpoly.eval_complex(&w, lambda);
    let rhs: Complex64 = branches.iter().map(|b| b - lambda).product();
    let scale_rhs: f64 = branches.iter().map(|b| b.norm() + lambda.norm()).product();
    let scale = charpoly.poly().eval_abs(&w, lambda).max(scale_rhs);
    Ok((lhs - rhs).norm() / scale)
}

/// As [`product_identity_residual`], computing the characteristic
/// polynomial first.
pub fn product_identity_check(v: &Potential, z: Complex64, lambda: Complex64) -> Result<f64> {
    product_identity_residual(&compute_charpoly(v)?, v, z, lambda)
}

/// Parameters of [`lemma31_solve`].
#[derive(Clone, Debug, PartialEq)]
pub struct RoucheOptions {
    /// Target offset `η` with `0 < |η| < eps`.
    pub eta: Complex64,
    pub eps: f64,
    pub terms: usize,
    pub samples: usize,
    /// Sampling radius; the default radius of either potential if larger.
    pub radius: Option<f64>,
    /// Required bound on the final residual.
    pub tol: f64,
    /// Coefficients closer than this (relative to `1 + |a_k|`) count as equal.
    pub coeff_tol: f64,
}

impl Default for RoucheOptions {
    fn default() -> Self {
        Self {
            eta: Complex64::new(1e-3, 0.0),
            eps: 2e-3,
            terms: 8,
            samples: 4096,
            radius: None,
            tol: 1e-8,
            coeff_tol: 1e-6,
        }
    }
}

/// A solution of `λ_X^l(z) = λ_Y^l(z) + η` with `|z| >= R`.
#[derive(Clone, Debug, PartialEq)]
pub struct RoucheResult {
    pub label: usize,
    pub eta: Complex64,
    pub radius: f64,
    /// First order at which the branch coefficients differ.
    pub k0: usize,
    /// `a_{k0}(X) - a_{k0}(Y)`.
    pub leading_difference: Complex64,
    /// Root of the truncated difference series, before refinement.
    pub truncated_root: Complex64,
    pub root: Complex64,
    /// `|λ_X^l(z*) - λ_Y^l(z*) - η|` from freshly computed eigenvalues.
    pub residual: f64,
}

fn branch_gap(x: &Potential, y: &Potential, label: usize, z: Complex64) -> Result<Complex64> {
    let bx = branch_tails(x, z, 0.0)?;
    let by = branch_tails(y, z, 0.0)?;
    Ok(bx[label] - by[label] + x.average().to_complex() - y.average().to_complex())
}

/// Newton's method on `Σ_{k>=k0} d_k w^k - η`, `coeffs[k-1] = d_k`.
fn truncated_root(coeffs: &[Complex64], eta: Complex64, start: Complex64) -> Option<Complex64> {
    let mut w = start;
    for _ in 0..100 {
        let mut f = -eta;
        let mut df = Complex64::new(0.0, 0.0);
        for (i, d) in coeffs.iter().enumerate() {
            let k = i + 1;
            f += d * w.powu(k as u32);
            df += d * (k as f64) * w.powu(k as u32 - 1);
        }
        if df.norm() == 0.0 {
            return None;
        }
        let step = f / df;
        w -= step;
        if step.norm() <= 1e-15 * w.norm() {
            return Some(w);
        }
    }
    None
}

/// Finds `z` with `|z| >= R` where the labeled branches of `x` and `y`
/// differ by exactly `η`.
///
/// The truncated coefficient difference `f(w) = Σ_{k>=k0} (a_k(X) - a_k(Y)) w^k`
/// is solved for `f(w) = η` near the leading-order estimate
/// `(η / d_{k0})^{1/k0}`, then `z = 1/w` is refined by a secant iteration
/// on freshly computed eigenvalues so the residual does not depend on the
/// truncation.
pub fn lemma31_solve(
    x: &Potential,
    y: &Potential,
    label: usize,
    opts: &RoucheOptions,
) -> Result<RoucheResult> {
    let q = require_line(x)?;
    require_line(y)?;
    x.require_same_periods(y)?;
    if label >= q {
        return Err(Error::InvalidLabel { label, period: q });
    }
    if x.exact_average()? != y.exact_average()? {
        return Err(Error::AverageMismatch);
    }
    if !(opts.eta.norm() > 0.0 && opts.eta.norm() < opts.eps) {
        return Err(Error::InvalidOffset);
    }
    if compute_charpoly(x)?.poly() == compute_charpoly(y)?.poly() {
        return Err(Error::FloquetIsospectral);
    }
    let radius = min_radius(x)
        .max(min_radius(y))
        .max(opts.radius.unwrap_or(0.0));
    let sx = extract_series(x, label, radius, opts.terms, opts.samples)?;
    let sy = extract_series(y, label, radius, opts.terms, opts.samples)?;

    let diffs: Vec<Complex64> = (1..=opts.terms).map(|k| sx.a(k) - sy.a(k)).collect();
    let k0 = (1..=opts.terms)
        .find(|&k| {
            let scale = 1.0 + sx.a(k).norm().max(sy.a(k).norm());
            diffs[k - 1].norm() > opts.coeff_tol * scale
        })
        .ok_or(Error::NoDifferingCoefficient { terms: opts.terms })?;
    let leading = diffs[k0 - 1];
    let mut truncated = diffs.clone();
    for d in truncated.iter_mut().take(k0 - 1) {
        *d = Complex64::new(0.0, 0.0);
    }

    let first_order = (opts.eta / leading).powf(1.0 / k0 as f64);
    let w0 = (0..k0)
        .filter_map(|m| truncated_root(&truncated, opts.eta, first_order * unit_root(m, k0)))
        .find(|w| w.norm() > 0.0 && w.norm() <= 1.0 / radius)
        .ok_or_else(|| Error::NoRootInDisk("truncated series has no root with |z| >= R".to_string()))?;

    let gap = |w: Complex64| -> Result<Complex64> {
        Ok(branch_gap(x, y, label, Complex64::new(1.0, 0.0) / w)? - opts.eta)
    };
    let mut a = w0;
    let mut fa = gap(a)?;
    let mut b = w0 * (1.0 + 1e-3);
    let mut fb = gap(b)?;
    for _ in 0..100 {
        if fb.norm() <= opts.tol * 1e-3 || fb == fa {
            break;
        }
        let next = b - fb * (b - a) / (fb - fa);
        a = b;
        fa = fb;
        b = next;
        fb = gap(b)?;
    }
    let (w, residual) = if fb.norm() <= fa.norm() {
        (b, fb.norm())
    } else {
        (a, fa.norm())
    };
    let root = Complex64::new(1.0, 0.0) / w;
    if root.norm() < radius {
        return Err(Error::NoRootInDisk("refined root left |z| >= R".to_string()));
    }
    if residual > opts.tol {
        return Err(Error::NoRootInDisk(alloc::format!(
            "residual {residual:e} exceeds {:e}",
            opts.tol
        )));
    }
    Ok(RoucheResult {
        label,
        eta: opts.eta,
        radius,
        k0,
        leading_difference: leading,
        truncated_root: Complex64::new(1.0, 0.0) / w0,
        root,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{GaussRational, Scalar};
    use alloc::vec;

    fn ints(v: &[i64]) -> Potential {
        Potential::from_ints(v).unwrap()
    }

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    #[test]
    fn free_single_site_eigenvalue() {
        let ev = branch_eigenvalues_at(&ints(&[0]), Complex64::new(10.0, 0.0), 10.0).unwrap();
        assert!(close(ev[0], Complex64::new(10.1, 0.0), 1e-12));
    }

    #[test]
    fn free_period_two_labels() {
        let ev = branch_eigenvalues_at(&ints(&[0, 0]), Complex64::new(10.0, 0.0), 10.0).unwrap();
        assert!(close(ev[0], Complex64::new(10.1, 0.0), 1e-12));
        assert!(close(ev[1], Complex64::new(-10.1, 0.0), 1e-12));
    }

    #[test]
    fn alternating_potential_closed_form() {
        // λ² = z² + 3 + z^{-2}
        let z = 10.0f64;
        let root = (z * z + 3.0 + 1.0 / (z * z)).sqrt();
        let ev = branch_eigenvalues_at(&ints(&[1, -1]), Complex64::new(z, 0.0), 10.0).unwrap();
        assert!(close(ev[0], Complex64::new(root, 0.0), 1e-12));
        assert!(close(ev[1], Complex64::new(-root, 0.0), 1e-12));
    }

    #[test]
    fn fourier_basis_is_similar_to_gauge_matrix() {
        use crate::eigen::sort_spectrum;
        use crate::floquet::gauge_floquet;
        let v = Potential::new(
            vec![4],
            [(1, 0), (-2, 1), (0, 0), (3, -1)]
                .iter()
                .map(|&(a, b)| {
                    Scalar::exact(&GaussRational::from_integer(a) + &(&GaussRational::i() * &GaussRational::from_integer(b)))
                })
                .collect(),
        )
        .unwrap();
        let z = Complex64::new(3.0, -1.5);
        let mut a = eigenvalues(gauge_floquet(&v, z).unwrap()).unwrap();
        let mut b = eigenvalues(fourier_floquet(&fourier_potential(&v), z)).unwrap();
        sort_spectrum(&mut a);
        sort_spectrum(&mut b);
        for (x, y) in a.iter().zip(&b) {
            assert!(close(*x, *y, 1e-10), "{x} vs {y}");
        }
    }

    #[test]
    fn radius_precondition() {
        let err = branch_eigenvalues_at(&ints(&[0]), Complex64::new(1.0, 0.0), 10.0);
        assert!(matches!(err, Err(Error::RadiusTooSmall { .. })));
    }

    #[test]
    fn ambiguous_labels_are_reported() {
        // |z| = 1 is far too small for q = 4 with a large potential.
        let err = branch_eigenvalues_at(&ints(&[40, -40, 40, -40]), Complex64::new(1.0, 0.1), 0.0);
        assert!(matches!(err, Err(Error::AmbiguousLabel { .. })));
    }

    #[test]
    fn free_series() {
        let s = extract_series(&ints(&[0]), 0, 10.0, 6, 1024).unwrap();
        assert!(close(s.constant, Complex64::new(0.0, 0.0), 1e-8));
        assert!(close(s.a(1), Complex64::new(1.0, 0.0), 1e-8));
        for k in 2..=6 {
            assert!(close(s.a(k), Complex64::new(0.0, 0.0), 1e-8), "k={k}");
        }
    }

    #[test]
    fn free_period_two_twist() {
        let s = extract_series(&ints(&[0, 0]), 1, 10.0, 4, 1024).unwrap();
        assert!(close(s.a(1), Complex64::new(-1.0, 0.0), 1e-8));
        assert!(close(s.linear, Complex64::new(-1.0, 0.0), 1e-12));
    }

    #[test]
    fn alternating_series_leading_coefficient() {
        let s = extract_series(&ints(&[1, -1]), 0, 20.0, 4, 4096).unwrap();
        assert!(close(s.constant, Complex64::new(0.0, 0.0), 1e-8));
        assert!(close(s.a(1), Complex64::new(1.5, 0.0), 1e-8));
        // Next odd term of z·sqrt(1 + 3/z² + 1/z⁴): (1/2 - 9/8) z^{-3}
        assert!(close(s.a(3), Complex64::new(-0.625, 0.0), 1e-6));
        assert!(close(s.a(2), Complex64::new(0.0, 0.0), 1e-7));
    }

    #[test]
    fn series_argument_checks() {
        let v = ints(&[1, -1]);
        assert_eq!(extract_series(&v, 0, 20.0, 4, 1000), Err(Error::InvalidSamples(1000)));
        assert_eq!(extract_series(&v, 0, 20.0, 4, 512), Err(Error::InvalidSamples(512)));
        assert_eq!(
            extract_series(&v, 2, 20.0, 4, 1024),
            Err(Error::InvalidLabel { label: 2, period: 2 })
        );
        assert!(matches!(
            extract_series(&v, 0, 5.0, 4, 1024),
            Err(Error::RadiusTooSmall { .. })
        ));
    }

    #[test]
    fn product_identity_examples() {
        let r = product_identity_check(&ints(&[0]), Complex64::new(10.0, 0.0), Complex64::new(0.0, 0.0)).unwrap();
        assert!(r <= 1e-15);
        let r = product_identity_check(&ints(&[1, -1]), Complex64::new(10.0, 0.0), Complex64::new(2.0, 0.0)).unwrap();
        assert!(r <= 1e-8);
    }

    #[test]
    fn rouche_alternating_against_free() {
        let res = lemma31_solve(&ints(&[1, -1]), &ints(&[0, 0]), 0, &RoucheOptions::default()).unwrap();
        assert_eq!(res.k0, 1);
        assert!(close(res.leading_difference, Complex64::new(0.5, 0.0), 1e-8));
        assert!(res.root.norm() >= res.radius);
        assert!((res.root.norm() - 500.0).abs() < 5.0, "{}", res.root);
        assert!(res.residual <= 1e-8);
    }

    #[test]
    fn rouche_identical_pair() {
        let v = ints(&[1, -1]);
        assert_eq!(
            lemma31_solve(&v, &v, 0, &RoucheOptions::default()),
            Err(Error::FloquetIsospectral)
        );
    }

    #[test]
    fn rouche_preconditions() {
        let opts = RoucheOptions::default();
        assert_eq!(
            lemma31_solve(&ints(&[1, 0]), &ints(&[0, 0]), 0, &opts),
            Err(Error::AverageMismatch)
        );
        let bad = RoucheOptions {
            eta: Complex64::new(5e-3, 0.0),
            ..RoucheOptions::default()
        };
        assert_eq!(
            lemma31_solve(&ints(&[1, -1]), &ints(&[0, 0]), 0, &bad),
            Err(Error::InvalidOffset)
        );
        let half = GaussRational::from_ratio(1, 2);
        let float = Potential::new(vec![2], vec![Scalar::float(0.5, 0.0); 2]).unwrap();
        let exact = Potential::line(vec![half.clone(), half]).unwrap();
        assert_eq!(
            lemma31_solve(&float, &exact, 0, &opts),
            Err(Error::RequiresExact)
        );
    }

    #[test]
    fn rouche_leading_difference_closed_form() {
        // a_1 = 1 + a²/2 for (a, -a) at l = 0, so the difference is (a² - b²)/2.
        let res = lemma31_solve(&ints(&[2, -2]), &ints(&[1, -1]), 0, &RoucheOptions::default()).unwrap();
        assert_eq!(res.k0, 1);
        assert!(close(res.leading_difference, Complex64::new(1.5, 0.0), 1e-8));
        assert!(res.residual <= 1e-8);
    }
}
