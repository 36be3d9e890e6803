//! `P_V(z, λ) = det(D_V(z) - λ I)` by exact evaluation and interpolation.
//!
//! The exponent of `z_j` lies in `[-Q/q_j, Q/q_j]` and the `λ`-degree is
//! `Q`, so `Π z_j^{Q/q_j} · P_V` is an ordinary polynomial with known
//! degree bounds. It is sampled on the integer grid `1, 2, 3, …` in each
//! variable, interpolated one axis at a time, and checked against a direct
//! determinant at a holdout point outside the grid.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::det::determinant;
use crate::error::{Error, Result};
use crate::floquet::{build_floquet, FloquetMatrix};
use crate::laurent::{Exponent, LambdaPoly, LaurentPoly};
use crate::potential::Potential;
use crate::scalar::{GaussRational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    poly: LaurentPoly,
    periods: Vec<usize>,
    average: GaussRational,
}

impl CharPoly {
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    /// Cell size `Q`.
    pub fn cell_size(&self) -> usize {
        self.periods.iter().product()
    }

    pub fn average(&self) -> &GaussRational {
        &self.average
    }

    /// `P_V(z, λ0)`.
    pub fn specialize(&self, lambda0: &GaussRational) -> LaurentPoly {
        self.poly.specialize_lambda(lambda0)
    }

    pub fn eval_complex(&self, z: &[Complex64], lambda: Complex64) -> Complex64 {
        self.poly.eval_complex(z, lambda)
    }

    /// The `z`-free part `P̂_V(λ)` of a one-dimensional characteristic
    /// polynomial, `P = P̂_V(λ) + (-1)^{q+1}(z + z^{-1})`.
    pub fn p_hat(&self) -> Result<LambdaPoly> {
        let q = match self.periods.as_slice() {
            [q] => *q,
            _ => {
                return Err(Error::MalformedCharPoly(alloc::format!(
                    "expected one period, found {}",
                    self.periods.len()
                )))
            }
        };
        let sign = if q % 2 == 1 {
            GaussRational::one()
        } else {
            -GaussRational::one()
        };
        let mut rest = self.poly.clone();
        for e in [-1, 1] {
            let key = Exponent::new(&[e], 0);
            if rest.coeff(&key) != sign {
                return Err(Error::MalformedCharPoly(alloc::format!(
                    "coefficient of z^{e} is {}, expected {sign}",
                    rest.coeff(&key)
                )));
            }
            rest.add_term(key, -sign.clone());
        }
        let degree = rest.lambda_degree().unwrap_or(0) as usize;
        let mut coeffs = alloc::vec![GaussRational::zero(); degree + 1];
        for (e, c) in rest.terms() {
            if e.z[0] != 0 {
                return Err(Error::MalformedCharPoly(alloc::format!(
                    "residual z^{} dependence",
                    e.z[0]
                )));
            }
            coeffs[e.lambda as usize] = c.clone();
        }
        Ok(LambdaPoly::new(coeffs))
    }

    /// Whether `z` lies on the Fermi variety at energy `λ0`: exact zero test
    /// when every argument is exact, otherwise `|P(z, λ0)| <= tol`.
    pub fn fermi_contains(&self, z: &[Scalar], lambda0: &Scalar, tol: f64) -> Result<bool> {
        if z.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: z.len(),
            });
        }
        if z.iter().any(Scalar::is_zero) {
            return Err(Error::ZeroCoordinate);
        }
        let exact: Option<Vec<GaussRational>> = z.iter().map(|s| s.as_exact().cloned()).collect();
        match (exact, lambda0.as_exact()) {
            (Some(z), Some(l)) => Ok(self.poly.evaluate(&z, l)?.is_zero()),
            _ => {
                let z: Vec<Complex64> = z.iter().map(Scalar::to_complex).collect();
                Ok(self.poly.eval_complex(&z, lambda0.to_complex()).norm() <= tol)
            }
        }
    }
}

/// Newton interpolation at integer nodes; returns monomial coefficients in
/// ascending order.
fn interpolate(nodes: &[i64], values: &[GaussRational]) -> Vec<GaussRational> {
    let n = nodes.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let inv = BigRational::new(BigInt::one(), BigInt::from(nodes[i] - nodes[i - j]));
            dd[i] = (&dd[i] - &dd[i - 1]).scale(&inv);
        }
    }
    let mut poly = alloc::vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // poly <- poly * (x - nodes[k]) + dd[k]
        let shift = GaussRational::from_integer(nodes[k]);
        let mut next = alloc::vec![GaussRational::zero(); poly.len() + 1];
        for (m, c) in poly.iter().enumerate() {
            next[m + 1] = &next[m + 1] + c;
            next[m] = &next[m] - &(c * &shift);
        }
        next[0] = &next[0] + &dd[k];
        poly = next;
    }
    poly
}

/// Interpolates along one axis of a row-major tensor, in place.
fn interpolate_axis(data: &mut [GaussRational], shape: &[usize], axis: usize, nodes: &[i64]) {
    let len = shape[axis];
    let stride: usize = shape[axis + 1..].iter().product();
    let outer: usize = shape[..axis].iter().product();
    let mut line = Vec::with_capacity(len);
    for o in 0..outer {
        for s in 0..stride {
            let base = o * len * stride + s;
            line.clear();
            line.extend((0..len).map(|k| data[base + k * stride].clone()));
            for (k, c) in interpolate(nodes, &line).into_iter().enumerate() {
                data[base + k * stride] = c;
            }
        }
    }
}

fn det_at(m: &FloquetMatrix, z: &[i64], lambda: i64) -> Result<GaussRational> {
    let z: Vec<GaussRational> = z.iter().map(|&x| GaussRational::from_integer(x)).collect();
    let shifted = m.evaluate_shifted(&z, &GaussRational::from_integer(lambda))?;
    Ok(determinant(&shifted, m.size()))
}

/// Computes the characteristic Laurent polynomial of an exact potential
/// with `d ∈ {1, 2}`.
pub fn compute_charpoly(v: &Potential) -> Result<CharPoly> {
    let matrix = build_floquet(v)?;
    let q_total = v.cell_size();
    let bounds: Vec<usize> = v.periods().iter().map(|q| q_total / q).collect();
    let mut axes: Vec<Vec<i64>> = bounds
        .iter()
        .map(|b| (1..=(2 * b + 1) as i64).collect())
        .collect();
    axes.push((1..=(q_total + 1) as i64).collect());
    let shape: Vec<usize> = axes.iter().map(Vec::len).collect();
    let total: usize = shape.iter().product();

    let mut data = Vec::with_capacity(total);
    let mut idx = alloc::vec![0usize; shape.len()];
    let d = bounds.len();
    for _ in 0..total {
        let z: Vec<i64> = (0..d).map(|j| axes[j][idx[j]]).collect();
        let lambda = axes[d][idx[d]];
        let mut val = det_at(&matrix, &z, lambda)?;
        for (&zj, &b) in z.iter().zip(&bounds) {
            val = &val * &GaussRational::from_integer(zj).powi(b as i32).expect("nonzero node");
        }
        data.push(val);
        for a in (0..shape.len()).rev() {
            idx[a] += 1;
            if idx[a] < shape[a] {
                break;
            }
            idx[a] = 0;
        }
    }
    for (axis, nodes) in axes.iter().enumerate().rev() {
        interpolate_axis(&mut data, &shape, axis, nodes);
    }

    let mut poly = LaurentPoly::zero(d);
    let mut idx = alloc::vec![0usize; shape.len()];
    for c in data {
        let z: Vec<i32> = (0..d).map(|j| idx[j] as i32 - bounds[j] as i32).collect();
        poly.add_term(Exponent::new(&z, idx[d] as u32), c);
        for a in (0..shape.len()).rev() {
            idx[a] += 1;
            if idx[a] < shape[a] {
                break;
            }
            idx[a] = 0;
        }
    }

    let holdout_z: Vec<i64> = bounds.iter().map(|b| (2 * b + 2) as i64).collect();
    let holdout_lambda = (q_total + 2) as i64;
    let direct = det_at(&matrix, &holdout_z, holdout_lambda)?;
    let z: Vec<GaussRational> = holdout_z.iter().map(|&x| GaussRational::from_integer(x)).collect();
    if poly.evaluate(&z, &GaussRational::from_integer(holdout_lambda))? != direct {
        return Err(Error::InterpolationInconsistent);
    }

    Ok(CharPoly {
        poly,
        periods: v.periods().to_vec(),
        average: v.exact_average()?,
    })
}

/// Characteristic polynomial of the zero potential with the given periods.
pub fn free_charpoly(periods: &[usize]) -> Result<CharPoly> {
    compute_charpoly(&Potential::zero(periods.to_vec())?)
}
