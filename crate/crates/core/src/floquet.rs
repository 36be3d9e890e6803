//! The Floquet matrix `D_V(z)`: `Δ + V` restricted to one period cell
//! under the boundary condition `u(n + q_j e_j) = z_j u(n)`.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::{Coeff, Exponent, LaurentPoly};
use crate::potential::Potential;
use crate::scalar::GaussRational;

/// `Q × Q` matrix of Laurent polynomials, row-major over the period cell.
#[derive(Clone, Debug, PartialEq)]
pub struct FloquetMatrix {
    periods: Vec<usize>,
    size: usize,
    entries: Vec<LaurentPoly>,
}

/// Neighbours of a cell site as `(target site, z exponent picked up)`.
fn couplings(periods: &[usize], point: &[usize]) -> Vec<(Vec<usize>, Exponent)> {
    let d = periods.len();
    let mut out = Vec::with_capacity(2 * d);
    for j in 0..d {
        let q = periods[j];
        let mut fwd = point.to_vec();
        let mut e = [0i32; 2];
        if point[j] + 1 == q {
            fwd[j] = 0;
            e[j] = 1;
        } else {
            fwd[j] += 1;
        }
        out.push((fwd, Exponent::new(&e[..d], 0)));

        let mut back = point.to_vec();
        let mut e = [0i32; 2];
        if point[j] == 0 {
            back[j] = q - 1;
            e[j] = -1;
        } else {
            back[j] -= 1;
        }
        out.push((back, Exponent::new(&e[..d], 0)));
    }
    out
}

fn require_supported(v: &Potential) -> Result<()> {
    match v.dim() {
        1 | 2 => Ok(()),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Builds `D_V(z)`. Couplings that land on the same entry (periods 1
/// and 2) are summed.
pub fn build_floquet(v: &Potential) -> Result<FloquetMatrix> {
    require_supported(v)?;
    let values = v.exact_values()?;
    let d = v.dim();
    let n = v.cell_size();
    let mut entries = alloc::vec![LaurentPoly::zero(d); n * n];
    for row in 0..n {
        let point = v.point(row);
        entries[row * n + row].add_term(Exponent::default(), values[row].clone());
        for (target, e) in couplings(v.periods(), &point) {
            let col = v.index(&target);
            entries[row * n + col].add_term(e, GaussRational::from_integer(1));
        }
    }
    Ok(FloquetMatrix {
        periods: v.periods().to_vec(),
        size: n,
        entries,
    })
}

impl FloquetMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row * self.size + col]
    }

    pub fn transpose(&self) -> FloquetMatrix {
        let n = self.size;
        let entries = (0..n * n)
            .map(|k| self.entries[(k % n) * n + k / n].clone())
            .collect();
        FloquetMatrix {
            periods: self.periods.clone(),
            size: n,
            entries,
        }
    }

    /// Entrywise `z -> z^{-1}`.
    pub fn invert_z(&self) -> FloquetMatrix {
        FloquetMatrix {
            periods: self.periods.clone(),
            size: self.size,
            entries: self.entries.iter().map(LaurentPoly::invert_z).collect(),
        }
    }

    /// `D_V(z) - λ I` with symbolic `λ`.
    pub fn minus_lambda(&self) -> Vec<LaurentPoly> {
        let lambda = LaurentPoly::lambda(self.dim());
        let n = self.size;
        let mut out = self.entries.clone();
        for k in 0..n {
            out[k * n + k] = &out[k * n + k] - &lambda;
        }
        out
    }

    /// Exact numeric matrix `D_V(z) - λ I`, row-major.
    pub fn evaluate_shifted(&self, z: &[GaussRational], lambda: &GaussRational) -> Result<Vec<GaussRational>> {
        let zero = GaussRational::zero();
        let n = self.size;
        let mut out = Vec::with_capacity(n * n);
        for (k, e) in self.entries.iter().enumerate() {
            let mut x = if e.is_zero() { zero.clone() } else { e.evaluate(z, &zero)? };
            if k / n == k % n {
                x = &x - lambda;
            }
            out.push(x);
        }
        Ok(out)
    }

    pub fn evaluate_complex(&self, z: &[Complex64]) -> DMatrix<Complex64> {
        let n = self.size;
        let zero = Complex64::new(0.0, 0.0);
        DMatrix::from_fn(n, n, |r, c| self.entry(r, c).eval_complex(z, zero))
    }
}

/// Numeric `D_V(z)` for a potential of any mode.
pub fn numeric_floquet(v: &Potential, z: &[Complex64]) -> Result<DMatrix<Complex64>> {
    require_supported(v)?;
    if z.len() != v.dim() {
        return Err(Error::DimensionMismatch {
            expected: v.dim(),
            found: z.len(),
        });
    }
    let values = v.complex_values();
    let n = v.cell_size();
    let mut m = DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
    for row in 0..n {
        m[(row, row)] += values[row];
        for (target, e) in couplings(v.periods(), &v.point(row)) {
            let mut w = Complex64::new(1.0, 0.0);
            for (zj, &ej) in z.iter().zip(&e.z) {
                w *= zj.powi(ej);
            }
            m[(row, v.index(&target))] += w;
        }
    }
    Ok(m)
}

/// A matrix similar to `D_V(z^q)` for one-dimensional `V`, conjugated by
/// `diag(1, z, …, z^{q-1})` so every hopping entry is `z` or `z^{-1}`.
/// Entries stay of size `|z|` instead of `|z|^q`.
pub fn gauge_floquet(v: &Potential, z: Complex64) -> Result<DMatrix<Complex64>> {
    if v.dim() != 1 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: v.dim(),
        });
    }
    let q = v.cell_size();
    let values = v.complex_values();
    let zi = Coeff::inv(&z).ok_or(Error::ZeroCoordinate)?;
    let mut m = DMatrix::from_element(q, q, Complex64::new(0.0, 0.0));
    for n in 0..q {
        m[(n, n)] += values[n];
        m[(n, (n + 1) % q)] += z;
        m[(n, (n + q - 1) % q)] += zi;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use alloc::vec;

    type P = LaurentPoly;

    fn c(n: i64) -> P {
        P::constant(1, GaussRational::from_integer(n))
    }

    #[test]
    fn single_site_line() {
        let v = Potential::from_ints(&[7]).unwrap();
        let m = build_floquet(&v).unwrap();
        assert_eq!(m.size(), 1);
        let expected = &(&c(7) + &P::z(1, 0, 1)) + &P::z(1, 0, -1);
        assert_eq!(m.entry(0, 0), &expected);
    }

    #[test]
    fn period_two_merges_corners() {
        let v = Potential::from_ints(&[3, -4]).unwrap();
        let m = build_floquet(&v).unwrap();
        assert_eq!(m.entry(0, 0), &c(3));
        assert_eq!(m.entry(1, 1), &c(-4));
        assert_eq!(m.entry(0, 1), &(&c(1) + &P::z(1, 0, -1)));
        assert_eq!(m.entry(1, 0), &(&c(1) + &P::z(1, 0, 1)));
    }

    #[test]
    fn period_three_matches_tridiagonal_with_corners() {
        let v = Potential::from_ints(&[1, 2, 3]).unwrap();
        let m = build_floquet(&v).unwrap();
        assert_eq!(m.entry(0, 1), &c(1));
        assert_eq!(m.entry(1, 2), &c(1));
        assert_eq!(m.entry(2, 1), &c(1));
        assert_eq!(m.entry(0, 2), &P::z(1, 0, -1));
        assert_eq!(m.entry(2, 0), &P::z(1, 0, 1));
        for k in 0..3 {
            assert_eq!(m.entry(k, k), &c(k as i64 + 1));
        }
    }

    #[test]
    fn transpose_inverts_z() {
        for v in [
            Potential::from_ints(&[1, 2, 3, 4]).unwrap(),
            Potential::zero(vec![2, 3]).unwrap(),
            Potential::zero(vec![1, 1]).unwrap(),
            Potential::zero(vec![3, 4]).unwrap(),
        ] {
            let m = build_floquet(&v).unwrap();
            assert_eq!(m.transpose(), m.invert_z());
        }
    }

    #[test]
    fn two_dim_single_site() {
        let v = Potential::zero(vec![1, 1]).unwrap();
        let m = build_floquet(&v).unwrap();
        let e = m.entry(0, 0);
        assert_eq!(e.len(), 4);
        assert_eq!(e.z_range(0), Some((-1, 1)));
        assert_eq!(e.z_range(1), Some((-1, 1)));
    }

    #[test]
    fn unsupported_dimension() {
        let v = Potential::zero(vec![1, 1, 1]).unwrap();
        assert_eq!(build_floquet(&v), Err(Error::UnsupportedDimension(3)));
    }

    #[test]
    fn float_potentials_need_numeric_path() {
        let v = Potential::new(vec![1], vec![Scalar::float(0.5, 0.0)]).unwrap();
        assert_eq!(build_floquet(&v), Err(Error::RequiresExact));
        let m = numeric_floquet(&v, &[Complex64::new(2.0, 0.0)]).unwrap();
        assert!((m[(0, 0)] - Complex64::new(3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn numeric_matches_exact_evaluation() {
        let v = Potential::from_ints(&[1, -2, 5]).unwrap();
        let z = [Complex64::new(0.3, 1.1)];
        let a = numeric_floquet(&v, &z).unwrap();
        let b = build_floquet(&v).unwrap().evaluate_complex(&z);
        assert!((a - b).norm() < 1e-14);
    }
}
