//! Periodic potentials on Z^d given by their values on one period cell.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{GaussRational, Scalar};

/// A Γ-periodic potential, Γ = q_1 Z ⊕ … ⊕ q_d Z.
///
/// Values are stored row-major over the fundamental domain
/// `0 <= n_j < q_j`, with the last coordinate varying fastest. All values
/// share one scalar mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Potential {
    periods: Vec<usize>,
    values: Vec<Scalar>,
}

impl Potential {
    pub fn new(periods: Vec<usize>, values: Vec<Scalar>) -> Result<Self> {
        if periods.is_empty() || periods.contains(&0) {
            return Err(Error::InvalidPeriods(periods));
        }
        let expected: usize = periods.iter().product();
        if values.len() != expected {
            return Err(Error::ValueCount {
                expected,
                found: values.len(),
            });
        }
        let exact = values[0].is_exact();
        if values.iter().any(|v| v.is_exact() != exact) {
            return Err(Error::MixedMode);
        }
        Ok(Self { periods, values })
    }

    /// One-dimensional potential from exact values.
    pub fn line(values: Vec<GaussRational>) -> Result<Self> {
        let q = values.len();
        Self::new(alloc::vec![q], values.into_iter().map(Scalar::Exact).collect())
    }

    /// One-dimensional potential from integers.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::line(values.iter().map(|&v| GaussRational::from_integer(v)).collect())
    }

    pub fn constant(periods: Vec<usize>, value: Scalar) -> Result<Self> {
        let n = periods.iter().product();
        Self::new(periods, alloc::vec![value; n])
    }

    /// The zero potential with the given periods.
    pub fn zero(periods: Vec<usize>) -> Result<Self> {
        Self::constant(periods, Scalar::integer(0))
    }

    pub fn dim(&self) -> usize {
        self.periods.len()
    }

    pub fn periods(&self) -> &[usize] {
        &self.periods
    }

    /// Number of sites in the period cell.
    pub fn cell_size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn is_exact(&self) -> bool {
        self.values[0].is_exact()
    }

    /// Exact values, or `RequiresExact`.
    pub fn exact_values(&self) -> Result<Vec<GaussRational>> {
        self.values.iter().map(Scalar::to_exact).collect()
    }

    pub fn complex_values(&self) -> Vec<Complex64> {
        self.values.iter().map(Scalar::to_complex).collect()
    }

    /// Row-major index of a fundamental-domain point.
    pub fn index(&self, point: &[usize]) -> usize {
        point
            .iter()
            .zip(&self.periods)
            .fold(0, |acc, (&n, &q)| acc * q + n)
    }

    /// Inverse of [`Potential::index`].
    pub fn point(&self, mut index: usize) -> Vec<usize> {
        let mut p = alloc::vec![0; self.dim()];
        for (slot, &q) in p.iter_mut().zip(&self.periods).rev() {
            *slot = index % q;
            index /= q;
        }
        p
    }

    /// Value at an arbitrary lattice point, reduced modulo the periods.
    pub fn at(&self, point: &[i64]) -> &Scalar {
        let reduced: Vec<usize> = point
            .iter()
            .zip(&self.periods)
            .map(|(&n, &q)| n.rem_euclid(q as i64) as usize)
            .collect();
        &self.values[self.index(&reduced)]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(Scalar::abs).fold(0.0, f64::max)
    }

    pub fn is_constant(&self) -> bool {
        self.values.iter().all(|v| *v == self.values[0])
    }

    /// `true` if every value has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.values.iter().all(|v| match v {
            Scalar::Exact(g) => g.is_real(),
            Scalar::Float(c) => c.im == 0.0,
        })
    }

    /// Periods are pairwise coprime.
    pub fn has_coprime_periods(&self) -> bool {
        let q = &self.periods;
        (0..q.len()).all(|i| (i + 1..q.len()).all(|j| q[i].gcd(&q[j]) == 1))
    }

    pub(crate) fn require_coprime_pair(&self) -> Result<()> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim(),
            });
        }
        if !self.has_coprime_periods() {
            return Err(Error::NonCoprimePeriods(self.periods[0], self.periods[1]));
        }
        Ok(())
    }

    pub(crate) fn require_same_periods(&self, other: &Potential) -> Result<()> {
        if self.periods != other.periods {
            return Err(Error::PeriodMismatch {
                left: self.periods.clone(),
                right: other.periods.clone(),
            });
        }
        Ok(())
    }

    fn require_line(&self) -> Result<usize> {
        match self.periods.as_slice() {
            [q] => Ok(*q),
            _ => Err(Error::DimensionMismatch {
                expected: 1,
                found: self.dim(),
            }),
        }
    }

    /// Average over one period cell, exact in exact mode.
    pub fn average(&self) -> Scalar {
        let n = self.values.len();
        match &self.values[0] {
            Scalar::Exact(_) => {
                let mut sum = GaussRational::zero();
                for v in &self.values {
                    sum = &sum + v.as_exact().expect("uniform mode");
                }
                let inv = BigRational::new(1.into(), (n as i64).into());
                Scalar::Exact(sum.scale(&inv))
            }
            Scalar::Float(_) => {
                let sum: Complex64 = self.values.iter().map(Scalar::to_complex).sum();
                Scalar::Float(sum / n as f64)
            }
        }
    }

    pub fn exact_average(&self) -> Result<GaussRational> {
        self.average().to_exact()
    }

    /// `W(n) = V(n + s mod q)`.
    pub fn cyclic_shift(&self, s: i64) -> Result<Potential> {
        let q = self.require_line()?;
        let values = (0..q as i64).map(|n| self.at(&[n + s]).clone()).collect();
        Potential::new(self.periods.clone(), values)
    }

    /// `W(n) = V(q - 1 - n)`.
    pub fn reflect(&self) -> Result<Potential> {
        self.require_line()?;
        let mut values = self.values.clone();
        values.reverse();
        Potential::new(self.periods.clone(), values)
    }

    /// `V + c` pointwise.
    pub fn add_constant(&self, c: &Scalar) -> Result<Potential> {
        let values = self
            .values
            .iter()
            .map(|v| v.checked_add(c))
            .collect::<Result<_>>()?;
        Potential::new(self.periods.clone(), values)
    }

    /// Decomposes a two-dimensional potential as `V_1(n_1) + V_2(n_2)`.
    ///
    /// The split fixes `V_2(0) = 0`; any other split differs by moving a
    /// constant between the components.
    pub fn split_separable(&self) -> Result<SeparablePotential> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: self.dim(),
            });
        }
        let (q1, q2) = (self.periods[0], self.periods[1]);
        let first: Vec<Scalar> = (0..q1).map(|n| self.values[n * q2].clone()).collect();
        let base = &self.values[0];
        let second: Vec<Scalar> = (0..q2)
            .map(|n| self.values[n].checked_sub(base))
            .collect::<Result<_>>()?;
        let parts = [
            Potential::new(alloc::vec![q1], first)?,
            Potential::new(alloc::vec![q2], second)?,
        ];
        let rebuilt = make_separable(&parts)?;
        if rebuilt != *self {
            return Err(Error::NonSeparable);
        }
        Ok(SeparablePotential {
            parts,
            combined: rebuilt,
        })
    }
}

/// `V(n_1, …, n_r) = V_1(n_1) + … + V_r(n_r)` on the product cell.
pub fn make_separable(parts: &[Potential]) -> Result<Potential> {
    if parts.is_empty() {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    for p in parts {
        p.require_line()?;
    }
    let periods: Vec<usize> = parts.iter().map(|p| p.periods[0]).collect();
    let total: usize = periods.iter().product();
    let mut values = Vec::with_capacity(total);
    let mut point = alloc::vec![0usize; parts.len()];
    for _ in 0..total {
        let mut acc = parts[0].values[point[0]].clone();
        for (p, &n) in parts.iter().zip(&point).skip(1) {
            acc = acc.checked_add(&p.values[n])?;
        }
        values.push(acc);
        for j in (0..point.len()).rev() {
            point[j] += 1;
            if point[j] < periods[j] {
                break;
            }
            point[j] = 0;
        }
    }
    Potential::new(periods, values)
}

/// A two-dimensional potential together with its one-dimensional parts.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparablePotential {
    parts: [Potential; 2],
    combined: Potential,
}

impl SeparablePotential {
    pub fn new(first: Potential, second: Potential) -> Result<Self> {
        let parts = [first, second];
        let combined = make_separable(&parts)?;
        Ok(Self { parts, combined })
    }

    pub fn first(&self) -> &Potential {
        &self.parts[0]
    }

    pub fn second(&self) -> &Potential {
        &self.parts[1]
    }

    pub fn parts(&self) -> &[Potential; 2] {
        &self.parts
    }

    pub fn combined(&self) -> &Potential {
        &self.combined
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ints(v: &[i64]) -> Potential {
        Potential::from_ints(v).unwrap()
    }

    #[test]
    fn separable_sum_matches_components() {
        let v = make_separable(&[ints(&[1, -1]), ints(&[0, 0, 3])]).unwrap();
        assert_eq!(v.periods(), &[2, 3]);
        assert_eq!(v.at(&[1, 2]), &Scalar::integer(2));
        assert_eq!(v.at(&[0, 0]), &Scalar::integer(1));
        assert_eq!(v.values()[v.index(&[1, 0])], Scalar::integer(-1));

        let zero = make_separable(&[ints(&[0]), ints(&[0])]).unwrap();
        assert_eq!(zero.values(), &[Scalar::integer(0)]);

        let c = make_separable(&[ints(&[4]), ints(&[-9])]).unwrap();
        assert_eq!(c.values(), &[Scalar::integer(-5)]);
    }

    #[test]
    fn separable_rejects_non_line_parts() {
        let two_d = Potential::zero(vec![2, 3]).unwrap();
        assert!(matches!(
            make_separable(&[two_d, ints(&[1])]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(make_separable(&[]).is_err());
    }

    #[test]
    fn averages() {
        assert_eq!(ints(&[1, 2, 3]).average(), Scalar::integer(2));
        let v = Potential::new(vec![2, 3], (1..=6).map(Scalar::integer).collect()).unwrap();
        assert_eq!(v.average(), Scalar::ratio(7, 2));
        assert_eq!(ints(&[1, -1]).average(), Scalar::integer(0));
    }

    #[test]
    fn shift_and_reflect() {
        assert_eq!(ints(&[1, 2, 3]).cyclic_shift(1).unwrap(), ints(&[2, 3, 1]));
        assert_eq!(ints(&[1, 2, 3]).cyclic_shift(3).unwrap(), ints(&[1, 2, 3]));
        assert_eq!(ints(&[1, 2, 3]).cyclic_shift(-1).unwrap(), ints(&[3, 1, 2]));
        assert_eq!(ints(&[5]).cyclic_shift(3).unwrap(), ints(&[5]));
        assert_eq!(ints(&[1, 2, 3]).reflect().unwrap(), ints(&[3, 2, 1]));
        assert_eq!(ints(&[1, 2, 1]).reflect().unwrap(), ints(&[1, 2, 1]));
        assert_eq!(ints(&[7, 8]).reflect().unwrap(), ints(&[8, 7]));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            Potential::new(vec![2], vec![Scalar::integer(1)]),
            Err(Error::ValueCount { expected: 2, found: 1 })
        ));
        assert!(matches!(
            Potential::new(vec![0], vec![]),
            Err(Error::InvalidPeriods(_))
        ));
        assert_eq!(
            Potential::new(vec![2], vec![Scalar::integer(1), Scalar::float(1.0, 0.0)]),
            Err(Error::MixedMode)
        );
    }

    #[test]
    fn split_recovers_separable_parts() {
        let v = make_separable(&[ints(&[1, -1]), ints(&[0, 0, 3])]).unwrap();
        let s = v.split_separable().unwrap();
        assert_eq!(s.combined(), &v);
        assert_eq!(s.second().at(&[0]), &Scalar::integer(0));

        let mut vals = v.values().to_vec();
        vals[4] = Scalar::integer(100);
        let bent = Potential::new(vec![2, 3], vals).unwrap();
        assert_eq!(bent.split_separable(), Err(Error::NonSeparable));
    }

    #[test]
    fn index_point_round_trip() {
        let v = Potential::zero(vec![3, 4]).unwrap();
        for k in 0..12 {
            assert_eq!(v.index(&v.point(k)), k);
        }
        assert_eq!(v.point(5), vec![1, 1]);
    }
}
