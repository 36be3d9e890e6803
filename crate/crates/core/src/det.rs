//! Exact determinants of Gaussian-rational matrices.
//!
//! Denominators are cleared first, then Bareiss elimination runs over
//! Z (real input) or Z[i]; every division it performs is exact.

use alloc::vec::Vec;
use core::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::GaussRational;

trait IntegralDomain: Clone + Zero + One + Sub<Output = Self> + Mul<Output = Self> {
    /// `self / rhs`, known to be exact.
    fn exact_div(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl IntegralDomain for BigInt {
    fn exact_div(&self, rhs: &Self) -> Self {
        debug_assert!((self % rhs).is_zero());
        self / rhs
    }
    fn negate(&self) -> Self {
        -self
    }
}

#[derive(Clone, Debug, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl Zero for GaussInt {
    fn zero() -> Self {
        GaussInt {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl core::ops::Add for GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl One for GaussInt {
    fn one() -> Self {
        GaussInt {
            re: BigInt::one(),
            im: BigInt::zero(),
        }
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl IntegralDomain for GaussInt {
    fn exact_div(&self, rhs: &Self) -> Self {
        let n = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        debug_assert!((&re % &n).is_zero() && (&im % &n).is_zero());
        GaussInt { re: re / &n, im: im / n }
    }
    fn negate(&self) -> Self {
        GaussInt {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

fn bareiss<T: IntegralDomain>(mut m: Vec<T>, n: usize) -> T {
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k * n + k].is_zero() {
            match (k + 1..n).find(|&r| !m[r * n + k].is_zero()) {
                Some(r) => {
                    for c in 0..n {
                        m.swap(k * n + c, r * n + c);
                    }
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        let pivot = m[k * n + k].clone();
        for i in k + 1..n {
            let lead = m[i * n + k].clone();
            for j in k + 1..n {
                let v = m[i * n + j].clone() * pivot.clone() - lead.clone() * m[k * n + j].clone();
                m[i * n + j] = v.exact_div(&prev);
            }
            m[i * n + k] = T::zero();
        }
        prev = pivot;
    }
    let d = m[n * n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// Determinant of a row-major `n × n` matrix.
pub fn determinant(entries: &[GaussRational], n: usize) -> GaussRational {
    assert_eq!(entries.len(), n * n);
    let mut lcm = BigInt::one();
    for e in entries {
        lcm = lcm.lcm(&e.denom_lcm());
    }
    let scale = |r: &BigRational| -> BigInt { r.numer() * (&lcm / r.denom()) };
    let inv_scale = BigRational::new(BigInt::one(), num_traits::pow(lcm.clone(), n));
    if entries.iter().all(GaussRational::is_real) {
        let m: Vec<BigInt> = entries.iter().map(|e| scale(&e.re)).collect();
        GaussRational::real(BigRational::from_integer(bareiss(m, n)) * inv_scale)
    } else {
        let m: Vec<GaussInt> = entries
            .iter()
            .map(|e| GaussInt {
                re: scale(&e.re),
                im: scale(&e.im),
            })
            .collect();
        let d = bareiss(m, n);
        GaussRational::new(
            BigRational::from_integer(d.re) * &inv_scale,
            BigRational::from_integer(d.im) * inv_scale,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(s: &str) -> GaussRational {
        s.parse().unwrap()
    }

    /// Leibniz expansion, for cross-checking small cases.
    fn leibniz(m: &[GaussRational], n: usize) -> GaussRational {
        fn perms(k: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in 0..k {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    perms(k, used, cur, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        let mut all = Vec::new();
        perms(n, &mut vec![false; n], &mut Vec::new(), &mut all);
        let mut acc = GaussRational::zero();
        for p in all {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let mut t = GaussRational::one();
            for (r, &c) in p.iter().enumerate() {
                t = &t * &m[r * n + c];
            }
            acc = if inversions % 2 == 0 { &acc + &t } else { &acc - &t };
        }
        acc
    }

    #[test]
    fn small_real_determinants() {
        let m: Vec<_> = ["1", "2", "3", "4"].iter().map(|s| g(s)).collect();
        assert_eq!(determinant(&m, 2), g("-2"));
        let m: Vec<_> = ["0", "1", "1", "0"].iter().map(|s| g(s)).collect();
        assert_eq!(determinant(&m, 2), g("-1"));
        assert_eq!(determinant(&[], 0), g("1"));
    }

    #[test]
    fn singular_matrix() {
        let m: Vec<_> = ["1/2", "1", "1", "2"].iter().map(|s| g(s)).collect();
        assert_eq!(determinant(&m, 2), g("0"));
    }

    #[test]
    fn matches_leibniz_on_gaussian_entries() {
        let vals = [
            "1/2", "0", "3+1 i", "-2/3 i", "5", "0", "1", "1/7-2 i", "0", "0", "2", "-1", "4/5",
            "1 i", "0", "3",
        ];
        let m: Vec<_> = vals.iter().map(|s| g(s)).collect();
        assert_eq!(determinant(&m, 4), leibniz(&m, 4));
        let m3: Vec<_> = ["0", "0", "1/3", "0", "2", "5", "7/2", "1", "1"]
            .iter()
            .map(|s| g(s))
            .collect();
        assert_eq!(determinant(&m3, 3), leibniz(&m3, 3));
    }
}
