//! Slow reference determinant: Laplace expansion of `D_V(z) - λ I` over
//! the Laurent polynomial ring, memoized on the set of used columns.
//!
//! Shares nothing with the evaluation/interpolation path beyond the matrix
//! itself, so it serves as an independent cross-check.

use alloc::vec::Vec;

use crate::error::Result;
use crate::floquet::build_floquet;
use crate::laurent::LaurentPoly;
use crate::potential::Potential;

struct Expansion<'a> {
    n: usize,
    entries: &'a [LaurentPoly],
    memo: Vec<Option<LaurentPoly>>,
}

impl Expansion<'_> {
    /// Determinant of the trailing rows against the columns in `mask`.
    fn minor(&mut self, mask: usize) -> LaurentPoly {
        if let Some(p) = &self.memo[mask] {
            return p.clone();
        }
        let dim = self.entries[0].dim();
        let remaining = mask.count_ones() as usize;
        let row = self.n - remaining;
        let mut acc = LaurentPoly::zero(dim);
        let mut rank = 0;
        for col in 0..self.n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let e = &self.entries[row * self.n + col];
            if !e.is_zero() {
                let sub = self.minor(mask & !(1 << col));
                let term = e * &sub;
                acc = if rank % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            rank += 1;
        }
        self.memo[mask] = Some(acc.clone());
        acc
    }
}

/// `det(D_V(z) - λ I)` by cofactor expansion.
pub fn cofactor_charpoly(v: &Potential) -> Result<LaurentPoly> {
    let m = build_floquet(v)?;
    let n = m.size();
    assert!(n <= 20, "cofactor oracle limited to 20x20");
    let entries = m.minus_lambda();
    let mut memo = alloc::vec![None; 1 << n];
    memo[0] = Some(LaurentPoly::one(m.dim()));
    let mut exp = Expansion {
        n,
        entries: &entries,
        memo,
    };
    Ok(exp.minor((1 << n) - 1))
}
