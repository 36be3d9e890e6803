use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigenvalues of a complex square matrix via the complex Schur form.
pub fn eigenvalues(m: DMatrix<Complex64>) -> Result<Vec<Complex64>> {
    let n = m.nrows();
    if n == 1 {
        return Ok(alloc::vec![m[(0, 0)]]);
    }
    let schur = m.try_schur(f64::EPSILON, 10_000).ok_or(Error::EigenFailure)?;
    let vals = schur.eigenvalues().ok_or(Error::EigenFailure)?;
    Ok(vals.iter().copied().collect())
}

/// Sorts by real part, then imaginary part.
pub fn sort_spectrum(vals: &mut [Complex64]) {
    vals.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}
