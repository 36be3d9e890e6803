#![allow(dead_code)]

use fermiso_core::{Exponent, GaussRational, LaurentPoly, Potential, Scalar};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = GaussRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| GaussRational::from_ratio(n, d))
}

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (rational(), prop::bool::weighted(0.3), rational()).prop_map(|(re, complex, im)| {
        if complex {
            &re + &(&GaussRational::i() * &im)
        } else {
            re
        }
    })
}

pub fn nonzero_gauss() -> impl Strategy<Value = GaussRational> {
    gauss().prop_filter("nonzero", |g| g != &GaussRational::from_integer(0))
}

pub fn exact_potential(periods: Vec<usize>, real: bool) -> impl Strategy<Value = Potential> {
    let n: usize = periods.iter().product();
    let value = if real { rational().boxed() } else { gauss().boxed() };
    prop::collection::vec(value, n).prop_map(move |vals| {
        Potential::new(periods.clone(), vals.into_iter().map(Scalar::exact).collect()).unwrap()
    })
}

pub fn line_potential(max_q: usize) -> impl Strategy<Value = Potential> {
    (1..=max_q, any::<bool>()).prop_flat_map(|(q, real)| exact_potential(vec![q], real))
}

/// Coprime period pairs with `q1 q2 <= 12`.
pub const COPRIME_PAIRS: &[(usize, usize)] = &[
    (1, 1),
    (1, 2),
    (2, 1),
    (1, 3),
    (3, 1),
    (2, 3),
    (3, 2),
    (1, 4),
    (4, 1),
    (3, 4),
    (4, 3),
    (1, 5),
    (2, 5),
];

pub fn plane_potential(max_cell: usize) -> impl Strategy<Value = Potential> {
    let pairs: Vec<_> = COPRIME_PAIRS.iter().copied().filter(|(a, b)| a * b <= max_cell).collect();
    (prop::sample::select(pairs), any::<bool>())
        .prop_flat_map(|((a, b), real)| exact_potential(vec![a, b], real))
}

pub fn laurent(dim: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -2i32..=2), 0u32..=2, gauss()), 0..5).prop_map(move |terms| {
        LaurentPoly::from_terms(
            dim,
            terms.into_iter().map(|((a, b), m, c)| {
                let z: Vec<i32> = [a, b][..dim].to_vec();
                (Exponent::new(&z, m), c)
            }),
        )
    })
}

pub fn c64(re: f64, im: f64) -> num_complex::Complex64 {
    num_complex::Complex64::new(re, im)
}
