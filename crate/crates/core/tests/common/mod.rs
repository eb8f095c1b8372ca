#![allow(dead_code)]

use ddgl2::{Field, GaussRational, Mat, Poly, RatFunc, Scalar};
use num_traits::Zero;
use proptest::prelude::*;

pub fn gauss() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, -2i64..=2, 1i64..=3).prop_map(|(re, im, den)| {
        &GaussRational::ratio(re, den) + &(&GaussRational::int(im) * &GaussRational::i())
    })
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(gauss(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

pub fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(2), poly(2))
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

pub fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |x| !x.is_zero())
}

/// Entries drawn from a small set so that products stay cheap.
pub fn small_entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        3 => Just(Scalar::from_i64(0)),
        1 => Just(Scalar::from_i64(1)),
        1 => Just(Scalar::from_i64(-1)),
        1 => Just(Scalar::from_i64(2)),
        1 => Just(Scalar::q()),
        1 => Just(Scalar::q_pow(-1)),
    ]
}

pub fn matrix(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(small_entry(), n * n).prop_map(move |v| Mat::from_flat(n, v))
}

/// Sparse matrices with entries in `{0, ±1, q}`.
pub fn sparse_matrix(n: usize) -> impl Strategy<Value = Mat> {
    let entry = prop_oneof![
        6 => Just(Scalar::from_i64(0)),
        1 => Just(Scalar::from_i64(1)),
        1 => Just(Scalar::from_i64(-1)),
        1 => Just(Scalar::q()),
    ];
    prop::collection::vec(entry, n * n).prop_map(move |v| Mat::from_flat(n, v))
}

/// Upper unitriangular, hence invertible.
pub fn unipotent(n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
        Mat::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Equal => Scalar::from_i64(1),
            std::cmp::Ordering::Less => Scalar::from_i64(v[i * n + j]),
            std::cmp::Ordering::Greater => Scalar::from_i64(0),
        })
    })
}

/// Diagonal entries from `{1, q, q², q³, 7, 7q}`.
pub fn diag_entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just(Scalar::from_i64(1)),
        Just(Scalar::q()),
        Just(Scalar::q_pow(2)),
        Just(Scalar::q_pow(3)),
        Just(Scalar::from_i64(7)),
        Just(Scalar::from_i64(7) * Scalar::q()),
    ]
}

pub fn e(i: usize, j: usize) -> Mat {
    Mat::unit(4, i - 1, j - 1)
}
