//! The scalar abstraction every linear-algebra routine is generic over.
//!
//! Only exact fields implement [`Field`]: rank and nullspace decisions rely on
//! `is_zero` being an exact test.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn pow_i32(&self, k: i32) -> Option<Self> {
        if k < 0 {
            return self.inv().map(|x| x.pow_i32(-k).expect("positive power"));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        Some(acc)
    }
}

/// Fields containing a square root of -1.
pub trait ComplexField: Field {
    fn imag_unit() -> Self;
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}
