//! Rational functions in the deformation parameter `q` over ℚ(i).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::field::{ComplexField, Field};

/// An element of ℚ(i)(q) in canonical form: `gcd(num, den) = 1`, `den` monic,
/// and zero is `0/1`. Two values are equal iff their fields are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds and canonicalizes `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g), den.exact_div(&g))
        };
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let s = lc.inv().unwrap();
            Self {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        Self {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The transcendental deformation parameter.
    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i32) -> Self {
        let m = Poly::monomial(GaussRational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            Self {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `1 + q + … + q^{k-1}`.
    pub fn q_integer(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::UndefinedQInteger);
        }
        Ok(Self::from_poly(Poly::from_coeffs(vec![
            GaussRational::one();
            k as usize
        ])))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value if this does not depend on `q`.
    pub fn as_constant(&self) -> Option<GaussRational> {
        if self.is_zero() {
            return Some(GaussRational::zero());
        }
        (self.num.is_constant() && self.den.is_one()).then(|| self.num.coeffs()[0].clone())
    }

    /// Substitutes `q = q0`.
    pub fn eval(&self, q0: &GaussRational) -> Result<GaussRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::EvaluationPole);
        }
        Ok(&self.num.eval(q0) / &d)
    }

    pub fn try_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        Ok(self * &rhs.inv().unwrap())
    }
}

impl From<GaussRational> for RatFunc {
    fn from(c: GaussRational) -> Self {
        Self::constant(c)
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel first to keep the intermediate degrees small
        let g1 = Poly::gcd(&self.num, &rhs.den);
        let g2 = Poly::gcd(&rhs.num, &self.den);
        let num = &self.num.exact_div(&g1) * &rhs.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &rhs.den.exact_div(&g1);
        let lc = den.leading().unwrap().clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let s = lc.inv().unwrap();
            RatFunc {
                num: num.scale(&s),
                den: den.scale(&s),
            }
        }
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("zero divisor")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let lc = self.num.leading().unwrap().inv().unwrap();
        Some(RatFunc {
            num: self.den.scale(&lc),
            den: self.num.scale(&lc),
        })
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(GaussRational::int(n))
    }
}

impl ComplexField for RatFunc {
    fn imag_unit() -> Self {
        Self::constant(GaussRational::i())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_ratfunc(self))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatFunc {
        RatFunc::q()
    }

    fn c(n: i64) -> RatFunc {
        RatFunc::from_i64(n)
    }

    #[test]
    fn polynomial_cancellation() {
        let num = &(&q() * &q()) - &c(1);
        let den = &q() - &c(1);
        assert_eq!(num.try_div(&den).unwrap(), &q() + &c(1));
    }

    #[test]
    fn laurent_inverse() {
        let qinv = q().inv().unwrap();
        assert_eq!(&q() * &qinv, RatFunc::one());
        assert_eq!(qinv, RatFunc::q_pow(-1));
        // (q-1)·q⁻¹ + q⁻¹ = 1
        let lhs = &(&(&q() - &c(1)) * &qinv) + &qinv;
        assert_eq!(lhs, RatFunc::one());
    }

    #[test]
    fn zero_divisor() {
        assert_eq!(c(1).try_div(&RatFunc::zero()), Err(Error::ZeroDivisor));
        assert_eq!(
            RatFunc::new(Poly::one(), Poly::zero()),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn canonical_form_has_monic_denominator() {
        // 2/(2q) = 1/q
        let x = RatFunc::new(
            Poly::constant(GaussRational::int(2)),
            Poly::monomial(GaussRational::int(2), 1),
        )
        .unwrap();
        assert!(x.denom().is_monic());
        assert_eq!(x, RatFunc::q_pow(-1));
        assert_eq!(
            RatFunc::new(Poly::zero(), Poly::q()).unwrap(),
            RatFunc::zero()
        );
        assert!(RatFunc::zero().denom().is_one());
    }

    #[test]
    fn q_integers() {
        assert_eq!(RatFunc::q_integer(1).unwrap(), RatFunc::one());
        assert_eq!(
            RatFunc::q_integer(3).unwrap(),
            &(&c(1) + &q()) + &(&q() * &q())
        );
        assert_eq!(RatFunc::q_integer(0), Err(Error::UndefinedQInteger));
        // geometric-sum oracle: (q^4 - 1)/(q - 1)
        let oracle = (&RatFunc::q_pow(4) - &c(1))
            .try_div(&(&q() - &c(1)))
            .unwrap();
        assert_eq!(RatFunc::q_integer(4).unwrap(), oracle);
    }

    #[test]
    fn numeric_evaluation() {
        let two = GaussRational::int(2);
        assert_eq!((&q() + &c(1)).eval(&two).unwrap(), GaussRational::int(3));
        let pole = c(1).try_div(&(&q() - &c(1))).unwrap();
        assert_eq!(pole.eval(&GaussRational::one()), Err(Error::EvaluationPole));
        assert_eq!(
            RatFunc::q_integer(3).unwrap().eval(&two).unwrap(),
            GaussRational::int(7)
        );
    }
}
