use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rational;
use crate::arith::is_squarefree;
use crate::error::{Error, Result};

/// `a + b*sqrt(m)` with rational `a`, `b` and squarefree `m >= 1`.
///
/// Radicand 1 is allowed and stands for plain rationals; the `b` part then
/// stays zero as long as inputs have `b = 0`. Binary operators panic when the
/// radicands differ; the `try_*` methods report it as an error instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    m: u64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, m: u64) -> Result<Self> {
        if m == 0 || !is_squarefree(m) {
            return Err(Error::NotSquarefree(m));
        }
        Ok(QuadExt { a, b, m })
    }

    pub fn from_rational(a: Rational, m: u64) -> Result<Self> {
        Self::new(a, Rational::zero(), m)
    }

    pub(crate) fn from_ints(a: i64, b: i64, m: u64) -> Self {
        debug_assert!(m >= 1 && is_squarefree(m));
        QuadExt {
            a: Rational::from_integer(a.into()),
            b: Rational::from_integer(b.into()),
            m,
        }
    }

    pub fn zero(m: u64) -> Self {
        Self::from_ints(0, 0, m)
    }

    pub fn one(m: u64) -> Self {
        Self::from_ints(1, 0, m)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> u64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }

    /// Field norm `a^2 - m b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(self.m.into()) * &self.b * &self.b
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadExt {
            a: &self.a * c,
            b: &self.b * c,
            m: self.m,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(Error::RadicandMismatch(self.m, other.m))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadExt {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            m: self.m,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(QuadExt {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            m: self.m,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = Rational::from_integer(self.m.into());
        Ok(QuadExt {
            a: &self.a * &other.a + m * &self.b * &other.b,
            b: &self.a * &other.b + &self.b * &other.a,
            m: self.m,
        })
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let inv = Rational::one() / n;
        Some(self.conj().scale(&inv))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.m)
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadExt> for &QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: &QuadExt) -> QuadExt {
                self.$checked(rhs)
                    .expect("QuadExt operands over different fields")
            }
        }
        impl $trait for QuadExt {
            type Output = QuadExt;
            fn $method(self, rhs: QuadExt) -> QuadExt {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -self.a.clone(),
            b: -self.b.clone(),
            m: self.m,
        }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn norm_of_golden_unit() {
        let x = QuadExt::new(rat(1, 2), rat(1, 2), 5).unwrap();
        assert_eq!(x.norm(), rat(-1, 1));
        assert_eq!(&x * &x.conj(), QuadExt::from_rational(rat(-1, 1), 5).unwrap());
    }

    #[test]
    fn mixing_radicands_is_an_error() {
        let a = QuadExt::one(2);
        let b = QuadExt::one(3);
        assert_eq!(a.try_add(&b), Err(Error::RadicandMismatch(2, 3)));
        assert!(QuadExt::new(rat(1, 1), rat(0, 1), 8).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let x = QuadExt::new(rat(3, 1), rat(-2, 7), 2).unwrap();
        assert_eq!(&x * &x.inverse().unwrap(), QuadExt::one(2));
        assert!(QuadExt::zero(2).inverse().is_none());
    }
}
