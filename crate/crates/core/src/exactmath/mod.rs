//! Exact arithmetic: rationals, elements of real quadratic fields, integer
//! polynomials and rational generating functions in factored form.

mod poly;
mod quadext;
mod series;

pub use poly::Poly;
pub use quadext::QuadExt;
pub use series::{fit_numerator, RationalGF};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Converts an integral rational to `i64`.
pub fn to_i64(r: &Rational) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NonIntegral(r.to_string()));
    }
    r.to_integer().to_i64().ok_or_else(|| Error::Overflow(r.to_string()))
}

pub fn big_to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or_else(|| Error::Overflow(n.to_string()))
}

/// Kronecker delta.
pub fn delta<T: PartialEq>(a: T, b: T) -> i64 {
    i64::from(a == b)
}

/// Cyclic lookup `[a_0, ..., a_{m-1}; m]_b`, which is `a_i` for `b = i mod m`.
pub fn bracket(entries: &[i64], b: i64) -> i64 {
    let m = entries.len() as i64;
    entries[b.rem_euclid(m) as usize]
}

/// `(-1)^e` for any integer `e`.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
