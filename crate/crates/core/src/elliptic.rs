//! Dimensions of elliptic cusp forms: level one, and newforms of weight `k`
//! on `Gamma_0(p)` split by the Atkin-Lehner eigenvalue.

use serde::Serialize;

use crate::arith::{a_p, class_number, legendre, require_prime};
use crate::error::{Error, Result};
use crate::exactmath::{bracket, delta, rat, sign_pow, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ALSign {
    Plus,
    Minus,
}

/// `dim S_k(SL_2(Z))`; zero for odd `k` and for `k = 0`.
pub fn dim_cusp_level1(k: i64) -> i64 {
    if k <= 0 || k % 2 != 0 {
        return 0;
    }
    let v = rat(k - 1, 12) + rat(sign_pow(k / 2), 4) + rat(bracket(&[1, 0, -1], k), 3) - rat(1, 2)
        + Rational::from_integer(delta(k, 2).into());
    to_i64(&v).expect("level one dimension is integral")
}

/// `dim M_k(SL_2(Z))`, Eisenstein series included.
pub fn dim_modular_level1(k: i64) -> i64 {
    match k {
        0 => 1,
        _ if k < 4 || k % 2 != 0 => 0,
        _ => dim_cusp_level1(k) + 1,
    }
}

/// `dim S_k^new(Gamma_0(p))` for even `k >= 2`.
pub fn dim_new_gamma0(p: u64, k: i64) -> Result<i64> {
    require_prime(p)?;
    if k % 2 != 0 || k < 2 {
        return Err(Error::OddWeight(k));
    }
    let p_i = p as i64;
    let v = rat((p_i - 1) * (k - 1), 12)
        + rat(sign_pow(k / 2 + 1) * (1 - legendre(-1, p)), 4)
        + rat(bracket(&[-1, 0, 1], k) * (1 - legendre(-3, p)), 3)
        - Rational::from_integer(delta(k, 2).into());
    to_i64(&v)
}

/// `dim S^+ - dim S^-` on the newspace.
pub fn new_gamma0_difference(p: u64, k: i64) -> Result<i64> {
    require_prime(p)?;
    if k % 2 != 0 || k < 2 {
        return Err(Error::OddWeight(k));
    }
    let d2 = delta(k, 2);
    Ok(match p {
        2 => {
            let e = (k - 4) * (k - 2) / 8;
            (sign_pow(k / 2) - sign_pow(e)) / 2 + d2
        }
        3 => {
            let r = match k.rem_euclid(12) {
                2 | 6 => -1,
                4 | 10 => 0,
                _ => 1,
            };
            d2 + r
        }
        _ => {
            let h = class_number(p)? as i64;
            let num = sign_pow(k / 2) * a_p(p)? * h;
            to_i64(&(rat(num, 2) + Rational::from_integer(d2.into())))?
        }
    })
}

/// `dim S_k^{new, sign}(Gamma_0(p))`.
pub fn dim_new_gamma0_signed(p: u64, k: i64, sign: ALSign) -> Result<i64> {
    let total = dim_new_gamma0(p, k)?;
    let diff = new_gamma0_difference(p, k)?;
    if (total + diff) % 2 != 0 {
        return Err(Error::ParityFailure(total, diff));
    }
    Ok(match sign {
        ALSign::Plus => (total + diff) / 2,
        ALSign::Minus => (total - diff) / 2,
    })
}
