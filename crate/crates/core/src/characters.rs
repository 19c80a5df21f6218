//! Irreducible characters of the compact symplectic group `Sp(2)` evaluated on
//! the seventeen torsion conjugacy types that occur in the dimension formulas.
//!
//! Each type is described by a reciprocal quartic `phi_i` (the normalised
//! principal polynomial). Two evaluation routes exist: closed periodic formulas
//! in the weight `(k, j)`, and the Weyl-type formula
//!
//! ```text
//! chi = p_{f1} (p_{f2} + p_{f2-2}) - p_{f2-1} (p_{f1+1} + p_{f1-1})
//! ```
//!
//! where `1/phi(x) = sum p_f x^f`. The closed forms are used for evaluation,
//! the series route serves as an oracle in tests and for arbitrary quartics.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{bracket, sign_pow, to_i64, QuadExt, Rational};

/// Weight `det^k Sym(j)` together with the highest weight `(f1, f2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct WeightParams {
    pub k: i64,
    pub j: i64,
}

impl WeightParams {
    pub fn new(k: i64, j: i64) -> Result<Self> {
        if k < 3 || j < 0 || j % 2 != 0 {
            return Err(Error::BadWeight(k, j));
        }
        Ok(WeightParams { k, j })
    }

    pub fn from_young(f1: i64, f2: i64) -> Result<Self> {
        check_young(f1, f2)?;
        Ok(WeightParams { k: f2 + 3, j: f1 - f2 })
    }

    pub fn f1(&self) -> i64 {
        self.k + self.j - 3
    }

    pub fn f2(&self) -> i64 {
        self.k - 3
    }
}

pub(crate) fn check_young(f1: i64, f2: i64) -> Result<()> {
    if f2 < 0 || f1 < f2 || (f1 - f2) % 2 != 0 {
        return Err(Error::BadYoung(f1, f2));
    }
    Ok(())
}

/// Monic reciprocal quartic `x^4 + c1 x^3 + c2 x^2 + c1 x + 1` over `Q(sqrt m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalPoly {
    pub id: u32,
    pub radicand: u64,
    /// Coefficients of `x^0 .. x^4`.
    pub coeffs: [QuadExt; 5],
}

impl PrincipalPoly {
    pub fn reciprocal(id: u32, c1: QuadExt, c2: QuadExt) -> Self {
        let m = c1.radicand();
        let one = QuadExt::one(m);
        PrincipalPoly {
            id,
            radicand: m,
            coeffs: [one.clone(), c1.clone(), c2, c1, one],
        }
    }

    /// `phi(-x)`.
    pub fn negated(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs[1] = -&coeffs[1];
        coeffs[3] = -&coeffs[3];
        PrincipalPoly { coeffs, ..self.clone() }
    }

    /// `p_0 .. p_{n-1}` of `1/phi(x)`, by the four-term recurrence.
    pub fn reciprocal_series(&self, n: usize) -> Vec<QuadExt> {
        let m = self.radicand;
        let mut out: Vec<QuadExt> = Vec::with_capacity(n);
        for idx in 0..n {
            let mut v = if idx == 0 { QuadExt::one(m) } else { QuadExt::zero(m) };
            for d in 1..=4.min(idx) {
                v = &v - &(&self.coeffs[d] * &out[idx - d]);
            }
            out.push(v);
        }
        out
    }

    /// Expansion of `1/phi` up to `x^{max_f1 + 1}` for repeated character
    /// evaluation. Requires algebraic-integer coefficients `a + b sqrt m` with
    /// integral `a`, `b`.
    pub fn weyl_series(&self, max_f1: i64) -> Result<WeylSeries> {
        let mut c = [(0i128, 0i128); 5];
        for (slot, q) in c.iter_mut().zip(&self.coeffs) {
            let a = q.rational_part();
            let b = q.irrational_part();
            if !a.is_integer() || !b.is_integer() {
                return Err(Error::NonIntegral(q.to_string()));
            }
            *slot = (to_i64(a)? as i128, to_i64(b)? as i128);
        }
        let m = self.radicand as i128;
        let n = (max_f1.max(0) + 2) as usize;
        let mut p: Vec<(i128, i128)> = Vec::with_capacity(n);
        for idx in 0..n {
            let mut v = if idx == 0 { (1, 0) } else { (0, 0) };
            for d in 1..=4.min(idx) {
                let prod = quad_mul(c[d], p[idx - d], m).ok_or_else(overflow)?;
                v = (v.0 - prod.0, v.1 - prod.1);
            }
            p.push(v);
        }
        Ok(WeylSeries { id: self.id, m, p })
    }

    /// Character value at highest weight `(f1, f2)` via the series route.
    pub fn character(&self, f1: i64, f2: i64) -> Result<i64> {
        check_young(f1, f2)?;
        self.weyl_series(f1)?.character(f1, f2)
    }
}

fn overflow() -> Error {
    Error::Overflow("character series".into())
}

fn quad_mul(x: (i128, i128), y: (i128, i128), m: i128) -> Option<(i128, i128)> {
    let a =
        x.0.checked_mul(y.0)?
            .checked_add(x.1.checked_mul(y.1)?.checked_mul(m)?)?;
    let b = x.0.checked_mul(y.1)?.checked_add(x.1.checked_mul(y.0)?)?;
    Some((a, b))
}

/// Integral coefficients of `1/phi(x)` over `Z[sqrt m]`.
#[derive(Clone, Debug)]
pub struct WeylSeries {
    id: u32,
    m: i128,
    p: Vec<(i128, i128)>,
}

impl WeylSeries {
    fn coeff(&self, f: i64) -> (i128, i128) {
        if f < 0 {
            (0, 0)
        } else {
            self.p[f as usize]
        }
    }

    pub fn max_f1(&self) -> i64 {
        self.p.len() as i64 - 2
    }

    /// `p_{f1} (p_{f2} + p_{f2-2}) - p_{f2-1} (p_{f1+1} + p_{f1-1})`.
    pub fn character(&self, f1: i64, f2: i64) -> Result<i64> {
        check_young(f1, f2)?;
        assert!(f1 <= self.max_f1(), "series too short for f1 = {f1}");
        let add = |x: (i128, i128), y: (i128, i128)| (x.0 + y.0, x.1 + y.1);
        let left = quad_mul(self.coeff(f1), add(self.coeff(f2), self.coeff(f2 - 2)), self.m).ok_or_else(overflow)?;
        let right =
            quad_mul(self.coeff(f2 - 1), add(self.coeff(f1 + 1), self.coeff(f1 - 1)), self.m).ok_or_else(overflow)?;
        if left.1 != right.1 {
            return Err(Error::IrrationalResidue(self.id, f1, f2));
        }
        i64::try_from(left.0 - right.0).map_err(|_| overflow())
    }
}

/// `(c1 = a + b sqrt m, c2, m)` for `phi_1 .. phi_17`.
const PRINCIPAL_TABLE: [(i64, i64, i64, u64); 17] = [
    (-4, 0, 6, 1),
    (0, 0, -2, 1),
    (-2, 0, 2, 1),
    (-1, 0, 0, 1),
    (-3, 0, 4, 1),
    (0, 0, 2, 1),
    (2, 0, 3, 1),
    (1, 0, 2, 1),
    (0, 0, 1, 1),
    (1, 0, 1, 1),
    (0, 0, 0, 1),
    (0, 0, -1, 1),
    (0, 1, 3, 5),
    (0, 2, 4, 2),
    (0, 1, 1, 2),
    (0, 1, 2, 2),
    (0, 1, 2, 3),
];

/// The quartic `phi_i`, `1 <= i <= 17`.
pub fn principal_poly(i: u32) -> Result<PrincipalPoly> {
    if !(1..=17).contains(&i) {
        return Err(Error::BadIndex(i));
    }
    let (a, b, c2, m) = PRINCIPAL_TABLE[i as usize - 1];
    Ok(PrincipalPoly::reciprocal(
        i,
        QuadExt::from_ints(a, b, m),
        QuadExt::from_ints(c2, 0, m),
    ))
}

/// Series-route value of `chi_i` at `(f1, f2)`.
pub fn chi_series(i: u32, f1: i64, f2: i64) -> Result<i64> {
    principal_poly(i)?.character(f1, f2)
}

/// The character of `phi_i` at `w`.
pub fn chi(i: u32, w: WeightParams) -> Result<i64> {
    chi_closed(i, w)
}

fn exact_div(num: i64, den: i64) -> Result<i64> {
    if num % den != 0 {
        return Err(Error::NonIntegral(Rational::new(num.into(), den.into()).to_string()));
    }
    Ok(num / den)
}

/// Closed periodic formula for `chi_i` at weight `(k, j)`.
pub fn chi_closed(i: u32, w: WeightParams) -> Result<i64> {
    let WeightParams { k, j } = w;
    let a = j + k - 1;
    let b = k - 2;
    let v = match i {
        1 => exact_div((j + 1) * b * a * (j + 2 * k - 3), 6)?,
        2 => exact_div(sign_pow(k - 3) * b * a, 2)?,
        3 => {
            let s = sign_pow(j / 2);
            exact_div(bracket(&[s * b, -a, -s * b, a], k), 2)?
        }
        4 => exact_div(a * bracket(&[1, -1, 0], k) + b * bracket(&[1, 0, -1], j + k), 3)?,
        5 => a * bracket(&[-1, -1, 0, 1, 1, 0], k) + b * bracket(&[1, 0, -1, -1, 0, 1], j + k),
        6 => exact_div(sign_pow((2 * k + j - 6) / 2) * bracket(&[-b, a], k), 2)?,
        7 => {
            let row = match j.rem_euclid(3) {
                0 => [2 * k + j - 3, 2 * k + 2 * j - 2, 2 * k - 4],
                1 => [-(2 * k + 2 * j - 2), -(2 * k + j - 3), -(2 * k - 4)],
                _ => [j + 1, -(j + 1), 0],
            };
            exact_div(bracket(&row, k), 3)?
        }
        8 => {
            let row: [i64; 12] = match j.rem_euclid(12) {
                0 => [-1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1, -1],
                2 => [1, -1, 0, -1, -1, 0, -1, 1, 0, 1, 1, 0],
                4 => [-1, 1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1],
                6 => [1, 0, 0, 1, -1, 1, -1, 0, 0, -1, 1, -1],
                8 => [-1, -1, 0, -1, 1, 0, 1, 1, 0, 1, -1, 0],
                _ => [1, 1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1],
            };
            bracket(&row, k)
        }
        9 => {
            let row: [i64; 6] = match j.rem_euclid(6) {
                0 => [-1, 0, 0, 1, 0, 0],
                2 => [1, -1, 0, -1, 1, 0],
                _ => [0, 1, 0, 0, -1, 0],
            };
            bracket(&row, k)
        }
        10 => {
            let row: [i64; 5] = match j.rem_euclid(10) {
                0 => [-1, 0, 0, 1, 0],
                2 => [1, -1, 0, 0, 0],
                4 => [0; 5],
                6 => [0, 0, 0, -1, 1],
                _ => [0, 1, 0, 0, -1],
            };
            bracket(&row, k)
        }
        11 => {
            let row: [i64; 4] = match j.rem_euclid(8) {
                0 => [-1, 0, 0, 1],
                2 => [1, -1, 0, 0],
                4 => [1, 0, 0, -1],
                _ => [-1, 1, 0, 0],
            };
            bracket(&row, k)
        }
        12 => {
            let row: &[i64] = match j.rem_euclid(6) {
                0 => &[-1, 0, 0, 1, -2, 2],
                2 => &[-1, 1, 0],
                _ => &[2, -1, 0, 0, 1, -2],
            };
            sign_pow(j / 2) * bracket(row, k)
        }
        13 => {
            let row: [i64; 10] = match j.rem_euclid(10) {
                0 => [-1, 0, 0, 1, 2, 1, 0, 0, -1, -2],
                2 => [1, -1, 0, 2, 0, -1, 1, 0, -2, 0],
                4 => [-2, -2, 0, -2, -2, 2, 2, 0, 2, 2],
                6 => [0, 2, 0, -1, 1, 0, -2, 0, 1, -1],
                _ => [2, 1, 0, 0, -1, -2, -1, 0, 0, 1],
            };
            bracket(&row, k)
        }
        14 => {
            if j % 4 == 0 {
                sign_pow(j / 4) * bracket(&[a, a, b, b], k)
            } else {
                sign_pow((j - 2) / 4) * bracket(&[a, b, b, a], k)
            }
        }
        15 => {
            let row: &[i64] = match j.rem_euclid(12) {
                0 => &[-1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2, 0],
                2 | 8 => &[1, -1, 0],
                4 => &[0, -1, 0, 2, -1, -2, 2, 1, -2, 0, 1, 0],
                6 => &[1, -2, 0, 1, 0, 0, -1, 0, 2, -1, -2, 2],
                _ => &[0, -1, 0, 0, 1, 0, -2, 1, 2, -2, -1, 2],
            };
            sign_pow(j / 12) * bracket(row, k)
        }
        16 => {
            let row: [i64; 8] = match j.rem_euclid(8) {
                0 => [-1, 0, 0, 1, 1, 0, 0, -1],
                2 => [1, -1, 0, 0, -1, 1, 0, 0],
                4 => [-1, 0, 0, -1, 1, 0, 0, 1],
                _ => [1, 1, 0, 0, -1, -1, 0, 0],
            };
            bracket(&row, k)
        }
        17 => {
            let row: &[i64] = match j.rem_euclid(12) {
                0 => &[-1, 0, 0, 1, 1, -1],
                2 => &[1, -1, 0],
                4 => &[-1, -1, 0, 0, 1, 1],
                6 => &[1, 0, 0, -1, -1, 1],
                8 => &[-1, 1, 0],
                _ => &[1, 1, 0, 0, -1, -1],
            };
            bracket(row, k)
        }
        _ => return Err(Error::BadIndex(i)),
    };
    Ok(v)
}

/// The same characters for `i` in `{2, 6, 9, 11, 13}` written in the highest
/// weight `(f1, f2)` directly. Used to cross-check the `(k, j)` tables.
pub fn chi_closed_young(i: u32, f1: i64, f2: i64) -> Result<i64> {
    check_young(f1, f2)?;
    let d = f1 - f2;
    let v = match i {
        2 => exact_div(sign_pow(f1) * (f1 + 2) * (f2 + 1), 2)?,
        6 => {
            let inner = if f2 % 2 == 0 { f1 + 2 } else { -(f2 + 1) };
            exact_div(sign_pow((f1 + f2) / 2) * inner, 2)?
        }
        9 => {
            let row: [i64; 6] = match d.rem_euclid(6) {
                0 => [1, 0, 0, -1, 0, 0],
                2 => [-1, 1, 0, 1, -1, 0],
                _ => [0, -1, 0, 0, 1, 0],
            };
            bracket(&row, f2)
        }
        11 => {
            if d % 4 == 0 {
                sign_pow(d / 4) * bracket(&[1, -1, 0, 0], f2)
            } else {
                sign_pow((d - 2) / 4) * bracket(&[0, 1, -1, 0], f2)
            }
        }
        13 => {
            let row: [i64; 10] = match d.rem_euclid(10) {
                0 => [1, 2, 1, 0, 0, -1, -2, -1, 0, 0],
                2 => [2, 0, -1, 1, 0, -2, 0, 1, -1, 0],
                4 => [-2, -2, 2, 2, 0, 2, 2, -2, -2, 0],
                6 => [-1, 1, 0, -2, 0, 1, -1, 0, 2, 0],
                _ => [0, -1, -2, -1, 0, 0, 1, 2, 1, 0],
            };
            bracket(&row, f2)
        }
        _ => return Err(Error::BadIndex(i)),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_weight_gives_one() {
        let w = WeightParams::new(3, 0).unwrap();
        for i in 1..=17 {
            assert_eq!(chi_closed(i, w).unwrap(), 1, "closed chi_{i}");
            assert_eq!(chi_series(i, 0, 0).unwrap(), 1, "series chi_{i}");
        }
    }

    #[test]
    fn sample_values() {
        let w = |k, j| WeightParams::new(k, j).unwrap();
        assert_eq!(chi_closed(11, w(4, 0)).unwrap(), -1);
        assert_eq!(chi_closed(9, w(5, 0)).unwrap(), 0);
        assert_eq!(chi_closed(6, w(6, 0)).unwrap(), 2);
        assert_eq!(chi_closed(14, w(5, 0)).unwrap(), 4);
        assert_eq!(chi_series(14, 2, 2).unwrap(), 4);
        assert_eq!(chi_series(2, 1, 1).unwrap(), -3);
        assert_eq!(chi_closed(1, w(4, 0)).unwrap(), 5);
    }

    #[test]
    fn errors() {
        let w = WeightParams::new(3, 0).unwrap();
        assert_eq!(chi_closed(18, w), Err(Error::BadIndex(18)));
        assert_eq!(chi_series(0, 0, 0), Err(Error::BadIndex(0)));
        assert_eq!(chi_series(1, 1, 2), Err(Error::BadYoung(1, 2)));
        assert!(WeightParams::new(3, 1).is_err());
        assert!(WeightParams::new(2, 0).is_err());
    }

    #[test]
    fn principal_polys_are_reciprocal_monic() {
        for i in 1..=17 {
            let phi = principal_poly(i).unwrap();
            assert_eq!(phi.coeffs[0], phi.coeffs[4]);
            assert_eq!(phi.coeffs[1], phi.coeffs[3]);
            assert_eq!(phi.coeffs[4], QuadExt::one(phi.radicand));
        }
    }
}
