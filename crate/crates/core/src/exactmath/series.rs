use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::Zero;

use super::Poly;
use crate::error::{Error, Result};

/// `numerator(t) / prod_i (1 - t^{a_i})`, with the denominator kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalGF {
    numerator: Poly,
    denom: Vec<u32>,
}

impl RationalGF {
    /// Exponents of zero are rejected since `1 - t^0` vanishes.
    pub fn new(numerator: Poly, mut denom: Vec<u32>) -> Self {
        assert!(denom.iter().all(|&a| a > 0), "denominator exponents must be positive");
        denom.sort_unstable();
        RationalGF { numerator, denom }
    }

    /// Builds `numerator / (prod (1 - t^a) * prod (1 + t^b))` by rewriting each
    /// `1 + t^b` as `(1 - t^{2b}) / (1 - t^b)`.
    pub fn with_plus_factors(numerator: Poly, minus: &[u32], plus: &[u32]) -> Self {
        let mut num = numerator;
        let mut denom = minus.to_vec();
        for &b in plus {
            num = &num * &Poly::one_minus(b as usize);
            denom.push(2 * b);
        }
        Self::new(num, denom)
    }

    pub fn numerator(&self) -> &Poly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denom
    }

    fn denominator_poly(&self) -> Poly {
        self.denom
            .iter()
            .fold(Poly::one(), |acc, &a| &acc * &Poly::one_minus(a as usize))
    }

    /// Coefficients of `t^0 .. t^{n-1}`.
    pub fn series_coeffs(&self, n: usize) -> Vec<BigInt> {
        let mut c: Vec<BigInt> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        for &a in &self.denom {
            let a = a as usize;
            for i in a..n {
                let prev = c[i - a].clone();
                c[i] += prev;
            }
        }
        c
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.series_coeffs(k + 1).pop().unwrap_or_default()
    }

    /// Whether the numerator coefficients are symmetric about the middle of
    /// their support, i.e. `t^{s+d} Q(1/t) = Q(t)` with `s` the lowest and `d`
    /// the highest exponent. For numerators with a constant term this is
    /// `t^d Q(1/t) = Q(t)`.
    pub fn is_palindromic(&self) -> bool {
        let Some(low) = self.numerator.low_degree() else {
            return false;
        };
        let c = &self.numerator.coeffs()[low..];
        c.iter().eq(c.iter().rev())
    }

    /// The shift `l` in `F(1/t) = (-1)^m t^l F(t)` when palindromic, where `m`
    /// is the number of denominator factors.
    pub fn palindromic_shift(&self) -> Option<i64> {
        if !self.is_palindromic() {
            return None;
        }
        let d = self.numerator.degree()? as i64;
        let s = self.numerator.low_degree()? as i64;
        let total: i64 = self.denom.iter().map(|&a| i64::from(a)).sum();
        Some(total - d - s)
    }
}

impl Add<&RationalGF> for &RationalGF {
    type Output = RationalGF;
    fn add(self, rhs: &RationalGF) -> RationalGF {
        let num = &(&self.numerator * &rhs.denominator_poly()) + &(&rhs.numerator * &self.denominator_poly());
        let mut denom = self.denom.clone();
        denom.extend_from_slice(&rhs.denom);
        RationalGF::new(num, denom)
    }
}

impl Mul<&RationalGF> for &RationalGF {
    type Output = RationalGF;
    fn mul(self, rhs: &RationalGF) -> RationalGF {
        let mut denom = self.denom.clone();
        denom.extend_from_slice(&rhs.denom);
        RationalGF::new(&self.numerator * &rhs.numerator, denom)
    }
}

/// Recovers `Q` with `Q / prod (1 - t^{a_i})` expanding to `seq`.
///
/// `seq` must be longer than `max_deg + sum a_i` so that the fit is
/// determined; the product `seq * prod (1 - t^{a_i})` must vanish past
/// `max_deg` within the available length.
pub fn fit_numerator<T>(seq: &[T], denom: &[u32], max_deg: usize) -> Result<Poly>
where
    T: Clone + Into<BigInt>,
{
    let total: usize = denom.iter().map(|&a| a as usize).sum();
    if seq.len() <= max_deg + total {
        return Err(Error::Data(format!(
            "sequence of length {} is too short to fit degree {} over {:?}",
            seq.len(),
            max_deg,
            denom
        )));
    }
    let mut c: Vec<BigInt> = seq.iter().cloned().map(Into::into).collect();
    let n = c.len();
    for &a in denom {
        let a = a as usize;
        for i in (a..n).rev() {
            let prev = c[i - a].clone();
            c[i] -= prev;
        }
    }
    if c[max_deg + 1..].iter().any(|x| !x.is_zero()) {
        let mut sorted = denom.to_vec();
        sorted.sort_unstable();
        return Err(Error::NonPolynomial(sorted, max_deg));
    }
    c.truncate(max_deg + 1);
    Ok(Poly::new(c))
}
