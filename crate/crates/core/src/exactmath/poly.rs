use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Integer polynomial in one variable, coefficients in ascending degree with
/// trailing zeros trimmed. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `(1 - t^a)`.
    pub fn one_minus(a: usize) -> Self {
        Self::one() - Self::monomial(BigInt::one(), a)
    }

    /// `(1 + t^a)`.
    pub fn one_plus(a: usize) -> Self {
        Self::one() + Self::monomial(BigInt::one(), a)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `t^d Q(1/t)` with `d = deg Q`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Terms as `(exponent, coefficient)` for nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.terms() {
            for (j, b) in rhs.terms() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl fmt::Display for Poly {
    /// Writes `1 + t^4 + 2t^6 - t^22`; the zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = Error;

    /// Parses sums of terms like `2t^6`, `-t^22`, `3*t`, `5`. Whitespace is
    /// ignored and repeated exponents accumulate.
    fn from_str(s: &str) -> Result<Self, Error> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let negative = rest.starts_with('-');
            if rest.starts_with('+') || negative {
                rest = &rest[1..];
            }
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (c, e) = parse_term(term).ok_or_else(|| Error::Parse(format!("bad term `{term}` in `{s}`")))?;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += if negative { -c } else { c };
        }
        Ok(Poly::new(coeffs))
    }
}

fn parse_term(term: &str) -> Option<(BigInt, usize)> {
    match term.find('t') {
        None => Some((term.parse().ok()?, 0)),
        Some(pos) => {
            let head = term[..pos].trim_end_matches('*');
            let c = if head.is_empty() {
                BigInt::one()
            } else {
                head.parse().ok()?
            };
            let tail = &term[pos + 1..];
            let e = if tail.is_empty() {
                1
            } else {
                tail.strip_prefix('^')?
                    .trim_matches(|c| c == '{' || c == '}')
                    .parse()
                    .ok()?
            };
            Some((c, e))
        }
    }
}
