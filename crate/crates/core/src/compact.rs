//! Algebraic modular forms on the compact quaternion hermitian group for the
//! non-principal genus of prime level `p`: total dimension, trace of the
//! Atkin-Lehner operator, and the two eigenspace dimensions.

use serde::Serialize;

use crate::arith::{bernoulli_b2_chi, class_number, legendre, require_prime};
use crate::characters::{check_young, chi_closed, WeightParams};
use crate::error::{Error, Result};
use crate::exactmath::{delta, int, rat, to_i64, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CompactDims {
    pub p: u64,
    pub f1: i64,
    pub f2: i64,
    pub total: i64,
    pub trace: i64,
    pub plus: i64,
    pub minus: i64,
}

/// Per-prime constants of the dimension and trace formulas; build once and
/// evaluate at many weights.
#[derive(Clone, Debug)]
pub struct CompactFormula {
    p: u64,
    /// Coefficients of `chi_1 .. chi_17` in the total dimension.
    total: Vec<(u32, Rational)>,
    /// Coefficients of `chi_i` in the trace.
    trace: Vec<(u32, Rational)>,
}

impl CompactFormula {
    pub fn new(p: u64) -> Result<Self> {
        require_prime(p)?;
        Ok(CompactFormula {
            p,
            total: total_coefficients(p),
            trace: trace_coefficients(p)?,
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn total_coefficients(&self) -> &[(u32, Rational)] {
        &self.total
    }

    pub fn trace_coefficients(&self) -> &[(u32, Rational)] {
        &self.trace
    }

    fn evaluate(coeffs: &[(u32, Rational)], f1: i64, f2: i64) -> Result<i64> {
        check_young(f1, f2)?;
        let w = WeightParams::from_young(f1, f2)?;
        let mut sum = Rational::default();
        for (i, c) in coeffs {
            sum += c * int(chi_closed(*i, w)?);
        }
        to_i64(&sum)
    }

    /// `dim M_{f1,f2}` summed over the genus.
    pub fn total(&self, f1: i64, f2: i64) -> Result<i64> {
        Self::evaluate(&self.total, f1, f2)
    }

    /// Trace of the Atkin-Lehner operator on `M_{f1,f2}`.
    pub fn trace(&self, f1: i64, f2: i64) -> Result<i64> {
        Self::evaluate(&self.trace, f1, f2)
    }

    pub fn signed(&self, f1: i64, f2: i64) -> Result<CompactDims> {
        let total = self.total(f1, f2)?;
        let trace = self.trace(f1, f2)?;
        if (total + trace) % 2 != 0 {
            return Err(Error::ParityFailure(total, trace));
        }
        let plus = (total + trace) / 2;
        let minus = (total - trace) / 2;
        if plus < 0 || minus < 0 {
            return Err(Error::NegativeDim(plus.min(minus), self.p, f2 + 3, f1 - f2));
        }
        Ok(CompactDims {
            p: self.p,
            f1,
            f2,
            total,
            trace,
            plus,
            minus,
        })
    }
}

fn total_coefficients(p: u64) -> Vec<(u32, Rational)> {
    let pi = p as i64;
    let d2 = delta(p, 2);
    let d3 = delta(p, 3);
    let sym = |d: i64| legendre(d, p);
    let m1 = sym(-1);
    let m3 = sym(-3);
    let five = if p == 5 { 0 } else { legendre(pi, 5) };
    vec![
        (1, rat(pi * pi - 1, 2880)),
        (2, rat(d2, 192)),
        (3, rat(d2, 16)),
        (4, rat(d3, 9)),
        (6, rat(pi - m1, 24) + rat(pi * m1 - 1, 96)),
        (7, rat(pi - m3, 24) + rat(pi * m3 - 1, 72)),
        (9, rat(d2, 6)),
        (10, rat(1 - five, 5)),
        (11, rat(1 - sym(2), 8)),
        (12, rat(1 - sym(3) + m1 - m3, 24)),
    ]
}

fn trace_coefficients(p: u64) -> Result<Vec<(u32, Rational)>> {
    let r = |n, d| rat(n, d);
    Ok(match p {
        2 => vec![
            (2, r(1, 48)),
            (6, r(1, 16)),
            (9, r(1, 6)),
            (11, r(5, 16)),
            (14, r(1, 48)),
            (15, r(1, 6)),
            (16, r(1, 4)),
        ],
        3 => vec![(2, r(1, 24)), (6, r(1, 24)), (9, r(1, 3)), (11, r(1, 4)), (17, r(1, 3))],
        _ => {
            let b2 = bernoulli_b2_chi(p)?;
            let h1 = class_number(p)? as i64;
            let h2 = class_number(2 * p)? as i64;
            let h3 = class_number(3 * p)? as i64;
            let s2 = legendre(2, p);
            if p % 4 == 1 {
                let mut v = vec![
                    (2, r(9 - 2 * s2, 96) * b2),
                    (6, r(h1, 16)),
                    (11, r(h2, 8)),
                    (9, r(h3 * (3 + s2), 12)),
                ];
                if p == 5 {
                    v.push((13, r(1, 5)));
                }
                v
            } else {
                vec![
                    (2, b2 / int(96)),
                    (6, r(h1 * (1 - s2), 16)),
                    (11, r(h2, 8)),
                    (9, r(h3, 12)),
                ]
            }
        }
    })
}

pub fn dim_m_total(p: u64, f1: i64, f2: i64) -> Result<i64> {
    CompactFormula::new(p)?.total(f1, f2)
}

pub fn trace_r(p: u64, f1: i64, f2: i64) -> Result<i64> {
    CompactFormula::new(p)?.trace(f1, f2)
}

pub fn dim_m_signed(p: u64, f1: i64, f2: i64) -> Result<CompactDims> {
    CompactFormula::new(p)?.signed(f1, f2)
}

/// Class number `H` and type number `T` of the genus, from weight zero.
pub fn class_and_type(p: u64) -> Result<(i64, i64)> {
    class_and_type_with(&CompactFormula::new(p)?)
}

pub fn class_and_type_with(formula: &CompactFormula) -> Result<(i64, i64)> {
    let h = formula.total(0, 0)?;
    let tr = formula.trace(0, 0)?;
    if (h + tr) % 2 != 0 {
        return Err(Error::NonIntegral(format!("({h} + {tr})/2")));
    }
    let t = (h + tr) / 2;
    assert!(
        t <= h && h <= 2 * t,
        "T <= H <= 2T fails at p = {}: H = {h}, T = {t}",
        formula.p
    );
    Ok((h, t))
}
