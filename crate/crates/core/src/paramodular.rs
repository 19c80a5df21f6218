//! Paramodular cusp forms of prime level split by the Atkin-Lehner sign,
//! the graded rings they form, and bounded searches over `(p, k)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::arith::{primes_up_to, require_prime};
use crate::compact::{class_and_type_with, CompactFormula};
use crate::elliptic::{dim_cusp_level1, dim_modular_level1, dim_new_gamma0_signed, ALSign};
use crate::error::{Error, Result};
use crate::exactmath::{delta, fit_numerator, sign_pow, RationalGF};
use crate::siegel1::Level1Tables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParamodularDims {
    pub p: u64,
    pub k: i64,
    pub j: i64,
    pub plus: i64,
    pub minus: i64,
    pub total: i64,
}

impl ParamodularDims {
    fn new(p: u64, k: i64, j: i64, plus: i64, minus: i64) -> Result<Self> {
        if plus < 0 || minus < 0 {
            return Err(Error::NegativeDim(plus.min(minus), p, k, j));
        }
        Ok(ParamodularDims {
            p,
            k,
            j,
            plus,
            minus,
            total: plus + minus,
        })
    }
}

/// Everything needed to evaluate dimensions at one prime level.
#[derive(Clone, Debug)]
pub struct ParamodularFormula {
    compact: CompactFormula,
    level1: Level1Tables,
}

impl ParamodularFormula {
    pub fn new(p: u64) -> Result<Self> {
        Self::with_tables(p, Level1Tables::new())
    }

    pub fn with_tables(p: u64, level1: Level1Tables) -> Result<Self> {
        Ok(ParamodularFormula {
            compact: CompactFormula::new(p)?,
            level1,
        })
    }

    pub fn p(&self) -> u64 {
        self.compact.p()
    }

    pub fn compact(&self) -> &CompactFormula {
        &self.compact
    }

    /// `dim S_{k,j}^{+/-}(K(p))` for `k >= 3`; zero for odd `j`.
    pub fn signed(&self, k: i64, j: i64) -> Result<ParamodularDims> {
        let p = self.p();
        if k < 3 || j < 0 {
            return Err(Error::BadWeight(k, j));
        }
        if j % 2 != 0 {
            return ParamodularDims::new(p, k, j, 0, 0);
        }
        let level1 = self.level1.dim_cusp_sp4(k, j)?;
        let m = self.compact.signed(k + j - 3, k - 3)?;
        let lift = dim_cusp_level1(2 * k + j - 2);
        let s_plus = dim_new_gamma0_signed(p, j + 2, ALSign::Plus)?;
        let s_minus = dim_new_gamma0_signed(p, j + 2, ALSign::Minus)?;
        let j0 = delta(j, 0);
        let plus = level1 + m.minus - s_plus * lift;
        let minus = level1 - j0 * dim_cusp_level1(2 * k - 2) - j0 * delta(k, 3) + m.plus - s_minus * lift;
        ParamodularDims::new(p, k, j, plus, minus)
    }

    /// `(dim A_k^+, dim A_k^-)` of the full spaces of paramodular forms, `j = 0`.
    pub fn a_signed(&self, k: i64) -> Result<(i64, i64)> {
        match k {
            _ if k < 0 => Ok((0, 0)),
            0 => Ok((1, 0)),
            1 => Ok((0, 0)),
            2 => Ok((jacobi_j2(self.p())?, 0)),
            _ => {
                let s = self.signed(k, 0)?;
                Ok((s.plus + dim_modular_level1(k), s.minus + dim_cusp_level1(k)))
            }
        }
    }

    /// `f(p, k) = (-1)^k (dim S_k^+ - dim S_k^-)`.
    pub fn bias(&self, k: i64) -> Result<i64> {
        let s = self.signed(k, 0)?;
        Ok(sign_pow(k) * (s.plus - s.minus))
    }

    pub fn weight3(&self) -> Result<(i64, i64)> {
        let (h, t) = class_and_type_with(&self.compact)?;
        Ok((h - t, t - 1))
    }

    /// Dimension of the `n`-th graded piece of `space`.
    ///
    /// Cusp-form spaces are indexed by the weight `k` with `j` fixed; weights
    /// below 3 contribute only through `dim J_{2,p}` at `k = 2, j = 0` for the
    /// plus space. Algebraic modular forms are indexed by `f` with highest
    /// weight `(f + j, f)`.
    pub fn graded_dim(&self, space: Space, j: i64, n: i64) -> Result<i64> {
        use Space::*;
        match space {
            SPlus | SMinus | S => {
                let (plus, minus) = if n >= 3 {
                    let d = self.signed(n, j)?;
                    (d.plus, d.minus)
                } else if n == 2 && j == 0 {
                    (jacobi_j2(self.p())?, 0)
                } else {
                    (0, 0)
                };
                Ok(match space {
                    SPlus => plus,
                    SMinus => minus,
                    _ => plus + minus,
                })
            }
            APlus | AMinus | A => {
                if j != 0 {
                    return Err(Error::UnsupportedJ(j));
                }
                let (plus, minus) = self.a_signed(n)?;
                Ok(match space {
                    APlus => plus,
                    AMinus => minus,
                    _ => plus + minus,
                })
            }
            MPlus | MMinus | M | Trace => {
                let d = self.compact.signed(n + j, n)?;
                Ok(match space {
                    MPlus => d.plus,
                    MMinus => d.minus,
                    M => d.total,
                    _ => d.trace,
                })
            }
        }
    }

    pub fn graded_dims(&self, space: Space, j: i64, len: usize) -> Result<Vec<i64>> {
        (0..len as i64).map(|n| self.graded_dim(space, j, n)).collect()
    }
}

/// Graded spaces whose generating functions are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Space {
    SPlus,
    SMinus,
    S,
    APlus,
    AMinus,
    A,
    MPlus,
    MMinus,
    M,
    Trace,
}

impl Space {
    pub const ALL: [Space; 10] = [
        Space::SPlus,
        Space::SMinus,
        Space::S,
        Space::APlus,
        Space::AMinus,
        Space::A,
        Space::MPlus,
        Space::MMinus,
        Space::M,
        Space::Trace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Space::SPlus => "S+",
            Space::SMinus => "S-",
            Space::S => "S",
            Space::APlus => "A+",
            Space::AMinus => "A-",
            Space::A => "A",
            Space::MPlus => "M+",
            Space::MMinus => "M-",
            Space::M => "M",
            Space::Trace => "Tr",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown space `{s}`")))
    }
}

/// Denominator used when neither the caller nor the registry supplies one.
pub const DEFAULT_DENOMINATOR: [u32; 4] = [4, 6, 10, 12];

/// Fallback denominator at level `p`: levels 2 and 3 carry characters of
/// period 8 and need their own factors.
pub fn fallback_denominator(p: u64) -> Vec<u32> {
    match p {
        2 => vec![4, 6, 8, 12],
        3 => vec![4, 6, 6, 12],
        _ => DEFAULT_DENOMINATOR.to_vec(),
    }
}

/// Denominator exponents of the tabulated generating function for
/// `(p, space, j)`, if there is one.
pub fn registry_denominator(p: u64, space: Space, j: i64) -> Option<Vec<u32>> {
    use Space::*;
    let d: &[u32] = match (j, space, p) {
        (0, M | MPlus | MMinus, 2) => &[4, 6, 8, 10],
        (0, M, 3) => &[3, 4, 6, 10],
        (0, MPlus | MMinus, 3) => &[4, 6, 6, 10],
        (0, M, 5) => &[2, 3, 4, 5],
        (0, MPlus | MMinus | Trace, 5) => &[2, 4, 6, 10],
        (0, MPlus | MMinus, 7) => &[2, 4, 6, 10],
        (0, SPlus | SMinus, 2) => &[4, 6, 8, 12],
        (0, SPlus | SMinus, 3) => &[4, 6, 6, 12],
        (0, SPlus | SMinus | APlus | AMinus, 5) => &[4, 6, 10, 12],
        (0, A, 5) => &[4, 5, 6, 12],
        (0, SPlus | SMinus | APlus | AMinus | A, 7) => &[4, 4, 6, 12],
        (0, APlus, 11 | 19 | 29 | 31 | 41) => &[4, 6, 10, 12],
        (0, A, 11) => &[4, 5, 6, 12],
        (0, APlus | A, 13) => &[4, 4, 6, 12],
        (0, APlus, 17 | 23 | 47) => &[4, 4, 6, 12],
        (0, APlus, 59 | 71) => &[4, 5, 6, 12],
        (2, MPlus, 2) => &[4, 5, 6, 8],
        (2, MMinus, 2) => &[2, 4, 5, 8],
        (2, MPlus, 3) => &[2, 4, 5, 6],
        (2, MMinus, 3) => &[2, 2, 5, 6],
        (2 | 4, SPlus | SMinus, 2) => &[2, 6, 8, 12],
        (2 | 4, SPlus | SMinus, 3) => &[2, 4, 6, 12],
        (4, MPlus | MMinus, 2) => &[2, 4, 6, 8],
        (4, MPlus | MMinus, 3) => &[2, 3, 4, 6],
        _ => return None,
    };
    Some(d.to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub p: u64,
    pub space: Space,
    pub j: i64,
    #[serde(skip)]
    pub gf: RationalGF,
}

/// Fits the generating function of `space` at level `p` from the first
/// `len` graded dimensions. Without an explicit denominator the tabulated
/// one is used, falling back to [`fallback_denominator`].
pub fn hilbert_series(p: u64, space: Space, j: i64, len: usize, denom: Option<&[u32]>) -> Result<HilbertSeries> {
    let formula = ParamodularFormula::new(p)?;
    hilbert_series_with(&formula, space, j, len, denom)
}

pub fn hilbert_series_with(
    formula: &ParamodularFormula,
    space: Space,
    j: i64,
    len: usize,
    denom: Option<&[u32]>,
) -> Result<HilbertSeries> {
    let p = formula.p();
    let denom = match denom {
        Some(d) => d.to_vec(),
        None => registry_denominator(p, space, j).unwrap_or_else(|| fallback_denominator(p)),
    };
    let total: usize = denom.iter().map(|&a| a as usize).sum();
    if len <= total {
        return Err(Error::Data(format!(
            "need more than {total} terms to fit over {denom:?}"
        )));
    }
    let seq = formula.graded_dims(space, j, len)?;
    let numerator = fit_numerator(&seq, &denom, len - total - 1)?;
    Ok(HilbertSeries {
        p,
        space,
        j,
        gf: RationalGF::new(numerator, denom),
    })
}

/// `dim J_{2,p}` of Jacobi forms of weight 2 and index `p`, tabulated for `p <= 97`.
pub fn jacobi_j2(p: u64) -> Result<i64> {
    static TABLE: OnceLock<BTreeMap<u64, i64>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        include_str!("../data/jacobi_j2.csv")
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let (a, b) = l.split_once(',').expect("p,dim");
                (a.trim().parse().expect("prime"), b.trim().parse().expect("dimension"))
            })
            .collect()
    });
    require_prime(p)?;
    table.get(&p).copied().ok_or(Error::MissingJacobiData(p))
}

pub fn dim_paramodular_signed(p: u64, k: i64, j: i64) -> Result<ParamodularDims> {
    ParamodularFormula::new(p)?.signed(k, j)
}

pub fn dim_paramodular_signed_with(p: u64, k: i64, j: i64, level1: &Level1Tables) -> Result<ParamodularDims> {
    ParamodularFormula::with_tables(p, level1.clone())?.signed(k, j)
}

/// `(dim S_3^+(K(p)), dim S_3^-(K(p))) = (H - T, T - 1)`.
pub fn dim_weight3(p: u64) -> Result<(i64, i64)> {
    ParamodularFormula::new(p)?.weight3()
}

pub fn dim_a_signed(p: u64, k: i64) -> Result<(i64, i64)> {
    ParamodularFormula::new(p)?.a_signed(k)
}

pub fn bias(p: u64, k: i64) -> Result<i64> {
    ParamodularFormula::new(p)?.bias(k)
}

/// Primes `p <= pmax` with `dim S_3^+(K(p)) = 0`.
pub fn search_weight3_zero(pmax: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for p in primes_up_to(pmax) {
        if ParamodularFormula::new(p)?.weight3()?.0 == 0 {
            out.push(p);
        }
    }
    Ok(out)
}

/// Checks `f(p, k) >= 0` for primes `p <= pmax` and `3 <= k <= kmax`, and
/// returns the pairs where it vanishes, ordered by `p` then `k`.
pub fn check_bias_region(pmax: u64, kmax: i64) -> Result<Vec<(u64, i64)>> {
    let mut zeros = Vec::new();
    for p in primes_up_to(pmax) {
        let formula = ParamodularFormula::new(p)?;
        for k in 3..=kmax {
            let b = formula.bias(k)?;
            if b < 0 {
                return Err(Error::BiasViolation(p, k, b));
            }
            if b == 0 {
                zeros.push((p, k));
            }
        }
    }
    Ok(zeros)
}
