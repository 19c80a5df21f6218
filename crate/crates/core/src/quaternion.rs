//! Quaternion hermitian matrices over the definite quaternion algebras
//! ramified at `{2, oo}` and `{3, oo}`, used to enumerate the elements that
//! contribute to the Atkin-Lehner trace at levels 2 and 3 and to recover the
//! trace from their principal polynomials.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{check_young, PrincipalPoly};
use crate::error::{Error, Result};
use crate::exactmath::{int, rat, to_i64, QuadExt, Rational};

/// Quaternion `w + x i + y j + z ij` with `i^2 = alpha`, `j^2 = beta`, `ji = -ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quat {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
    alpha: i64,
    beta: i64,
}

impl Quat {
    pub fn new(alpha: i64, beta: i64, w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quat {
            w,
            x,
            y,
            z,
            alpha,
            beta,
        }
    }

    /// Coordinates given as `numerator / den`.
    pub fn from_ratio(alpha: i64, beta: i64, c: [i64; 4], den: i64) -> Self {
        Self::new(
            alpha,
            beta,
            rat(c[0], den),
            rat(c[1], den),
            rat(c[2], den),
            rat(c[3], den),
        )
    }

    pub fn scalar(alpha: i64, beta: i64, s: Rational) -> Self {
        let z = Rational::zero();
        Self::new(alpha, beta, s, z.clone(), z.clone(), z)
    }

    pub fn zero_like(&self) -> Self {
        Self::scalar(self.alpha, self.beta, Rational::zero())
    }

    pub fn one_like(&self) -> Self {
        Self::scalar(self.alpha, self.beta, Rational::one())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.alpha, self.beta, self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm(&self) -> Rational {
        let a = int(self.alpha);
        let b = int(self.beta);
        &self.w * &self.w - &a * &self.x * &self.x - &b * &self.y * &self.y + a * b * &self.z * &self.z
    }

    pub fn trace(&self) -> Rational {
        int(2) * &self.w
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let inv = Rational::one() / n;
        let c = self.conj();
        Some(Self::new(
            self.alpha,
            self.beta,
            &c.w * &inv,
            &c.x * &inv,
            &c.y * &inv,
            &c.z * &inv,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl Add<&Quat> for &Quat {
    type Output = Quat;
    fn add(self, r: &Quat) -> Quat {
        Quat::new(
            self.alpha,
            self.beta,
            &self.w + &r.w,
            &self.x + &r.x,
            &self.y + &r.y,
            &self.z + &r.z,
        )
    }
}

impl Sub<&Quat> for &Quat {
    type Output = Quat;
    fn sub(self, r: &Quat) -> Quat {
        Quat::new(
            self.alpha,
            self.beta,
            &self.w - &r.w,
            &self.x - &r.x,
            &self.y - &r.y,
            &self.z - &r.z,
        )
    }
}

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(self.alpha, self.beta, -&self.w, -&self.x, -&self.y, -&self.z)
    }
}

impl Mul<&Quat> for &Quat {
    type Output = Quat;
    fn mul(self, r: &Quat) -> Quat {
        assert_eq!(
            (self.alpha, self.beta),
            (r.alpha, r.beta),
            "quaternions from different algebras"
        );
        let a = int(self.alpha);
        let b = int(self.beta);
        let (w1, x1, y1, z1) = (&self.w, &self.x, &self.y, &self.z);
        let (w2, x2, y2, z2) = (&r.w, &r.x, &r.y, &r.z);
        let w = w1 * w2 + &a * x1 * x2 + &b * y1 * y2 - &a * &b * z1 * z2;
        let x = w1 * x2 + x1 * w2 - &b * y1 * z2 + &b * z1 * y2;
        let y = w1 * y2 + y1 * w2 + &a * x1 * z2 - &a * z1 * x2;
        let z = w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2;
        Quat::new(self.alpha, self.beta, w, x, y, z)
    }
}

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// `[[a, b], [c, d]]` over a quaternion algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatMat2 {
    pub a: Quat,
    pub b: Quat,
    pub c: Quat,
    pub d: Quat,
}

impl QuatMat2 {
    pub fn new(a: Quat, b: Quat, c: Quat, d: Quat) -> Self {
        QuatMat2 { a, b, c, d }
    }

    pub fn scalar(q: &Quat) -> Self {
        let z = q.zero_like();
        Self::new(q.clone(), z.clone(), z, q.clone())
    }

    /// Conjugate transpose.
    pub fn star(&self) -> Self {
        Self::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Left multiplication of every entry by `q`.
    pub fn left_scale(&self, q: &Quat) -> Self {
        Self::new(q * &self.a, q * &self.b, q * &self.c, q * &self.d)
    }

    /// `n` with `g g^* = n 1_2`, if `g` is a similitude with `n > 0`.
    pub fn similitude_factor(&self) -> Option<Rational> {
        let prod = self * &self.star();
        let n = prod.a.w.clone();
        let scalar = prod.a == Quat::scalar(self.a.alpha, self.a.beta, n.clone())
            && prod.d == prod.a
            && prod.b.is_zero()
            && prod.c.is_zero();
        (scalar && n > Rational::zero()).then_some(n)
    }

    /// Sum of the reduced traces of the diagonal entries.
    pub fn trace(&self) -> Rational {
        self.a.trace() + self.d.trace()
    }
}

impl Mul<&QuatMat2> for &QuatMat2 {
    type Output = QuatMat2;
    fn mul(self, r: &QuatMat2) -> QuatMat2 {
        QuatMat2::new(
            &(&self.a * &r.a) + &(&self.b * &r.c),
            &(&self.a * &r.b) + &(&self.b * &r.d),
            &(&self.c * &r.a) + &(&self.d * &r.c),
            &(&self.c * &r.b) + &(&self.d * &r.d),
        )
    }
}

/// Monic quartic with integer coefficients, stored from `x^0` to `x^4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntPrincipalPoly {
    pub coeffs: [i64; 5],
}

impl IntPrincipalPoly {
    /// `x^4 + p a x^3 + p b x^2 + p^2 a x + p^2`.
    pub fn from_ab(p: i64, a: i64, b: i64) -> Self {
        IntPrincipalPoly {
            coeffs: [p * p, p * p * a, p * b, p * a, 1],
        }
    }

    /// `(a, b)` when the polynomial has the reciprocal shape at level `p`.
    pub fn ab(&self, p: i64) -> Option<(i64, i64)> {
        let c = self.coeffs;
        if c[4] != 1 || c[0] != p * p || c[3] % p != 0 || c[2] % p != 0 {
            return None;
        }
        let a = c[3] / p;
        (c[1] == p * p * a).then_some((a, c[2] / p))
    }

    /// `p^{-2} Phi(sqrt(p) x)` as a quartic over `Q(sqrt p)`.
    pub fn normalized(&self, p: i64) -> Option<PrincipalPoly> {
        let (a, b) = self.ab(p)?;
        let m = p as u64;
        Some(PrincipalPoly::reciprocal(
            0,
            QuadExt::from_ints(0, a, m),
            QuadExt::from_ints(b, 0, m),
        ))
    }

    /// Checks `x^4 Phi(n/x) = n^2 Phi(x)`.
    pub fn is_reciprocal(&self, n: i64) -> bool {
        let c = self.coeffs;
        (0..5).all(|i| c[i] * n.pow(i as u32) == c[4 - i] * n * n)
    }
}

impl fmt::Display for IntPrincipalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^4")?;
        for e in (0..4).rev() {
            let c = self.coeffs[e];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { '-' } else { '+' };
            let mag = c.abs();
            match e {
                0 => write!(f, " {sign} {mag}")?,
                _ => {
                    let var = if e == 1 { "x".to_string() } else { format!("x^{e}") };
                    if mag == 1 {
                        write!(f, " {sign} {var}")?
                    } else {
                        write!(f, " {sign} {mag}{var}")?
                    }
                }
            }
        }
        Ok(())
    }
}

fn small_int(r: &Rational) -> Result<i64> {
    to_i64(r)
}

/// Principal polynomial from `Tr(g)` and `Tr(g^2)`:
/// `x^4 - T x^3 + (T^2 - Tr(g^2))/2 x^2 - T n x + n^2`.
pub fn principal_poly_of(g: &QuatMat2) -> Result<IntPrincipalPoly> {
    let n = g.similitude_factor().ok_or(Error::NotSimilitude)?;
    let t = g.trace();
    let t2 = (g * g).trace();
    let e2 = (&t * &t - t2) / int(2);
    Ok(IntPrincipalPoly {
        coeffs: [
            small_int(&(&n * &n))?,
            small_int(&(-&t * &n))?,
            small_int(&e2)?,
            small_int(&-t)?,
            1,
        ],
    })
}

/// Principal polynomial from the blocks:
/// `x^4 - (Tr a + Tr d) x^3 + (Tr a Tr d - N(b + conj c) + 2n) x^2 - (Tr a + Tr d) n x + n^2`.
pub fn principal_poly_from_blocks(g: &QuatMat2) -> Result<IntPrincipalPoly> {
    let n = g.similitude_factor().ok_or(Error::NotSimilitude)?;
    let ta = g.a.trace();
    let td = g.d.trace();
    let s = &ta + &td;
    let mid = &ta * &td - (&g.b + &g.c.conj()).norm() + int(2) * &n;
    Ok(IntPrincipalPoly {
        coeffs: [
            small_int(&(&n * &n))?,
            small_int(&(-&s * &n))?,
            small_int(&mid)?,
            small_int(&-s)?,
            1,
        ],
    })
}

/// Elements of one printed family with the tally of their principal polynomials.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyTally {
    pub name: String,
    pub size: usize,
    pub tally: BTreeMap<IntPrincipalPoly, usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    pub p: u64,
    pub families: Vec<FamilyTally>,
}

impl Enumeration {
    pub fn order(&self) -> usize {
        self.families.iter().map(|f| f.size).sum()
    }

    pub fn total_tally(&self) -> BTreeMap<IntPrincipalPoly, usize> {
        let mut out = BTreeMap::new();
        for fam in &self.families {
            for (poly, count) in &fam.tally {
                *out.entry(*poly).or_insert(0) += count;
            }
        }
        out
    }

    pub fn family(&self, name: &str) -> Option<&FamilyTally> {
        self.families.iter().find(|f| f.name == name)
    }
}

fn tally_family(name: &str, expected: usize, elements: Vec<QuatMat2>, n: i64) -> Result<FamilyTally> {
    let distinct: HashSet<&QuatMat2> = elements.iter().collect();
    if distinct.len() != expected || elements.len() != expected {
        return Err(Error::FamilySizeMismatch {
            family: name.into(),
            found: distinct.len(),
            expected,
        });
    }
    let mut tally = BTreeMap::new();
    for g in &elements {
        if g.similitude_factor() != Some(int(n)) {
            return Err(Error::NotSimilitude);
        }
        *tally.entry(principal_poly_of(g)?).or_insert(0) += 1;
    }
    Ok(FamilyTally {
        name: name.into(),
        size: expected,
        tally,
    })
}

struct RawFamily {
    name: &'static str,
    expected: usize,
    elements: Vec<QuatMat2>,
}

fn hurwitz(c: [i64; 4], den: i64) -> Quat {
    Quat::from_ratio(-1, -1, c, den)
}

/// Units of the Hurwitz order.
pub fn hurwitz_units() -> Vec<Quat> {
    let mut out = Vec::new();
    for pos in 0..4 {
        for s in [1, -1] {
            let mut c = [0; 4];
            c[pos] = s;
            out.push(hurwitz(c, 1));
        }
    }
    for bits in 0..16 {
        let c = [0, 1, 2, 3].map(|i| if bits >> i & 1 == 1 { -1 } else { 1 });
        out.push(hurwitz(c, 2));
    }
    out
}

/// The algebra for level 3: `alpha^2 = -3`, `beta^2 = -1`.
fn q3(c: [i64; 4], den: i64) -> Quat {
    Quat::from_ratio(-3, -1, c, den)
}

/// Element `A + B (1+alpha)/2 + C beta + D (1+alpha) beta / 2` of the level-3 order.
pub fn order3_element(a: i64, b: i64, c: i64, d: i64) -> Quat {
    q3([2 * a + b, b, 2 * c + d, d], 2)
}

/// Whether `q` lies in the level-3 maximal order.
pub fn in_order3(q: &Quat) -> bool {
    let two = int(2);
    let b = &two * &q.x;
    let d = &two * &q.z;
    [b, d, &q.w - &q.x, &q.y - &q.z].iter().all(|v| v.is_integer())
}

pub fn order3_with_norm(n: i64) -> Vec<Quat> {
    let mut out = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                for d in -2..=2 {
                    let q = order3_element(a, b, c, d);
                    if q.norm() == int(n) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

pub fn order3_units() -> Vec<Quat> {
    order3_with_norm(1)
}

/// `x = y mod alpha O` in the level-3 order.
fn congruent_mod_alpha(x: &Quat, y: &Quat) -> bool {
    let alpha_inv = q3([0, -1, 0, 0], 3);
    in_order3(&(&alpha_inv * &(x - y)))
}

fn families_p2() -> Result<Vec<RawFamily>> {
    let units = hurwitz_units();
    let r = hurwitz([0, 1, 0, -1], 1);
    let r_inv = r.inverse().expect("nonzero");
    let a0s: Vec<Quat> = units
        .iter()
        .filter(|u| u.w.is_integer() && u.x.is_integer())
        .cloned()
        .collect();
    debug_assert_eq!(a0s.len(), 8);
    let xs: Vec<Quat> = {
        let mut v = vec![hurwitz([0, -1, 0, 0], 1), hurwitz([0, 0, 0, 1], 1)];
        for s in [1, -1] {
            for t in [1, -1] {
                v.push(hurwitz([s, -1, t, 1], 2));
            }
        }
        v
    };
    let one = r.one_like();
    let zero = r.zero_like();
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    let mut f3 = Vec::new();
    let mut f4 = Vec::new();
    let mut f5 = Vec::new();
    for a in &units {
        let ra = &r_inv * a;
        for a0 in &a0s {
            let ra_a0 = &ra * a0;
            let a_a0 = a * a0;
            f1.push(QuatMat2::new(ra.clone(), -&ra_a0, ra.clone(), ra_a0.clone()));
            f2.push(QuatMat2::new(ra.clone(), ra_a0.clone(), -&ra, ra_a0.clone()));
            f3.push(QuatMat2::new(a.clone(), zero.clone(), zero.clone(), a_a0.clone()));
            f4.push(QuatMat2::new(zero.clone(), a_a0.clone(), a.clone(), zero.clone()));
            for x in &xs {
                let rx = &r_inv * x;
                let diag = &(&one + &rx) * a;
                let off = &rx * a;
                f5.push(QuatMat2::new(diag.clone(), &off * a0, off, &diag * a0));
            }
        }
    }
    let mut out = Vec::new();
    for (name, expected, fam) in [
        ("3", 192, f3),
        ("4", 192, f4),
        ("1", 192, f1),
        ("2", 192, f2),
        ("5", 1152, f5),
    ] {
        for g in &fam {
            if g.similitude_factor() != Some(Rational::one()) {
                return Err(Error::NotSimilitude);
            }
        }
        let pi_gamma = fam.iter().map(|g| g.left_scale(&r)).collect();
        out.push(RawFamily {
            name,
            expected,
            elements: pi_gamma,
        });
    }
    Ok(out)
}

fn families_p3() -> Result<Vec<RawFamily>> {
    let units = order3_units();
    let alpha = q3([0, 1, 0, 0], 1);
    let beta = q3([0, 0, 1, 0], 1);
    let beta_alpha = &beta * &alpha;
    let one = alpha.one_like();
    let zero = alpha.zero_like();
    let a0s = vec![one.clone(), q3([-1, 1, 0, 0], 2), q3([-1, -1, 0, 0], 2)];
    let norm2 = order3_with_norm(2);
    let one_plus_beta = &one + &beta;
    let one_minus_beta = &one - &beta;
    let mut f1 = Vec::new();
    let mut f2 = Vec::new();
    for a in &units {
        for a0 in &a0s {
            let a_a0 = a * a0;
            f1.push(QuatMat2::new(
                &beta_alpha * a,
                zero.clone(),
                zero.clone(),
                &alpha * &a_a0,
            ));
            f2.push(QuatMat2::new(
                zero.clone(),
                -&(&alpha * &a_a0),
                &alpha * a,
                zero.clone(),
            ));
        }
    }
    let mut f3 = Vec::new();
    let mut f4 = Vec::new();
    for c2 in &norm2 {
        let c2_bar = c2.conj();
        let target1_f3 = -&(&one_plus_beta * c2);
        let target1_f4 = &one_minus_beta * c2;
        let target2 = c2 * &one_plus_beta;
        let pick = |t: &Quat| -> Vec<Quat> { units.iter().filter(|u| congruent_mod_alpha(u, t)).cloned().collect() };
        let e2s = pick(&target2);
        for e1 in pick(&target1_f3) {
            for e2 in &e2s {
                let corner = -&(&(&e1 * &c2_bar) * e2);
                f3.push(QuatMat2::new(e1.clone(), corner, c2.clone(), e2.clone()));
            }
        }
        for e1 in pick(&target1_f4) {
            for e2 in &e2s {
                let corner = -&(&(&e1 * &c2_bar) * e2);
                f4.push(QuatMat2::new(c2.clone(), e2.clone(), e1.clone(), corner));
            }
        }
    }
    Ok(vec![
        RawFamily {
            name: "1",
            expected: 36,
            elements: f1,
        },
        RawFamily {
            name: "2",
            expected: 36,
            elements: f2,
        },
        RawFamily {
            name: "3",
            expected: 324,
            elements: f3,
        },
        RawFamily {
            name: "4",
            expected: 324,
            elements: f4,
        },
    ])
}

/// The elements of `pi Gamma_1` at level `p` in `{2, 3}`, grouped by family.
pub fn pi_gamma_families(p: u64) -> Result<Vec<(&'static str, Vec<QuatMat2>)>> {
    let raw = match p {
        2 => families_p2()?,
        3 => families_p3()?,
        _ => return Err(Error::UnsupportedPrime(p)),
    };
    Ok(raw.into_iter().map(|f| (f.name, f.elements)).collect())
}

/// Builds the element families at level `p` in `{2, 3}` and tallies
/// principal polynomials. Families are checked for their expected sizes.
pub fn enumerate_pi_gamma(p: u64) -> Result<Enumeration> {
    let raw = match p {
        2 => families_p2()?,
        3 => families_p3()?,
        _ => return Err(Error::UnsupportedPrime(p)),
    };
    let families = raw
        .into_iter()
        .map(|f| tally_family(f.name, f.expected, f.elements, p as i64))
        .collect::<Result<_>>()?;
    Ok(Enumeration { p, families })
}

fn cached_enumeration(p: u64) -> Result<&'static Enumeration> {
    static P2: OnceLock<Enumeration> = OnceLock::new();
    static P3: OnceLock<Enumeration> = OnceLock::new();
    let cell = match p {
        2 => &P2,
        3 => &P3,
        _ => return Err(Error::UnsupportedPrime(p)),
    };
    if let Some(e) = cell.get() {
        return Ok(e);
    }
    let e = enumerate_pi_gamma(p)?;
    Ok(cell.get_or_init(|| e))
}

/// Trace of the Atkin-Lehner operator on `M_{f1,f2}` at level 2 or 3,
/// assembled from the enumerated tally: each principal polynomial contributes
/// `count / |Gamma_1|` times the character of its normalised quartic.
pub fn verify_trace_p23(p: u64, f1: i64, f2: i64) -> Result<i64> {
    check_young(f1, f2)?;
    let e = cached_enumeration(p)?;
    let order = int(e.order() as i64);
    let mut sum = Rational::zero();
    for (poly, count) in e.total_tally() {
        let phi = poly
            .normalized(p as i64)
            .ok_or_else(|| Error::Data(format!("{poly} is not reciprocal at level {p}")))?;
        sum += int(count as i64) * int(phi.character(f1, f2)?) / &order;
    }
    to_i64(&sum)
}

/// Integer pairs `(a, b)` allowed for `Phi = x^4 + pa x^3 + pb x^2 + p^2 a x + p^2`.
pub fn feasible_ab(p: u64) -> Vec<(i64, i64)> {
    let p = p as i64;
    let mut out = Vec::new();
    let mut a = 0i64;
    while a * a * p <= 16 {
        for sa in if a == 0 { vec![0] } else { vec![-a, a] } {
            let ap = sa * sa * p;
            for b in -(ap + 4)..=(ap + 4) {
                if 4 * (b - 2) <= ap && ap - 4 <= 2 * b && 4 * ap <= (b + 2) * (b + 2) {
                    out.push((sa, b));
                }
            }
        }
        a += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_counts() {
        assert_eq!(hurwitz_units().len(), 24);
        assert_eq!(order3_units().len(), 12);
        assert_eq!(order3_with_norm(2).len(), 36);
    }

    #[test]
    fn identity_and_scalars() {
        let one = hurwitz([1, 0, 0, 0], 1);
        let id = QuatMat2::scalar(&one);
        assert_eq!(principal_poly_of(&id).unwrap().coeffs, [1, -4, 6, -4, 1]);
        assert_eq!(principal_poly_from_blocks(&id).unwrap().coeffs, [1, -4, 6, -4, 1]);
        let r = hurwitz([0, 1, 0, -1], 1);
        let g = QuatMat2::scalar(&r);
        assert_eq!(principal_poly_of(&g).unwrap(), IntPrincipalPoly::from_ab(2, 0, 2));
        let zero = r.zero_like();
        let swap = QuatMat2::new(zero.clone(), r.clone(), r.clone(), zero);
        assert_eq!(principal_poly_of(&swap).unwrap(), IntPrincipalPoly::from_ab(2, 0, 2));
    }

    #[test]
    fn rejects_non_similitude() {
        let one = hurwitz([1, 0, 0, 0], 1);
        let g = QuatMat2::new(one.clone(), one.clone(), one.zero_like(), one);
        assert_eq!(principal_poly_of(&g), Err(Error::NotSimilitude));
    }

    #[test]
    fn norm_is_multiplicative() {
        let x = q3([1, 3, -1, 1], 2);
        let y = q3([0, 1, 2, -1], 2);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn feasible_pairs() {
        assert_eq!(feasible_ab(7), vec![(0, -2), (0, -1), (0, 0), (0, 1), (0, 2)]);
        assert!(feasible_ab(5).contains(&(1, 3)) && feasible_ab(5).contains(&(-1, 3)));
        assert!(feasible_ab(2).contains(&(2, 4)) && feasible_ab(2).contains(&(-2, 4)));
    }

    #[test]
    fn display() {
        assert_eq!(
            IntPrincipalPoly::from_ab(2, -1, 2).to_string(),
            "x^4 - 2x^3 + 4x^2 - 4x + 4"
        );
    }
}
