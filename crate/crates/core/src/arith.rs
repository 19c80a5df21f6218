//! Elementary number theory: primality, quadratic symbols, class numbers of
//! imaginary quadratic fields and the Bernoulli number `B_{2,chi}` of a real
//! quadratic character.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::Rational;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `<= n` in increasing order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The squarefree integer `s` with `d = s * r^2`; the sign of `d` is kept.
pub fn squarefree_part(d: i64) -> i64 {
    assert!(d != 0, "squarefree part of zero");
    let mut n = d.unsigned_abs();
    let mut s = 1u64;
    let mut q = 2u64;
    while q * q <= n {
        let mut e = 0;
        while n.is_multiple_of(q) {
            n /= q;
            e += 1;
        }
        if e % 2 == 1 {
            s *= q;
        }
        q += 1;
    }
    s *= n;
    d.signum() * s as i64
}

/// Discriminant of `Q(sqrt d)`.
pub fn fundamental_discriminant(d: i64) -> Result<i64> {
    if d == 0 {
        return Err(Error::DSquare(0));
    }
    let s = squarefree_part(d);
    if s == 1 {
        return Err(Error::DSquare(d));
    }
    Ok(if s.rem_euclid(4) == 1 { s } else { 4 * s })
}

/// Kronecker symbol `(a/n)`.
pub fn kronecker(a: i64, n: i64) -> i64 {
    if n == 0 {
        return i64::from(a.abs() == 1);
    }
    let mut result = 1;
    let mut n = n;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    let v = n.trailing_zeros();
    n >>= v;
    if v > 0 {
        if a % 2 == 0 {
            return 0;
        }
        if v % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            result = -result;
        }
    }
    let mut a = a.rem_euclid(n);
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Behaviour of a prime in a quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SplitSymbol {
    Split,
    Inert,
    Ramified,
}

impl SplitSymbol {
    pub fn value(self) -> i64 {
        match self {
            SplitSymbol::Split => 1,
            SplitSymbol::Inert => -1,
            SplitSymbol::Ramified => 0,
        }
    }

    fn from_value(v: i64) -> Self {
        match v {
            1 => SplitSymbol::Split,
            -1 => SplitSymbol::Inert,
            _ => SplitSymbol::Ramified,
        }
    }
}

/// How the prime `p` behaves in `Q(sqrt d)`: the Kronecker symbol `(D/p)` of
/// the field discriminant `D`. So `(-1/2) = 0` and `(-3/2) = -1`.
pub fn split_symbol(d: i64, p: u64) -> Result<SplitSymbol> {
    require_prime(p)?;
    let disc = fundamental_discriminant(d)?;
    Ok(SplitSymbol::from_value(kronecker(disc, p as i64)))
}

/// Integer-valued shorthand for [`split_symbol`] used by the dimension formulas.
pub(crate) fn legendre(d: i64, p: u64) -> i64 {
    split_symbol(d, p)
        .map(SplitSymbol::value)
        .expect("valid quadratic symbol")
}

/// Class number of `Q(sqrt(-d))` for squarefree `d >= 1`, by counting reduced
/// primitive forms of the field discriminant.
pub fn class_number(d: u64) -> Result<u64> {
    if !is_squarefree(d) {
        return Err(Error::NotSquarefree(d));
    }
    let d = d as i64;
    let disc = if (-d).rem_euclid(4) == 1 { -d } else { -4 * d };
    Ok(count_reduced_forms(disc))
}

/// Number of reduced primitive positive definite forms of discriminant `disc < 0`.
pub fn count_reduced_forms(disc: i64) -> u64 {
    assert!(
        disc < 0 && disc.rem_euclid(4) <= 1,
        "not a negative discriminant: {disc}"
    );
    let n = -disc;
    let mut count = 0;
    let mut a = 1i64;
    while 3 * a * a <= n {
        let mut b = -a;
        if (b - disc).rem_euclid(2) != 0 {
            b += 1;
        }
        while b <= a {
            let num = b * b - disc;
            if num % (4 * a) == 0 {
                let c = num / (4 * a);
                let boundary = b.abs() == a || a == c;
                if c >= a && !(boundary && b < 0) && a.gcd(&b).gcd(&c) == 1 {
                    count += 1;
                }
            }
            b += 2;
        }
        a += 1;
    }
    count
}

/// `B_{2,chi}` for the character of `Q(sqrt p)`, `p >= 5` prime:
/// `(1/f) sum chi(a) a^2 - sum chi(a) a` over `1 <= a <= f`, `f` the conductor.
pub fn bernoulli_b2_chi(p: u64) -> Result<Rational> {
    require_prime(p)?;
    if p < 5 {
        return Err(Error::UnsupportedPrime(p));
    }
    let disc = fundamental_discriminant(p as i64)?;
    let f = disc;
    let mut squares: i128 = 0;
    let mut linear: i128 = 0;
    for a in 1..=f {
        let chi = i128::from(kronecker(disc, a));
        squares += chi * i128::from(a) * i128::from(a);
        linear += chi * i128::from(a);
    }
    Ok(Rational::new(BigInt::from(squares), BigInt::from(f)) - Rational::from_integer(BigInt::from(linear)))
}

/// `a_p` in the Atkin-Lehner splitting of weight-`k` newforms on `Gamma_0(p)`.
pub fn a_p(p: u64) -> Result<i64> {
    require_prime(p)?;
    match p % 8 {
        _ if p == 2 => Err(Error::UnsupportedPrime(p)),
        1 | 5 => Ok(1),
        7 => Ok(2),
        _ => Ok(4),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;

    #[test]
    fn split_symbols() {
        let v = |d, p| split_symbol(d, p).unwrap().value();
        assert_eq!(v(-1, 2), 0);
        assert_eq!(v(3, 2), 0);
        assert_eq!(v(-3, 3), 0);
        assert_eq!(v(5, 5), 0);
        assert_eq!(v(2, 2), 0);
        assert_eq!(v(-3, 2), -1);
        assert_eq!(v(-1, 5), 1);
        assert_eq!(v(-1, 7), -1);
        assert_eq!(split_symbol(4, 5), Err(Error::DSquare(4)));
        assert_eq!(split_symbol(2, 9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn class_numbers() {
        assert_eq!(class_number(5).unwrap(), 2);
        assert_eq!(class_number(10).unwrap(), 2);
        assert_eq!(class_number(15).unwrap(), 2);
        assert_eq!(class_number(2).unwrap(), 1);
        assert_eq!(class_number(23).unwrap(), 3);
        assert_eq!(class_number(163).unwrap(), 1);
        assert_eq!(class_number(12), Err(Error::NotSquarefree(12)));
    }

    #[test]
    fn b2_chi_small() {
        assert_eq!(bernoulli_b2_chi(5).unwrap(), rat(4, 5));
        assert_eq!(bernoulli_b2_chi(3), Err(Error::UnsupportedPrime(3)));
    }

    #[test]
    fn a_p_values() {
        assert_eq!(a_p(5).unwrap(), 1);
        assert_eq!(a_p(7).unwrap(), 2);
        assert_eq!(a_p(11).unwrap(), 4);
        assert_eq!(a_p(2), Err(Error::UnsupportedPrime(2)));
    }

    #[test]
    fn kronecker_small() {
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(-3, 2), -1);
        assert_eq!(kronecker(8, 5), -1);
        assert_eq!(kronecker(12, 7), -1);
        assert_eq!(kronecker(12, 11), 1);
        assert_eq!(kronecker(12, 4), 0);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_up_to(500);
        let trial: Vec<u64> = (0..=500).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert!(primes_up_to(1).is_empty());
    }
}
