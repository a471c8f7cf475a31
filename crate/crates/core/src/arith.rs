//! Exact integer utilities: base-p digits, Kummer carry tests, integer
//! square roots, factoring by trial division and primality.
//!
//! Nothing in here touches floating point.

use serde::Serialize;

use crate::error::{Error, Result};

/// Trial division bound used by [`factorize`] and [`divisors`].
pub const DEFAULT_FACTOR_LIMIT: u64 = 1 << 20;

/// Little-endian base-`p` digits of a nonnegative integer.
///
/// Trailing zero digits are never stored, so two vectors compare equal
/// exactly when they encode the same value in the same base.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DigitVector {
    digits: Vec<u64>,
    base: u64,
}

impl DigitVector {
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    /// Digits most significant first, the way numbers are usually written.
    pub fn most_significant_first(&self) -> Vec<u64> {
        self.digits.iter().rev().copied().collect()
    }

    pub fn value(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }

    /// Digit `i`, zero beyond the stored length.
    pub fn digit(&self, i: usize) -> u64 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

pub fn base_digits(m: u64, p: u64) -> DigitVector {
    assert!(p >= 2, "base must be at least 2");
    let mut digits = Vec::new();
    let mut rest = m;
    while rest > 0 {
        digits.push(rest % p);
        rest /= p;
    }
    DigitVector { digits, base: p }
}

/// Whether `C(a + b, b)` is nonzero modulo the prime `p`.
///
/// By Kummer's theorem the p-adic valuation of the binomial coefficient is
/// the number of carries when adding `a` and `b` in base `p`, so the
/// coefficient is a unit exactly when no digit pair overflows.
pub fn binom_nonzero_mod_p(a: u64, b: u64, p: u64) -> bool {
    let (mut a, mut b) = (a, b);
    while a > 0 && b > 0 {
        if a % p + b % p >= p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Largest `s` with `s * s <= m`.
pub fn isqrt(m: u128) -> u128 {
    if m < 2 {
        return m;
    }
    // Newton iteration from an overestimate is monotonically decreasing.
    let bits = 128 - m.leading_zeros();
    let mut x: u128 = 1 << bits.div_ceil(2);
    loop {
        let y = (x + m / x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn isqrt_u64(m: u64) -> u64 {
    isqrt(m as u128) as u64
}

pub fn is_square(m: u64) -> bool {
    let s = isqrt_u64(m);
    s * s == m
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `base^exp` or `None` on overflow.
pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs.
pub fn factorize(m: u64) -> Result<Vec<(u64, u32)>> {
    factorize_with_limit(m, DEFAULT_FACTOR_LIMIT)
}

pub fn factorize_with_limit(m: u64, limit: u64) -> Result<Vec<(u64, u32)>> {
    if m == 0 {
        return Err(Error::InvalidParameter("cannot factor 0".into()));
    }
    let mut rest = m;
    let mut out = Vec::new();
    let mut f = 2u64;
    while f.saturating_mul(f) <= rest {
        if f > limit {
            // the cofactor may still be prime; that is checkable exactly
            if is_prime(rest) {
                break;
            }
            return Err(Error::FactoringLimit { m, limit });
        }
        if rest % f == 0 {
            let mut k = 0;
            while rest % f == 0 {
                rest /= f;
                k += 1;
            }
            out.push((f, k));
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// All positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Result<Vec<u64>> {
    let factors = factorize(m)?;
    let mut divs = vec![1u64];
    for (prime, k) in factors {
        let current = divs.len();
        let mut power = 1u64;
        for _ in 0..k {
            power *= prime;
            for i in 0..current {
                divs.push(divs[i] * power);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Splits `q = p^e` for an odd prime `p`.
pub fn odd_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 3 || q % 2 == 0 {
        return Err(Error::NotPrimePower(q));
    }
    let factors = factorize(q).map_err(|_| Error::NotPrimePower(q))?;
    match factors.as_slice() {
        [(p, e)] => Ok((*p, *e)),
        _ => Err(Error::NotPrimePower(q)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// C(n, k) mod p by Lucas' theorem with small binomials computed by
    /// Pascal's triangle.
    fn lucas_binom_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
        let size = p as usize;
        let mut pascal = vec![vec![0u64; size]; size];
        for i in 0..size {
            pascal[i][0] = 1;
            for j in 1..=i {
                pascal[i][j] = (pascal[i - 1][j - 1] + pascal[i - 1][j]) % p;
            }
        }
        let mut acc = 1;
        while n > 0 || k > 0 {
            let (ni, ki) = ((n % p) as usize, (k % p) as usize);
            if ki > ni {
                return 0;
            }
            acc = acc * pascal[ni][ki] % p;
            n /= p;
            k /= p;
        }
        acc
    }

    #[test]
    fn digits_examples() {
        assert_eq!(base_digits(5208, 5).digits(), &[3, 1, 3, 1, 3, 1]);
        assert_eq!(base_digits(5208, 5).most_significant_first(), vec![1, 3, 1, 3, 1, 3]);
        assert!(base_digits(0, 3).digits().is_empty());
        assert_eq!(base_digits(26, 3).digits(), &[2, 2, 2]);
        assert_eq!(base_digits(26, 3).value(), 26);
    }

    #[test]
    fn binom_examples() {
        assert!(binom_nonzero_mod_p(3, 2, 3));
        assert!(!binom_nonzero_mod_p(2, 2, 3));
        for b in 0..50 {
            assert!(binom_nonzero_mod_p(0, b, 7));
        }
    }

    #[test]
    fn binom_agrees_with_lucas() {
        for &p in &[3u64, 5, 7, 13] {
            for a in 0..=3000u64 {
                // stride keeps the full grid affordable in debug builds
                for b in (0..=3000u64).step_by(7) {
                    let lucas = lucas_binom_mod(a + b, b, p) != 0;
                    assert_eq!(binom_nonzero_mod_p(a, b, p), lucas, "a={a} b={b} p={p}");
                }
            }
        }
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(27), 5);
        assert_eq!(isqrt(81), 9);
        assert_eq!(isqrt(15624), 124);
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(u128::MAX), (1u128 << 64) - 1);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(13).unwrap(), vec![1, 13]);
        assert_eq!(divisors(121).unwrap(), vec![1, 11, 121]);
        assert_eq!(divisors(651).unwrap(), vec![1, 3, 7, 21, 31, 93, 217, 651]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
    }

    #[test]
    fn factoring_limit_is_enforced() {
        // product of two primes just above 2^20
        let (a, b) = (1_048_583u64, 1_048_601u64);
        assert!(is_prime(a) && is_prime(b));
        assert!(matches!(factorize(a * b), Err(Error::FactoringLimit { .. })));
        // a large prime cofactor is fine
        assert_eq!(factorize(4 * a).unwrap(), vec![(2, 2), (a, 1)]);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(odd_prime_power(15625).unwrap(), (5, 6));
        assert_eq!(odd_prime_power(13).unwrap(), (13, 1));
        assert!(odd_prime_power(45).is_err());
        assert!(odd_prime_power(16).is_err());
    }

    proptest! {
        #[test]
        fn isqrt_brackets(m in 0u128..(1u128 << 80)) {
            let s = isqrt(m);
            prop_assert!(s * s <= m);
            prop_assert!((s + 1) * (s + 1) > m);
        }

        #[test]
        fn digits_reconstruct(m in any::<u64>(), p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 31])) {
            let dv = base_digits(m, p);
            prop_assert_eq!(dv.value(), m as u128);
            prop_assert!(dv.digits().iter().all(|&d| d < p));
        }
    }
}
