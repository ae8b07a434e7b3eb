//! Small integer number theory used throughout.

use crate::error::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

pub fn mobius(n: u64) -> i64 {
    let mut m = n;
    let mut sign = 1i64;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            m /= d;
            if m % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `n` over F_q.
pub fn necklace(q: u64, n: u32) -> u64 {
    let mut total: i128 = 0;
    for d in divisors(n as u64) {
        total += mobius(n as u64 / d) as i128 * (q as i128).pow(d as u32);
    }
    (total / n as i128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Least `m ≥ 1` with `q^m ≡ 1 (mod d)`.
pub fn mult_order(q: u64, d: u64) -> Result<u32> {
    if d == 0 || gcd(q, d) != 1 {
        return Err(Error::NotCoprime { a: q, b: d });
    }
    if d == 1 {
        return Ok(1);
    }
    let mut x = q % d;
    let mut m = 1;
    while x != 1 {
        x = (x as u128 * q as u128 % d as u128) as u64;
        m += 1;
    }
    Ok(m)
}

/// `p^k` when it does not overflow.
pub fn checked_pow(p: u64, k: u32) -> Option<u64> {
    let mut r: u64 = 1;
    for _ in 0..k {
        r = r.checked_mul(p)?;
    }
    Some(r)
}

/// Integer square root, rounded down.
pub fn isqrt(n: u64) -> u64 {
    let mut x = (n as f64).sqrt() as u64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(mult_order(3, 4).unwrap(), 2);
        assert_eq!(mult_order(2, 3).unwrap(), 2);
        assert_eq!(mult_order(7, 1).unwrap(), 1);
        assert_eq!(mult_order(2, 5).unwrap(), 4);
        assert!(mult_order(3, 6).is_err());
    }

    #[test]
    fn necklaces() {
        assert_eq!(necklace(2, 3), 2);
        assert_eq!(necklace(9, 2), 36);
        assert_eq!(necklace(5, 1), 5);
        assert_eq!(necklace(2, 4), 3);
    }

    #[test]
    fn mobius_small() {
        let mu: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(mu, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
