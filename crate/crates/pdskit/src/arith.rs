//! Small integer number theory shared across the crate.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    gcd(a.unsigned_abs(), b.unsigned_abs()) as i64
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division; inputs in this crate stay small.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

/// Largest divisor of `n` coprime to `m`.
pub fn coprime_part(n: u64, m: u64) -> u64 {
    let mut n = n;
    loop {
        let g = gcd(n, m);
        if g == 1 {
            return n;
        }
        while n % g == 0 {
            n /= g;
        }
    }
}

pub fn int_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    for c in r.saturating_sub(2)..=r + 2 {
        if c * c == n {
            return Some(c);
        }
    }
    None
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut base = (base % modulus) as u128;
    let m = modulus as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of a modulo m for gcd(a, m) = 1.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r.abs() != 1 {
        return None;
    }
    let mut inv = old_s * old_r.signum();
    inv = inv.rem_euclid(m as i128);
    Some(inv as u64)
}

/// Combines congruences x ≡ r_i (mod m_i) with pairwise coprime moduli.
pub fn crt(pairs: &[(u64, u64)]) -> Option<(u64, u64)> {
    let mut r: u128 = 0;
    let mut m: u128 = 1;
    for &(ri, mi) in pairs {
        if mi == 0 {
            return None;
        }
        let mi = mi as u128;
        let g = gcd(m as u64, mi as u64) as u128;
        if g != 1 {
            return None;
        }
        let inv = inv_mod((m % mi) as u64, mi as u64)? as u128;
        let diff = (ri as u128 + mi - r % mi) % mi;
        r += m * (diff * inv % mi);
        m *= mi;
        r %= m;
    }
    Some((r as u64, m as u64))
}

/// Multiplicative order of a modulo m, for gcd(a, m) = 1.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * a as u128 % m as u128) as u64;
        k += 1;
        if k > m {
            return None;
        }
    }
    Some(k)
}

pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize(n) {
        out = out / p * (p - 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_phi() {
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(euler_phi(360), 96);
        assert!(is_prime(449));
        assert!(!is_prime(1));
    }

    #[test]
    fn coprime_part_strips_shared_primes() {
        assert_eq!(coprime_part(15, 6), 5);
        assert_eq!(coprime_part(9, 6), 1);
        assert_eq!(coprime_part(49, 16), 49);
    }

    #[test]
    fn crt_combines() {
        let (r, m) = crt(&[(0, 2), (2, 7)]).unwrap();
        assert_eq!(m, 14);
        assert_eq!(r, 16 % 14);
        assert!(crt(&[(1, 4), (0, 2)]).is_none());
    }

    #[test]
    fn orders_and_inverses() {
        assert_eq!(mult_order(7, 19), Some(3));
        assert_eq!(mult_order(13, 61), Some(3));
        assert_eq!(mult_order(7, 25), Some(4));
        assert_eq!(inv_mod(25, 11), Some(4));
        assert_eq!(pow_mod(2, 20, 61), 47);
    }
}
