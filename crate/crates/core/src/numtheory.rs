//! Small-integer number theory: factorization, totients, modular inverses.

use num_integer::Integer;

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing order.
pub fn factorize(mut n: u128) -> Vec<(u128, u32)> {
    let mut out = Vec::new();
    if n <= 1 {
        return out;
    }
    let mut p: u128 = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n as u128).len() == 1 && factorize(n as u128)[0].1 == 1
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n as u128)
        .into_iter()
        .fold(n as u128, |acc, (p, _)| acc / p * (p - 1)) as u64
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).take_while(|x| x * x <= n).filter(|x| n % x == 0).collect();
    let big: Vec<u64> = d.iter().rev().map(|x| n / x).filter(|y| y * y != n).collect();
    d.extend(big);
    d
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let g = a.extended_gcd(&m);
    if g.gcd != 1 && g.gcd != -1 {
        return None;
    }
    let inv = g.x * g.gcd;
    Some(inv.rem_euclid(m))
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
