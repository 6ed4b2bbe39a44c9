//! Cyclotomic polynomials and exact arithmetic in `Z[zeta_n]`.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::laurent::IntLaurentPoly;
use crate::numtheory::{divisors, euler_phi};

static CACHE: OnceLock<Mutex<HashMap<u64, IntLaurentPoly>>> = OnceLock::new();

/// The cyclotomic polynomial `Phi_n(t)` as an integer polynomial.
pub fn cyclotomic_poly(n: u64) -> IntLaurentPoly {
    assert!(n >= 1);
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let p = compute_cyclotomic(n);
    cache.lock().unwrap().insert(n, p.clone());
    p
}

fn compute_cyclotomic(n: u64) -> IntLaurentPoly {
    // t^n - 1 = prod_{d | n} Phi_d
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = BigInt::from(-1);
    coeffs[n as usize] = BigInt::one();
    let mut f = coeffs;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        f = exact_div_monic(&f, phi_d.coeffs());
    }
    IntLaurentPoly::new(0, f)
}

fn exact_div_monic(f: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let n = d.len() - 1;
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); f.len() - n];
    for top in (n..r.len()).rev() {
        let c = r[top].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in d.iter().enumerate() {
            r[top - n + j] -= &c * dj;
        }
        q[top - n] = c;
    }
    debug_assert!(r[..n].iter().all(|x| x.is_zero()), "inexact cyclotomic division");
    q
}

/// Whether `f(e^{2 pi i j / k}) = 0`, decided exactly: the point is a
/// primitive `d`-th root of unity with `d = k / gcd(j, k)`, and it is a root of
/// `f` iff `Phi_d` divides `f`.
pub fn vanishes_at_root_of_unity(f: &IntLaurentPoly, j: u64, k: u64) -> bool {
    if f.is_zero() {
        return true;
    }
    let d = k / num_integer::gcd(j % k, k);
    if euler_phi(d) as usize > f.span() {
        return false;
    }
    f.shift(-f.low_exp()).is_divisible_by_monic(&cyclotomic_poly(d))
}

/// An element of `Z[zeta_n]`, stored unreduced as a dense vector in
/// `Z[x]/(x^n - 1)`; equality is decided after reduction modulo `Phi_n`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    n: u64,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        Cyclotomic { n, coeffs: vec![0; n as usize] }
    }

    pub fn one(n: u64) -> Self {
        Self::root(n, 0)
    }

    /// `zeta_n^e`.
    pub fn root(n: u64, e: i64) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[e.rem_euclid(n as i64) as usize] = 1;
        c
    }

    pub fn from_int(n: u64, v: i64) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = v;
        c
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    /// Raw coefficients with respect to `1, zeta, .., zeta^(n-1)`.
    pub fn raw(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn add_root(&mut self, e: i64, mult: i64) {
        let i = e.rem_euclid(self.n as i64) as usize;
        self.coeffs[i] += mult;
    }

    pub fn is_raw_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        let n = self.n as usize;
        let mut out = vec![0; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(n - i) % n] = c;
        }
        Cyclotomic { n: self.n, coeffs: out }
    }

    /// Coefficients of the canonical representative modulo `Phi_n`.
    pub fn reduced(&self) -> Vec<BigInt> {
        let f = IntLaurentPoly::new(0, self.coeffs.iter().map(|&c| BigInt::from(c)).collect());
        let mut r = f.rem_monic(&cyclotomic_poly(self.n));
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.is_raw_zero() || self.reduced().is_empty()
    }

    /// Whether this equals the integer `v`.
    pub fn equals_int(&self, v: i64) -> bool {
        let mut d = self.clone();
        d.coeffs[0] -= v;
        d.is_zero()
    }

    /// Re-express in `Z[zeta_m]` for a multiple `m` of the current order.
    pub fn lift(&self, m: u64) -> Self {
        assert_eq!(m % self.n, 0);
        let s = (m / self.n) as usize;
        let mut out = Self::zero(m);
        for (i, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * s] = c;
        }
        out
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "comparing elements of different cyclotomic rings");
        self.coeffs == other.coeffs || (self - other).is_zero()
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n);
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n);
        Cyclotomic { n: self.n, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, rhs.n);
        let n = self.n as usize;
        let mut out = vec![0i64; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[(i + j) % n] += a * b;
                }
            }
        }
        Cyclotomic { n: self.n, coeffs: out }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { n: self.n, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}
