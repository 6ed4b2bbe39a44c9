//! Closed rational intervals and certified enclosures of `pi`, `cos` and `arccos`.
//!
//! Every function here returns an interval that provably contains the true
//! value. Series are truncated with explicit remainder bounds and all rounding
//! to the dyadic grid `2^-prec` is outward.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi, "empty interval");
        RatInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RatInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&BigRational::zero())
    }

    /// Sign of every point in the interval, if it is determined.
    pub fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo + &o.lo, hi: &self.hi + &o.hi }
    }

    pub fn sub(&self, o: &RatInterval) -> RatInterval {
        RatInterval { lo: &self.lo - &o.hi, hi: &self.hi - &o.lo }
    }

    pub fn add_scalar(&self, c: &BigRational) -> RatInterval {
        RatInterval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn scale(&self, c: &BigRational) -> RatInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RatInterval { lo: a, hi: b }
        } else {
            RatInterval { lo: b, hi: a }
        }
    }

    pub fn mul(&self, o: &RatInterval) -> RatInterval {
        let p = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = p.iter().min().unwrap().clone();
        let hi = p.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    /// Division by an interval not containing zero.
    pub fn div(&self, o: &RatInterval) -> RatInterval {
        assert!(!o.contains_zero(), "interval division by zero");
        let inv = RatInterval::new(o.hi.recip(), o.lo.recip());
        self.mul(&inv)
    }

    /// Set of `|x - c|` for `x` in the interval.
    pub fn abs_diff(&self, c: &BigRational) -> RatInterval {
        let a = (&self.lo - c).abs();
        let b = (&self.hi - c).abs();
        let lo = if self.contains(c) { BigRational::zero() } else { a.clone().min(b.clone()) };
        RatInterval { lo, hi: a.max(b) }
    }

    /// Outward rounding to the grid `2^-prec`.
    pub fn round_out(&self, prec: u32) -> RatInterval {
        RatInterval { lo: round_down(&self.lo, prec), hi: round_up(&self.hi, prec) }
    }
}

fn two_pow(prec: u32) -> BigInt {
    BigInt::one() << prec as usize
}

/// Largest multiple of `2^-prec` that is `<= x`.
pub fn round_down(x: &BigRational, prec: u32) -> BigRational {
    let s = two_pow(prec);
    let n = (x.numer() * &s).div_floor(x.denom());
    BigRational::new(n, s)
}

/// Smallest multiple of `2^-prec` that is `>= x`.
pub fn round_up(x: &BigRational, prec: u32) -> BigRational {
    let s = two_pow(prec);
    let n = (x.numer() * &s).div_ceil(x.denom());
    BigRational::new(n, s)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Enclosure of `sqrt(x)` for rational `x >= 0`.
pub fn sqrt_enclosure(x: &BigRational, prec: u32) -> RatInterval {
    assert!(!x.is_negative());
    // floor(sqrt(x * 4^prec)) / 2^prec <= sqrt(x) <= ceil(..) / 2^prec
    let s = two_pow(prec);
    let scaled = x * BigRational::from_integer(&s * &s);
    let fl = scaled.floor().to_integer();
    let r = fl.sqrt();
    let lo = BigRational::new(r.clone(), s.clone());
    let exact = &r * &r == fl && scaled.is_integer();
    let hi = if exact { lo.clone() } else { BigRational::new(r + 1, s) };
    RatInterval::new(lo, hi)
}

/// Enclosure of `atan(y)` for rational `0 <= y <= 1/4` by the alternating
/// Taylor series.
fn atan_series(y: &BigRational, prec: u32) -> RatInterval {
    if y.is_zero() {
        return RatInterval::point(BigRational::zero());
    }
    let eps = BigRational::new(BigInt::one(), two_pow(prec + 2));
    let y2 = y * y;
    let mut term = y.clone(); // y^(2n+1)
    let mut sum = BigRational::zero();
    let mut n: i64 = 0;
    loop {
        let t = &term / BigRational::from_integer((2 * n + 1).into());
        if t < eps {
            // alternating with decreasing terms: the tail lies between 0 and the next term
            let (lo, hi) = if n % 2 == 0 { (sum.clone(), &sum + &t) } else { (&sum - &t, sum.clone()) };
            return RatInterval::new(round_down(&lo, prec + 1), round_up(&hi, prec + 1));
        }
        if n % 2 == 0 {
            sum += &t;
        } else {
            sum -= &t;
        }
        term = &term * &y2;
        n += 1;
    }
}

/// Enclosure of `atan(y)` for rational `y >= 0` and `y <= 1/4` evaluated at
/// both ends of an argument interval, using monotonicity.
fn atan_small_interval(y: &RatInterval, prec: u32) -> RatInterval {
    let lo = atan_series(&y.lo, prec);
    let hi = atan_series(&y.hi, prec);
    RatInterval::new(lo.lo, hi.hi)
}

/// Enclosure of `pi` via Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi_enclosure(prec: u32) -> RatInterval {
    static CACHE: OnceLock<Mutex<HashMap<u32, RatInterval>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&prec) {
        return v.clone();
    }
    let v = machin_pi(prec);
    cache.lock().unwrap().insert(prec, v.clone());
    v
}

fn machin_pi(prec: u32) -> RatInterval {
    let a = atan_series(&rat(1, 5), prec + 6);
    let b = atan_series(&rat(1, 239), prec + 6);
    let sixteen = rat(16, 1);
    let four = rat(4, 1);
    a.scale(&sixteen).sub(&b.scale(&four)).round_out(prec)
}

/// Enclosure of `atan(y)` for rational `y >= 0`.
fn atan_enclosure(y: &BigRational, prec: u32) -> RatInterval {
    assert!(!y.is_negative());
    let p = prec + 8;
    if y > &BigRational::one() {
        // atan(y) = pi/2 - atan(1/y)
        let half_pi = pi_enclosure(p).scale(&rat(1, 2));
        let inner = atan_enclosure(&y.recip(), p);
        return half_pi.sub(&inner).round_out(prec);
    }
    // two halvings atan(y) = 2 atan(y / (1 + sqrt(1 + y^2))) bring y <= 1 below 1/4;
    // the map is increasing in y so each step maps endpoints to endpoints
    let mut iv = RatInterval::point(y.clone());
    let mut doublings = 0u32;
    while iv.hi > rat(1, 4) {
        let lo = halve_arg(&iv.lo, p, false);
        let hi = halve_arg(&iv.hi, p, true);
        iv = RatInterval::new(lo, hi);
        doublings += 1;
    }
    let r = atan_small_interval(&iv, p);
    r.scale(&BigRational::from_integer(two_pow(doublings))).round_out(prec)
}

/// Bound for `y / (1 + sqrt(1 + y^2))`; `upper` selects the outward side.
fn halve_arg(y: &BigRational, prec: u32, upper: bool) -> BigRational {
    if y.is_zero() {
        return BigRational::zero();
    }
    let s = sqrt_enclosure(&(BigRational::one() + y * y), prec + 4);
    if upper {
        round_up(&(y / (BigRational::one() + &s.lo)), prec + 2)
    } else {
        round_down(&(y / (BigRational::one() + &s.hi)), prec + 2)
    }
}

/// Enclosure of `arccos(x)` for rational `-1 <= x <= 1`.
pub fn acos_enclosure(x: &BigRational, prec: u32) -> RatInterval {
    assert!(x.abs() <= BigRational::one(), "arccos argument outside [-1, 1]");
    let p = prec + 8;
    if x == &-BigRational::one() {
        return pi_enclosure(prec);
    }
    // arccos(x) = 2 atan(sqrt((1 - x) / (1 + x))), increasing in the sqrt argument
    let arg = (BigRational::one() - x) / (BigRational::one() + x);
    let s = sqrt_enclosure(&arg, p);
    let lo = atan_enclosure(&s.lo, p);
    let hi = atan_enclosure(&s.hi, p);
    RatInterval::new(lo.lo, hi.hi).scale(&rat(2, 1)).round_out(prec)
}

/// Enclosure of `arccos(x) / (2 pi)`, the position of `e^{i arccos x}` as a
/// fraction of a full turn.
pub fn acos_turns_enclosure(x: &BigRational, prec: u32) -> RatInterval {
    let a = acos_enclosure(x, prec + 4);
    let two_pi = pi_enclosure(prec + 4).scale(&rat(2, 1));
    a.div(&two_pi).round_out(prec)
}

/// Enclosure of `cos(theta)` and `sin(theta)` (selected by `sine`) for
/// rational `0 <= theta <= 1`, alternating series.
fn trig_series(theta: &BigRational, sine: bool, prec: u32) -> RatInterval {
    let eps = BigRational::new(BigInt::one(), two_pow(prec + 2));
    let t2 = theta * theta;
    let mut term = if sine { theta.clone() } else { BigRational::one() };
    let mut k: i64 = if sine { 1 } else { 0 };
    let mut sum = BigRational::zero();
    let mut n = 0;
    loop {
        if term.abs() < eps && n > 0 {
            let (lo, hi) = if n % 2 == 0 { (sum.clone(), &sum + &term) } else { (&sum - &term, sum.clone()) };
            return RatInterval::new(round_down(&lo, prec + 1), round_up(&hi, prec + 1));
        }
        if n % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        term = &term * &t2 / BigRational::from_integer(((k + 1) * (k + 2)).into());
        k += 2;
        n += 1;
    }
}

/// Enclosure of `cos(2 pi r)` for rational `r`.
pub fn cos_turns_enclosure(r: &BigRational, prec: u32) -> RatInterval {
    // reduce r into [0, 1)
    let mut r = r - r.floor();
    // cos(2 pi r) = cos(2 pi (1 - r))
    if r > rat(1, 2) {
        r = BigRational::one() - r;
    }
    // cos(2 pi r) = -cos(2 pi (1/2 - r))
    let mut negate = false;
    if r > rat(1, 4) {
        r = rat(1, 2) - r;
        negate = true;
    }
    // now r in [0, 1/4]; use sin for r > 1/8 so the angle stays in [0, pi/4]
    let use_sine = r > rat(1, 8);
    if use_sine {
        r = rat(1, 4) - r;
    }
    if r.is_zero() {
        let v = if use_sine { BigRational::zero() } else { BigRational::one() };
        let v = if negate { -v } else { v };
        return RatInterval::point(v);
    }
    let p = prec + 8;
    let two_pi = pi_enclosure(p + 4).scale(&rat(2, 1));
    let theta = two_pi.scale(&r).round_out(p + 2);
    // on [0, pi/4] cos is decreasing and sin increasing
    let (a, b) = if use_sine {
        (trig_series(&theta.lo, true, p).lo, trig_series(&theta.hi, true, p).hi)
    } else {
        (trig_series(&theta.hi, false, p).lo, trig_series(&theta.lo, false, p).hi)
    };
    let iv = RatInterval::new(a, b);
    let iv = if negate { RatInterval::new(-iv.hi, -iv.lo) } else { iv };
    iv.round_out(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn f(x: &BigRational) -> f64 {
        x.to_f64().unwrap()
    }

    #[test]
    fn pi_is_enclosed() {
        let iv = pi_enclosure(80);
        assert!(f(&iv.lo) <= std::f64::consts::PI && std::f64::consts::PI <= f(&iv.hi));
        assert!(iv.width() <= BigRational::new(1.into(), BigInt::one() << 78usize));
        // 355/113 is above pi by ~2.7e-7
        assert!(iv.hi < rat(355, 113));
    }

    #[test]
    fn sqrt_exact_and_inexact() {
        assert_eq!(sqrt_enclosure(&rat(9, 4), 10), RatInterval::point(rat(3, 2)));
        let s = sqrt_enclosure(&rat(2, 1), 40);
        assert!(&s.lo * &s.lo <= rat(2, 1) && &s.hi * &s.hi >= rat(2, 1));
    }

    #[test]
    fn acos_known_values() {
        for (x, expect) in [
            (rat(1, 2), std::f64::consts::PI / 3.0),
            (rat(-1, 2), 2.0 * std::f64::consts::PI / 3.0),
            (rat(0, 1), std::f64::consts::PI / 2.0),
            (rat(1, 1), 0.0),
            (rat(-1, 1), std::f64::consts::PI),
            (rat(-99, 100), (-0.99f64).acos()),
        ] {
            let iv = acos_enclosure(&x, 60);
            assert!(f(&iv.lo) - 1e-15 <= expect && expect <= f(&iv.hi) + 1e-15, "{x}");
            assert!(iv.width() < rat(1, 1 << 50));
        }
        let t = acos_turns_enclosure(&rat(1, 2), 60);
        assert!(t.contains(&rat(1, 6)) || (f(&t.lo) - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn cos_known_values() {
        for (r, expect) in [
            (rat(1, 6), 0.5),
            (rat(1, 3), -0.5),
            (rat(1, 4), 0.0),
            (rat(0, 1), 1.0),
            (rat(1, 2), -1.0),
            (rat(5, 7), (2.0 * std::f64::consts::PI * 5.0 / 7.0).cos()),
            (rat(-3, 11), (2.0 * std::f64::consts::PI * -3.0 / 11.0).cos()),
        ] {
            let iv = cos_turns_enclosure(&r, 60);
            assert!(f(&iv.lo) - 1e-15 <= expect && expect <= f(&iv.hi) + 1e-15, "{r}");
            assert!(iv.width() < rat(1, 1 << 50));
        }
    }

    #[test]
    fn cos_and_acos_are_inverse() {
        let r = rat(3, 17);
        let c = cos_turns_enclosure(&r, 80);
        let a = acos_turns_enclosure(&c.lo, 80);
        let b = acos_turns_enclosure(&c.hi, 80);
        // acos is decreasing: r lies between the images of the endpoints
        assert!(b.lo <= r && r <= a.hi);
    }
}
