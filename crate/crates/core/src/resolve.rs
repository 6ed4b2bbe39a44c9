//! Residual-finiteness resolutions of `Z ⋉ Λ/ΔΛ`.
//!
//! For a prime `p` coprime to the leading coefficient of `Δ`, the subgroups
//! `H_i = p^i H` of `H = Λ/ΔΛ` give finite quotients
//! `H/H_i = (Z/p^i)[t]/(Δ)`, modelled on the basis `1, t, .., t^{d-1}` with `t`
//! acting by the companion matrix. The group quotients are
//! `Z/k_i^{s_i} ⋉ H/H_i` with `t^{k_i} = 1` on `H/H_i`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::alexmod::FiniteLambdaModule;
use crate::laurent::IntLaurentPoly;
use crate::matrix::Matrix;
use crate::mbreps::SemidirectElement;
use crate::numtheory::{factorize, is_prime, mod_inverse};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolveError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the zero polynomial does not define a module")]
    ZeroPolynomial,
    #[error("p = {p} divides the leading coefficient {leading}")]
    PrimeDividesLeading { p: u64, leading: BigInt },
    #[error("invalid s schedule: {0}")]
    InvalidSchedule(String),
    #[error("modulus {p}^{i} is too large")]
    ModulusTooLarge { p: u64, i: u32 },
    #[error("{} witness(es) not separated by depth {depth}", .witnesses.len())]
    SeparationFailure { witnesses: Vec<Witness>, depth: u32 },
}

/// Square matrix over `Z/q`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModMat {
    q: u128,
    a: Vec<Vec<u128>>,
}

impl ModMat {
    fn identity(d: usize, q: u128) -> Self {
        let a = (0..d).map(|i| (0..d).map(|j| u128::from(i == j) % q).collect()).collect();
        ModMat { q, a }
    }

    fn dim(&self) -> usize {
        self.a.len()
    }

    fn mul(&self, o: &ModMat) -> ModMat {
        let d = self.dim();
        let q = self.q;
        let a = (0..d)
            .map(|i| (0..d).fold(vec![0u128; d], |mut row, k| {
                let x = self.a[i][k];
                if x != 0 {
                    for j in 0..d {
                        row[j] = (row[j] + x * o.a[k][j] % q) % q;
                    }
                }
                row
            }))
            .collect();
        ModMat { q, a }
    }

    fn pow(&self, mut e: u128) -> ModMat {
        let mut r = ModMat::identity(self.dim(), self.q);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        r
    }

    fn is_identity(&self) -> bool {
        *self == ModMat::identity(self.dim(), self.q)
    }

    fn apply(&self, v: &[u128]) -> Vec<u128> {
        self.a.iter().map(|row| row.iter().zip(v).fold(0, |s, (x, y)| (s + x * y % self.q) % self.q)).collect()
    }

    fn reduce_to(&self, q: u128) -> ModMat {
        ModMat { q, a: self.a.iter().map(|r| r.iter().map(|x| x % q).collect()).collect() }
    }
}

/// Coefficients of `Δ` shifted to lowest exponent 0.
fn normalized(delta: &IntLaurentPoly) -> Result<Vec<BigInt>, ResolveError> {
    if delta.is_zero() {
        return Err(ResolveError::ZeroPolynomial);
    }
    Ok(delta.shift(-delta.low_exp()).coeffs().to_vec())
}

fn check_prime(delta: &[BigInt], p: u64) -> Result<(), ResolveError> {
    if !is_prime(p) {
        return Err(ResolveError::NotPrime(p));
    }
    let lead = delta.last().unwrap();
    if lead.is_multiple_of(&BigInt::from(p)) {
        return Err(ResolveError::PrimeDividesLeading { p, leading: lead.clone() });
    }
    Ok(())
}

fn modulus(p: u64, i: u32) -> Result<u128, ResolveError> {
    (p as u128)
        .checked_pow(i)
        .filter(|&q| q < 1 << 63)
        .ok_or(ResolveError::ModulusTooLarge { p, i })
}

/// Companion matrix of `Δ` over `Z/q`: `T[j+1][j] = 1`, `T[i][d-1] = -a_i / a_d`.
fn companion(delta: &[BigInt], q: u128) -> ModMat {
    let d = delta.len() - 1;
    let qb = BigInt::from(q);
    let lead = delta[d].mod_floor(&qb).to_i128().unwrap();
    let inv = BigInt::from(mod_inverse(lead, q as i128).expect("leading coefficient is a unit"));
    let mut a = vec![vec![0u128; d]; d];
    for j in 0..d.saturating_sub(1) {
        a[j + 1][j] = 1 % q;
    }
    for (i, row) in a.iter_mut().enumerate() {
        row[d - 1] = (-(&delta[i] * &inv)).mod_floor(&qb).to_u128().unwrap();
    }
    ModMat { q, a }
}

fn to_module(t: &ModMat) -> FiniteLambdaModule {
    let d = t.dim();
    if d == 0 || t.q == 1 {
        return FiniteLambdaModule::trivial();
    }
    let m = Matrix::from_fn(d, d, |i, j| BigInt::from(t.a[i][j]));
    FiniteLambdaModule::new(vec![BigInt::from(t.q); d], m).expect("companion matrix is invertible")
}

/// `H/H_i = (Z/p^i)[t]/(Δ)` as a finite `Λ`-module.
pub fn finite_alexander_quotient(delta: &IntLaurentPoly, p: u64, i: u32) -> Result<FiniteLambdaModule, ResolveError> {
    let c = normalized(delta)?;
    check_prime(&c, p)?;
    Ok(to_module(&companion(&c, modulus(p, i)?)))
}

/// Order of `t` modulo `p`: it divides `p^e · lcm_{j<=d}(p^j - 1)` with
/// `p^e >= d`, which is then stripped prime by prime.
fn order_mod_p(t: &ModMat, p: u64) -> Result<u128, ResolveError> {
    let d = t.dim() as u32;
    if d == 0 {
        return Ok(1);
    }
    let too_big = ResolveError::ModulusTooLarge { p, i: d };
    let p = p as u128;
    let mut factors: BTreeMap<u128, u32> = BTreeMap::new();
    let mut n: u128 = 1;
    for j in 1..=d {
        let pj = p.checked_pow(j).ok_or(too_big.clone())? - 1;
        for (q, e) in factorize(pj) {
            let cur = factors.entry(q).or_insert(0);
            if e > *cur {
                n = n.checked_mul(q.pow(e - *cur)).ok_or(too_big.clone())?;
                *cur = e;
            }
        }
    }
    let mut e = 0;
    while p.pow(e) < d as u128 {
        e += 1;
    }
    if e > 0 {
        n = n.checked_mul(p.pow(e)).ok_or(too_big.clone())?;
        *factors.entry(p).or_insert(0) += e;
    }
    debug_assert!(t.pow(n).is_identity());
    for (&q, &e) in &factors {
        for _ in 0..e {
            if n % q == 0 && t.pow(n / q).is_identity() {
                n /= q;
            } else {
                break;
            }
        }
    }
    Ok(n)
}

/// Orders of `t` on `H/H_i` for `i = 1..=depth`, lifting the order mod `p`
/// through the `p`-group kernel of reduction.
fn orders(delta: &[BigInt], p: u64, depth: u32) -> Result<Vec<u64>, ResolveError> {
    let top = companion(delta, modulus(p, depth)?);
    let o1 = order_mod_p(&top.reduce_to(p as u128), p)?;
    let mut out = Vec::new();
    let mut o = o1;
    for i in 1..=depth {
        let t = top.reduce_to(modulus(p, i)?);
        while !t.pow(o).is_identity() {
            o *= p as u128;
        }
        out.push(o.to_u64().ok_or(ResolveError::ModulusTooLarge { p, i })?);
    }
    Ok(out)
}

/// The least `k >= 1` with `t^k = 1` on `(Z/p^i)[t]/(Δ)`.
pub fn order_of_t(delta: &IntLaurentPoly, p: u64, i: u32) -> Result<u64, ResolveError> {
    let c = normalized(delta)?;
    check_prime(&c, p)?;
    Ok(*orders(&c, p, i)?.last().unwrap())
}

/// The exponents `s_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SSchedule {
    /// `s_i = i`.
    Default,
    Constant(u32),
    List(Vec<u32>),
}

impl SSchedule {
    /// `"default"`, `"const:N"` or a comma-separated list.
    pub fn parse(s: &str) -> Result<Self, ResolveError> {
        let bad = || ResolveError::InvalidSchedule(s.to_string());
        let s = s.trim();
        if s == "default" {
            return Ok(SSchedule::Default);
        }
        if let Some(n) = s.strip_prefix("const:") {
            return Ok(SSchedule::Constant(n.trim().parse().map_err(|_| bad())?));
        }
        let v = s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| bad())).collect::<Result<_, _>>()?;
        Ok(SSchedule::List(v))
    }

    fn values(&self, depth: u32) -> Result<Vec<u32>, ResolveError> {
        let v: Vec<u32> = match self {
            SSchedule::Default => (1..=depth).collect(),
            SSchedule::Constant(c) => vec![*c; depth as usize],
            SSchedule::List(l) => {
                if l.len() < depth as usize {
                    return Err(ResolveError::InvalidSchedule(format!("{} values for depth {depth}", l.len())));
                }
                l[..depth as usize].to_vec()
            }
        };
        if v.iter().any(|&s| s == 0) {
            return Err(ResolveError::InvalidSchedule("s_i must be positive".into()));
        }
        if v.windows(2).any(|w| w[1] < w[0]) {
            return Err(ResolveError::InvalidSchedule("s_i must be nondecreasing".into()));
        }
        Ok(v)
    }
}

/// An element `(n, h)` of `Z ⋉ Λ/ΔΛ`, with `h` given by a representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: i64,
    pub h: IntLaurentPoly,
}

impl Witness {
    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "h": self.h.to_string() })
    }
}

/// Whether `h ∈ ΔΛ`, by long division over `Q` (`Δ` is primitive when
/// `Δ(1) = ±1`; for other inputs the quotient is also checked for integrality).
fn in_ideal(delta: &[BigInt], h: &IntLaurentPoly) -> bool {
    if h.is_zero() {
        return true;
    }
    let d = delta.len() - 1;
    let mut r: Vec<BigRational> = h.shift(-h.low_exp()).coeffs().iter().map(|c| BigRational::from(c.clone())).collect();
    if r.len() <= d {
        return d == 0 && delta[0].abs().is_one();
    }
    let lead = BigRational::from(delta[d].clone());
    for top in (d..r.len()).rev() {
        let q = &r[top] / &lead;
        if !q.is_integer() {
            return false;
        }
        for (j, dj) in delta.iter().enumerate() {
            r[top - d + j] -= &q * BigRational::from(dj.clone());
        }
    }
    r.iter().all(|x| x.is_zero())
}

pub fn is_nontrivial(delta: &IntLaurentPoly, w: &Witness) -> bool {
    match normalized(delta) {
        Ok(c) => w.n != 0 || !in_ideal(&c, &w.h),
        Err(_) => true,
    }
}

/// The generator `(1, 0)` and `(0, 1)`.
pub fn default_witnesses() -> Vec<Witness> {
    vec![
        Witness { n: 1, h: IntLaurentPoly::zero() },
        Witness { n: 0, h: IntLaurentPoly::one() },
    ]
}

/// All `(n, Σ_{j<deg Δ} c_j t^j)` with `|n|, |c_j| <= b`, except the identity.
pub fn bounded_witnesses(delta: &IntLaurentPoly, b: u32) -> Vec<Witness> {
    let d = normalized(delta).map_or(0, |c| c.len() - 1);
    let b = b as i64;
    let width = (2 * b + 1) as usize;
    let total = width.pow(d as u32 + 1);
    let mut out = Vec::new();
    for code in 0..total {
        let mut x = code;
        let mut digits = Vec::with_capacity(d + 1);
        for _ in 0..=d {
            digits.push((x % width) as i64 - b);
            x /= width;
        }
        if digits.iter().all(|&v| v == 0) {
            continue;
        }
        let h = IntLaurentPoly::from_i64s(0, &digits[1..]);
        out.push(Witness { n: digits[0], h });
    }
    out
}

#[derive(Clone, Debug)]
pub struct ResolutionStep {
    pub i: u32,
    pub p: u64,
    pub k: u64,
    pub s: u32,
    /// Exact order of `t` on `H/H_i` before adjustment.
    pub order: u64,
    pub quotient: FiniteLambdaModule,
    t: ModMat,
}

impl ResolutionStep {
    /// `p^i`.
    pub fn coefficient_modulus(&self) -> u128 {
        self.t.q
    }

    /// `k^s`, the order of the cyclic factor.
    pub fn cyclic_order(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.k), self.s as usize)
    }

    /// Image of `h` in `H/H_i`.
    pub fn image_h(&self, h: &IntLaurentPoly) -> Vec<u128> {
        let d = self.t.dim();
        if d == 0 {
            return vec![];
        }
        let q = self.t.q;
        let qb = BigInt::from(q);
        let mut v = vec![0u128; d];
        for c in h.coeffs().iter().rev() {
            v = self.t.apply(&v);
            v[0] = (v[0] + c.mod_floor(&qb).to_u128().unwrap()) % q;
        }
        // multiply by t^low, with t^-1 = t^(order-1)
        let low = h.low_exp();
        let e = (low as i128).rem_euclid(self.order as i128) as u128;
        self.t.pow(e).apply(&v)
    }

    /// Image of `(n, h)` in `Z/k^s ⋉ H/H_i`.
    pub fn image(&self, w: &Witness) -> (BigUint, Vec<u128>) {
        let m = BigInt::from(self.cyclic_order());
        let n = BigInt::from(w.n).mod_floor(&m).to_biguint().unwrap();
        (n, self.image_h(&w.h))
    }

    /// The image as an element of the finite semidirect product.
    pub fn image_element(&self, w: &Witness) -> SemidirectElement {
        let (n, h) = self.image(w);
        SemidirectElement { n: n.to_i64().expect("small cyclic factor"), h: h.into_iter().map(BigInt::from).collect() }
    }

    pub fn separates(&self, w: &Witness) -> bool {
        let (n, h) = self.image(w);
        !n.is_zero() || h.iter().any(|&x| x != 0)
    }

    /// `k^s · p^(i·deg Δ)`.
    pub fn quotient_group_order(&self) -> BigUint {
        self.cyclic_order() * num_traits::pow(BigUint::from(self.t.q), self.t.dim())
    }

    pub fn to_json(&self) -> Value {
        json!({ "i": self.i, "k": self.k, "s": self.s, "order": self.order })
    }
}

pub fn quotient_group_order(step: &ResolutionStep) -> BigUint {
    step.quotient_group_order()
}

/// Multiplication in `Z ⋉ Λ/ΔΛ` on representatives:
/// `(n, h)(n', h') = (n + n', t^{n'} h + h')`.
pub fn witness_mul(a: &Witness, b: &Witness) -> Witness {
    Witness { n: a.n + b.n, h: &a.h.shift(b.n) + &b.h }
}

#[derive(Clone, Debug)]
pub struct ResolutionReport {
    pub p: u64,
    pub delta: IntLaurentPoly,
    pub steps: Vec<ResolutionStep>,
    /// Nontrivial witnesses with the first index separating them.
    pub witnesses: Vec<(Witness, Option<u32>)>,
}

impl ResolutionReport {
    pub fn unseparated(&self) -> Vec<Witness> {
        self.witnesses.iter().filter(|(_, s)| s.is_none()).map(|(w, _)| w.clone()).collect()
    }

    pub fn require_separation(&self) -> Result<(), ResolveError> {
        let witnesses = self.unseparated();
        if witnesses.is_empty() {
            Ok(())
        } else {
            Err(ResolveError::SeparationFailure { witnesses, depth: self.steps.len() as u32 })
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "p": self.p,
            "steps": self.steps.iter().map(ResolutionStep::to_json).collect::<Vec<_>>(),
            "witnesses": self.witnesses.iter().map(|(w, s)| json!({
                "element": w.to_json(),
                "separated_at": s,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Steps `i = 1..=depth` with `k_i` the least multiple of
/// `lcm(order_i, k_{i-1})` exceeding `i`. Trivial witnesses are dropped.
pub fn build_resolution(
    delta: &IntLaurentPoly,
    p: u64,
    depth: u32,
    schedule: &SSchedule,
    witnesses: &[Witness],
) -> Result<ResolutionReport, ResolveError> {
    assert!(depth >= 1);
    let c = normalized(delta)?;
    check_prime(&c, p)?;
    let s = schedule.values(depth)?;
    let ords = orders(&c, p, depth)?;
    let mut steps: Vec<ResolutionStep> = Vec::new();
    let mut prev_k = 1u64;
    for i in 1..=depth {
        let o = ords[i as usize - 1];
        let l = o.lcm(&prev_k);
        let k = l * (i as u64 / l + 1);
        let t = companion(&c, modulus(p, i)?);
        let quotient = to_module(&t);
        debug_assert!(t.pow(k as u128).is_identity());
        debug_assert_eq!(quotient.order(), BigInt::from(p).pow(i * (c.len() as u32 - 1)));
        steps.push(ResolutionStep { i, p, k, s: s[i as usize - 1], order: o, quotient, t });
        prev_k = k;
    }
    let witnesses = witnesses
        .iter()
        .filter(|w| w.n != 0 || !in_ideal(&c, &w.h))
        .map(|w| (w.clone(), steps.iter().find(|st| st.separates(w)).map(|st| st.i)))
        .collect();
    Ok(ResolutionReport { p, delta: delta.clone(), steps, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;

    fn phi6() -> IntLaurentPoly {
        IntLaurentPoly::from_i64s(0, &[1, -1, 1])
    }

    #[test]
    fn quotient_modules() {
        let f = finite_alexander_quotient(&phi6(), 5, 1).unwrap();
        assert_eq!(f.order(), BigInt::from(25));
        assert_eq!(f.t_matrix(), &IntMatrix::from_i64_rows(&[vec![0, 4], vec![1, 1]]).unwrap());
        let f = finite_alexander_quotient(&phi6(), 5, 2).unwrap();
        assert_eq!(f.order(), BigInt::from(625));
        let f = finite_alexander_quotient(&IntLaurentPoly::one(), 5, 3).unwrap();
        assert_eq!(f.order(), BigInt::one());
    }

    #[test]
    fn leading_coefficient() {
        let d = IntLaurentPoly::from_i64s(0, &[2, -3, 2]);
        assert!(matches!(finite_alexander_quotient(&d, 2, 1), Err(ResolveError::PrimeDividesLeading { .. })));
        assert_eq!(order_of_t(&d, 4, 1), Err(ResolveError::NotPrime(4)));
        // mod 3 this is -(t^2 + 1)... times a unit, so t^4 = 1
        assert_eq!(order_of_t(&d, 3, 1), Ok(4));
    }

    #[test]
    fn orders() {
        assert_eq!(order_of_t(&phi6(), 5, 1), Ok(6));
        assert_eq!(order_of_t(&phi6(), 2, 1), Ok(3));
        assert_eq!(order_of_t(&phi6(), 2, 2), Ok(6));
        assert_eq!(order_of_t(&IntLaurentPoly::one(), 7, 2), Ok(1));
        // figure-eight: t^2 - 3t + 1 = (t + 1)^2 mod 5, so t = -1 + nilpotent
        let fig8 = IntLaurentPoly::from_i64s(0, &[1, -3, 1]);
        assert_eq!(order_of_t(&fig8, 5, 1), Ok(10));
    }

    #[test]
    fn orders_agree_with_brute_force() {
        for coeffs in [[1, -1, 1], [1, -3, 1], [2, -5, 2], [3, -7, 3], [1, -7, 1]] {
            let d = IntLaurentPoly::from_i64s(0, &coeffs);
            for p in [2u64, 3, 5, 7] {
                for i in 1..=3 {
                    let Ok(f) = finite_alexander_quotient(&d, p, i) else { continue };
                    assert_eq!(order_of_t(&d, p, i).unwrap(), f.t_order(1_000_000).unwrap(), "{d} p={p} i={i}");
                }
            }
        }
    }

    #[test]
    fn resolution_steps() {
        let r = build_resolution(&phi6(), 5, 3, &SSchedule::List(vec![1, 1, 1]), &default_witnesses()).unwrap();
        let ks: Vec<u64> = r.steps.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![6, 6, 6]);
        assert_eq!(r.steps[0].quotient_group_order(), BigUint::from(150u32));
        assert_eq!(r.witnesses.iter().map(|(_, s)| *s).collect::<Vec<_>>(), vec![Some(1), Some(1)]);
        let r = build_resolution(&phi6(), 2, 4, &SSchedule::Default, &[]).unwrap();
        let ks: Vec<u64> = r.steps.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![3, 6, 6, 6]);
        assert_eq!(r.steps[1].quotient_group_order(), BigUint::from(36u32 * 16));
    }

    #[test]
    fn unknot_resolution() {
        let r = build_resolution(&IntLaurentPoly::one(), 3, 3, &SSchedule::Default, &default_witnesses()).unwrap();
        let ks: Vec<u64> = r.steps.iter().map(|s| s.k).collect();
        assert_eq!(ks, vec![2, 4, 4]);
        assert_eq!(r.steps[2].quotient_group_order(), BigUint::from(64u32));
        // h = 1 is trivial in Λ/Λ and is dropped
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn images_and_separation() {
        let r = build_resolution(&phi6(), 5, 2, &SSchedule::Default, &[]).unwrap();
        let st = &r.steps[0];
        // t^2 = t - 1 and t^-1 = 1 - t
        assert_eq!(st.image_h(&IntLaurentPoly::from_i64s(2, &[1])), vec![4, 1]);
        assert_eq!(st.image_h(&IntLaurentPoly::from_i64s(-1, &[1])), vec![1, 4]);
        assert_eq!(st.image_h(&phi6().shift(-3)), vec![0, 0]);
        let w = Witness { n: 0, h: IntLaurentPoly::from_i64s(0, &[5]) };
        assert!(!st.separates(&w));
        assert!(r.steps[1].separates(&w));
        let w = Witness { n: 0, h: &phi6() * &IntLaurentPoly::from_i64s(0, &[2, 1]) };
        assert!(!is_nontrivial(&phi6(), &w));
    }

    #[test]
    fn separation_failures_are_reported() {
        let w = Witness { n: 0, h: IntLaurentPoly::from_i64s(0, &[125]) };
        let r = build_resolution(&phi6(), 5, 2, &SSchedule::Default, &[w.clone()]).unwrap();
        assert_eq!(r.unseparated(), vec![w]);
        assert!(matches!(r.require_separation(), Err(ResolveError::SeparationFailure { depth: 2, .. })));
    }

    #[test]
    fn schedules() {
        assert_eq!(SSchedule::parse("default"), Ok(SSchedule::Default));
        assert_eq!(SSchedule::parse("const:2"), Ok(SSchedule::Constant(2)));
        assert_eq!(SSchedule::parse("1, 2,2"), Ok(SSchedule::List(vec![1, 2, 2])));
        assert!(SSchedule::parse("x").is_err());
        let bad = build_resolution(&phi6(), 5, 2, &SSchedule::List(vec![2, 1]), &[]);
        assert!(matches!(bad, Err(ResolveError::InvalidSchedule(_))));
        let short = build_resolution(&phi6(), 5, 3, &SSchedule::List(vec![1]), &[]);
        assert!(matches!(short, Err(ResolveError::InvalidSchedule(_))));
    }

    #[test]
    fn bounded_witness_count() {
        let w = bounded_witnesses(&phi6(), 1);
        assert_eq!(w.len(), 26);
        assert!(w.iter().all(|x| is_nontrivial(&phi6(), x)));
    }

    #[test]
    fn report_json() {
        let r = build_resolution(&phi6(), 5, 1, &SSchedule::Default, &default_witnesses()).unwrap();
        let v = r.to_json();
        assert_eq!(v["steps"][0], json!({"i": 1, "k": 6, "s": 1, "order": 6}));
        assert_eq!(v["witnesses"][1]["separated_at"], json!(1));
    }
}
