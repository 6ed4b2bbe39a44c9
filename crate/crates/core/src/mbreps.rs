//! Metabelian unitary representations `α_{(l, z, χ)}` of `Z ⋉ F` and of its
//! finite quotients `Z/m ⋉ F`.
//!
//! With `P` the `l × l` cyclic permutation matrix (a single 1 in the first
//! row's last column, ones on the subdiagonal) and
//! `D(h) = diag(χ(h), χ(th), .., χ(t^{l-1} h))`, the representation is
//! `α(n, h) = z^n P^n D(h)`. All matrix entries are roots of unity and are
//! stored exactly as exponents.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::alexmod::{all_characters, decode, encode, AlexModError, Character, FiniteLambdaModule};
use crate::cyclotomic::Cyclotomic;
use crate::signature::UnitRootAngle;

/// The sign `s` in the group law `(n, h)(n', h') = (n + n', t^{s n'} h + h')`
/// under which `α(n, h) = z^n P^n D(h)` is a homomorphism. Since
/// `P^-1 D(h) P = D(th)`, one has `D(h) P^{n'} = P^{n'} D(t^{n'} h)`, which
/// gives `s = +1`; the test suite checks that `s = -1` fails.
pub const SEMIDIRECT_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MbrepsError {
    #[error("character is not fixed by t^{0}")]
    CharacterNotPeriodic(u64),
    #[error("character is not well defined on the module")]
    CharacterNotDefined,
    #[error("t^{0} is not the identity on the module")]
    ActionNotPeriodic(u64),
    #[error(transparent)]
    Module(#[from] AlexModError),
}

/// An element `(n, h)` of `Z ⋉ F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemidirectElement {
    pub n: i64,
    pub h: Vec<BigInt>,
}

impl SemidirectElement {
    pub fn new(n: i64, h: Vec<BigInt>, f: &FiniteLambdaModule) -> Self {
        SemidirectElement { n, h: f.reduce(&h) }
    }

    pub fn identity(f: &FiniteLambdaModule) -> Self {
        SemidirectElement { n: 0, h: vec![BigInt::zero(); f.rank()] }
    }

    /// The image in `Z/m ⋉ F`.
    pub fn reduce_mod(&self, m: u64) -> Self {
        SemidirectElement { n: self.n.rem_euclid(m as i64), h: self.h.clone() }
    }
}

fn t_power_apply(f: &FiniteLambdaModule, e: i64, h: &[BigInt]) -> Vec<BigInt> {
    let mut v = h.to_vec();
    if e >= 0 {
        let p = f.t_power(e as u64);
        apply(f, &p, &mut v);
    } else {
        let inv = f.t_inverse();
        for _ in 0..(-e) {
            apply(f, &inv, &mut v);
        }
    }
    v
}

fn apply(f: &FiniteLambdaModule, p: &crate::matrix::IntMatrix, v: &mut Vec<BigInt>) {
    let r = f.rank();
    let w: Vec<BigInt> = (0..r).map(|i| (0..r).map(|j| &p[(i, j)] * &v[j]).sum()).collect();
    *v = f.reduce(&w);
}

/// `(n, h)(n', h') = (n + n', t^{s n'} h + h')` for an explicit sign `s`.
pub fn semidirect_mul_with_sign(
    a: &SemidirectElement,
    b: &SemidirectElement,
    f: &FiniteLambdaModule,
    s: i64,
) -> SemidirectElement {
    let moved = t_power_apply(f, s * b.n, &a.h);
    SemidirectElement { n: a.n + b.n, h: f.add(&moved, &b.h) }
}

pub fn semidirect_mul(a: &SemidirectElement, b: &SemidirectElement, f: &FiniteLambdaModule) -> SemidirectElement {
    semidirect_mul_with_sign(a, b, f, SEMIDIRECT_SIGN)
}

/// `(n, h)^-1 = (-n, -t^{-s n} h)`.
pub fn semidirect_inv(a: &SemidirectElement, f: &FiniteLambdaModule) -> SemidirectElement {
    let moved = t_power_apply(f, -SEMIDIRECT_SIGN * a.n, &a.h);
    SemidirectElement { n: -a.n, h: f.neg(&moved) }
}

/// A monomial matrix whose nonzero entries are roots of unity: column `j`
/// has the entry `ζ_N^{exps[j]}` in row `rows[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RepMatrix {
    pub root_order: u64,
    pub rows: Vec<usize>,
    pub exps: Vec<u64>,
}

impl RepMatrix {
    pub fn identity(dim: usize, root_order: u64) -> Self {
        RepMatrix { root_order, rows: (0..dim).collect(), exps: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        assert_eq!(self.root_order, other.root_order);
        let n = self.root_order;
        let (rows, exps) = other
            .rows
            .iter()
            .zip(&other.exps)
            .map(|(&r, &e)| (self.rows[r], (e + self.exps[r]) % n))
            .unzip();
        RepMatrix { root_order: n, rows, exps }
    }

    /// Trace as the list of exponents of the diagonal entries.
    pub fn trace_exponents(&self) -> Vec<u64> {
        (0..self.dim()).filter(|&j| self.rows[j] == j).map(|j| self.exps[j]).collect()
    }

    pub fn trace(&self) -> Cyclotomic {
        let mut t = Cyclotomic::zero(self.root_order);
        for e in self.trace_exponents() {
            t.add_root(e as i64, 1);
        }
        t
    }

    /// Dense form with exact cyclotomic entries.
    pub fn to_dense(&self) -> Vec<Vec<Cyclotomic>> {
        let n = self.root_order;
        let mut m = vec![vec![Cyclotomic::zero(n); self.dim()]; self.dim()];
        for (j, (&r, &e)) in self.rows.iter().zip(&self.exps).enumerate() {
            m[r][j] = Cyclotomic::root(n, e as i64);
        }
        m
    }
}

/// Product of dense cyclotomic matrices.
pub fn dense_mul(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let n = a.len();
    let order = a.first().and_then(|r| r.first()).map_or(1, |c| c.order());
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = Cyclotomic::zero(order);
                    for (k, brow) in b.iter().enumerate() {
                        if !a[i][k].is_raw_zero() && !brow[j].is_raw_zero() {
                            acc = &acc + &(&a[i][k] * &brow[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn conj_transpose(a: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i].conj()).collect()).collect()
}

/// The representation `α_{(l, z, χ)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianRep {
    pub dim: usize,
    pub z: UnitRootAngle,
    pub chi: Character,
    pub module: FiniteLambdaModule,
    pub irreducible: bool,
}

impl MetabelianRep {
    /// Order of the roots of unity appearing as entries.
    pub fn root_order(&self) -> u64 {
        self.z.denom().lcm(&self.chi.m)
    }

    pub fn evaluate(&self, g: &SemidirectElement) -> RepMatrix {
        let n_ord = self.root_order();
        let l = self.dim;
        let z_step = self.z.numer() * (n_ord / self.z.denom());
        let chi_step = n_ord / self.chi.m;
        let zn = (z_step as i128 * g.n as i128).rem_euclid(n_ord as i128) as u64;
        let shift = g.n.rem_euclid(l as i64) as usize;
        let mut h = g.h.clone();
        let mut rows = Vec::with_capacity(l);
        let mut exps = Vec::with_capacity(l);
        for j in 0..l {
            rows.push((j + shift) % l);
            exps.push((zn + self.chi.exponent_at(&h) * chi_step) % n_ord);
            h = self.module.apply_t(&h);
        }
        RepMatrix { root_order: n_ord, rows, exps }
    }

    /// Class label `{"dim", "w_num", "w_den", "chi", "chi_den"}` where
    /// `w = z^dim = e^{2 pi i w_num / w_den}` and `w_den = m / dim`.
    pub fn to_json(&self, m: u64) -> Value {
        let l = self.dim as u64;
        let w = UnitRootAngle::new(self.z.numer() * l, self.z.denom());
        let w_den = m / l;
        assert_eq!(w_den % w.denom(), 0, "z^dim is not an (m/dim)-th root of unity");
        json!({
            "dim": l,
            "w_num": w.numer() * (w_den / w.denom()),
            "w_den": w_den,
            "chi": self.chi.c,
            "chi_den": self.chi.m,
        })
    }

    /// Inverse of [`MetabelianRep::to_json`], choosing `z = e^{2 pi i w_num / m}`.
    pub fn from_json(v: &Value, f: &FiniteLambdaModule) -> Result<Self, MbrepsError> {
        let bad = || MbrepsError::CharacterNotDefined;
        let get = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(bad);
        let l = get("dim")?;
        let w_num = get("w_num")?;
        let w_den = get("w_den")?;
        let chi_den = get("chi_den")?;
        let c = v
            .get("chi")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|x| x.as_u64().ok_or_else(bad))
            .collect::<Result<Vec<u64>, _>>()?;
        if l == 0 || w_den == 0 || chi_den == 0 {
            return Err(bad());
        }
        let z = UnitRootAngle::new(w_num, w_den * l);
        build_rep(l as usize, z, Character { m: chi_den, c }, f)
    }
}

/// `χ ∘ t^j` for `j >= 0`.
fn compose_t_power(chi: &Character, f: &FiniteLambdaModule, j: usize) -> Character {
    let mut c = chi.clone();
    for _ in 0..j {
        c = c.compose_t(f);
    }
    c
}

pub fn build_rep(l: usize, z: UnitRootAngle, chi: Character, f: &FiniteLambdaModule) -> Result<MetabelianRep, MbrepsError> {
    assert!(l >= 1);
    if !chi.is_well_defined(f) {
        return Err(MbrepsError::CharacterNotDefined);
    }
    if !compose_t_power(&chi, f, l).same_as(&chi) {
        return Err(MbrepsError::CharacterNotPeriodic(l as u64));
    }
    let irreducible = is_irreducible(&chi, l, f);
    Ok(MetabelianRep { dim: l, z, chi, module: f.clone(), irreducible })
}

/// Whether the `t`-orbit of `χ` has exactly `l` elements.
pub fn is_irreducible(chi: &Character, l: usize, f: &FiniteLambdaModule) -> bool {
    let mut c = chi.clone();
    for j in 1..=l {
        c = c.compose_t(f);
        if c.same_as(chi) {
            return j == l;
        }
    }
    false
}

/// The finite group `Z/m ⋉ F` with elements encoded as integers.
#[derive(Clone, Debug)]
pub struct FiniteSemidirect {
    m: u64,
    d: Vec<u64>,
    f_order: u64,
    /// `t` applied to each encoded element of `F`.
    t_map: Vec<u64>,
}

impl FiniteSemidirect {
    pub fn new(m: u64, f: &FiniteLambdaModule, cap: u64) -> Result<Self, MbrepsError> {
        if !f.t_power_is_identity(m) {
            return Err(MbrepsError::ActionNotPeriodic(m));
        }
        let elems = f.elements(cap)?;
        let d = f.small_torsion().unwrap();
        let t_map = elems
            .iter()
            .map(|h| {
                let th: Vec<u64> = f.apply_t(h).iter().map(|x| x.to_u64().unwrap()).collect();
                encode(&th, &d)
            })
            .collect();
        Ok(FiniteSemidirect { m, d, f_order: elems.len() as u64, t_map })
    }

    pub fn order(&self) -> u64 {
        self.m * self.f_order
    }

    /// Element number `code` is `(code / |F|, h)` with `h` encoded as `code % |F|`.
    pub fn element(&self, code: u64) -> SemidirectElement {
        let n = (code / self.f_order) as i64;
        let h = decode(code % self.f_order, &self.d).into_iter().map(BigInt::from).collect();
        SemidirectElement { n, h }
    }

    fn t_pow_code(&self, mut h: u64, e: u64) -> u64 {
        for _ in 0..e {
            h = self.t_map[h as usize];
        }
        h
    }

    pub fn mul_codes(&self, a: u64, b: u64) -> u64 {
        let (an, ah) = (a / self.f_order, a % self.f_order);
        let (bn, bh) = (b / self.f_order, b % self.f_order);
        let moved = self.t_pow_code(ah, bn);
        let x = decode(moved, &self.d);
        let y = decode(bh, &self.d);
        let sum: Vec<u64> = x.iter().zip(&y).zip(&self.d).map(|((p, q), di)| (p + q) % di).collect();
        ((an + bn) % self.m) * self.f_order + encode(&sum, &self.d)
    }
}

/// Checks `α(ab) = α(a) α(b)`: over all pairs when `|G| <= exhaustive_limit`,
/// otherwise over `random_pairs` seeded random pairs. Returns the number of
/// pairs checked, or the first failing pair.
pub fn verify_homomorphism(
    rep: &MetabelianRep,
    g: &FiniteSemidirect,
    exhaustive_limit: u64,
    random_pairs: usize,
    seed: u64,
) -> Result<usize, (SemidirectElement, SemidirectElement)> {
    let order = g.order();
    let images: Vec<RepMatrix> = (0..order).map(|c| rep.evaluate(&g.element(c))).collect();
    let check = |a: u64, b: u64| images[g.mul_codes(a, b) as usize] == images[a as usize].mul(&images[b as usize]);
    if order <= exhaustive_limit {
        for a in 0..order {
            for b in 0..order {
                if !check(a, b) {
                    return Err((g.element(a), g.element(b)));
                }
            }
        }
        Ok((order * order) as usize)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..random_pairs {
            let a = rng.gen_range(0..order);
            let b = rng.gen_range(0..order);
            if !check(a, b) {
                return Err((g.element(a), g.element(b)));
            }
        }
        Ok(random_pairs)
    }
}

/// One representative of every isomorphism class of irreducible unitary
/// representations of `Z/m ⋉ F`: per `t`-orbit of characters (size `l`) and
/// per `(m/l)`-th root of unity `w = e^{2 pi i j/(m/l)}`, the representation
/// `α_{(l, z, χ)}` with `z = e^{2 pi i j/m}`. Orbit representatives are the
/// lexicographically least exponent vectors.
pub fn enumerate_irreps(m: u64, f: &FiniteLambdaModule, cap: u64) -> Result<Vec<MetabelianRep>, MbrepsError> {
    assert!(m >= 1);
    if !f.t_power_is_identity(m) {
        return Err(MbrepsError::ActionNotPeriodic(m));
    }
    let chars = all_characters(f, cap)?;
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = Vec::new();
    for chi in chars {
        if seen.contains(&chi.c) {
            continue;
        }
        let mut orbit = vec![chi.clone()];
        loop {
            let next = orbit.last().unwrap().compose_t(f);
            if next.c == chi.c {
                break;
            }
            orbit.push(next);
        }
        for c in &orbit {
            seen.insert(c.c.clone());
        }
        let l = orbit.len() as u64;
        debug_assert_eq!(m % l, 0);
        for j in 0..m / l {
            let z = UnitRootAngle::new(j, m);
            out.push(MetabelianRep { dim: l as usize, z, chi: chi.clone(), module: f.clone(), irreducible: true });
        }
    }
    Ok(out)
}

/// Outcome of [`character_table_checks`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTableReport {
    pub group_order: u64,
    pub sum_of_squares: u64,
    pub dimension_identity: bool,
    /// Pairs `(a, b)` with `<χ_a, χ_b> != δ_ab`.
    pub orthogonality_failures: Vec<(usize, usize)>,
}

impl CharacterTableReport {
    pub fn passed(&self) -> bool {
        self.dimension_identity && self.orthogonality_failures.is_empty()
    }
}

/// Checks `Σ dim² = |G|` and `<χ_a, χ_b> = δ_ab` exactly.
pub fn character_table_checks(reps: &[MetabelianRep], g: &FiniteSemidirect) -> CharacterTableReport {
    let order = g.order();
    let sum_of_squares = reps.iter().map(|r| (r.dim * r.dim) as u64).sum();
    let n = reps.iter().fold(1u64, |acc, r| acc.lcm(&r.root_order()));
    let elems: Vec<SemidirectElement> = (0..order).map(|c| g.element(c)).collect();
    // traces as exponent lists over ζ_n
    let traces: Vec<Vec<Vec<u64>>> = reps
        .iter()
        .map(|r| {
            let scale = n / r.root_order();
            elems.iter().map(|e| r.evaluate(e).trace_exponents().iter().map(|x| x * scale).collect()).collect()
        })
        .collect();
    let mut failures = Vec::new();
    for a in 0..reps.len() {
        for b in a..reps.len() {
            let mut acc = vec![0i64; n as usize];
            for (ta, tb) in traces[a].iter().zip(&traces[b]) {
                for x in ta {
                    for y in tb {
                        acc[((x + n - y) % n) as usize] += 1;
                    }
                }
            }
            let mut s = Cyclotomic::zero(n);
            for (e, &cnt) in acc.iter().enumerate() {
                if cnt != 0 {
                    s.add_root(e as i64, cnt);
                }
            }
            let expected = if a == b { order as i64 } else { 0 };
            if !s.equals_int(expected) {
                failures.push((a, b));
            }
        }
    }
    CharacterTableReport {
        group_order: order,
        sum_of_squares,
        dimension_identity: sum_of_squares == order,
        orthogonality_failures: failures,
    }
}

/// Everything [`check_quotient`] verifies about `Z/m ⋉ F`.
#[derive(Clone, Debug)]
pub struct QuotientCheck {
    pub m: u64,
    pub group_order: u64,
    pub classes: usize,
    pub table: CharacterTableReport,
    /// Pairs checked per representation.
    pub homomorphism_pairs: usize,
    pub homomorphism_failures: usize,
    /// Order of `t` on `F`; no class may have larger dimension.
    pub t_order: u64,
    pub max_dim: usize,
}

impl QuotientCheck {
    pub fn passed(&self) -> bool {
        self.table.passed() && self.homomorphism_failures == 0 && self.max_dim as u64 <= self.t_order
    }
}

/// Enumerates the irreducible representations of `Z/m ⋉ F` and checks the
/// character table, the homomorphism property (exhaustive up to 200 elements,
/// 1000 seeded random pairs beyond) and the dimension bound.
pub fn check_quotient(m: u64, f: &FiniteLambdaModule, cap: u64) -> Result<QuotientCheck, MbrepsError> {
    let g = FiniteSemidirect::new(m, f, cap)?;
    let reps = enumerate_irreps(m, f, cap)?;
    let table = character_table_checks(&reps, &g);
    let mut pairs = 0;
    let mut failures = 0;
    for (i, rep) in reps.iter().enumerate() {
        match verify_homomorphism(rep, &g, 200, 1000, i as u64) {
            Ok(n) => pairs = n,
            Err(_) => failures += 1,
        }
    }
    let t_order = f.t_order(m).expect("t^m = 1 was checked");
    Ok(QuotientCheck {
        m,
        group_order: g.order(),
        classes: reps.len(),
        table,
        homomorphism_pairs: pairs,
        homomorphism_failures: failures,
        t_order,
        max_dim: reps.iter().map(|r| r.dim).max().unwrap_or(0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexmod::DEFAULT_CAP;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn s3() -> (FiniteLambdaModule, FiniteSemidirect) {
        let f = FiniteLambdaModule::cyclic(3, -1).unwrap();
        let g = FiniteSemidirect::new(2, &f, DEFAULT_CAP).unwrap();
        (f, g)
    }

    #[test]
    fn group_law() {
        let (f, _) = s3();
        let e = SemidirectElement::identity(&f);
        let x = SemidirectElement::new(1, vec![big(1)], &f);
        assert_eq!(semidirect_mul(&e, &x, &f), x);
        assert_eq!(semidirect_mul(&x, &semidirect_inv(&x, &f), &f), e);
        let a = SemidirectElement::new(1, vec![big(0)], &f);
        let p = semidirect_mul(&a, &x, &f).reduce_mod(2);
        assert_eq!(p, SemidirectElement::new(0, vec![big(1)], &f));
    }

    #[test]
    fn s3_is_nonabelian_of_order_six() {
        let (_, g) = s3();
        assert_eq!(g.order(), 6);
        let commuting = (0..6).all(|a| (0..6).all(|b| g.mul_codes(a, b) == g.mul_codes(b, a)));
        assert!(!commuting);
        // three involutions and one element of order 3 up to inverse, like S_3
        let orders: Vec<u64> = (0..6)
            .map(|a| {
                let mut x = a;
                let mut k = 1;
                while x != 0 {
                    x = g.mul_codes(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn opposite_sign_is_not_a_homomorphism() {
        // Z/3 ⋉ Z/7 with t = 2 (order 3) distinguishes t from t^-1
        let f = FiniteLambdaModule::cyclic(7, 2).unwrap();
        let chi = Character { m: 7, c: vec![1] };
        let rep = build_rep(3, UnitRootAngle::new(0, 1), chi, &f).unwrap();
        let a = SemidirectElement::new(0, vec![big(1)], &f);
        let b = SemidirectElement::new(1, vec![big(0)], &f);
        for s in [1, -1] {
            let lhs = rep.evaluate(&semidirect_mul_with_sign(&a, &b, &f, s));
            let rhs = rep.evaluate(&a).mul(&rep.evaluate(&b));
            assert_eq!(lhs == rhs, s == SEMIDIRECT_SIGN);
        }
    }

    #[test]
    fn abelian_case() {
        let f = FiniteLambdaModule::trivial();
        let rep = build_rep(1, UnitRootAngle::new(1, 5), Character::trivial(0), &f).unwrap();
        let m = rep.evaluate(&SemidirectElement { n: 3, h: vec![] });
        assert_eq!(m, RepMatrix { root_order: 5, rows: vec![0], exps: vec![3] });
    }

    #[test]
    fn standard_rep_of_s3() {
        let (f, g) = s3();
        let rep = build_rep(2, UnitRootAngle::new(0, 1), Character { m: 3, c: vec![1] }, &f).unwrap();
        assert!(rep.irreducible);
        assert_eq!(verify_homomorphism(&rep, &g, 200, 0, 0), Ok(36));
        for c in 0..6 {
            let d = rep.evaluate(&g.element(c)).to_dense();
            let prod = dense_mul(&d, &conj_transpose(&d));
            for (i, row) in prod.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert!(x.equals_int(if i == j { 1 } else { 0 }));
                }
            }
        }
    }

    #[test]
    fn periodicity_is_enforced() {
        let f = FiniteLambdaModule::cyclic(7, 2).unwrap();
        let chi = Character { m: 7, c: vec![1] };
        assert_eq!(build_rep(2, UnitRootAngle::new(0, 1), chi, &f), Err(MbrepsError::CharacterNotPeriodic(2)));
    }

    #[test]
    fn irreducibility() {
        let z3 = FiniteLambdaModule::cyclic(3, 2).unwrap();
        let triv = Character::trivial(1);
        assert!(is_irreducible(&triv, 1, &z3));
        assert!(!is_irreducible(&triv, 2, &z3));
        assert!(is_irreducible(&Character { m: 3, c: vec![1] }, 2, &z3));
    }

    #[test]
    fn s3_classes() {
        let (f, g) = s3();
        let reps = enumerate_irreps(2, &f, DEFAULT_CAP).unwrap();
        let dims: Vec<usize> = reps.iter().map(|r| r.dim).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        assert!(character_table_checks(&reps, &g).passed());
    }

    #[test]
    fn z6_on_z3() {
        let f = FiniteLambdaModule::cyclic(3, 2).unwrap();
        let g = FiniteSemidirect::new(6, &f, DEFAULT_CAP).unwrap();
        let reps = enumerate_irreps(6, &f, DEFAULT_CAP).unwrap();
        assert_eq!(reps.iter().filter(|r| r.dim == 1).count(), 6);
        assert_eq!(reps.iter().filter(|r| r.dim == 2).count(), 3);
        let report = character_table_checks(&reps, &g);
        assert_eq!(report.sum_of_squares, 18);
        assert!(report.passed());
    }

    #[test]
    fn duplicates_fail_orthogonality() {
        let (f, g) = s3();
        let mut reps = enumerate_irreps(2, &f, DEFAULT_CAP).unwrap();
        reps.push(reps[2].clone());
        let report = character_table_checks(&reps, &g);
        assert!(!report.passed());
        assert!(report.orthogonality_failures.contains(&(2, 3)));
    }

    #[test]
    fn trivial_group() {
        let f = FiniteLambdaModule::trivial();
        let g = FiniteSemidirect::new(1, &f, DEFAULT_CAP).unwrap();
        let reps = enumerate_irreps(1, &f, DEFAULT_CAP).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(character_table_checks(&reps, &g).passed());
    }

    #[test]
    fn non_periodic_action() {
        let f = FiniteLambdaModule::cyclic(7, 2).unwrap();
        assert_eq!(enumerate_irreps(2, &f, DEFAULT_CAP).unwrap_err(), MbrepsError::ActionNotPeriodic(2));
    }

    #[test]
    fn json_round_trip() {
        let f = FiniteLambdaModule::cyclic(3, 2).unwrap();
        for rep in enumerate_irreps(6, &f, DEFAULT_CAP).unwrap() {
            let v = rep.to_json(6);
            let back = MetabelianRep::from_json(&v, &f).unwrap();
            assert_eq!(back.to_json(6), v);
            assert_eq!(back.z, rep.z);
        }
    }
}
