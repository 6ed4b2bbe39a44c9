//! Tristram–Levine signatures, the signature step function on the unit circle,
//! its integral and its sums over roots of unity.
//!
//! Write `M(t) = (1 - t) A + (1 - t^-1) A^t`. The coefficients of the
//! characteristic polynomial `det(λ - M(t))` are symmetric Laurent polynomials
//! in `t`, hence polynomials in `x = (t + t^-1) / 2 = cos θ`. On the unit circle
//! `M(z)` is Hermitian, so its characteristic polynomial is real-rooted and
//! Descartes' rule of signs counts positive and negative eigenvalues exactly.
//! Every signature therefore reduces to deciding the signs of finitely many
//! integer polynomials at `x = cos θ`, which is done exactly: zero tests are
//! symbolic (cyclotomic divisibility or a gcd with the breakpoint polynomial)
//! and nonzero signs come from certified interval evaluation.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::cyclotomic::vanishes_at_root_of_unity;
use crate::interval::{acos_turns_enclosure, cos_turns_enclosure, RatInterval};
use crate::laurent::IntLaurentPoly;
use crate::matrix::{charpoly_berkowitz, Matrix};
use crate::qpoly::{isolate_roots, QPoly, RootInterval};
use crate::seifert::{alexander_polynomial, SeifertMatrix};

/// Default cap on bisection steps spent isolating a single breakpoint.
pub const DEFAULT_DEPTH: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("interval refinement did not converge within {0} steps")]
    PrecisionExhausted(u32),
    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),
    #[error("eps must be positive")]
    NonPositiveEps,
}

/// The point `e^{2 pi i j / k}` on the unit circle, stored reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRootAngle {
    j: u64,
    k: u64,
}

impl UnitRootAngle {
    pub fn new(j: u64, k: u64) -> Self {
        assert!(k >= 1, "denominator must be positive");
        let j = j % k;
        let g = j.gcd(&k);
        UnitRootAngle { j: j / g, k: k / g }
    }

    /// Angle `j/k` for any integer `j`.
    pub fn from_signed(j: i64, k: u64) -> Self {
        Self::new(j.rem_euclid(k as i64) as u64, k)
    }

    pub fn numer(&self) -> u64 {
        self.j
    }

    pub fn denom(&self) -> u64 {
        self.k
    }

    /// Position as a fraction of a full turn, in `[0, 1)`.
    pub fn turns(&self) -> BigRational {
        BigRational::new(self.j.into(), self.k.into())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.k - self.j, self.k)
    }

    pub fn is_one(&self) -> bool {
        self.j == 0
    }

    /// `cos(2 pi j/k)` when it is rational (only for `k` in 1, 2, 3, 4, 6).
    pub fn rational_cos(&self) -> Option<BigRational> {
        let v = match (self.j, self.k) {
            (0, 1) => (1, 1),
            (1, 2) => (-1, 1),
            (_, 4) => (0, 1),
            (_, 3) => (-1, 2),
            (_, 6) => (1, 2),
            _ => return None,
        };
        Some(BigRational::new(v.0.into(), v.1.into()))
    }

    pub fn cos_enclosure(&self, prec: u32) -> RatInterval {
        match self.rational_cos() {
            Some(c) => RatInterval::point(c),
            None => cos_turns_enclosure(&self.turns(), prec),
        }
    }
}

impl fmt::Display for UnitRootAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.j, self.k)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hemisphere {
    /// `0 < θ < π`.
    Upper,
    /// `π < θ < 2π`.
    Lower,
}

impl Hemisphere {
    pub fn as_str(&self) -> &'static str {
        match self {
            Hemisphere::Upper => "upper",
            Hemisphere::Lower => "lower",
        }
    }
}

/// A root of the Alexander polynomial on the unit circle, given by an
/// isolating interval for `x = cos θ` and the sign of `sin θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    pub root: RootInterval,
    pub hemisphere: Hemisphere,
    /// Squarefree polynomial in `x` whose roots in `(-1, 1)` are the breakpoints.
    pub poly: QPoly,
}

impl CirclePoint {
    pub fn x_interval(&self) -> RatInterval {
        self.root.as_interval()
    }

    /// Enclosure of `θ / 2π`.
    pub fn turn_enclosure(&self, prec: u32) -> RatInterval {
        let up = upper_turns(&self.root, prec);
        match self.hemisphere {
            Hemisphere::Upper => up,
            Hemisphere::Lower => {
                let one = BigRational::one();
                RatInterval::new(&one - &up.hi, &one - &up.lo)
            }
        }
    }

    pub fn bisect(&mut self) {
        self.root.bisect(&self.poly);
    }
}

/// Enclosure of `arccos(x) / 2π` for `x` in the root interval; arccos is
/// decreasing, so the endpoints swap.
fn upper_turns(root: &RootInterval, prec: u32) -> RatInterval {
    let a = acos_turns_enclosure(&root.hi, prec);
    if root.is_exact() {
        return a;
    }
    let b = acos_turns_enclosure(&root.lo, prec);
    RatInterval::new(a.lo, b.hi)
}

/// Convert a Laurent polynomial with `p(t) = p(1/t)` to the polynomial `P`
/// with `p(t) = P((t + 1/t) / 2)`, using `t^n + t^-n = 2 T_n(x)`.
fn symmetric_to_x(p: &IntLaurentPoly) -> QPoly {
    debug_assert!(p == &p.reciprocal(), "polynomial is not symmetric");
    let top = p.high_exp().max(0);
    let two = BigRational::from_integer(2.into());
    let mut out = QPoly::from_ints(&[p.coeff(0)]);
    let mut prev = QPoly::one();
    let mut cur = QPoly::x();
    for n in 1..=top {
        if n > 1 {
            let next = QPoly::x().mul(&cur).scale(&two).add(&prev.scale(&-BigRational::one()));
            prev = std::mem::replace(&mut cur, next);
        }
        let c = p.coeff(n);
        if !c.is_zero() {
            out = out.add(&cur.scale(&(BigRational::from_integer(c) * &two)));
        }
    }
    out
}

fn variations(signs: impl Iterator<Item = i32>) -> i64 {
    let mut last = 0;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Signature of a Hermitian matrix from the signs of its characteristic
/// polynomial's coefficients (lowest degree first).
fn signature_from_signs(signs: &[i32]) -> i64 {
    let pos = variations(signs.iter().copied());
    let neg = variations(signs.iter().enumerate().map(|(i, &s)| if i % 2 == 1 { -s } else { s }));
    pos - neg
}

/// Everything about `A` needed to evaluate signatures, computed once.
#[derive(Clone, Debug)]
pub struct SignatureEvaluator {
    genus: usize,
    charpoly_t: Vec<IntLaurentPoly>,
    charpoly_x: Vec<QPoly>,
    delta: IntLaurentPoly,
    delta_x: QPoly,
}

impl SignatureEvaluator {
    pub fn new(a: &SeifertMatrix) -> Self {
        let m = a.matrix();
        let n = m.rows();
        let pencil = Matrix::from_fn(n, n, |i, j| {
            let aij = m[(i, j)].clone();
            let aji = m[(j, i)].clone();
            IntLaurentPoly::new(-1, vec![-aji.clone(), &aij + &aji, -aij])
        });
        let charpoly_t = charpoly_berkowitz::<IntLaurentPoly>(&pencil);
        let charpoly_x = charpoly_t.iter().map(symmetric_to_x).collect();
        let delta = alexander_polynomial(a);
        let centered = delta.shift(-(delta.high_exp() / 2));
        let delta_x = symmetric_to_x(&centered).squarefree_part();
        SignatureEvaluator { genus: a.genus(), charpoly_t, charpoly_x, delta, delta_x }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn alexander(&self) -> &IntLaurentPoly {
        &self.delta
    }

    /// Squarefree polynomial in `x = cos θ` vanishing exactly at the breakpoints.
    pub fn breakpoint_poly(&self) -> &QPoly {
        &self.delta_x
    }

    /// Characteristic polynomial coefficients of `M(t)` as polynomials in `x`.
    pub fn charpoly_x(&self) -> &[QPoly] {
        &self.charpoly_x
    }

    /// `σ_z` at `z = e^{2 pi i j/k}`.
    pub fn at_angle(&self, z: UnitRootAngle) -> i64 {
        if z.is_one() {
            return 0;
        }
        let exact = z.rational_cos();
        let mut enclosures: Vec<RatInterval> = Vec::new();
        let signs: Vec<i32> = self
            .charpoly_t
            .iter()
            .zip(&self.charpoly_x)
            .map(|(ct, cx)| {
                if cx.is_zero() || vanishes_at_root_of_unity(ct, z.j, z.k) {
                    return 0;
                }
                if let Some(x) = &exact {
                    return cx.sign_at(x);
                }
                let mut level = 0;
                loop {
                    if enclosures.len() <= level {
                        enclosures.push(cos_turns_enclosure(&z.turns(), 64 << level));
                    }
                    if let Some(s) = cx.eval_interval(&enclosures[level]).sign() {
                        if s != 0 {
                            return s;
                        }
                    }
                    level += 1;
                }
            })
            .collect();
        signature_from_signs(&signs)
    }

    /// `σ_z` at any `z` with rational `x = cos θ` in `[-1, 1]`.
    pub fn at_rational_x(&self, x: &BigRational) -> i64 {
        let signs: Vec<i32> = self.charpoly_x.iter().map(|c| c.sign_at(x)).collect();
        signature_from_signs(&signs)
    }

    /// `σ_z` at the breakpoint isolated by `root`; refines `root` as needed.
    pub fn at_root(&self, root: &mut RootInterval, depth: u32) -> Result<i64, SignatureError> {
        let mut signs = Vec::with_capacity(self.charpoly_x.len());
        for c in &self.charpoly_x {
            signs.push(self.sign_at_root(c, root, depth)?);
        }
        Ok(signature_from_signs(&signs))
    }

    fn sign_at_root(&self, c: &QPoly, root: &mut RootInterval, depth: u32) -> Result<i32, SignatureError> {
        if c.is_zero() {
            return Ok(0);
        }
        if root.is_exact() {
            return Ok(c.sign_at(&root.lo));
        }
        // the common factor is squarefree and has at most the isolated root in
        // the interval, whose endpoints are not roots
        let g = c.gcd(&self.delta_x);
        if g.degree().map_or(false, |d| d > 0) && g.sign_at(&root.lo) * g.sign_at(&root.hi) < 0 {
            return Ok(0);
        }
        for _ in 0..depth {
            if let Some(s) = c.eval_interval(&root.as_interval()).sign() {
                if s != 0 {
                    return Ok(s);
                }
            }
            if root.is_exact() {
                return Ok(c.sign_at(&root.lo));
            }
            root.bisect(&self.delta_x);
        }
        Err(SignatureError::PrecisionExhausted(depth))
    }

    /// Roots of the breakpoint polynomial in `(-1, 1)`, increasing, with
    /// pairwise disjoint closed isolating intervals inside `(-1, 1)`.
    fn x_roots(&self) -> Vec<RootInterval> {
        let one = BigRational::one();
        let mut roots = isolate_roots(&self.delta_x, &-one.clone(), &one);
        for r in roots.iter_mut() {
            while !r.is_exact() && (r.lo <= -one.clone() || r.hi >= one) {
                r.bisect(&self.delta_x);
            }
        }
        for i in 1..roots.len() {
            while roots[i - 1].hi >= roots[i].lo {
                roots[i - 1].bisect(&self.delta_x);
                roots[i].bisect(&self.delta_x);
            }
        }
        roots
    }
}

/// `σ_z(K)`: the signature of `(1 - z) A + (1 - z̄) A^t`.
pub fn tl_signature_at(a: &SeifertMatrix, z: UnitRootAngle) -> i64 {
    SignatureEvaluator::new(a).at_angle(z)
}

/// The unit-circle roots of the Alexander polynomial, ordered by `θ` in `(0, 2π)`.
pub fn breakpoints(a: &SeifertMatrix) -> Vec<CirclePoint> {
    let ev = SignatureEvaluator::new(a);
    circle_points(&ev.x_roots(), &ev.delta_x)
}

fn circle_points(roots: &[RootInterval], poly: &QPoly) -> Vec<CirclePoint> {
    let upper = roots.iter().rev().map(|r| (r, Hemisphere::Upper));
    let lower = roots.iter().map(|r| (r, Hemisphere::Lower));
    upper
        .chain(lower)
        .map(|(r, hemisphere)| CirclePoint { root: r.clone(), hemisphere, poly: poly.clone() })
        .collect()
}

/// Where a point of the circle sits relative to the breakpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// Inside the arc with this index.
    Arc(usize),
    /// At the breakpoint with this index.
    Breakpoint(usize),
}

/// The step function `z -> σ_z(K)`.
///
/// With `m` roots `x_0 < .. < x_{m-1}` of the breakpoint polynomial there are
/// `2m` breakpoints, ordered by `θ`: first the upper hemisphere (decreasing
/// `x`), then the lower one (increasing `x`). Arc `0` runs from the last
/// breakpoint through `θ = 0` to the first; arc `a > 0` runs from breakpoint
/// `a - 1` to breakpoint `a`. Without breakpoints there is a single arc.
#[derive(Clone, Debug)]
pub struct SignatureFunction {
    genus: usize,
    delta: IntLaurentPoly,
    poly: QPoly,
    roots: Vec<RootInterval>,
    /// Value on `(x_{i-1}, x_i)` with `x_{-1} = -1` and `x_m = 1`.
    gap_values: Vec<i64>,
    /// Rational `x` at which each gap value was evaluated.
    gap_samples: Vec<BigRational>,
    root_values: Vec<i64>,
}

impl SignatureFunction {
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn breakpoints(&self) -> Vec<CirclePoint> {
        circle_points(&self.roots, &self.poly)
    }

    pub fn num_breakpoints(&self) -> usize {
        2 * self.roots.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.num_breakpoints().max(1)
    }

    fn gap_of_arc(&self, a: usize) -> usize {
        let m = self.roots.len();
        if a <= m {
            m - a
        } else {
            a - m
        }
    }

    fn root_of_breakpoint(&self, b: usize) -> usize {
        let m = self.roots.len();
        if b < m {
            m - 1 - b
        } else {
            b - m
        }
    }

    pub fn arc_values(&self) -> Vec<i64> {
        (0..self.num_arcs()).map(|a| self.gap_values[self.gap_of_arc(a)]).collect()
    }

    pub fn point_values(&self) -> Vec<i64> {
        (0..self.num_breakpoints()).map(|b| self.root_values[self.root_of_breakpoint(b)]).collect()
    }

    /// Rational `x = cos θ` used to evaluate each arc.
    pub fn arc_samples(&self) -> Vec<BigRational> {
        (0..self.num_arcs()).map(|a| self.gap_samples[self.gap_of_arc(a)].clone()).collect()
    }

    pub fn value_at_one(&self) -> i64 {
        0
    }

    /// Which arc or breakpoint contains `z`.
    pub fn locate(&self, z: UnitRootAngle) -> Location {
        if z.is_one() {
            return Location::Arc(0);
        }
        let m = self.roots.len();
        let upper = 2 * z.j < z.k;
        let lower = 2 * z.j > z.k;
        let on_root = vanishes_at_root_of_unity(&self.delta, z.j, z.k);
        let mut roots = self.roots.clone();
        let mut prec = 64;
        loop {
            let e = z.cos_enclosure(prec);
            if on_root {
                let hit = roots.iter().position(|r| {
                    if r.is_exact() {
                        e.lo == r.lo && e.hi == r.lo
                    } else {
                        r.lo < e.lo && e.hi < r.hi
                    }
                });
                if let Some(i) = hit {
                    let b = if upper { m - 1 - i } else { m + i };
                    return Location::Breakpoint(b);
                }
            } else {
                let below = roots.iter().filter(|r| r.hi < e.lo).count();
                let above = roots.iter().filter(|r| r.lo > e.hi).count();
                if below + above == m {
                    let gap = below;
                    let arc = if m == 0 {
                        0
                    } else if upper || z.j * 2 == z.k {
                        m - gap
                    } else {
                        debug_assert!(lower);
                        if gap == m {
                            0
                        } else {
                            m + gap
                        }
                    };
                    return Location::Arc(arc);
                }
            }
            prec *= 2;
            for r in roots.iter_mut() {
                r.bisect(&self.poly);
            }
        }
    }

    pub fn value_at(&self, z: UnitRootAngle) -> i64 {
        match self.locate(z) {
            Location::Arc(a) => self.gap_values[self.gap_of_arc(a)],
            Location::Breakpoint(b) => self.root_values[self.root_of_breakpoint(b)],
        }
    }

    /// Certified enclosure of `∫ σ_z dz` over the circle with total mass 1.
    pub fn integral(&self, eps: &BigRational) -> Result<RatInterval, SignatureError> {
        if !eps.is_positive() {
            return Err(SignatureError::NonPositiveEps);
        }
        let m = self.roots.len();
        let mut roots = self.roots.clone();
        let mut prec = 32u32;
        let two = BigRational::from_integer(2.into());
        let mut steps = 0u32;
        loop {
            // turn position of each x root in the upper hemisphere; x = -1 sits
            // at 1/2 and x = 1 at 0
            let mut t: Vec<RatInterval> = vec![RatInterval::point(BigRational::new(1.into(), 2.into()))];
            t.extend(roots.iter().map(|r| upper_turns(r, prec)));
            t.push(RatInterval::point(BigRational::zero()));
            let mut total = RatInterval::point(BigRational::zero());
            for g in 0..=m {
                let v = self.gap_values[g];
                if v == 0 {
                    continue;
                }
                let measure = t[g].sub(&t[g + 1]).scale(&two);
                total = total.add(&measure.scale(&BigRational::from_integer(v.into())));
            }
            if &total.width() <= eps {
                return Ok(total);
            }
            steps += 1;
            if steps > DEFAULT_DEPTH {
                return Err(SignatureError::PrecisionExhausted(DEFAULT_DEPTH));
            }
            for r in roots.iter_mut() {
                for _ in 0..4 {
                    r.bisect(&self.poly);
                }
            }
            prec += 4;
        }
    }

    /// Position of every breakpoint relative to the grid `j/k`, `0 <= j < k`.
    fn grid_positions(&self, k: u64, depth: u32) -> Result<Vec<GridPos>, SignatureError> {
        self.breakpoints().into_iter().map(|mut b| grid_position(&mut b, &self.delta, k, depth)).collect()
    }

    /// `Σ_{j=1}^{k} σ_{e^{2 pi i j/k}}`, by counting grid points per arc.
    pub fn eta_cyclic(&self, k: u64) -> Result<i64, SignatureError> {
        self.eta_cyclic_with_depth(k, DEFAULT_DEPTH)
    }

    pub fn eta_cyclic_with_depth(&self, k: u64, depth: u32) -> Result<i64, SignatureError> {
        assert!(k >= 1);
        let n = self.num_breakpoints();
        let arcs = self.arc_values();
        if n == 0 {
            return Ok(arcs[0] * k as i64);
        }
        let pos = self.grid_positions(k, depth)?;
        let points = self.point_values();
        let mut sum = 0i64;
        for (b, p) in pos.iter().enumerate() {
            if p.exact {
                sum += points[b];
            }
        }
        // arc 0 holds the grid points before the first breakpoint and after the last
        let first = pos[0].below;
        let last = k - pos[n - 1].below - pos[n - 1].exact as u64;
        sum += arcs[0] * (first + last) as i64;
        for a in 1..n {
            let count = pos[a].below - pos[a - 1].below - pos[a - 1].exact as u64;
            sum += arcs[a] * count as i64;
        }
        Ok(sum)
    }

    /// CSV rows `kind,index,x_lo,x_hi,hemisphere,value`. Arc rows bound the
    /// arc's `x` range from outside; point rows give the isolating interval.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("kind,index,x_lo,x_hi,hemisphere,value\n");
        let m = self.roots.len();
        let one = BigRational::one();
        for (a, v) in self.arc_values().iter().enumerate() {
            let g = self.gap_of_arc(a);
            let lo = if g == 0 { -one.clone() } else { self.roots[g - 1].lo.clone() };
            let hi = if g == m { one.clone() } else { self.roots[g].hi.clone() };
            let hem = if m == 0 || a == 0 || a == m {
                "both"
            } else if a < m {
                "upper"
            } else {
                "lower"
            };
            out.push_str(&format!("arc,{a},{lo},{hi},{hem},{v}\n"));
        }
        for (b, (p, v)) in self.breakpoints().iter().zip(self.point_values()).enumerate() {
            out.push_str(&format!("point,{b},{},{},{},{v}\n", p.root.lo, p.root.hi, p.hemisphere.as_str()));
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
struct GridPos {
    /// Number of `j` in `[0, k)` with `j/k` strictly before the breakpoint.
    below: u64,
    /// Whether the breakpoint is itself a grid point.
    exact: bool,
}

fn grid_position(b: &mut CirclePoint, delta: &IntLaurentPoly, k: u64, depth: u32) -> Result<GridPos, SignatureError> {
    let kk = BigRational::from_integer(k.into());
    let mut prec = 40u32;
    for _ in 0..depth {
        let e = b.turn_enclosure(prec);
        let lo_j = (&e.lo * &kk).ceil().to_integer();
        let hi_j = (&e.hi * &kk).floor().to_integer();
        if lo_j > hi_j {
            return Ok(GridPos { below: lo_j.to_u64().expect("grid index fits"), exact: false });
        }
        if lo_j == hi_j {
            let j = lo_j.to_u64().expect("grid index fits");
            if j < k && is_grid_hit(b, delta, j, k) {
                return Ok(GridPos { below: j, exact: true });
            }
        }
        b.bisect();
        prec += 4;
    }
    Err(SignatureError::PrecisionExhausted(depth))
}

/// Whether the breakpoint `b` is exactly `e^{2 pi i j/k}`.
fn is_grid_hit(b: &CirclePoint, delta: &IntLaurentPoly, j: u64, k: u64) -> bool {
    let z = UnitRootAngle::new(j, k);
    let upper = 2 * z.j < z.k;
    let lower = 2 * z.j > z.k;
    let right_half = match b.hemisphere {
        Hemisphere::Upper => upper,
        Hemisphere::Lower => lower,
    };
    if !right_half || !vanishes_at_root_of_unity(delta, z.j, z.k) {
        return false;
    }
    // cos(2 pi j/k) is now a root of the breakpoint polynomial; it is this
    // breakpoint iff it lies in the isolating interval, whose endpoints are not roots
    let r = &b.root;
    if let Some(x) = z.rational_cos() {
        return if r.is_exact() { x == r.lo } else { r.lo < x && x < r.hi };
    }
    if r.is_exact() {
        return false;
    }
    let mut prec = 64;
    loop {
        let e = cos_turns_enclosure(&z.turns(), prec);
        if r.lo < e.lo && e.hi < r.hi {
            return true;
        }
        if e.hi < r.lo || e.lo > r.hi {
            return false;
        }
        prec *= 2;
    }
}

/// The signature function of `A`, with every value exact.
pub fn signature_function(a: &SeifertMatrix) -> Result<SignatureFunction, SignatureError> {
    signature_function_with_depth(a, DEFAULT_DEPTH)
}

pub fn signature_function_with_depth(a: &SeifertMatrix, depth: u32) -> Result<SignatureFunction, SignatureError> {
    let ev = SignatureEvaluator::new(a);
    let mut roots = ev.x_roots();
    let m = roots.len();
    let one = BigRational::one();
    let two = BigRational::from_integer(2.into());
    let gap_samples: Vec<BigRational> = (0..=m)
        .map(|g| {
            let lo = if g == 0 { -one.clone() } else { roots[g - 1].hi.clone() };
            let hi = if g == m { one.clone() } else { roots[g].lo.clone() };
            (lo + hi) / &two
        })
        .collect();
    let gap_values = gap_samples.par_iter().map(|x| ev.at_rational_x(x)).collect();
    let root_values = roots.par_iter_mut().map(|r| ev.at_root(r, depth)).collect::<Result<Vec<_>, _>>()?;
    Ok(SignatureFunction {
        genus: ev.genus,
        delta: ev.delta.clone(),
        poly: ev.delta_x.clone(),
        roots,
        gap_values,
        gap_samples,
        root_values,
    })
}

/// `∫_{S^1} σ_z(K) dz` (normalized Haar measure) as an interval of width at most `eps`.
pub fn l2_eta_abelian(a: &SeifertMatrix, eps: &BigRational) -> Result<RatInterval, SignatureError> {
    signature_function(a)?.integral(eps)
}

/// `Σ_{j=1}^{k} σ_{e^{2 pi i j/k}}(K)`.
pub fn eta_cyclic(a: &SeifertMatrix, k: u64) -> Result<i64, SignatureError> {
    signature_function(a)?.eta_cyclic(k)
}

/// The same sum evaluated term by term; used to cross-check [`eta_cyclic`].
pub fn eta_cyclic_direct(a: &SeifertMatrix, k: u64) -> i64 {
    let ev = SignatureEvaluator::new(a);
    (1..=k).into_par_iter().map(|j| ev.at_angle(UnitRootAngle::new(j, k))).sum()
}

/// `eta_cyclic(A, k) / k`.
pub fn l2_eta_cyclic(a: &SeifertMatrix, k: u64) -> Result<BigRational, SignatureError> {
    Ok(BigRational::new(eta_cyclic(a, k)?.into(), k.into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApproximationRow {
    pub k: u64,
    pub average: BigRational,
    /// Enclosure of `|average - ∫ σ|`.
    pub gap: RatInterval,
}

pub fn approximation_table(
    a: &SeifertMatrix,
    schedule: &[u64],
    eps: &BigRational,
) -> Result<Vec<ApproximationRow>, SignatureError> {
    if schedule.is_empty() {
        return Err(SignatureError::InvalidSchedule("empty".into()));
    }
    if schedule[0] == 0 || schedule.windows(2).any(|w| w[0] >= w[1]) {
        return Err(SignatureError::InvalidSchedule("entries must be positive and strictly increasing".into()));
    }
    let sf = signature_function(a)?;
    let integral = sf.integral(eps)?;
    schedule
        .par_iter()
        .map(|&k| {
            let average = BigRational::new(sf.eta_cyclic(k)?.into(), k.into());
            let gap = integral.abs_diff(&average);
            Ok(ApproximationRow { k, average, gap })
        })
        .collect()
}

pub fn approximation_csv(rows: &[ApproximationRow]) -> String {
    let mut out = String::from("k,average,gap_lo,gap_hi\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.k, r.average, r.gap.lo, r.gap.hi));
    }
    out
}

/// `2!, 3!, .., n!`.
pub fn factorial_schedule(n: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 1u64;
    for i in 2..=n as u64 {
        f = f.checked_mul(i).expect("factorial overflows u64");
        out.push(f);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{figure_eight, slice_a4, trefoil, unknot};

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn angles_reduce() {
        assert_eq!(UnitRootAngle::new(2, 12), UnitRootAngle::new(1, 6));
        assert_eq!(UnitRootAngle::new(7, 7), UnitRootAngle::new(0, 1));
        assert_eq!(UnitRootAngle::from_signed(-1, 6).numer(), 5);
        assert_eq!(UnitRootAngle::new(1, 6).conj(), UnitRootAngle::new(5, 6));
    }

    #[test]
    fn chebyshev_conversion() {
        // t - 1 + t^-1 = 2x - 1
        let p = IntLaurentPoly::from_i64s(-1, &[1, -1, 1]);
        assert_eq!(symmetric_to_x(&p), QPoly::from_i64s(&[-1, 2]));
        // t^2 + t^-2 = 2(2x^2 - 1)
        let p = IntLaurentPoly::from_i64s(-2, &[1, 0, 0, 0, 1]);
        assert_eq!(symmetric_to_x(&p), QPoly::from_i64s(&[-2, 0, 4]));
    }

    #[test]
    fn descartes_counts() {
        // λ^2 - 1: one positive, one negative
        assert_eq!(signature_from_signs(&[-1, 0, 1]), 0);
        // λ (λ + 2): zero and negative
        assert_eq!(signature_from_signs(&[0, 1, 1]), -1);
        // (λ - 1)(λ - 2)
        assert_eq!(signature_from_signs(&[1, -1, 1]), 2);
    }

    #[test]
    fn trefoil_values() {
        let a = trefoil();
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(0, 1)), 0);
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(1, 2)), -2);
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(1, 6)), -1);
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(5, 6)), -1);
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(1, 7)), 0);
        assert_eq!(tl_signature_at(&a, UnitRootAngle::new(1, 5)), -2);
    }

    #[test]
    fn trefoil_function() {
        let sf = signature_function(&trefoil()).unwrap();
        assert_eq!(sf.num_breakpoints(), 2);
        let bp = sf.breakpoints();
        assert_eq!(bp[0].root.lo, q(1, 2));
        assert_eq!(bp[0].hemisphere, Hemisphere::Upper);
        assert_eq!(sf.arc_values(), vec![0, -2]);
        assert_eq!(sf.point_values(), vec![-1, -1]);
        assert_eq!(sf.locate(UnitRootAngle::new(1, 6)), Location::Breakpoint(0));
        assert_eq!(sf.locate(UnitRootAngle::new(5, 6)), Location::Breakpoint(1));
        assert_eq!(sf.locate(UnitRootAngle::new(1, 2)), Location::Arc(1));
        assert_eq!(sf.locate(UnitRootAngle::new(1, 12)), Location::Arc(0));
        assert_eq!(sf.locate(UnitRootAngle::new(11, 12)), Location::Arc(0));
    }

    #[test]
    fn unknot_function() {
        let sf = signature_function(&unknot()).unwrap();
        assert_eq!(sf.num_breakpoints(), 0);
        assert_eq!(sf.arc_values(), vec![0]);
        assert_eq!(sf.eta_cyclic(6).unwrap(), 0);
    }

    #[test]
    fn figure_eight_has_no_breakpoints() {
        // -t^2 + 3t - 1 has real roots only
        let sf = signature_function(&figure_eight()).unwrap();
        assert_eq!(sf.num_breakpoints(), 0);
        assert_eq!(sf.arc_values(), vec![0]);
    }

    #[test]
    fn eta_cyclic_counts_match_direct_sums() {
        for a in [trefoil(), slice_a4(), figure_eight()] {
            let sf = signature_function(&a).unwrap();
            for k in 1..=30 {
                assert_eq!(sf.eta_cyclic(k).unwrap(), eta_cyclic_direct(&a, k), "k = {k}");
            }
        }
    }

    #[test]
    fn trefoil_sums() {
        assert_eq!(eta_cyclic(&trefoil(), 6).unwrap(), -8);
        assert_eq!(eta_cyclic(&trefoil(), 1).unwrap(), 0);
        assert_eq!(l2_eta_cyclic(&trefoil(), 2).unwrap(), q(-1, 1));
    }

    #[test]
    fn trefoil_integral() {
        let eps = q(1, 1_000_000_000);
        let iv = l2_eta_abelian(&trefoil(), &eps).unwrap();
        assert!(iv.width() <= eps);
        assert!(iv.contains(&q(-4, 3)));
    }

    #[test]
    fn slice_a4_values() {
        let a = slice_a4();
        let sf = signature_function(&a).unwrap();
        assert!(sf.arc_values().iter().all(|&v| v == 0));
        // terms -1, 0, 0, 0, -1, 0
        assert_eq!(sf.eta_cyclic(6).unwrap(), -2);
        let iv = sf.integral(&q(1, 1_000_000_000)).unwrap();
        assert!(iv.contains(&q(0, 1)));
    }

    #[test]
    fn large_grid_is_cheap() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let a = crate::fixtures::random_seifert(&mut rng, 3, 2, 8);
        let sf = signature_function(&a).unwrap();
        let k = 3_628_800;
        let v = sf.eta_cyclic(k).unwrap();
        assert!(v.unsigned_abs() <= 6 * k);
    }

    #[test]
    fn schedule_validation() {
        let eps = q(1, 1000);
        assert!(approximation_table(&trefoil(), &[], &eps).is_err());
        assert!(approximation_table(&trefoil(), &[6, 2], &eps).is_err());
        assert_eq!(factorial_schedule(5), vec![2, 6, 24, 120]);
    }

    #[test]
    fn csv_layout() {
        let csv = signature_function(&trefoil()).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "kind,index,x_lo,x_hi,hemisphere,value");
        assert_eq!(lines[1], "arc,0,1/2,1,both,0");
        assert_eq!(lines[2], "arc,1,-1,1/2,both,-2");
        assert_eq!(lines[3], "point,0,1/2,1/2,upper,-1");
        assert_eq!(lines[4], "point,1,1/2,1/2,lower,-1");
    }
}
