//! Dense univariate polynomials over `Q` with Sturm-sequence root isolation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::interval::RatInterval;

/// Polynomial with rational coefficients, stored lowest degree first and trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::new(coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigRational::one()] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        QPoly { coeffs: vec![BigRational::zero(), BigRational::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> i32 {
        sign(&self.eval(x))
    }

    /// Interval enclosure of the range over `x`, by interval Horner evaluation.
    pub fn eval_interval(&self, x: &RatInterval) -> RatInterval {
        let mut acc = RatInterval::point(BigRational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add_scalar(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return QPoly::zero();
        }
        QPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        QPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn scale(&self, s: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, d: &QPoly) -> (QPoly, QPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (QPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = &r[top] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let v = &c * dj;
                r[top - dd + j] -= v;
            }
            q[top - dd] = c;
        }
        r.truncate(dd);
        (QPoly::new(q), QPoly::new(r))
    }

    pub fn rem(&self, d: &QPoly) -> QPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `f / gcd(f, f')`, made monic.
    pub fn squarefree_part(&self) -> QPoly {
        if self.degree().map_or(true, |d| d == 0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// The standard Sturm sequence `f, f', -rem(f, f'), ...`.
    pub fn sturm_sequence(&self) -> Vec<QPoly> {
        let mut seq = vec![self.clone()];
        if self.is_zero() {
            return seq;
        }
        let mut prev = self.clone();
        let mut cur = self.derivative();
        while !cur.is_zero() {
            let r = prev.rem(&cur);
            seq.push(cur.clone());
            prev = cur;
            cur = r.scale(&-BigRational::one());
        }
        seq
    }

    /// Substitute `x -> a x` (scale the variable).
    pub fn compose_scale(&self, a: &BigRational) -> QPoly {
        let mut pw = BigRational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pw);
            pw = &pw * a;
        }
        QPoly::new(out)
    }
}

pub(crate) fn sign(q: &BigRational) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sign_variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial in the half-open
/// interval `(a, b]`, via Sturm's theorem.
pub fn count_roots(sturm: &[QPoly], a: &BigRational, b: &BigRational) -> usize {
    let va = sign_variations(sturm.iter().map(|p| p.sign_at(a)));
    let vb = sign_variations(sturm.iter().map(|p| p.sign_at(b)));
    va.saturating_sub(vb)
}

/// An isolating interval for a real root of a squarefree polynomial.
///
/// Either `lo == hi` and the root is the rational `lo`, or `lo < hi`, the
/// polynomial takes nonzero values of opposite sign at the endpoints, and the
/// interval contains exactly one root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn as_interval(&self) -> RatInterval {
        RatInterval::new(self.lo.clone(), self.hi.clone())
    }

    /// One bisection step; `f` must be the squarefree polynomial this isolates.
    pub fn bisect(&mut self, f: &QPoly) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        let sm = f.sign_at(&mid);
        if sm == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if sm == f.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisect until the width is at most `w`.
    pub fn refine_to(&mut self, f: &QPoly, w: &BigRational) {
        while !self.is_exact() && &self.width() > w {
            self.bisect(f);
        }
    }
}

/// Isolate all real roots of the squarefree polynomial `f` in the open
/// interval `(a, b)`, returned in increasing order.
pub fn isolate_roots(f: &QPoly, a: &BigRational, b: &BigRational) -> Vec<RootInterval> {
    let mut out = Vec::new();
    if f.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let sturm = f.sturm_sequence();
    let two = BigRational::from_integer(2.into());
    // roots in (a, b): count on (a, b] minus a possible root at b
    let mut stack = vec![(a.clone(), b.clone())];
    while let Some((lo, hi)) = stack.pop() {
        let mut n = count_roots(&sturm, &lo, &hi);
        let hi_is_root = f.sign_at(&hi) == 0;
        if hi_is_root {
            n -= 1;
        }
        if n == 0 {
            continue;
        }
        let lo_ok = f.sign_at(&lo) != 0;
        if n == 1 && lo_ok && !hi_is_root {
            out.push(RootInterval { lo, hi });
            continue;
        }
        let mid = (&lo + &hi) / &two;
        if f.sign_at(&mid) == 0 {
            out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
        }
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{}", c),
                1 => format!("({})x", c),
                _ => format!("({})x^{}", c, i),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = QPoly::from_i64s(&[-2, 1, 1]);
        let b = QPoly::from_i64s(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), QPoly::from_i64s(&[-1, 1]));
        let (qq, r) = a.div_rem(&QPoly::from_i64s(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(qq, QPoly::from_i64s(&[2, 1]));
    }

    #[test]
    fn squarefree() {
        // (x-1)^2 (x+1)
        let f = QPoly::from_i64s(&[1, -1, -1, 1]);
        assert_eq!(f.squarefree_part(), QPoly::from_i64s(&[-1, 0, 1]));
    }

    #[test]
    fn isolates_sqrt2() {
        let f = QPoly::from_i64s(&[-2, 0, 1]);
        let roots = isolate_roots(&f, &q(-4, 1), &q(4, 1));
        assert_eq!(roots.len(), 2);
        let mut r = roots[1].clone();
        r.refine_to(&f, &q(1, 1 << 20));
        assert!(r.lo < q(141422, 100000) && r.hi > q(141421, 100000));
    }

    #[test]
    fn exact_rational_roots() {
        // x(2x - 1): the root 0 is hit exactly by the first midpoint
        let f = QPoly::from_i64s(&[0, -1, 2]);
        let roots = isolate_roots(&f, &q(-1, 1), &q(1, 1));
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0], RootInterval { lo: q(0, 1), hi: q(0, 1) });
        assert!(roots[1].lo <= q(1, 2) && roots[1].hi >= q(1, 2));
        // (x - 1/3)(x + 1/3), roots never hit by dyadic midpoints
        let g = QPoly::new(vec![q(-1, 9), q(0, 1), q(1, 1)]);
        let roots = isolate_roots(&g, &q(-1, 1), &q(1, 1));
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi <= roots[1].lo);
    }

    #[test]
    fn endpoints_are_excluded() {
        let f = QPoly::from_i64s(&[-1, 0, 1]);
        assert!(isolate_roots(&f, &q(-1, 1), &q(1, 1)).is_empty());
    }
}
