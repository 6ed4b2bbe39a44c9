//! Seifert matrices and the classical invariants read off from them: the
//! Alexander polynomial, the Arf invariant and algebraic-sliceness
//! metabolizers.
//!
//! A Seifert matrix is a `2g x 2g` integer matrix `A` with `det(A - A^t) = 1`.
//! The empty matrix is accepted and represents the unknot.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::laurent::IntLaurentPoly;
use crate::matrix::IntMatrix;
use crate::snf::{hermite_rows, saturate_rows, smith_normal_form};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeifertError {
    #[error("Seifert matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("Seifert matrix has odd size {0}")]
    OddSize(usize),
    #[error("det(A - A^t) = {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("no metabolizer with coefficients bounded by {bound}")]
    SearchExhausted { bound: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: IntMatrix,
    name: Option<String>,
}

impl SeifertMatrix {
    /// Validate a raw row-major matrix.
    pub fn new(raw: &[Vec<i64>]) -> Result<Self, SeifertError> {
        let rows: Vec<Vec<BigInt>> = raw.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_big_rows(rows)
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, SeifertError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(SeifertError::NotSquare { rows: n, cols: bad.len() });
        }
        let m = IntMatrix::from_rows(rows).expect("rows checked");
        Self::from_matrix(m)
    }

    pub fn from_matrix(m: IntMatrix) -> Result<Self, SeifertError> {
        if !m.is_square() {
            return Err(SeifertError::NotSquare { rows: m.rows(), cols: m.cols() });
        }
        if m.rows() % 2 != 0 {
            return Err(SeifertError::OddSize(m.rows()));
        }
        let d = (&m - &m.transpose()).det();
        if !d.is_one() {
            return Err(SeifertError::NotUnimodular(d));
        }
        Ok(SeifertMatrix { entries: m, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.rows()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.entries.to_rows().into_iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
    }

    /// Block sum `A ⊕ B`, the Seifert matrix of a connected sum.
    pub fn block_sum(&self, other: &SeifertMatrix) -> SeifertMatrix {
        SeifertMatrix { entries: self.entries.block_sum(&other.entries), name: None }
    }

    /// `P^t A P` for a unimodular `P`.
    pub fn congruent(&self, p: &IntMatrix) -> Result<SeifertMatrix, SeifertError> {
        Self::from_matrix(&(&p.transpose() * &self.entries) * p)
    }

    /// `x^t A y`.
    pub fn form(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let n = self.size();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                acc += &x[i] * &self.entries[(i, j)] * &y[j];
            }
        }
        acc
    }
}

/// `det(t A - A^t)`, normalized to lowest exponent 0 and value 1 at `t = 1`.
///
/// The determinant is evaluated at `t = 0, 1, .., n` and interpolated.
pub fn alexander_polynomial(a: &SeifertMatrix) -> IntLaurentPoly {
    let m = a.matrix();
    let mt = m.transpose();
    let n = a.size();
    let xs: Vec<BigRational> = (0..=n).map(|i| BigRational::from_integer(BigInt::from(i))).collect();
    let ys: Vec<BigRational> = (0..=n)
        .map(|i| {
            let ti = BigInt::from(i);
            BigRational::from_integer((&m.scale(&ti) - &mt).det())
        })
        .collect();
    let coeffs = newton_interpolate(&xs, &ys);
    let ints: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    IntLaurentPoly::new(0, ints).alexander_normalized()
}

/// Coefficients (lowest degree first) of the interpolating polynomial.
fn newton_interpolate(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // expand sum dd[i] prod_{j<i} (x - xs[j]) by Horner from the top
    let mut poly: Vec<BigRational> = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for k in 0..n {
            if poly[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] += &poly[k];
            }
            next[k] -= &poly[k] * &xs[i];
        }
        next[0] += &dd[i];
        poly = next;
    }
    poly
}

/// Arf invariant of the quadratic form `q(x) = x^t A x mod 2`, computed from a
/// symplectic basis of `A + A^t` over `Z/2`.
pub fn arf_invariant(a: &SeifertMatrix) -> u8 {
    let n = a.size();
    let am: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|j| a.matrix()[(i, j)].mod_floor(&BigInt::from(2)).to_u8().unwrap()).collect())
        .collect();
    let bilinear = |x: &[u8], y: &[u8]| -> u8 {
        let mut s = 0u8;
        for i in 0..n {
            for j in 0..n {
                s ^= x[i] & y[j] & (am[i][j] ^ am[j][i]);
            }
        }
        s
    };
    let quad = |x: &[u8]| -> u8 {
        let mut s = 0u8;
        for i in 0..n {
            for j in 0..n {
                s ^= x[i] & x[j] & am[i][j];
            }
        }
        s
    };
    let mut pool: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
    let mut arf = 0u8;
    while let Some(e) = pool.pop() {
        let fi = pool
            .iter()
            .position(|f| bilinear(&e, f) == 1)
            .expect("A - A^t is nondegenerate mod 2");
        let f = pool.swap_remove(fi);
        arf ^= quad(&e) & quad(&f);
        for w in pool.iter_mut() {
            let we = bilinear(w, &e);
            let wf = bilinear(w, &f);
            for k in 0..n {
                w[k] ^= (wf & e[k]) ^ (we & f[k]);
            }
        }
    }
    arf
}

/// A rank-`g` direct summand of `Z^2g` on which the Seifert form vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metabolizer {
    pub basis: Vec<Vec<BigInt>>,
}

impl Metabolizer {
    /// Check both invariants: the form vanishes on the basis and the span is a
    /// direct summand of rank `g`.
    pub fn verify(&self, a: &SeifertMatrix) -> bool {
        let g = a.genus();
        if self.basis.len() != g {
            return false;
        }
        if g == 0 {
            return true;
        }
        for x in &self.basis {
            for y in &self.basis {
                if !a.form(x, y).is_zero() {
                    return false;
                }
            }
        }
        let m = IntMatrix::from_rows(self.basis.clone()).unwrap();
        smith_normal_form(&m).diagonal().iter().all(|d| d.is_one())
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.basis.iter().map(|r| r.iter().map(|x| x.to_i64().unwrap()).collect()).collect()
    }
}

/// Search for a metabolizer of the Seifert form among spans of primitive
/// vectors with entries bounded by `bound` in absolute value.
///
/// Candidates are tried by increasing max-norm; a rationally independent
/// isotropic family of size `g` is saturated to a direct summand (isotropy
/// passes to the saturation) and returned in Hermite normal form.
pub fn find_seifert_metabolizer(a: &SeifertMatrix, bound: u32) -> Result<Metabolizer, SeifertError> {
    let g = a.genus();
    if g == 0 {
        return Ok(Metabolizer { basis: vec![] });
    }
    let n = a.size();
    let b = bound as i64;
    let mut candidates: Vec<Vec<BigInt>> = Vec::new();
    let mut v = vec![-b; n];
    loop {
        if is_canonical_primitive(&v) {
            let bv: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            if a.form(&bv, &bv).is_zero() {
                candidates.push(bv);
            }
        }
        // odometer
        let mut i = 0;
        while i < n {
            if v[i] < b {
                v[i] += 1;
                break;
            }
            v[i] = -b;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    candidates.sort_by(|x, y| search_key(x).cmp(&search_key(y)));

    let mut chosen: Vec<usize> = Vec::new();
    if extend(a, &candidates, &mut chosen, 0, g) {
        let rows: Vec<Vec<BigInt>> = chosen.iter().map(|&i| candidates[i].clone()).collect();
        let m = IntMatrix::from_rows(rows).unwrap();
        let sat = hermite_rows(&saturate_rows(&m));
        let met = Metabolizer { basis: sat.to_rows() };
        debug_assert!(met.verify(a));
        return Ok(met);
    }
    Err(SeifertError::SearchExhausted { bound })
}

fn is_canonical_primitive(v: &[i64]) -> bool {
    match v.iter().find(|&&x| x != 0) {
        Some(&first) if first > 0 => v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1,
        _ => false,
    }
}

/// Order: max-norm, then l1-norm, then lexicographically larger first (so
/// `e_1` precedes `e_2`).
fn search_key(v: &[BigInt]) -> (BigInt, BigInt, Vec<BigInt>) {
    let maxn = v.iter().map(|x| x.abs()).max().unwrap_or_default();
    let l1: BigInt = v.iter().map(|x| x.abs()).sum();
    (maxn, l1, v.iter().map(|x| -x).collect())
}

fn extend(a: &SeifertMatrix, cands: &[Vec<BigInt>], chosen: &mut Vec<usize>, start: usize, g: usize) -> bool {
    if chosen.len() == g {
        return true;
    }
    for c in start..cands.len() {
        let y = &cands[c];
        let orth = chosen.iter().all(|&i| a.form(&cands[i], y).is_zero() && a.form(y, &cands[i]).is_zero());
        if !orth {
            continue;
        }
        let mut rows: Vec<Vec<BigInt>> = chosen.iter().map(|&i| cands[i].clone()).collect();
        rows.push(y.clone());
        if IntMatrix::from_rows(rows).unwrap().rank() != chosen.len() + 1 {
            continue;
        }
        chosen.push(c);
        if extend(a, cands, chosen, c + 1, g) {
            return true;
        }
        chosen.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn validation() {
        assert_eq!(SeifertMatrix::new(&[]).unwrap().genus(), 0);
        assert_eq!(SeifertMatrix::new(&[vec![-1, 1], vec![0, -1]]).unwrap().genus(), 1);
        assert_eq!(
            SeifertMatrix::new(&[vec![1, 2], vec![2, 1]]),
            Err(SeifertError::NotUnimodular(BigInt::zero()))
        );
        assert!(matches!(SeifertMatrix::new(&[vec![1, 2], vec![2]]), Err(SeifertError::NotSquare { .. })));
        assert_eq!(SeifertMatrix::new(&[vec![1]]), Err(SeifertError::OddSize(1)));
        assert_eq!(
            SeifertMatrix::new(&[vec![0, 2], vec![0, 0]]),
            Err(SeifertError::NotUnimodular(BigInt::from(4)))
        );
    }

    #[test]
    fn alexander_small_cases() {
        assert_eq!(alexander_polynomial(&fixtures::unknot()), IntLaurentPoly::one());
        assert_eq!(alexander_polynomial(&fixtures::trefoil()), IntLaurentPoly::from_i64s(0, &[1, -1, 1]));
        assert_eq!(alexander_polynomial(&fixtures::figure_eight()), IntLaurentPoly::from_i64s(0, &[-1, 3, -1]));
    }

    #[test]
    fn arf_small_cases() {
        assert_eq!(arf_invariant(&fixtures::unknot()), 0);
        assert_eq!(arf_invariant(&fixtures::trefoil()), 1);
        assert_eq!(arf_invariant(&fixtures::figure_eight()), 1);
        assert_eq!(arf_invariant(&fixtures::slice_a4()), 0);
    }

    #[test]
    fn metabolizer_of_a4() {
        let a = fixtures::slice_a4();
        let m = find_seifert_metabolizer(&a, 1).unwrap();
        assert_eq!(m.to_i64_rows(), vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0]]);
        assert!(m.verify(&a));
        assert_eq!(find_seifert_metabolizer(&fixtures::unknot(), 1).unwrap().basis.len(), 0);
    }

    #[test]
    fn trefoil_has_no_metabolizer() {
        for bound in 1..=6 {
            assert_eq!(
                find_seifert_metabolizer(&fixtures::trefoil(), bound),
                Err(SeifertError::SearchExhausted { bound })
            );
        }
    }

    #[test]
    fn brute_force_trefoil_isotropic_vectors() {
        // x^t A x = -x1^2 + x1 x2 - x2^2 is negative definite, so no isotropic x != 0
        for x1 in -10i64..=10 {
            for x2 in -10i64..=10 {
                if (x1, x2) != (0, 0) {
                    assert!(-x1 * x1 + x1 * x2 - x2 * x2 < 0);
                }
            }
        }
    }

    #[test]
    fn verify_rejects_non_summands() {
        let a = fixtures::slice_a4();
        let m = Metabolizer { basis: vec![vec![2.into(), 0.into(), 0.into(), 0.into()], vec![0.into(), 1.into(), 0.into(), 0.into()]] };
        assert!(!m.verify(&a));
    }
}
