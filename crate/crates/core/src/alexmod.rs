//! The Alexander module, its finite cyclic quotients, the linking form of the
//! double branched cover, metabolizers of finite linking forms and characters
//! vanishing on them.
//!
//! The quotient `H/(t^k - 1)` is computed as the cokernel of the
//! `2gk × 2gk` matrix `S⊗A - I⊗A^t` (`S` the cyclic shift), which is the
//! algebraic model of `H_1` of the `k`-fold cyclic cover used throughout.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::laurent::IntLaurentPoly;
use crate::matrix::{IntMatrix, Matrix};
use crate::seifert::{alexander_polynomial, SeifertMatrix};
use crate::snf::smith_normal_form;

/// Default cap on the order of groups searched exhaustively.
pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexModError {
    #[error("det(A + A^t) = 0: the double cover has infinite homology")]
    DegenerateForm,
    #[error("group of order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: BigInt, cap: u64 },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid linking form: {0}")]
    InvalidForm(String),
}

/// The presentation `tA - A^t` of the Alexander module over `Λ = Z[t, t^-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaModulePresentation {
    a: IntMatrix,
}

impl LambdaModulePresentation {
    pub fn seifert(&self) -> &IntMatrix {
        &self.a
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    /// The pencil `(A, A^t)`.
    pub fn pencil(&self) -> (IntMatrix, IntMatrix) {
        (self.a.clone(), self.a.transpose())
    }

    /// `det(tA - A^t)`, normalized like the Alexander polynomial.
    pub fn determinant(&self) -> IntLaurentPoly {
        let a = SeifertMatrix::from_matrix(self.a.clone()).expect("presentation comes from a Seifert matrix");
        alexander_polynomial(&a)
    }
}

pub fn alexander_module(a: &SeifertMatrix) -> LambdaModulePresentation {
    LambdaModulePresentation { a: a.matrix().clone() }
}

/// A finite abelian group `⊕ Z/d_i` with an automorphism `t` given on
/// coordinates by `h ↦ T h` (entry `i` read modulo `d_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLambdaModule {
    torsion: Vec<BigInt>,
    t: IntMatrix,
}

impl FiniteLambdaModule {
    /// Validates `d_i >= 2`, `d_i | d_{i+1}`, that `T` is well defined on the
    /// quotient and that it is invertible. Entries of `T` are reduced.
    pub fn new(torsion: Vec<BigInt>, t: IntMatrix) -> Result<Self, AlexModError> {
        let r = torsion.len();
        if t.rows() != r || t.cols() != r {
            return Err(AlexModError::InvalidModule(format!("t must be {r}x{r}")));
        }
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(AlexModError::InvalidModule("torsion coefficients must be at least 2".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(AlexModError::InvalidModule("torsion coefficients must divide each other".into()));
        }
        for i in 0..r {
            for j in 0..r {
                if !(&t[(i, j)] * &torsion[j]).is_multiple_of(&torsion[i]) {
                    return Err(AlexModError::InvalidModule(format!("t is not well defined (entry {i},{j})")));
                }
            }
        }
        let t = Matrix::from_fn(r, r, |i, j| t[(i, j)].mod_floor(&torsion[i]));
        let m = FiniteLambdaModule { torsion, t };
        if !m.t_is_invertible() {
            return Err(AlexModError::InvalidModule("t is not invertible".into()));
        }
        Ok(m)
    }

    pub fn from_i64(torsion: &[i64], t: &[Vec<i64>]) -> Result<Self, AlexModError> {
        let t = if torsion.is_empty() {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_i64_rows(t).ok_or_else(|| AlexModError::InvalidModule("ragged t matrix".into()))?
        };
        Self::new(torsion.iter().map(|&d| BigInt::from(d)).collect(), t)
    }

    pub fn trivial() -> Self {
        FiniteLambdaModule { torsion: vec![], t: IntMatrix::zeros(0, 0) }
    }

    /// `Z/d` with `t` acting as multiplication by `a`.
    pub fn cyclic(d: i64, a: i64) -> Result<Self, AlexModError> {
        Self::from_i64(&[d], &[vec![a]])
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn t_matrix(&self) -> &IntMatrix {
        &self.t
    }

    pub fn rank(&self) -> usize {
        self.torsion.len()
    }

    pub fn order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn exponent(&self) -> BigInt {
        self.torsion.last().cloned().unwrap_or_else(BigInt::one)
    }

    fn t_is_invertible(&self) -> bool {
        // x ↦ T x is onto ⊕ Z/d_i iff T Z^r + D Z^r = Z^r
        let r = self.rank();
        if r == 0 {
            return true;
        }
        let m = Matrix::from_fn(r, 2 * r, |i, j| {
            if j < r {
                self.t[(i, j)].clone()
            } else if j - r == i {
                self.torsion[i].clone()
            } else {
                BigInt::zero()
            }
        });
        smith_normal_form(&m).diagonal().iter().all(|x| x.is_one())
    }

    pub fn reduce(&self, h: &[BigInt]) -> Vec<BigInt> {
        h.iter().zip(&self.torsion).map(|(x, d)| x.mod_floor(d)).collect()
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).zip(&self.torsion).map(|((x, y), d)| (x + y).mod_floor(d)).collect()
    }

    pub fn neg(&self, a: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(&self.torsion).map(|(x, d)| (-x).mod_floor(d)).collect()
    }

    pub fn scale(&self, c: &BigInt, a: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(&self.torsion).map(|(x, d)| (c * x).mod_floor(d)).collect()
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().zip(&self.torsion).all(|(x, d)| x.is_multiple_of(d))
    }

    pub fn apply_t(&self, h: &[BigInt]) -> Vec<BigInt> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                let s: BigInt = (0..r).map(|j| &self.t[(i, j)] * &h[j]).sum();
                s.mod_floor(&self.torsion[i])
            })
            .collect()
    }

    /// Matrix of `t^n` for `n >= 0`, reduced.
    pub fn t_power(&self, n: u64) -> IntMatrix {
        let r = self.rank();
        let mut result = IntMatrix::identity(r);
        let mut base = self.t.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = self.reduce_matrix(&(&result * &base));
            }
            base = self.reduce_matrix(&(&base * &base));
            e >>= 1;
        }
        result
    }

    fn reduce_matrix(&self, m: &IntMatrix) -> IntMatrix {
        Matrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].mod_floor(&self.torsion[i]))
    }

    /// Matrix of `t^-1`.
    pub fn t_inverse(&self) -> IntMatrix {
        let o = self.t_order(u64::MAX).expect("t has finite order on a finite group");
        self.t_power(o - 1)
    }

    /// Whether `t^n` is the identity.
    pub fn t_power_is_identity(&self, n: u64) -> bool {
        self.reduce_matrix(&self.t_power(n)) == self.reduce_matrix(&IntMatrix::identity(self.rank()))
    }

    /// Order of `t`, searched up to `limit`.
    pub fn t_order(&self, limit: u64) -> Option<u64> {
        let id = self.reduce_matrix(&IntMatrix::identity(self.rank()));
        let mut p = id.clone();
        for n in 1..=limit {
            p = self.reduce_matrix(&(&self.t * &p));
            if p == id {
                return Some(n);
            }
        }
        None
    }

    /// Torsion coefficients as machine integers, if the group is small enough.
    pub fn small_torsion(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(|d| d.to_u64()).collect()
    }

    /// All elements in mixed-radix order (first coordinate fastest).
    pub fn elements(&self, cap: u64) -> Result<Vec<Vec<BigInt>>, AlexModError> {
        let order = self.order();
        if order > BigInt::from(cap) {
            return Err(AlexModError::CapExceeded { order, cap });
        }
        let d = self.small_torsion().expect("order below cap");
        let n = order.to_u64().unwrap();
        Ok((0..n).map(|code| decode(code, &d).into_iter().map(BigInt::from).collect()).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "torsion": self.torsion.iter().map(int_json).collect::<Vec<_>>(),
            "t": self.t.to_rows().iter().map(|r| r.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, AlexModError> {
        let bad = |m: &str| AlexModError::InvalidModule(m.to_string());
        let torsion: Vec<BigInt> = v
            .get("torsion")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"torsion\" array"))?
            .iter()
            .map(|x| json_int(x).ok_or_else(|| bad("torsion entries must be integers")))
            .collect::<Result<_, _>>()?;
        let rows: Vec<Vec<BigInt>> = v
            .get("t")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"t\" matrix"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("t rows must be arrays"))?
                    .iter()
                    .map(|x| json_int(x).ok_or_else(|| bad("t entries must be integers")))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let t = if rows.is_empty() {
            IntMatrix::zeros(0, 0)
        } else {
            Matrix::from_rows(rows).ok_or_else(|| bad("ragged t matrix"))?
        };
        Self::new(torsion, t)
    }
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn json_int(v: &Value) -> Option<BigInt> {
    if let Some(i) = v.as_i64() {
        return Some(BigInt::from(i));
    }
    v.as_str().and_then(|s| s.parse().ok())
}

pub(crate) fn decode(mut code: u64, d: &[u64]) -> Vec<u64> {
    d.iter()
        .map(|&di| {
            let c = code % di;
            code /= di;
            c
        })
        .collect()
}

pub(crate) fn encode(h: &[u64], d: &[u64]) -> u64 {
    h.iter().zip(d).rev().fold(0, |acc, (&x, &di)| acc * di + x)
}

/// Result of [`cyclic_quotient`]: `H/(t^k - 1) ≅ Z^free_rank ⊕ torsion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuotient {
    pub torsion: FiniteLambdaModule,
    pub free_rank: usize,
}

/// The block matrix `S⊗A - I⊗A^t`, blocks indexed by powers of `t`.
pub fn cyclic_relation_matrix(p: &LambdaModulePresentation, k: usize) -> IntMatrix {
    let n = p.size();
    let a = &p.a;
    Matrix::from_fn(n * k, n * k, |row, col| {
        let (bi, i) = (row / n, row % n);
        let (bj, j) = (col / n, col % n);
        let mut v = BigInt::zero();
        // S e_bj = e_{bj+1}
        if bi == (bj + 1) % k {
            v += &a[(i, j)];
        }
        if bi == bj {
            v -= &a[(j, i)];
        }
        v
    })
}

/// `H/(t^k - 1)` with the induced action of `t` on its torsion.
pub fn cyclic_quotient(p: &LambdaModulePresentation, k: usize) -> CyclicQuotient {
    assert!(k >= 1);
    let n = p.size();
    if n == 0 {
        return CyclicQuotient { torsion: FiniteLambdaModule::trivial(), free_rank: 0 };
    }
    let rel = cyclic_relation_matrix(p, k);
    let s = smith_normal_form(&rel);
    let diag = s.diagonal();
    let torsion_idx: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] > BigInt::one()).collect();
    let free_rank = diag.iter().filter(|x| x.is_zero()).count();
    // coordinates y = U x; t acts on x by S⊗I, hence on y by U (S⊗I) U^-1
    let nk = n * k;
    let shift = Matrix::from_fn(nk, nk, |row, col| {
        if row % n == col % n && row / n == (col / n + 1) % k {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let u_rows = s.u.submatrix(&torsion_idx, &(0..nk).collect::<Vec<_>>());
    let u_inv_cols = s.u_inv.submatrix(&(0..nk).collect::<Vec<_>>(), &torsion_idx);
    let t = &(&u_rows * &shift) * &u_inv_cols;
    let torsion: Vec<BigInt> = torsion_idx.iter().map(|&i| diag[i].clone()).collect();
    let module = FiniteLambdaModule::new(torsion, t).expect("induced action on the torsion is an automorphism");
    CyclicQuotient { torsion: module, free_rank }
}

/// `|Res(Δ, (t^k - 1)/(t - 1))| = |∏_{j=1}^{k-1} Δ(ζ_k^j)|`; zero means the
/// quotient is infinite.
pub fn torsion_order_by_resultant(a: &SeifertMatrix, k: usize) -> BigInt {
    assert!(k >= 1);
    let delta = alexander_polynomial(a);
    let f: Vec<BigInt> = delta.to_poly_coeffs();
    let g: Vec<BigInt> = vec![BigInt::one(); k];
    resultant(&f, &g).abs()
}

/// Resultant of two integer polynomials (lowest degree first) by the
/// Sylvester determinant.
pub fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let m = f.len().saturating_sub(1);
    let n = g.len().saturating_sub(1);
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    if m == 0 {
        return f[0].pow(n as u32);
    }
    if n == 0 {
        return g[0].pow(m as u32);
    }
    let size = m + n;
    let syl = Matrix::from_fn(size, size, |i, j| {
        // first n rows: shifts of f; then m rows: shifts of g; highest degree first
        let (p, shift, deg) = if i < n { (f, i, m) } else { (g, i - n, n) };
        if j < shift || j > shift + deg {
            BigInt::zero()
        } else {
            p[deg - (j - shift)].clone()
        }
    });
    syl.det()
}

/// A finite linking form with values in `Q/Z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingForm {
    module: FiniteLambdaModule,
    gram: Vec<Vec<BigRational>>,
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

impl LinkingForm {
    /// Validates shape, well-definedness, symmetry and non-singularity.
    pub fn new(module: FiniteLambdaModule, gram: Vec<Vec<BigRational>>) -> Result<Self, AlexModError> {
        let r = module.rank();
        if gram.len() != r || gram.iter().any(|row| row.len() != r) {
            return Err(AlexModError::InvalidForm(format!("gram matrix must be {r}x{r}")));
        }
        let gram: Vec<Vec<BigRational>> = gram.iter().map(|row| row.iter().map(frac).collect()).collect();
        for i in 0..r {
            for j in 0..r {
                if gram[i][j] != gram[j][i] {
                    return Err(AlexModError::InvalidForm("not symmetric".into()));
                }
                let d = BigRational::from_integer(module.torsion[i].clone());
                if !(&gram[i][j] * d).is_integer() {
                    return Err(AlexModError::InvalidForm("not well defined on the torsion".into()));
                }
            }
        }
        let l = LinkingForm { module, gram };
        if !l.is_nonsingular() {
            return Err(AlexModError::InvalidForm("singular".into()));
        }
        Ok(l)
    }

    pub fn module(&self) -> &FiniteLambdaModule {
        &self.module
    }

    pub fn gram(&self) -> &[Vec<BigRational>] {
        &self.gram
    }

    /// `λ(x, y)` in `[0, 1)`.
    pub fn value(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        let mut s = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    s += &self.gram[i][j] * BigRational::from_integer(xi * yj);
                }
            }
        }
        frac(&s)
    }

    pub fn is_symmetric(&self) -> bool {
        let r = self.module.rank();
        (0..r).all(|i| (0..r).all(|j| self.gram[i][j] == self.gram[j][i]))
    }

    /// Whether `x ↦ λ(x, ·)` is injective.
    pub fn is_nonsingular(&self) -> bool {
        let r = self.module.rank();
        if r == 0 {
            return true;
        }
        // scaled by the exponent L the adjoint is x ↦ W^t x mod L; its image in
        // (Z/L)^r has L^r / [Z^r : W^t Z^r + L Z^r] elements
        let l = self.module.exponent();
        let m = Matrix::from_fn(r, 2 * r, |i, j| {
            if j < r {
                (&self.gram[j][i] * BigRational::from_integer(l.clone())).to_integer()
            } else if j - r == i {
                l.clone()
            } else {
                BigInt::zero()
            }
        });
        let index: BigInt = smith_normal_form(&m).diagonal().iter().product();
        l.pow(r as u32) / index == self.module.order()
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.module.to_json();
        v["gram"] = json!(self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| format!("{}/{}", x.numer(), x.denom())).collect::<Vec<_>>())
            .collect::<Vec<_>>());
        v
    }

    pub fn from_json(v: &Value) -> Result<Self, AlexModError> {
        let module = FiniteLambdaModule::from_json(v)?;
        let bad = || AlexModError::InvalidForm("gram entries must be \"num/den\" strings".into());
        let gram = v
            .get("gram")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_str().and_then(|s| s.parse::<BigRational>().ok()).ok_or_else(bad))
                    .collect()
            })
            .collect::<Result<Vec<Vec<BigRational>>, _>>()?;
        Self::new(module, gram)
    }
}

/// `λ(x, y) = x^t (A + A^t)^-1 y mod 1` on `coker(A + A^t)`, with `t = -1`.
pub fn double_cover_linking_form(a: &SeifertMatrix) -> Result<LinkingForm, AlexModError> {
    let m = a.matrix();
    let n = m.rows();
    if n == 0 {
        return LinkingForm::new(FiniteLambdaModule::trivial(), vec![]);
    }
    let b = m + &m.transpose();
    let binv = b.inverse_rational().ok_or(AlexModError::DegenerateForm)?;
    let s = smith_normal_form(&b);
    let diag = s.diagonal();
    let idx: Vec<usize> = (0..n).filter(|&i| diag[i] > BigInt::one()).collect();
    let torsion: Vec<BigInt> = idx.iter().map(|&i| diag[i].clone()).collect();
    let r = idx.len();
    let t = Matrix::from_fn(r, r, |i, j| if i == j { -BigInt::one() } else { BigInt::zero() });
    let module = FiniteLambdaModule::new(torsion, t)?;
    // generator i is column idx[i] of U^-1
    let gens: Vec<Vec<BigRational>> = idx
        .iter()
        .map(|&c| (0..n).map(|row| BigRational::from_integer(s.u_inv[(row, c)].clone())).collect())
        .collect();
    let gram = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = BigRational::zero();
                    for p in 0..n {
                        for q in 0..n {
                            acc += &gens[i][p] * &binv[(p, q)] * &gens[j][q];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    LinkingForm::new(module, gram)
}

/// A subgroup of a finite module given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub generators: Vec<Vec<BigInt>>,
    pub order: u64,
}

/// All `t`-invariant subgroups `P` with `P = P^⊥`.
pub fn find_linking_metabolizers(l: &LinkingForm, cap: u64) -> Result<Vec<Submodule>, AlexModError> {
    let f = &l.module;
    let order = f.order();
    if order > BigInt::from(cap) {
        return Err(AlexModError::CapExceeded { order, cap });
    }
    let d = f.small_torsion().unwrap();
    let n = order.to_u64().unwrap();
    if n == 1 {
        return Ok(vec![Submodule { generators: vec![], order: 1 }]);
    }
    // |P|^2 = |F| is forced, so a square order is necessary
    let target = (n as f64).sqrt().round() as u64;
    if target * target != n {
        return Ok(vec![]);
    }
    let elems: Vec<Vec<BigInt>> = (0..n).map(|c| decode(c, &d).into_iter().map(BigInt::from).collect()).collect();
    let isotropic: Vec<u64> = (1..n).filter(|&c| l.value(&elems[c as usize], &elems[c as usize]).is_zero()).collect();
    let mut search = MetabolizerSearch { l, d: &d, elems: &elems, target, seen: HashSet::new(), found: Vec::new() };
    let start: BTreeSet<u64> = [0].into_iter().collect();
    search.extend(&start, &[], &isotropic);
    let mut found = search.found;
    found.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(found.into_iter().map(|(_, g)| Submodule { generators: g, order: target }).collect())
}

struct MetabolizerSearch<'a> {
    l: &'a LinkingForm,
    d: &'a [u64],
    elems: &'a [Vec<BigInt>],
    target: u64,
    seen: HashSet<Vec<u64>>,
    found: Vec<(Vec<u64>, Vec<Vec<BigInt>>)>,
}

impl MetabolizerSearch<'_> {
    fn extend(&mut self, s: &BTreeSet<u64>, gens: &[Vec<BigInt>], candidates: &[u64]) {
        if s.len() as u64 == self.target {
            let key: Vec<u64> = s.iter().copied().collect();
            self.found.push((key, gens.to_vec()));
            return;
        }
        let f = &self.l.module;
        for &c in candidates {
            if s.contains(&c) {
                continue;
            }
            let x = &self.elems[c as usize];
            // the t-orbit of x must be orthogonal to everything so far and to itself
            let mut orbit = vec![x.clone()];
            loop {
                let y = f.apply_t(orbit.last().unwrap());
                if &y == x {
                    break;
                }
                orbit.push(y);
            }
            let mut new_gens = gens.to_vec();
            new_gens.extend(orbit.iter().cloned());
            let ok = orbit.iter().all(|y| new_gens.iter().all(|g| self.l.value(y, g).is_zero()));
            if !ok {
                continue;
            }
            let mut t = s.clone();
            for y in &orbit {
                t = add_cyclic(&t, y, f, self.d);
            }
            if (t.len() as u64) > self.target || self.target % t.len() as u64 != 0 {
                continue;
            }
            let key: Vec<u64> = t.iter().copied().collect();
            if !self.seen.insert(key) {
                continue;
            }
            self.extend(&t, &new_gens, candidates);
        }
    }
}

/// The subgroup `S + <y>`.
fn add_cyclic(s: &BTreeSet<u64>, y: &[BigInt], f: &FiniteLambdaModule, d: &[u64]) -> BTreeSet<u64> {
    let mut out = s.clone();
    let mut multiple = y.to_vec();
    while !f.is_zero(&multiple) {
        let m: Vec<u64> = multiple.iter().map(|x| x.to_u64().unwrap()).collect();
        for &c in s {
            let h = decode(c, d);
            let sum: Vec<u64> = h.iter().zip(&m).zip(d).map(|((a, b), di)| (a + b) % di).collect();
            out.insert(encode(&sum, d));
        }
        multiple = f.add(&multiple, y);
    }
    out
}

/// A character `χ(gen_i) = e^{2 pi i c_i / m}` of a finite module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub m: u64,
    pub c: Vec<u64>,
}

impl Character {
    pub fn trivial(rank: usize) -> Self {
        Character { m: 1, c: vec![0; rank] }
    }

    pub fn is_well_defined(&self, f: &FiniteLambdaModule) -> bool {
        self.c.len() == f.rank()
            && self.c.iter().zip(f.torsion()).all(|(&c, d)| (BigInt::from(c) * d).is_multiple_of(&BigInt::from(self.m)))
    }

    pub fn is_trivial(&self) -> bool {
        self.c.iter().all(|&c| c % self.m == 0)
    }

    /// `χ(h)` as an exponent `e` with `χ(h) = e^{2 pi i e / m}`.
    pub fn exponent_at(&self, h: &[BigInt]) -> u64 {
        let m = BigInt::from(self.m);
        let s: BigInt = self.c.iter().zip(h).map(|(&c, x)| BigInt::from(c) * x).sum();
        s.mod_floor(&m).to_u64().unwrap()
    }

    /// `χ ∘ t`: `(χ∘t)(gen_j) = Σ_i c_i T_ij`.
    pub fn compose_t(&self, f: &FiniteLambdaModule) -> Character {
        let t = f.t_matrix();
        let r = f.rank();
        let m = BigInt::from(self.m);
        let c = (0..r)
            .map(|j| {
                let s: BigInt = (0..r).map(|i| BigInt::from(self.c[i]) * &t[(i, j)]).sum();
                s.mod_floor(&m).to_u64().unwrap()
            })
            .collect();
        Character { m: self.m, c }
    }

    /// The same character written over a multiple `m` of the current target order.
    pub fn lift(&self, m: u64) -> Character {
        assert_eq!(m % self.m, 0);
        Character { m, c: self.c.iter().map(|&c| c * (m / self.m)).collect() }
    }

    /// Equality as functions on `F`.
    pub fn same_as(&self, other: &Character) -> bool {
        let m = self.m.lcm(&other.m);
        self.lift(m).c == other.lift(m).c
    }
}

/// All characters of `F` (exponent vectors over `m = exponent(F)`), in
/// lexicographic order.
pub fn all_characters(f: &FiniteLambdaModule, cap: u64) -> Result<Vec<Character>, AlexModError> {
    let order = f.order();
    if order > BigInt::from(cap) {
        return Err(AlexModError::CapExceeded { order, cap });
    }
    let m = f.exponent().to_u64().unwrap();
    let steps: Vec<u64> = f.small_torsion().unwrap().iter().map(|&d| m / d).collect();
    Ok(enumerate_exponents(f, m, &steps, |_| true))
}

fn enumerate_exponents(
    f: &FiniteLambdaModule,
    m: u64,
    steps: &[u64],
    keep: impl Fn(&Character) -> bool,
) -> Vec<Character> {
    let counts: Vec<u64> = steps.iter().map(|&s| m / s).collect();
    let total: u64 = counts.iter().product();
    let mut out = Vec::new();
    for code in 0..total {
        // last coordinate fastest, so the order is lexicographic
        let mut rem = code;
        let mut c = vec![0; f.rank()];
        for i in (0..f.rank()).rev() {
            c[i] = (rem % counts[i]) * steps[i];
            rem /= counts[i];
        }
        let chi = Character { m, c };
        if keep(&chi) {
            out.push(chi);
        }
    }
    out
}

/// All characters of order dividing `p^r` that vanish on the subgroup
/// generated by `p_gens`.
pub fn characters_vanishing_on(f: &FiniteLambdaModule, p_gens: &[Vec<BigInt>], p: u64, r: u32) -> Vec<Character> {
    let m = p.pow(r);
    let steps: Vec<u64> = f
        .torsion()
        .iter()
        .map(|d| {
            let g = d.gcd(&BigInt::from(m)).to_u64().unwrap();
            m / g
        })
        .collect();
    enumerate_exponents(f, m, &steps, |chi| p_gens.iter().all(|g| chi.exponent_at(g) == 0))
}
