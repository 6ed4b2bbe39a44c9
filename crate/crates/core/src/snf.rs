//! Smith normal form over `Z` with the unimodular transforms retained.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal, each diagonal
/// entry dividing the next (zeros last).
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// The diagonal entries `d_1 | d_2 | ... `, of length `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Invariant factors of the cokernel `Z^rows / a Z^cols` that are not 1,
    /// with a zero for every free summand.
    pub fn cokernel_invariants(&self) -> Vec<BigInt> {
        let mut diag = self.diagonal();
        diag.extend(std::iter::repeat(BigInt::zero()).take(self.d.rows().saturating_sub(diag.len())));
        diag.into_iter().filter(|x| !x.is_one()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    /// row_i += c * row_j
    fn add_row(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.a.cols() {
            let x = c * &self.a[(j, k)];
            self.a[(i, k)] += x;
        }
        for k in 0..self.u.cols() {
            let x = c * &self.u[(j, k)];
            self.u[(i, k)] += x;
        }
        for k in 0..self.u_inv.rows() {
            let x = c * &self.u_inv[(k, i)];
            self.u_inv[(k, j)] -= x;
        }
    }

    /// col_i += c * col_j
    fn add_col(&mut self, i: usize, j: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for k in 0..self.a.rows() {
            let x = c * &self.a[(k, j)];
            self.a[(k, i)] += x;
        }
        for k in 0..self.v.rows() {
            let x = c * &self.v[(k, j)];
            self.v[(k, i)] += x;
        }
        for k in 0..self.v_inv.cols() {
            let x = c * &self.v_inv[(i, k)];
            self.v_inv[(j, k)] -= x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for k in 0..self.a.cols() {
            self.a[(i, k)] = -self.a[(i, k)].clone();
        }
        for k in 0..self.u.cols() {
            self.u[(i, k)] = -self.u[(i, k)].clone();
        }
        for k in 0..self.u_inv.rows() {
            self.u_inv[(k, i)] = -self.u_inv[(k, i)].clone();
        }
    }
}

/// Compute the Smith normal form of an arbitrary integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        a: a.clone(),
        u: IntMatrix::identity(m),
        u_inv: IntMatrix::identity(m),
        v: IntMatrix::identity(n),
        v_inv: IntMatrix::identity(n),
    };
    for t in 0..m.min(n) {
        // smallest nonzero entry of the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let x = &w.a[(i, j)];
                if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < w.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].div_floor(&w.a[(t, t)]);
                w.add_row(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].div_floor(&w.a[(t, t)]);
                w.add_col(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // move the smallest nonzero entry of row/column t to the pivot
                let mut bi = t;
                let mut bj = t;
                for i in t + 1..m {
                    if !w.a[(i, t)].is_zero() && w.a[(i, t)].abs() < w.a[(bi, bj)].abs() {
                        bi = i;
                        bj = t;
                    }
                }
                for j in t + 1..n {
                    if !w.a[(t, j)].is_zero() && w.a[(t, j)].abs() < w.a[(bi, bj)].abs() {
                        bi = t;
                        bj = j;
                    }
                }
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            // row and column are clear; enforce divisibility of the rest
            let p = w.a[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.negate_row(t);
        }
    }
    SmithForm { d: w.a, u: w.u, u_inv: w.u_inv, v: w.v, v_inv: w.v_inv }
}

/// Rows spanning the saturation `(row space of a) ⊗ Q ∩ Z^n` of a
/// full-row-rank integer matrix.
pub fn saturate_rows(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.diagonal().iter().filter(|x| !x.is_zero()).count();
    // a = u^-1 d v^-1, so the row space of a sits inside that of the first r rows of v^-1
    let rows: Vec<usize> = (0..r).collect();
    let cols: Vec<usize> = (0..a.cols()).collect();
    s.v_inv.submatrix(&rows, &cols)
}

/// Row-style Hermite normal form (upper echelon, positive pivots, entries above
/// each pivot reduced into `[0, pivot)`); zero rows are dropped.
pub fn hermite_rows(a: &IntMatrix) -> IntMatrix {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            let piv = (r..rows)
                .filter(|&i| !m[(i, c)].is_zero())
                .min_by(|&x, &y| m[(x, c)].abs().cmp(&m[(y, c)].abs()));
            let Some(p) = piv else { break };
            m.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let q = m[(i, c)].div_floor(&m[(r, c)]);
                for j in 0..cols {
                    let x = &q * &m[(r, j)];
                    m[(i, j)] -= x;
                }
                if !m[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[(r, c)].is_zero() {
            continue;
        }
        if m[(r, c)].is_negative() {
            for j in 0..cols {
                m[(r, j)] = -m[(r, j)].clone();
            }
        }
        for i in 0..r {
            let q = m[(i, c)].div_floor(&m[(r, c)]);
            for j in 0..cols {
                let x = &q * &m[(r, j)];
                m[(i, j)] -= x;
            }
        }
        r += 1;
    }
    let keep: Vec<usize> = (0..r).collect();
    let all: Vec<usize> = (0..cols).collect();
    m.submatrix(&keep, &all)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn check(a: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(a);
        assert_eq!(&(&s.u * a) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(a.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(a.cols()));
        let diag = s.diagonal();
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if !w[0].is_zero() {
                assert!(w[1].is_multiple_of(&w[0]));
            } else {
                assert!(w[1].is_zero());
            }
        }
        s
    }

    #[test]
    fn classic_examples() {
        let s = check(&m(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check(&m(&[vec![-2, 1], vec![1, -2]]));
        assert_eq!(s.cokernel_invariants(), vec![BigInt::from(3)]);
        let s = check(&m(&[vec![1, 2, 3], vec![4, 5, 6]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
        let s = check(&m(&[vec![0, 0], vec![0, 0], vec![0, 5]]));
        assert_eq!(s.cokernel_invariants(), vec![BigInt::from(5), BigInt::zero(), BigInt::zero()]);
    }

    #[test]
    fn divisibility_fixup() {
        // diag(2, 3) must become diag(1, 6)
        let s = check(&m(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn saturation_and_hermite() {
        let a = m(&[vec![2, 0, 0], vec![0, 2, 2]]);
        let sat = hermite_rows(&saturate_rows(&a));
        assert_eq!(sat, m(&[vec![1, 0, 0], vec![0, 1, 1]]));
        let h = hermite_rows(&m(&[vec![0, 1, 0, 0], vec![1, 0, 0, 0]]));
        assert_eq!(h, m(&[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]));
    }
}
