//! Dense integer matrices and fraction-free determinant routines.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return None;
        }
        Some(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Principal submatrix on the given (sorted) index set.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<'a, T> Mul<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone + Zero + One,
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = a * &rhs[(k, j)];
                    let cur = std::mem::replace(&mut out[(i, j)], T::zero());
                    out[(i, j)] = cur + v;
                }
            }
        }
        out
    }
}

impl<'a, T> Add<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone,
    for<'x> &'x T: Add<&'x T, Output = T>,
{
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] + &rhs[(i, j)])
    }
}

impl<'a, T> Sub<&'a Matrix<T>> for &'a Matrix<T>
where
    T: Clone,
    for<'x> &'x T: Sub<&'x T, Output = T>,
{
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| &self[(i, j)] - &rhs[(i, j)])
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Option<Self> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn scale(&self, c: &BigInt) -> IntMatrix {
        self.map(|x| x * c)
    }

    /// Block diagonal sum.
    pub fn block_sum(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.rows + other.rows;
        let m = self.cols + other.cols;
        Matrix::from_fn(n, m, |i, j| {
            if i < self.rows && j < self.cols {
                self[(i, j)].clone()
            } else if i >= self.rows && j >= self.cols {
                other[(i - self.rows, j - self.cols)].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        let mut m = self.map(|x| BigRational::from_integer(x.clone()));
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(p, rank);
            for i in 0..m.rows {
                if i != rank && !m[(i, c)].is_zero() {
                    let f = &m[(i, c)] / &m[(rank, c)];
                    for j in c..m.cols {
                        let v = &f * &m[(rank, j)];
                        m[(i, j)] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Exact inverse over `Q`; `None` when singular.
    pub fn inverse_rational(&self) -> Option<Matrix<BigRational>> {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.map(|x| BigRational::from_integer(x.clone()));
        let mut inv: Matrix<BigRational> = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !m[(i, c)].is_zero())?;
            m.swap_rows(p, c);
            inv.swap_rows(p, c);
            let piv = m[(c, c)].clone();
            for j in 0..n {
                m[(c, j)] = &m[(c, j)] / &piv;
                inv[(c, j)] = &inv[(c, j)] / &piv;
            }
            for i in 0..n {
                if i != c && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in 0..n {
                        let a = &f * &m[(c, j)];
                        m[(i, j)] -= a;
                        let b = &f * &inv[(c, j)];
                        inv[(i, j)] -= b;
                    }
                }
            }
        }
        Some(inv)
    }
}

/// Characteristic polynomial `det(x I - M)` over a commutative ring, by the
/// division-free Berkowitz algorithm. Coefficients are returned lowest degree
/// first, so the result has length `n + 1` with a trailing 1.
pub fn charpoly_berkowitz<T>(m: &Matrix<T>) -> Vec<T>
where
    T: Clone + Zero + One + Neg<Output = T>,
    for<'x> &'x T: Mul<&'x T, Output = T> + Add<&'x T, Output = T>,
{
    assert!(m.is_square());
    let n = m.rows();
    // coefficient vectors are kept highest degree first during the recursion
    let mut p: Vec<T> = vec![T::one()];
    for r in 1..=n {
        let a = m[(r - 1, r - 1)].clone();
        // first column of the Toeplitz matrix: 1, -a, -R C, -R M C, ...
        let mut col = vec![T::one(), -a];
        if r >= 2 {
            let mut v: Vec<T> = (0..r - 1).map(|i| m[(i, r - 1)].clone()).collect(); // C
            for _ in 0..r - 1 {
                let rc = (0..r - 1)
                    .map(|j| &m[(r - 1, j)] * &v[j])
                    .fold(T::zero(), |acc, x| &acc + &x);
                col.push(-rc);
                v = (0..r - 1)
                    .map(|i| (0..r - 1).map(|j| &m[(i, j)] * &v[j]).fold(T::zero(), |acc, x| &acc + &x))
                    .collect();
            }
        }
        // new p = T * p, T lower-triangular Toeplitz of size (r+1) x r
        let mut next = Vec::with_capacity(r + 1);
        for i in 0..=r {
            let mut acc = T::zero();
            for j in 0..r {
                if i >= j && i - j < col.len() {
                    acc = &acc + &(&col[i - j] * &p[j]);
                }
            }
            next.push(acc);
        }
        p = next;
    }
    p.reverse();
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(m(&[]).det(), BigInt::one());
        assert_eq!(m(&[vec![0, 1], vec![-1, 0]]).det(), BigInt::one());
        assert_eq!(m(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]).det(), BigInt::from(6));
        assert_eq!(m(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).det(), BigInt::from(-1));
        assert_eq!(m(&[vec![1, 2], vec![2, 4]]).det(), BigInt::zero());
    }

    #[test]
    fn berkowitz_matches_known() {
        // [[2,1],[1,3]]: x^2 - 5x + 5
        let cp = charpoly_berkowitz::<BigInt>(&m(&[vec![2, 1], vec![1, 3]]));
        assert_eq!(cp, vec![BigInt::from(5), BigInt::from(-5), BigInt::one()]);
        let a = m(&[vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 1]]);
        let cp = charpoly_berkowitz::<BigInt>(&a);
        // constant term is (-1)^n det
        assert_eq!(cp[0], -a.det());
        assert_eq!(cp[2], BigInt::from(-3));
    }

    #[test]
    fn rational_inverse() {
        let a = m(&[vec![-2, 1], vec![1, -2]]);
        let inv = a.inverse_rational().unwrap();
        assert_eq!(inv[(0, 0)], BigRational::new((-2).into(), 3.into()));
        assert!(m(&[vec![1, 1], vec![1, 1]]).inverse_rational().is_none());
    }
}
