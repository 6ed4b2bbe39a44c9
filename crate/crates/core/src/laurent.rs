//! Integer Laurent polynomials, i.e. elements of `Z[t, t^-1]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum_i coeffs[i] t^(offset + i)` with integer coefficients.
///
/// The stored form is always trimmed: no leading or trailing zero coefficients,
/// and the zero polynomial has an empty coefficient list and offset 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntLaurentPoly {
    offset: i64,
    coeffs: Vec<BigInt>,
}

impl IntLaurentPoly {
    pub fn new(offset: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = IntLaurentPoly { offset, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(offset: i64, coeffs: &[i64]) -> Self {
        Self::new(offset, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^e`.
    pub fn monomial(c: BigInt, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(0, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.offset = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low_exp(&self) -> i64 {
        self.offset
    }

    /// Highest exponent with a nonzero coefficient (`offset - 1` for zero).
    pub fn high_exp(&self) -> i64 {
        self.offset + self.coeffs.len() as i64 - 1
    }

    /// Difference between highest and lowest exponent.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.offset;
        if i < 0 || i >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficients from the lowest exponent upwards.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiply by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        IntLaurentPoly { offset: self.offset + e, coeffs: self.coeffs.clone() }
    }

    /// The polynomial `f(t^-1)`.
    pub fn reciprocal(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        IntLaurentPoly::new(-self.high_exp(), c)
    }

    /// Canonical representative up to units `±t^k`: lowest exponent 0 and
    /// positive leading coefficient.
    pub fn canonical(&self) -> Self {
        let mut p = self.shift(-self.offset);
        if p.leading().map_or(false, |c| c.is_negative()) {
            p = -p;
        }
        p
    }

    /// Normalization used for Alexander polynomials: lowest exponent 0 and
    /// value `+1` at `t = 1` (the sign is flipped if the value is `-1`).
    pub fn alexander_normalized(&self) -> Self {
        let p = self.shift(-self.offset);
        if p.eval_at_one().is_negative() {
            -p
        } else {
            p
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval_int(&self, t: &BigInt) -> BigRational {
        self.eval_rational(&BigRational::from_integer(t.clone()))
    }

    /// Evaluate at a nonzero rational (or any rational when there are no
    /// negative exponents).
    pub fn eval_rational(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + BigRational::from_integer(c.clone());
        }
        acc * pow_rational(t, self.offset)
    }

    /// Whether `f(t) = f(t^-1)` as Laurent polynomials.
    pub fn is_symmetric(&self) -> bool {
        *self == self.reciprocal()
    }

    /// True if `f(t) = ± t^k f(t^-1)` for some `k`, i.e. symmetric up to units.
    pub fn is_symmetric_up_to_units(&self) -> bool {
        let r = self.reciprocal();
        let a = self.canonical();
        let b = r.canonical();
        a == b
    }

    /// Polynomial coefficients `[a_0, .., a_n]` of `t^-low * f`.
    pub fn to_poly_coeffs(&self) -> Vec<BigInt> {
        self.coeffs.clone()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = IntLaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Parse a comma-separated ascending coefficient list such as `"1,-1,1"`.
    pub fn parse_coeff_list(s: &str) -> Option<Self> {
        let coeffs: Option<Vec<BigInt>> =
            s.split(',').map(|x| x.trim().parse::<BigInt>().ok()).collect();
        coeffs.map(|c| IntLaurentPoly::new(0, c))
    }

    /// Exact division by a monic polynomial in `t` (given as a Laurent polynomial
    /// whose lowest term is the constant term). Returns the remainder of
    /// `t^-low * self` modulo `divisor`.
    pub fn rem_monic(&self, divisor: &IntLaurentPoly) -> Vec<BigInt> {
        assert!(divisor.leading().map_or(false, |c| c.is_one()), "divisor must be monic");
        let d = divisor.coeffs();
        let n = d.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= n {
            return r;
        }
        for top in (n..r.len()).rev() {
            let q = r[top].clone();
            if q.is_zero() {
                continue;
            }
            for (j, dj) in d.iter().enumerate() {
                r[top - n + j] -= &q * dj;
            }
        }
        r.truncate(n);
        r
    }

    pub fn is_divisible_by_monic(&self, divisor: &IntLaurentPoly) -> bool {
        self.rem_monic(divisor).iter().all(|c| c.is_zero())
    }

    /// Content (gcd of coefficients), nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
}

fn pow_rational(t: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(t.clone(), e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

impl Zero for IntLaurentPoly {
    fn zero() -> Self {
        IntLaurentPoly { offset: 0, coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for IntLaurentPoly {
    fn one() -> Self {
        IntLaurentPoly::constant(BigInt::one())
    }
}

impl<'a> Add<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.high_exp().max(rhs.high_exp());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        IntLaurentPoly::new(lo, coeffs)
    }
}

impl<'a> Sub<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a IntLaurentPoly> for &'a IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: &IntLaurentPoly) -> IntLaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntLaurentPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntLaurentPoly::new(self.offset + rhs.offset, out)
    }
}

impl Add for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl Sub for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl Mul for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for IntLaurentPoly {
    type Output = IntLaurentPoly;
    fn neg(self) -> Self {
        IntLaurentPoly { offset: self.offset, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntLaurentPoly {
    /// Renders highest degree first, e.g. `t^2-t+1` or `-t^2+3t-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.offset + i as i64;
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", abs)?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{}", abs)?;
            }
            if e == 1 {
                write!(f, "t")?;
            } else {
                write!(f, "t^{}", e)?;
            }
        }
        Ok(())
    }
}
