//! Standard knot fixtures, the knot input file format and a generator of
//! random valid Seifert matrices.

use num_bigint::BigInt;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::matrix::IntMatrix;
use crate::seifert::{SeifertError, SeifertMatrix};

pub fn unknot() -> SeifertMatrix {
    SeifertMatrix::new(&[]).unwrap().with_name("unknot")
}

/// Left-handed trefoil.
pub fn trefoil() -> SeifertMatrix {
    SeifertMatrix::new(&[vec![-1, 1], vec![0, -1]]).unwrap().with_name("trefoil")
}

pub fn figure_eight() -> SeifertMatrix {
    SeifertMatrix::new(&[vec![-1, 1], vec![0, 1]]).unwrap().with_name("figure-eight")
}

/// Genus-two slice knot whose `Z/6` eta invariant is nonzero.
pub fn slice_a4() -> SeifertMatrix {
    SeifertMatrix::new(&[vec![0, 0, 1, 1], vec![0, 0, 0, 1], vec![1, 1, 0, 1], vec![0, 1, 0, 0]])
        .unwrap()
        .with_name("slice-a4")
}

/// Contents of a knot input file: `{"name": .., "seifert": [[..], ..]}`.
/// Unknown keys are ignored.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KnotFixture {
    #[serde(default)]
    pub name: String,
    pub seifert: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<serde_json::Value>,
}

impl KnotFixture {
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn seifert_matrix(&self) -> Result<SeifertMatrix, SeifertError> {
        Ok(SeifertMatrix::new(&self.seifert)?.with_name(self.name.clone()))
    }

    pub fn from_matrix(name: &str, a: &SeifertMatrix) -> Self {
        KnotFixture { name: name.to_string(), seifert: a.to_i64_rows(), expected: None }
    }
}

/// A random Seifert matrix of genus `g`: a symmetric matrix with entries in
/// `[-entry_bound, entry_bound]` plus the standard symplectic part, conjugated
/// by `mix_steps` random elementary unimodular congruences.
pub fn random_seifert<R: Rng>(rng: &mut R, g: usize, entry_bound: i64, mix_steps: usize) -> SeifertMatrix {
    let n = 2 * g;
    let mut a = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = BigInt::from(rng.gen_range(-entry_bound..=entry_bound));
            a[(i, j)] = v.clone();
            a[(j, i)] = v;
        }
    }
    for i in 0..g {
        a[(2 * i, 2 * i + 1)] += 1;
    }
    for _ in 0..mix_steps {
        if n < 2 {
            break;
        }
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = if rng.gen_bool(0.5) { 1 } else { -1 };
        let mut p = IntMatrix::identity(n);
        p[(i, j)] = BigInt::from(c);
        a = &(&p.transpose() * &a) * &p;
    }
    SeifertMatrix::from_matrix(a).expect("construction preserves det(A - A^t) = 1")
}

/// A random unimodular matrix, product of `steps` elementary matrices.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n < 2 {
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = c;
        p = &p * &e;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fixtures_are_valid() {
        for a in [unknot(), trefoil(), figure_eight(), slice_a4()] {
            assert_eq!(a.size() % 2, 0);
        }
    }

    #[test]
    fn random_matrices_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for g in 0..4 {
            let a = random_seifert(&mut rng, g, 2, 6);
            assert_eq!(a.genus(), g);
        }
        let p = random_unimodular(&mut rng, 4, 10);
        assert_eq!(p.det().magnitude(), &num_bigint::BigUint::from(1u32));
    }

    #[test]
    fn parses_knot_file() {
        let k = KnotFixture::from_json(r#"{"name":"t","seifert":[[-1,1],[0,-1]],"extra":3}"#).unwrap();
        assert_eq!(k.seifert_matrix().unwrap(), trefoil().with_name("t"));
        assert!(KnotFixture::from_json(r#"{"name":"t"}"#).is_err());
    }
}
