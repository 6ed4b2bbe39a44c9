//! Exact signatures against a floating-point Hermitian eigensolver.

use std::f64::consts::PI;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knotsig::fixtures::{random_seifert, slice_a4, trefoil};
use knotsig::signature::{eta_cyclic_direct, signature_function, tl_signature_at, UnitRootAngle};
use knotsig::SeifertMatrix;

/// Signature of `(1 - z) A + (1 - z̄) A^t` at `z = e^{i theta}`, with the
/// smallest eigenvalue magnitude.
fn float_signature(a: &SeifertMatrix, theta: f64) -> (i64, f64) {
    let n = a.size();
    if n == 0 {
        return (0, f64::INFINITY);
    }
    let z = Complex::new(theta.cos(), theta.sin());
    let one = Complex::new(1.0, 0.0);
    let e = |i: usize, j: usize| a.matrix()[(i, j)].to_f64().unwrap();
    let m = DMatrix::from_fn(n, n, |i, j| (one - z) * e(i, j) + (one - z.conj()) * e(j, i));
    let ev = SymmetricEigen::new(m).eigenvalues;
    let pos = ev.iter().filter(|&&x| x > 0.0).count() as i64;
    let neg = ev.iter().filter(|&&x| x < 0.0).count() as i64;
    (pos - neg, ev.iter().fold(f64::INFINITY, |m, x| m.min(x.abs())))
}

fn random_matrices() -> Vec<SeifertMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..12).map(|i| random_seifert(&mut rng, 1 + i % 3, 2, 6)).collect()
}

#[test]
fn exact_values_match_eigenvalues() {
    let mut compared = 0;
    for a in random_matrices().iter().chain([trefoil(), slice_a4()].iter()) {
        for k in [5u64, 7, 12, 31, 97] {
            for j in 0..k {
                let (s, gap) = float_signature(a, 2.0 * PI * j as f64 / k as f64);
                if gap > 1e-8 {
                    assert_eq!(tl_signature_at(a, UnitRootAngle::new(j, k)), s, "{a:?} at {j}/{k}");
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 1500);
}

#[test]
fn grid_sums_match_direct_sums() {
    for a in random_matrices() {
        let sf = signature_function(&a).unwrap();
        for k in [1u64, 2, 3, 6, 10, 24, 60] {
            assert_eq!(sf.eta_cyclic(k).unwrap(), eta_cyclic_direct(&a, k), "{a:?} k={k}");
        }
    }
}

#[test]
fn integral_matches_riemann_sum() {
    let n = 20_000;
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000));
    for a in random_matrices().iter().chain([trefoil(), slice_a4()].iter()) {
        let sf = signature_function(a).unwrap();
        let exact = sf.integral(&eps).unwrap().midpoint().to_f64().unwrap();
        let avg = (0..n).map(|j| float_signature(a, 2.0 * PI * (j as f64 + 0.5) / n as f64).0).sum::<i64>() as f64 / n as f64;
        // each jump of size at most 4g can misplace one cell of width 1/n
        let tol = (sf.num_breakpoints() * 4 * a.genus()) as f64 / n as f64 + 1e-9;
        assert!((exact - avg).abs() <= tol, "{a:?}: exact {exact}, riemann {avg}");
    }
}

#[test]
fn trefoil_integral_is_minus_four_thirds() {
    let eps = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000));
    let i = signature_function(&trefoil()).unwrap().integral(&eps).unwrap();
    assert!(i.contains(&BigRational::new(BigInt::from(-4), BigInt::from(3))));
    assert!(i.width() <= eps);
}
