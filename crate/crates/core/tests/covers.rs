//! Homology of cyclic branched covers and of the cyclic quotients `H/(t^k - 1)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use knotsig::alexmod::{
    alexander_module, cyclic_quotient, cyclic_relation_matrix, double_cover_linking_form, find_linking_metabolizers,
    torsion_order_by_resultant, DEFAULT_CAP,
};
use knotsig::cyclotomic::cyclotomic_poly;
use knotsig::fixtures::{figure_eight, random_seifert, random_unimodular, slice_a4, trefoil, unknot};
use knotsig::numtheory::{divisors, euler_phi};
use knotsig::{alexander_polynomial, IntLaurentPoly, SeifertMatrix};

const KS: [usize; 7] = [2, 3, 4, 5, 7, 8, 9];

fn fixtures() -> Vec<SeifertMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut v = vec![trefoil(), figure_eight(), slice_a4(), trefoil().block_sum(&trefoil())];
    v.extend((0..6).map(|i| random_seifert(&mut rng, 1 + i % 2, 2, 5)));
    v
}

/// Exact quotient of `f` by the monic `g`, if `g | f`.
fn divide(f: &[BigInt], g: &[BigInt]) -> Option<Vec<BigInt>> {
    let (n, m) = (f.len(), g.len());
    if n < m {
        return if f.iter().all(|c| c.is_zero()) { Some(vec![]) } else { None };
    }
    let mut r = f.to_vec();
    let mut q = vec![BigInt::zero(); n - m + 1];
    for top in (m - 1..n).rev() {
        let c = r[top].clone();
        q[top + 1 - m] = c.clone();
        for (j, gj) in g.iter().enumerate() {
            r[top + 1 - m + j] -= &c * gj;
        }
    }
    r.iter().all(|c| c.is_zero()).then_some(q)
}

/// Multiplicity of `Φ_d` in `f`.
fn multiplicity(f: &IntLaurentPoly, d: u64) -> u64 {
    let phi = cyclotomic_poly(d).to_poly_coeffs();
    let mut cur = f.to_poly_coeffs();
    let mut m = 0;
    while let Some(q) = divide(&cur, &phi) {
        cur = q;
        m += 1;
    }
    m
}

#[test]
fn torsion_order_matches_resultant() {
    for a in fixtures() {
        let p = alexander_module(&a);
        for k in KS {
            let q = cyclic_quotient(&p, k);
            let res = torsion_order_by_resultant(&a, k);
            if q.free_rank == 0 {
                assert_eq!(q.torsion.order(), res, "{a:?} k={k}");
            } else {
                assert!(res.is_zero(), "{a:?} k={k}");
            }
        }
    }
}

#[test]
fn infinite_quotients_have_vanishing_determinant() {
    for a in fixtures() {
        let p = alexander_module(&a);
        for k in 1..=12 {
            let det = cyclic_relation_matrix(&p, k).det();
            let q = cyclic_quotient(&p, k);
            assert_eq!(det.is_zero(), q.free_rank > 0, "{a:?} k={k}");
        }
    }
}

#[test]
fn free_rank_is_bounded_by_roots_of_delta() {
    // The free part comes from roots ζ^j ≠ 1 of Δ among the k-th roots of
    // unity: at least one dimension per distinct root, at most its multiplicity.
    for a in fixtures() {
        let delta = alexander_polynomial(&a);
        let p = alexander_module(&a);
        for k in 1..=12u64 {
            let (mut distinct, mut with_mult) = (0, 0);
            for d in divisors(k).into_iter().filter(|&d| d > 1) {
                let m = multiplicity(&delta, d);
                if m > 0 {
                    distinct += euler_phi(d);
                    with_mult += m * euler_phi(d);
                }
            }
            let r = cyclic_quotient(&p, k as usize).free_rank as u64;
            assert!(distinct <= r && r <= with_mult, "{a:?} k={k}: {distinct} <= {r} <= {with_mult}");
        }
    }
    let tt = alexander_module(&trefoil().block_sum(&trefoil()));
    assert_eq!(cyclic_quotient(&tt, 6).free_rank, 4);
    assert_eq!(cyclic_quotient(&alexander_module(&trefoil()), 6).free_rank, 2);
}

#[test]
fn unknot_has_trivial_covers() {
    let p = alexander_module(&unknot());
    for k in KS {
        let q = cyclic_quotient(&p, k);
        assert_eq!((q.torsion.order(), q.free_rank), (BigInt::one(), 0));
        assert_eq!(torsion_order_by_resultant(&unknot(), k), BigInt::one());
    }
}

#[test]
fn trefoil_double_cover() {
    let l = double_cover_linking_form(&trefoil()).unwrap();
    assert_eq!(l.module().torsion(), &[BigInt::from(3)]);
    assert_eq!(l.gram()[0][0], BigRational::new(1.into(), 3.into()));
    let q = cyclic_quotient(&alexander_module(&trefoil()), 2);
    assert_eq!(q.torsion.torsion(), &[BigInt::from(3)]);
}

fn self_linking_census(a: &SeifertMatrix) -> BTreeMap<BigRational, usize> {
    let l = double_cover_linking_form(a).unwrap();
    let mut census = BTreeMap::new();
    for x in l.module().elements(DEFAULT_CAP).unwrap() {
        *census.entry(l.value(&x, &x)).or_insert(0) += 1;
    }
    census
}

#[test]
fn linking_form_is_a_congruence_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in fixtures() {
        let p = random_unimodular(&mut rng, a.size(), 10);
        let b = a.congruent(&p).unwrap();
        assert_eq!(self_linking_census(&a), self_linking_census(&b), "{a:?}");
        let l = double_cover_linking_form(&a).unwrap();
        assert!(l.is_symmetric() && l.is_nonsingular());
        // |H_1| of the double cover is |Δ(-1)|
        let d = alexander_polynomial(&a).eval_int(&BigInt::from(-1)).to_integer();
        assert_eq!(l.module().order(), num_traits::Signed::abs(&d));
    }
}

#[test]
fn linking_metabolizers() {
    let a4 = double_cover_linking_form(&slice_a4()).unwrap();
    let found = find_linking_metabolizers(&a4, DEFAULT_CAP).unwrap();
    assert!(!found.is_empty());
    for m in &found {
        assert_eq!(m.order * m.order, 9);
    }
    let t = double_cover_linking_form(&trefoil()).unwrap();
    assert!(find_linking_metabolizers(&t, DEFAULT_CAP).unwrap().is_empty());
}
