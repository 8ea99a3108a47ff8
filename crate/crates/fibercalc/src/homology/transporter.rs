//! Integer symplectic matrices carrying one primitive class to another.
//!
//! A diffeomorphism taking one non-separating simple closed curve to another
//! exists whenever both are non-separating; its homological shadow is an
//! integer symplectic matrix `G` with `G v1 = v2`. `G` is built by completing
//! each class to a symplectic basis of `Z^{2g}`:
//!
//! 1. complete `v` to an ordinary basis of `Z^{2g}` by iterated extended-gcd
//!    column reduction (so the lattice step is unimodular),
//! 2. run symplectic Gram-Schmidt on that basis: extract a hyperbolic pair
//!    `(p, q)` with `<p, q> = 1`, project the remaining basis vectors onto
//!    the symplectic complement, and recurse,
//! 3. with both completions `B1 e1 = v1` and `B2 e1 = v2`, set
//!    `G = B2 B1^{-1}`.
//!
//! Everything stays over the integers; the form restricted to each
//! complement is again unimodular, which is what makes the gcd in step 2
//! come out to 1.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::matrix::{IntMatrix, SymplecticMatrix};
use super::{pairing_raw, HomologyClass, HomologyError};

/// Extended gcd with a non-negative gcd: `g = s*a + t*b`, `g >= 0`.
fn extended_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r_prev, mut r) = (a.clone(), b.clone());
    let (mut s_prev, mut s) = (BigInt::one(), BigInt::zero());
    let (mut t_prev, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &r_prev / &r;
        let next = &r_prev - &q * &r;
        r_prev = std::mem::replace(&mut r, next);
        let next = &s_prev - &q * &s;
        s_prev = std::mem::replace(&mut s, next);
        let next = &t_prev - &q * &t;
        t_prev = std::mem::replace(&mut t, next);
    }
    if r_prev.sign() == Sign::Minus {
        r_prev = -r_prev;
        s_prev = -s_prev;
        t_prev = -t_prev;
    }
    (r_prev, s_prev, t_prev)
}

fn scaled_sum(x: &[BigInt], a: &BigInt, y: &[BigInt], b: &BigInt) -> Vec<BigInt> {
    x.iter().zip(y).map(|(xi, yi)| a * xi + b * yi).collect()
}

/// A basis of `Z^n` whose first vector is the primitive `v`.
///
/// Row-reduces `v` to `e1` with 2-row unimodular moves while accumulating
/// the inverse transform; its columns are the basis.
fn unimodular_basis_with_first(v: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = v.len();
    let mut w = v.to_vec();
    // columns of the accumulated inverse
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut e = vec![BigInt::zero(); n];
            e[i] = BigInt::one();
            e
        })
        .collect();
    for i in 1..n {
        if w[i].is_zero() {
            continue;
        }
        let (g, s, t) = extended_gcd(&w[0], &w[i]);
        let u = &w[0] / &g;
        let l = &w[i] / &g;
        // rows (0, i) of the reduction are [[s, t], [-l, u]]; apply the
        // inverse [[u, -t], [l, s]] to columns (0, i)
        let c0 = scaled_sum(&cols[0], &u, &cols[i], &l);
        let ci = scaled_sum(&cols[0], &(-&t), &cols[i], &s);
        cols[0] = c0;
        cols[i] = ci;
        w[i] = BigInt::zero();
        w[0] = g;
    }
    if w[0].sign() == Sign::Minus {
        // happens only when no reduction ran (v = (-k, 0, ..., 0))
        for entry in &mut cols[0] {
            *entry = -std::mem::take(entry);
        }
        w[0] = -std::mem::take(&mut w[0]);
    }
    assert!(w[0].is_one(), "vector must be primitive");
    debug_assert_eq!(cols[0], v);
    cols
}

/// Symplectic Gram-Schmidt over the integers.
///
/// Input: a basis of a sublattice on which the standard form is unimodular
/// (ambient coordinates). Output: vectors p1, q1, p2, q2, ... spanning the
/// same lattice with `<p_i, q_i> = 1` and all other pairings zero. The first
/// input vector survives as `p1`.
fn symplectic_gram_schmidt(mut rest: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    assert_eq!(rest.len() % 2, 0, "symplectic lattices have even rank");
    let mut out = Vec::with_capacity(rest.len());
    while !rest.is_empty() {
        let p = rest.remove(0);
        // 2-column gcd reduction: accumulate gcd of pairings with p in slot 0
        let mut g0 = pairing_raw(&p, &rest[0]);
        for i in 1..rest.len() {
            let gi = pairing_raw(&p, &rest[i]);
            if gi.is_zero() {
                continue;
            }
            if g0.is_zero() {
                rest.swap(0, i);
                g0 = gi;
                continue;
            }
            let (g, s, t) = extended_gcd(&g0, &gi);
            let u = &g0 / &g;
            let l = &gi / &g;
            let c0 = scaled_sum(&rest[0], &s, &rest[i], &t);
            let ci = scaled_sum(&rest[0], &(-&l), &rest[i], &u);
            rest[0] = c0;
            rest[i] = ci;
            g0 = g;
        }
        if g0.sign() == Sign::Minus {
            for entry in &mut rest[0] {
                *entry = -std::mem::take(entry);
            }
            g0 = -g0;
        }
        assert!(
            g0.is_one(),
            "form is unimodular on the lattice, so the pairing gcd must be 1"
        );
        let q = rest.remove(0);
        // project the remainder onto the symplectic complement of (p, q):
        // x -> x - <x, q> p - <p, x> q
        for x in &mut rest {
            let a = pairing_raw(x, &q);
            let b = pairing_raw(&p, x);
            *x = x
                .iter()
                .zip(p.iter().zip(&q))
                .map(|(xi, (pi, qi))| xi - &a * pi - &b * qi)
                .collect();
        }
        out.push(p);
        out.push(q);
    }
    out
}

/// Completes a primitive class to an integer symplectic basis: the returned
/// matrix `B` satisfies `B^T J B = J` and `B e1 = v`.
pub fn complete_to_symplectic_basis(v: &HomologyClass) -> Result<SymplecticMatrix, HomologyError> {
    if !v.is_primitive() {
        return Err(HomologyError::NotPrimitive { which: "input" });
    }
    let basis = unimodular_basis_with_first(v.vector());
    let sympl = symplectic_gram_schmidt(basis);
    debug_assert_eq!(sympl[0], v.vector());
    Ok(SymplecticMatrix::from_parts_unchecked(
        v.genus(),
        IntMatrix::from_columns(&sympl),
    ))
}

/// An integer symplectic `G` with `G v1 = v2`, for primitive classes of
/// equal genus. `G` is deterministic but far from unique.
pub fn symplectic_transporter(
    v1: &HomologyClass,
    v2: &HomologyClass,
) -> Result<SymplecticMatrix, HomologyError> {
    if v1.genus() != v2.genus() {
        return Err(HomologyError::GenusMismatch {
            left: v1.genus(),
            right: v2.genus(),
        });
    }
    if !v1.is_primitive() {
        return Err(HomologyError::NotPrimitive { which: "source" });
    }
    if !v2.is_primitive() {
        return Err(HomologyError::NotPrimitive { which: "target" });
    }
    let b1 = complete_to_symplectic_basis(v1)?;
    let b2 = complete_to_symplectic_basis(v2)?;
    let g = &b2 * &b1.inverse();
    debug_assert_eq!(g.apply_vector(v1.vector()), v2.vector());
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cls(genus: usize, v: &[i64]) -> HomologyClass {
        HomologyClass::from_i64(genus, v).unwrap()
    }

    #[test]
    fn extended_gcd_has_nonnegative_gcd() {
        for (a, b) in [(12, 18), (-12, 18), (12, -18), (-12, -18), (-5, 0), (0, -5), (0, 0)] {
            let (g, s, t) = extended_gcd(&BigInt::from(a), &BigInt::from(b));
            assert!(g.sign() != Sign::Minus);
            assert_eq!(g, s * a + t * b);
        }
    }

    #[test]
    fn completion_of_standard_vector_is_identity() {
        let b = complete_to_symplectic_basis(&cls(2, &[1, 0, 0, 0])).unwrap();
        assert!(b.is_identity());
    }

    #[test]
    fn completion_rejects_imprimitive_classes() {
        assert_eq!(
            complete_to_symplectic_basis(&cls(2, &[2, 0, 0, 0])).unwrap_err(),
            HomologyError::NotPrimitive { which: "input" }
        );
    }

    #[test]
    fn transporter_between_equal_classes_fixes_the_class() {
        let v = cls(2, &[1, 0, 0, 0]);
        let g = symplectic_transporter(&v, &v).unwrap();
        assert_eq!(g.apply_vector(v.vector()), v.vector());
    }

    #[test]
    fn transporter_moves_a_handle_class_across_handles() {
        let v1 = cls(2, &[1, 0, 0, 0]);
        let v2 = cls(2, &[0, 0, 1, 0]);
        let g = symplectic_transporter(&v1, &v2).unwrap();
        assert!(g.is_symplectic());
        assert_eq!(g.apply_vector(v1.vector()), v2.vector());
    }

    #[test]
    fn transporter_reports_which_side_is_imprimitive() {
        let v1 = cls(2, &[2, 0, 0, 0]);
        let v2 = cls(2, &[0, 0, 1, 0]);
        assert_eq!(
            symplectic_transporter(&v1, &v2).unwrap_err(),
            HomologyError::NotPrimitive { which: "source" }
        );
        assert_eq!(
            symplectic_transporter(&v2, &v1).unwrap_err(),
            HomologyError::NotPrimitive { which: "target" }
        );
        let w = cls(1, &[1, 0]);
        assert!(matches!(
            symplectic_transporter(&w, &v2),
            Err(HomologyError::GenusMismatch { .. })
        ));
    }

    fn arb_primitive(genus: usize) -> impl Strategy<Value = HomologyClass> {
        prop::collection::vec(-9i64..=9, 2 * genus)
            .prop_filter_map("need a primitive vector", move |v| {
                let c = cls(genus, &v);
                c.is_primitive().then_some(c)
            })
    }

    proptest! {
        #[test]
        fn completions_are_symplectic_with_the_class_first(v in arb_primitive(3)) {
            let b = complete_to_symplectic_basis(&v).unwrap();
            prop_assert!(b.is_symplectic());
            let e1: Vec<BigInt> = std::iter::once(BigInt::one())
                .chain(std::iter::repeat(BigInt::zero()))
                .take(6)
                .collect();
            prop_assert_eq!(b.apply_vector(&e1), v.vector().to_vec());
        }

        #[test]
        fn transporters_satisfy_both_postconditions(
            v1 in arb_primitive(2),
            v2 in arb_primitive(2)
        ) {
            let g = symplectic_transporter(&v1, &v2).unwrap();
            prop_assert!(g.is_symplectic());
            prop_assert_eq!(g.apply_vector(v1.vector()), v2.vector().to_vec());
        }

        #[test]
        fn conjugation_covariance(
            v1 in arb_primitive(2),
            v2 in arb_primitive(2),
            c in prop::collection::vec(-5i64..=5, 4)
        ) {
            use crate::homology::transvection;
            // G T_c G^{-1} = T_{Gc} for any symplectic G and any class c
            let g = symplectic_transporter(&v1, &v2).unwrap();
            let c = cls(2, &c);
            let conjugated = &(&g * &transvection(&c)) * &g.inverse();
            let moved = HomologyClass::new(2, g.apply_vector(c.vector())).unwrap();
            prop_assert_eq!(conjugated, transvection(&moved));
        }
    }
}
