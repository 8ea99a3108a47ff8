//! Integer polynomials and the Alexander polynomial of a monodromy matrix.
//!
//! For a fibered link the Alexander polynomial is the characteristic
//! polynomial of the homological monodromy. Char polys of symplectic
//! matrices are palindromic with constant term `det M = 1`, so the
//! polynomial is its own symmetric Laurent representative once powers of t
//! are divided out. Coefficients are computed exactly by the
//! Faddeev-LeVerrier recurrence (all its divisions are exact over Z).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntMatrix, SymplecticMatrix};

/// A polynomial with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial, trimming zero high-order coefficients.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> IntPolynomial {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients lowest degree first; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn at_one(&self) -> BigInt {
        self.eval(&BigInt::one())
    }

    pub fn at_minus_one(&self) -> BigInt {
        self.eval(&(-BigInt::one()))
    }

    /// Laurent symmetry `t^deg p(1/t) = p(t)`: the coefficient list reads the
    /// same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if deg == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(tI - M)` by Faddeev-LeVerrier.
///
/// The recurrence is `A_1 = M`, `c_k = -tr(A_k) / k`,
/// `A_{k+1} = M (A_k + c_k I)`; every division is exact and asserted so.
pub(crate) fn char_poly(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim;
    let mut high_first = Vec::with_capacity(n + 1);
    high_first.push(BigInt::one());
    let mut ak = m.clone();
    for k in 1..=n {
        let (q, r) = ak.trace().div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        let ck = -q;
        if k < n {
            let mut shifted = ak;
            for i in 0..n {
                *shifted.at_mut(i, i) += &ck;
            }
            ak = m.mul(&shifted);
        }
        high_first.push(ck);
    }
    high_first.reverse();
    IntPolynomial::from_coeffs(high_first)
}

/// The Alexander polynomial of a homological monodromy: `det(tI - M)`
/// normalized to its symmetric representative.
///
/// Normalization divides out any power of t and, when `|p(1)| = 1`, fixes
/// the sign so that `p(1) = +1`.
pub fn alexander_polynomial(m: &SymplecticMatrix) -> IntPolynomial {
    let p = char_poly(m.raw());
    let low = p.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    let mut coeffs: Vec<BigInt> = p.coeffs[low..].to_vec();
    let at_one: BigInt = coeffs.iter().sum();
    if at_one == -BigInt::one() {
        for c in &mut coeffs {
            *c = -std::mem::take(c);
        }
    }
    IntPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{evaluate_word, transvection, Curve, CurveSystem, HomologyClass, MonodromyWord};

    fn cls(genus: usize, v: &[i64]) -> HomologyClass {
        HomologyClass::from_i64(genus, v).unwrap()
    }

    #[test]
    fn identity_gives_t_minus_one_squared() {
        let m = SymplecticMatrix::identity(1);
        assert_eq!(alexander_polynomial(&m), IntPolynomial::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn trefoil_word_gives_the_classic_polynomial() {
        let sys = CurveSystem::new(
            1,
            vec![
                Curve::new("a", cls(1, &[1, 0])),
                Curve::new("b", cls(1, &[0, 1])),
            ],
        )
        .unwrap();
        let word = MonodromyWord::from_pairs(&[("a", 1), ("b", 1)]);
        let m = evaluate_word(&word, &sys).unwrap();
        let p = alexander_polynomial(&m);
        assert_eq!(p, IntPolynomial::from_i64(&[1, -1, 1]));
        assert_eq!(p.at_one(), BigInt::one());
    }

    #[test]
    fn six_three_word_polynomial() {
        let sys = CurveSystem::new(
            2,
            vec![
                Curve::new("a", cls(2, &[1, 0, 0, 0])),
                Curve::new("b", cls(2, &[0, 1, 0, 0])),
                Curve::new("c", cls(2, &[1, 0, 1, 0])),
                Curve::new("d", cls(2, &[0, 0, 0, 1])),
            ],
        )
        .unwrap();
        let word = MonodromyWord::from_pairs(&[("d", -1), ("b", 1), ("c", -1), ("a", 1)]);
        let m = evaluate_word(&word, &sys).unwrap();
        let p = alexander_polynomial(&m);
        assert_eq!(p, IntPolynomial::from_i64(&[1, -3, 5, -3, 1]));
        assert_eq!(p.at_one(), BigInt::one());
        assert_eq!(p.at_minus_one(), BigInt::from(13));
        assert!(p.is_palindromic());
    }

    #[test]
    fn char_polys_of_transvection_words_are_palindromic_with_det_one() {
        let c1 = cls(2, &[1, 2, 0, -1]);
        let c2 = cls(2, &[0, 1, 1, 0]);
        let m = &transvection(&c1) * &transvection(&c2).inverse();
        let p = alexander_polynomial(&m);
        assert!(p.is_palindromic());
        // constant term of det(tI - M) is det(M) for even dimension
        assert_eq!(p.coeffs()[0], BigInt::one());
        assert_eq!(p.degree(), 4);
    }

    #[test]
    fn random_words_give_palindromic_polynomials_with_det_one() {
        use proptest::prelude::*;
        proptest!(|(letters in prop::collection::vec(
            (prop::collection::vec(-4i64..=4, 4), -3i64..=3), 1..5
        ))| {
            let mut m = SymplecticMatrix::identity(2);
            for (v, e) in &letters {
                let class = HomologyClass::from_i64(2, v).unwrap();
                m = &m * &crate::homology::transvection_power(&class, *e);
            }
            let p = alexander_polynomial(&m);
            prop_assert!(p.is_palindromic());
            // p(0) = det(-M) = det(M) in even dimension
            prop_assert_eq!(&p.coeffs()[0], &BigInt::one());
        });
    }

    #[test]
    fn sign_normalization_fixes_value_one() {
        // -t + 1 evaluates to 0 at 1; stays as built (no unit to normalize by)
        let p = IntPolynomial::from_i64(&[1, -1]);
        assert_eq!(p.at_one(), BigInt::zero());
        // display formatting
        assert_eq!(
            IntPolynomial::from_i64(&[1, -3, 5, -3, 1]).to_string(),
            "t^4 - 3t^3 + 5t^2 - 3t + 1"
        );
        assert_eq!(IntPolynomial::from_i64(&[]).to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "t");
    }
}
