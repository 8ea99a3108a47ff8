//! Homological monodromy calculus.
//!
//! Simple closed curves on a genus-g surface are modeled by their classes in
//! first homology: integer vectors of length 2g in the symplectic basis
//! a1, b1, ..., ag, bg with `<a_i, b_i> = +1`. A right-handed Dehn twist
//! along `c` acts as the transvection `x -> x + <x, c> c`; a monodromy word
//! evaluates to the product of transvection powers in function-composition
//! order (the last letter written is applied first).
//!
//! This is the homological shadow only: isotopy is forgotten, separating
//! curves (zero class) act trivially, and no geometric intersection data is
//! tracked. That is exactly the level at which the invariant calculus and
//! the commutator certificates operate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

mod alexander;
mod matrix;
mod transporter;

pub use alexander::{alexander_polynomial, IntPolynomial};
pub use matrix::SymplecticMatrix;
pub use transporter::{complete_to_symplectic_basis, symplectic_transporter};

pub(crate) use matrix::{standard_j, IntMatrix};

/// Upper bound on genus, keeping dense 2g x 2g matrices a sane size.
pub const MAX_GENUS: usize = 64;

/// Errors from homological computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("genus {0} is out of range (1..={MAX_GENUS})")]
    GenusOutOfRange(usize),
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },
    #[error("class vector has length {got}, expected {expected}")]
    WrongDimension { expected: usize, got: usize },
    #[error("matrix does not satisfy M^T J M = J")]
    NotSymplectic,
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("duplicate curve name {0:?}")]
    DuplicateCurve(String),
    #[error("the {which} class is not primitive (gcd of entries is not 1)")]
    NotPrimitive { which: &'static str },
}

/// A first-homology class on a genus-g surface: an integer vector of length
/// 2g in the basis a1, b1, ..., ag, bg.
///
/// The zero vector is allowed and marks a homologically trivial (separating)
/// curve; a class is primitive exactly when the gcd of its entries is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    genus: usize,
    vector: Vec<BigInt>,
}

impl HomologyClass {
    pub fn new(genus: usize, vector: Vec<BigInt>) -> Result<HomologyClass, HomologyError> {
        if genus == 0 || genus > MAX_GENUS {
            return Err(HomologyError::GenusOutOfRange(genus));
        }
        if vector.len() != 2 * genus {
            return Err(HomologyError::WrongDimension {
                expected: 2 * genus,
                got: vector.len(),
            });
        }
        Ok(HomologyClass { genus, vector })
    }

    pub fn from_i64(genus: usize, entries: &[i64]) -> Result<HomologyClass, HomologyError> {
        HomologyClass::new(genus, entries.iter().map(|&e| BigInt::from(e)).collect())
    }

    pub fn zero(genus: usize) -> Result<HomologyClass, HomologyError> {
        HomologyClass::new(genus, vec![BigInt::zero(); 2 * genus])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn vector(&self) -> &[BigInt] {
        &self.vector
    }

    pub fn is_zero(&self) -> bool {
        self.vector.iter().all(Zero::is_zero)
    }

    /// True when the gcd of the entries is 1, i.e. the class of a
    /// non-separating simple closed curve.
    pub fn is_primitive(&self) -> bool {
        let mut gcd = BigInt::zero();
        for entry in &self.vector {
            gcd = gcd.gcd(entry);
        }
        gcd == BigInt::from(1)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, entry) in self.vector.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{entry}")?;
        }
        write!(f, ")")
    }
}

/// The algebraic intersection number `<x, y> = x^T J y`. Antisymmetric.
pub fn pairing(x: &HomologyClass, y: &HomologyClass) -> Result<BigInt, HomologyError> {
    if x.genus != y.genus {
        return Err(HomologyError::GenusMismatch {
            left: x.genus,
            right: y.genus,
        });
    }
    Ok(pairing_raw(&x.vector, &y.vector))
}

/// The form on raw coordinate vectors of equal, even length.
pub(crate) fn pairing_raw(x: &[BigInt], y: &[BigInt]) -> BigInt {
    debug_assert_eq!(x.len(), y.len());
    debug_assert_eq!(x.len() % 2, 0);
    let mut acc = BigInt::zero();
    for i in (0..x.len()).step_by(2) {
        acc += &x[i] * &y[i + 1] - &x[i + 1] * &y[i];
    }
    acc
}

/// The transvection `x -> x + <x, c> c` as a matrix: `I - c c^T J`.
///
/// The zero class gives the identity. Since `<c, c> = 0`, the matrix
/// `c c^T J` is nilpotent of order 2, so powers have the closed form used
/// in [`transvection_power`].
pub fn transvection(c: &HomologyClass) -> SymplecticMatrix {
    transvection_power(c, 1)
}

/// `transvection(c)^e = I - e * c c^T J`, exact for every integer exponent.
pub fn transvection_power(c: &HomologyClass, exponent: i64) -> SymplecticMatrix {
    let dim = 2 * c.genus;
    let j = standard_j(c.genus);
    // row vector c^T J
    let ctj: Vec<BigInt> = (0..dim)
        .map(|col| (0..dim).map(|row| &c.vector[row] * j.at(row, col)).sum())
        .collect();
    let mut m = IntMatrix::identity(dim);
    let e = BigInt::from(exponent);
    for row in 0..dim {
        if c.vector[row].is_zero() {
            continue;
        }
        for (col, pairing_entry) in ctj.iter().enumerate() {
            if !pairing_entry.is_zero() {
                *m.at_mut(row, col) -= &e * &c.vector[row] * pairing_entry;
            }
        }
    }
    SymplecticMatrix::from_parts_unchecked(c.genus, m)
}

/// A named curve with its homology class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub class: HomologyClass,
}

impl Curve {
    pub fn new(name: impl Into<String>, class: HomologyClass) -> Curve {
        Curve {
            name: name.into(),
            class,
        }
    }
}

/// The curves of one scene: unique names, uniform genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSystem {
    genus: usize,
    curves: Vec<Curve>,
}

impl CurveSystem {
    pub fn new(genus: usize, curves: Vec<Curve>) -> Result<CurveSystem, HomologyError> {
        if genus == 0 || genus > MAX_GENUS {
            return Err(HomologyError::GenusOutOfRange(genus));
        }
        for (i, curve) in curves.iter().enumerate() {
            if curve.class.genus() != genus {
                return Err(HomologyError::GenusMismatch {
                    left: genus,
                    right: curve.class.genus(),
                });
            }
            if curves[..i].iter().any(|c| c.name == curve.name) {
                return Err(HomologyError::DuplicateCurve(curve.name.clone()));
            }
        }
        Ok(CurveSystem { genus, curves })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn get(&self, name: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.name == name)
    }

    pub fn class_of(&self, name: &str) -> Result<&HomologyClass, HomologyError> {
        self.get(name)
            .map(|c| &c.class)
            .ok_or_else(|| HomologyError::UnknownCurve(name.to_owned()))
    }

    /// Union of two systems over the same genus; name collisions are errors.
    pub fn merged(&self, other: &CurveSystem) -> Result<CurveSystem, HomologyError> {
        if self.genus != other.genus {
            return Err(HomologyError::GenusMismatch {
                left: self.genus,
                right: other.genus,
            });
        }
        let mut curves = self.curves.clone();
        curves.extend(other.curves.iter().cloned());
        CurveSystem::new(self.genus, curves)
    }
}

/// One letter of a monodromy word: a named twist curve with an integer power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Letter {
    pub curve: String,
    pub power: i64,
}

/// An ordered word in Dehn twists, composed right to left: the word
/// `t_d^{-1} t_b t_c^{-1} t_a` is stored as letters d, b, c, a (in writing
/// order) and applies `t_a` first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonodromyWord {
    letters: Vec<Letter>,
}

impl MonodromyWord {
    pub fn new(letters: Vec<Letter>) -> MonodromyWord {
        MonodromyWord { letters }
    }

    pub fn empty() -> MonodromyWord {
        MonodromyWord::default()
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> MonodromyWord {
        MonodromyWord {
            letters: pairs
                .iter()
                .map(|&(curve, power)| Letter {
                    curve: curve.to_owned(),
                    power,
                })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Prepends a letter (leftmost position, applied last). A zero power is
    /// dropped, leaving the word unchanged.
    pub fn prepended(&self, curve: &str, power: i64) -> MonodromyWord {
        if power == 0 {
            return self.clone();
        }
        let mut letters = Vec::with_capacity(self.letters.len() + 1);
        letters.push(Letter {
            curve: curve.to_owned(),
            power,
        });
        letters.extend(self.letters.iter().cloned());
        MonodromyWord { letters }
    }

    /// Concatenation in composition order: `self` is applied after `other`.
    pub fn concat(&self, other: &MonodromyWord) -> MonodromyWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        MonodromyWord { letters }
    }
}

impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "id");
        }
        for (i, letter) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if letter.power == 1 {
                write!(f, "t_{}", letter.curve)?;
            } else {
                write!(f, "t_{}^{}", letter.curve, letter.power)?;
            }
        }
        Ok(())
    }
}

/// Evaluates a word to its homological action: the product of
/// `transvection(c_i)^{e_i}` with the rightmost letter acting first.
pub fn evaluate_word(
    word: &MonodromyWord,
    curves: &CurveSystem,
) -> Result<SymplecticMatrix, HomologyError> {
    let mut acc = SymplecticMatrix::identity(curves.genus());
    for letter in word.letters() {
        let class = curves.class_of(&letter.curve)?;
        acc = &acc * &transvection_power(class, letter.power);
    }
    Ok(acc)
}
