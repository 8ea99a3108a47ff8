//! Fiber-surface states and the Hopf-invariant calculus.
//!
//! A fiber surface of a link in the 3-sphere is summarized by the pair
//! (euler characteristic, Hopf invariant of the supported plane field).
//! The Hopf invariant `H` is pinned down by four axioms:
//!
//! * `H = -d3 - 1/2`, where `d3` is Gompf's homotopy invariant (so `H` is an
//!   integer: `d3` lives in `Z + 1/2`),
//! * `H = 0` for the positive Hopf band, `H = -1` for the negative one,
//! * `H` is additive under plumbing (Murasugi sum) and boundary sum.
//!
//! Rudolph's enhancement to the Milnor number is `lambda = -H`. Everything
//! here is exact integer arithmetic; there is no floating point anywhere in
//! this crate. Callers keep `|euler_char|` and `|hopf|` below 2^62 so the
//! doubling in [`FiberState::d3`] cannot overflow.

use std::fmt;

use thiserror::Error;

/// Errors from constructing or transforming fiber states.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StateError {
    /// Fiber surfaces of links satisfy chi <= 1, with equality only for the disk.
    #[error("euler characteristic {0} exceeds 1; fiber surfaces satisfy chi <= 1")]
    EulerCharAboveDisk(i64),
    /// Deplumbing the disk-like state would leave the state space.
    #[error("cannot deplumb a state with chi = 1: no plumbing produces it")]
    DeplumbFromDisk,
    /// Fiber surfaces of links have nonempty boundary.
    #[error("surface must have at least one boundary component")]
    ClosedSurface,
    /// genus and euler characteristic force a non-positive boundary count.
    #[error("genus {genus} with euler characteristic {euler_char} gives {computed} boundary components")]
    IncompatibleEulerChar {
        genus: u32,
        euler_char: i64,
        computed: i64,
    },
    /// d3 of a plane field on the 3-sphere lies in Z + 1/2, never in Z.
    #[error("d3 = {0} is an integer; expected a value in Z + 1/2")]
    IntegralD3(HalfInteger),
}

/// The sign of a Hopf band.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HopfSign {
    Positive,
    Negative,
}

impl HopfSign {
    /// The mirror image of a Hopf band has the opposite sign.
    pub fn flipped(self) -> HopfSign {
        match self {
            HopfSign::Positive => HopfSign::Negative,
            HopfSign::Negative => HopfSign::Positive,
        }
    }
}

impl fmt::Display for HopfSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfSign::Positive => write!(f, "+"),
            HopfSign::Negative => write!(f, "-"),
        }
    }
}

/// An element of (1/2)Z stored as twice its value. Exact; no floats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    /// Builds the half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> HalfInteger {
        HalfInteger { twice }
    }

    pub fn from_int(n: i64) -> HalfInteger {
        HalfInteger { twice: 2 * n }
    }

    /// Twice the value; the canonical exact representation.
    pub fn twice(&self) -> i64 {
        self.twice
    }

    /// True when the value lies in Z.
    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Recovers the Hopf invariant from `d3` via `H = -d3 - 1/2`.
///
/// Fails when `d3` is an integer, since `d3` of a plane field on the
/// 3-sphere always lies in `Z + 1/2`.
pub fn hopf_from_d3(d3: HalfInteger) -> Result<i64, StateError> {
    if d3.is_integer() {
        return Err(StateError::IntegralD3(d3));
    }
    Ok(-(d3.twice() + 1) / 2)
}

/// A compact oriented surface with boundary, given by genus and boundary count.
///
/// Satisfies `euler_char + first_betti = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Surface {
    genus: u32,
    boundary_components: u32,
}

impl Surface {
    pub fn new(genus: u32, boundary_components: u32) -> Result<Surface, StateError> {
        if boundary_components == 0 {
            return Err(StateError::ClosedSurface);
        }
        Ok(Surface {
            genus,
            boundary_components,
        })
    }

    /// Solves `chi = 2 - 2g - r` for the boundary count `r`.
    pub fn from_genus_and_euler(genus: u32, euler_char: i64) -> Result<Surface, StateError> {
        let computed = 2 - 2 * i64::from(genus) - euler_char;
        let boundary_components = u32::try_from(computed)
            .ok()
            .filter(|&r| r >= 1)
            .ok_or(StateError::IncompatibleEulerChar {
                genus,
                euler_char,
                computed,
            })?;
        Ok(Surface {
            genus,
            boundary_components,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_components(&self) -> u32 {
        self.boundary_components
    }

    pub fn euler_char(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary_components)
    }

    pub fn first_betti(&self) -> i64 {
        2 * i64::from(self.genus) + i64::from(self.boundary_components) - 1
    }
}

/// A fiber surface reduced to its (euler characteristic, Hopf invariant) pair.
///
/// Genus and boundary count are deliberately forgotten: a Hopf plumbing can
/// raise either depending on the gluing, and none of the calculus here needs
/// them. The `label` is a human-readable tag; equality and hashing ignore it
/// and compare `(euler_char, hopf)` only.
#[derive(Debug, Clone)]
pub struct FiberState {
    label: String,
    euler_char: i64,
    hopf: i64,
}

impl PartialEq for FiberState {
    fn eq(&self, other: &Self) -> bool {
        self.euler_char == other.euler_char && self.hopf == other.hopf
    }
}

impl Eq for FiberState {}

impl std::hash::Hash for FiberState {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.euler_char.hash(state);
        self.hopf.hash(state);
    }
}

impl fmt::Display for FiberState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (chi = {}, H = {})",
            self.label, self.euler_char, self.hopf
        )
    }
}

impl FiberState {
    /// Builds a state, rejecting `euler_char > 1`.
    pub fn new(
        label: impl Into<String>,
        euler_char: i64,
        hopf: i64,
    ) -> Result<FiberState, StateError> {
        if euler_char > 1 {
            return Err(StateError::EulerCharAboveDisk(euler_char));
        }
        Ok(FiberState {
            label: label.into(),
            euler_char,
            hopf,
        })
    }

    /// The standard disk: chi = 1, H = 0.
    pub fn disk() -> FiberState {
        FiberState {
            label: "disk".to_owned(),
            euler_char: 1,
            hopf: 0,
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn euler_char(&self) -> i64 {
        self.euler_char
    }

    pub fn hopf(&self) -> i64 {
        self.hopf
    }

    /// Relabels the state without touching its invariants.
    pub fn with_label(mut self, label: impl Into<String>) -> FiberState {
        self.label = label.into();
        self
    }

    /// Plumbs a Hopf band of the given sign: chi drops by 1, and H drops by 1
    /// exactly for a negative band.
    pub fn plumb(&self, sign: HopfSign) -> FiberState {
        let hopf = match sign {
            HopfSign::Positive => self.hopf,
            HopfSign::Negative => self.hopf - 1,
        };
        FiberState {
            label: format!("{} * H{}", self.label, sign),
            euler_char: self.euler_char - 1,
            hopf,
        }
    }

    /// Arithmetic inverse of [`plumb`](FiberState::plumb).
    ///
    /// Geometric realizability of the deplumbing is not checked, but the
    /// result must stay in the state space: deplumbing a chi = 1 state is
    /// rejected, since no plumbing produces one.
    pub fn deplumb(&self, sign: HopfSign) -> Result<FiberState, StateError> {
        if self.euler_char == 1 {
            return Err(StateError::DeplumbFromDisk);
        }
        let hopf = match sign {
            HopfSign::Positive => self.hopf,
            HopfSign::Negative => self.hopf + 1,
        };
        Ok(FiberState {
            label: format!("{} / H{}", self.label, sign),
            euler_char: self.euler_char + 1,
            hopf,
        })
    }

    /// Mirror image: chi is unchanged and `H` becomes `chi - 1 - H`, the
    /// unique solution of `1 - chi + H + H(mirror) = 0`.
    pub fn mirror(&self) -> FiberState {
        FiberState {
            label: format!("mirror({})", self.label),
            euler_char: self.euler_char,
            hopf: self.euler_char - 1 - self.hopf,
        }
    }

    /// Boundary sum: `chi = chi1 + chi2 - 1` and `H` adds (a boundary sum is
    /// a Murasugi sum, so additivity applies).
    pub fn boundary_sum(&self, other: &FiberState) -> FiberState {
        FiberState {
            label: format!("({}) # ({})", self.label, other.label),
            euler_char: self.euler_char + other.euler_char - 1,
            hopf: self.hopf + other.hopf,
        }
    }

    /// Gompf's `d3` invariant of the supported plane field: `-H - 1/2`.
    pub fn d3(&self) -> HalfInteger {
        HalfInteger::from_twice(
            self.hopf
                .checked_mul(-2)
                .and_then(|t| t.checked_sub(1))
                .expect("hopf invariant out of supported range"),
        )
    }

    /// Rudolph's enhanced Milnor number of the boundary link: `-H`.
    pub fn lambda(&self) -> i64 {
        -self.hopf
    }
}
