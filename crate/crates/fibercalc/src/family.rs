//! Twist-parameterized families of fiber surfaces.
//!
//! A twisting of order n along a curve `c` on the fiber replaces the
//! monodromy `f` by `t_c^{-n} . f`. Families here carry a base state, a base
//! word, two twist loops and a declared Hopf-update policy: the Hopf
//! invariant of the n-th member is policy data, not something this crate
//! derives from surgery (no such formula is computable at this level).
//! `Preserve` is the type-(0,1) Stallings case; `QuadraticInN` covers
//! families whose H grows quadratically, like the 6_3 family below, whose
//! update was computed externally.
//!
//! The geometric conditions making a loop a twisting loop (unknotted,
//! 0-framed) are invisible to homology; scenes declare a free-text
//! `twist_type` tag that is trusted and echoed in reports.

use thiserror::Error;

use crate::homology::{
    Curve, CurveSystem, HomologyClass, HomologyError, MonodromyWord,
};
use crate::ledger;
use crate::state::{FiberState, HalfInteger};

/// Errors from family construction and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error("policy evaluates to {policy_at_zero} at n = 0, but the base state has H = {base_hopf}")]
    PolicyBaseMismatch { policy_at_zero: i64, base_hopf: i64 },
    #[error("twist loop {0:?} is not primitive (loops must be non-separating)")]
    LoopNotPrimitive(String),
    #[error("curve name {0:?} appears on both sides of the boundary sum")]
    NamespaceCollision(String),
    #[error("empty range: from = {from} > to = {to}")]
    InvalidRange { from: i64, to: i64 },
}

/// How the Hopf invariant of the n-th family member is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfUpdatePolicy {
    /// `H(n) = H(0)` for all n (type-(0,1) Stallings twists preserve the
    /// supported plane field, hence H).
    Preserve,
    /// `H(n) = c2 n^2 + c1 n + c0`, declared by the scene.
    QuadraticInN { c2: i64, c1: i64, c0: i64 },
}

impl HopfUpdatePolicy {
    /// The Hopf invariant at parameter n, given the base value.
    pub fn hopf_at(&self, base_hopf: i64, n: i64) -> i64 {
        match *self {
            HopfUpdatePolicy::Preserve => base_hopf,
            HopfUpdatePolicy::QuadraticInN { c2, c1, c0 } => {
                let n = i128::from(n);
                let value = i128::from(c2) * n * n + i128::from(c1) * n + i128::from(c0);
                i64::try_from(value).expect("hopf invariant out of supported range")
            }
        }
    }

    /// Shifts the policy by a constant (boundary summing with a fixed fiber
    /// adds its H to every member).
    fn shifted(&self, offset: i64) -> HopfUpdatePolicy {
        match *self {
            HopfUpdatePolicy::Preserve => HopfUpdatePolicy::Preserve,
            HopfUpdatePolicy::QuadraticInN { c2, c1, c0 } => HopfUpdatePolicy::QuadraticInN {
                c2,
                c1,
                c0: c0 + offset,
            },
        }
    }
}

/// Prepends the twist update to a word: a twisting of order n along `c`
/// turns `f` into `t_c^{-n} . f`. Order 0 leaves the word unchanged.
pub fn apply_twisting(
    word: &MonodromyWord,
    curves: &CurveSystem,
    curve: &str,
    order: i64,
) -> Result<MonodromyWord, FamilyError> {
    curves.class_of(curve)?;
    Ok(word.prepended(curve, -order))
}

/// One row of a family table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub n: i64,
    pub hopf: i64,
    pub d3: HalfInteger,
    pub lambda: i64,
    pub height_lower_bound: u64,
    pub word_length: usize,
}

/// A family of fiber surfaces indexed by the twist order n: member n has
/// monodromy `t_{loop1}^{-n} . t_{loop2}^{n} . base_word` and Hopf invariant
/// `policy(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberedFamily {
    base_state: FiberState,
    base_word: MonodromyWord,
    loop1: String,
    loop2: String,
    policy: HopfUpdatePolicy,
    curves: CurveSystem,
    twist_type: Option<String>,
}

impl FiberedFamily {
    /// Validates and builds a family: the loops must resolve to primitive
    /// classes, every word letter must resolve, and the policy must agree
    /// with the base state at n = 0.
    pub fn new(
        base_state: FiberState,
        base_word: MonodromyWord,
        curves: CurveSystem,
        loop1: impl Into<String>,
        loop2: impl Into<String>,
        policy: HopfUpdatePolicy,
        twist_type: Option<String>,
    ) -> Result<FiberedFamily, FamilyError> {
        let loop1 = loop1.into();
        let loop2 = loop2.into();
        for name in [&loop1, &loop2] {
            if !curves.class_of(name)?.is_primitive() {
                return Err(FamilyError::LoopNotPrimitive(name.clone()));
            }
        }
        for letter in base_word.letters() {
            curves.class_of(&letter.curve)?;
        }
        let policy_at_zero = policy.hopf_at(base_state.hopf(), 0);
        if policy_at_zero != base_state.hopf() {
            return Err(FamilyError::PolicyBaseMismatch {
                policy_at_zero,
                base_hopf: base_state.hopf(),
            });
        }
        Ok(FiberedFamily {
            base_state,
            base_word,
            loop1,
            loop2,
            policy,
            curves,
            twist_type,
        })
    }

    /// The genus-2 family built on the fiber surface of the knot 6_3.
    ///
    /// The base surface is a plumbing of 2 positive and 2 negative Hopf
    /// bands on the disk (chi = -3, H = -2) with monodromy
    /// `t_d^{-1} t_b t_c^{-1} t_a` on the standard chain of curves; twisting
    /// along the loop pair (c1, c2) with orders (n, -n) changes the Hopf
    /// invariant to `n^2 + n - 2` (externally computed update).
    pub fn six_three() -> FiberedFamily {
        let cls = |v: &[i64]| HomologyClass::from_i64(2, v).expect("fixed genus-2 classes");
        let curves = CurveSystem::new(
            2,
            vec![
                Curve::new("a", cls(&[1, 0, 0, 0])),
                Curve::new("b", cls(&[0, 1, 0, 0])),
                Curve::new("c", cls(&[1, 0, 1, 0])),
                Curve::new("d", cls(&[0, 0, 0, 1])),
                Curve::new("c1", cls(&[1, 0, 0, 0])),
                Curve::new("c2", cls(&[0, 0, 1, 0])),
            ],
        )
        .expect("fixed curve table is valid");
        let base_state = FiberState::new("6_3 fiber", -3, -2).expect("chi <= 1");
        let base_word = MonodromyWord::from_pairs(&[("d", -1), ("b", 1), ("c", -1), ("a", 1)]);
        FiberedFamily::new(
            base_state,
            base_word,
            curves,
            "c1",
            "c2",
            HopfUpdatePolicy::QuadraticInN { c2: 1, c1: 1, c0: -2 },
            Some("paired (1/n, -1/n) surgery".to_owned()),
        )
        .expect("fixed family data is valid")
    }

    /// The default companion fiber for boundary sums: (chi = -1, H = 0)
    /// with an empty word. The word carries no homological content, hence
    /// the placeholder label.
    pub fn default_companion() -> (FiberState, MonodromyWord) {
        let state = FiberState::new("companion (homological placeholder)", -1, 0)
            .expect("chi <= 1");
        (state, MonodromyWord::empty())
    }

    pub fn base_state(&self) -> &FiberState {
        &self.base_state
    }

    pub fn base_word(&self) -> &MonodromyWord {
        &self.base_word
    }

    pub fn curves(&self) -> &CurveSystem {
        &self.curves
    }

    pub fn loop_names(&self) -> (&str, &str) {
        (&self.loop1, &self.loop2)
    }

    pub fn loop_classes(&self) -> (&HomologyClass, &HomologyClass) {
        let c1 = self
            .curves
            .class_of(&self.loop1)
            .expect("validated at construction");
        let c2 = self
            .curves
            .class_of(&self.loop2)
            .expect("validated at construction");
        (c1, c2)
    }

    pub fn policy(&self) -> HopfUpdatePolicy {
        self.policy
    }

    pub fn twist_type(&self) -> Option<&str> {
        self.twist_type.as_deref()
    }

    /// The n-th member: state `(chi(base), policy(n))` and word
    /// `t_{loop1}^{-n} . t_{loop2}^{n} . base_word`.
    pub fn member(&self, n: i64) -> (FiberState, MonodromyWord) {
        let hopf = self.policy.hopf_at(self.base_state.hopf(), n);
        let state = FiberState::new(
            format!("{}[n={}]", self.base_state.label(), n),
            self.base_state.euler_char(),
            hopf,
        )
        .expect("chi unchanged from base");
        let word = apply_twisting(&self.base_word, &self.curves, &self.loop2, -n)
            .and_then(|w| apply_twisting(&w, &self.curves, &self.loop1, n))
            .expect("loops validated at construction");
        (state, word)
    }

    /// Boundary sum with a fixed fiber: states sum, the companion word is
    /// appended (applied first), and the H-policy shifts by the companion's
    /// H. Curve namespaces must be disjoint. The construction is geometric
    /// only for companions of genus > 0 (chi <= -1), but the arithmetic is
    /// total, matching the disk unit law.
    pub fn boundary_summed(
        &self,
        other: &FiberState,
        other_word: &MonodromyWord,
        other_curves: &[Curve],
    ) -> Result<FiberedFamily, FamilyError> {
        let curves = if other_curves.is_empty() {
            self.curves.clone()
        } else {
            let other_system = CurveSystem::new(self.curves.genus(), other_curves.to_vec())?;
            self.curves.merged(&other_system).map_err(|e| match e {
                HomologyError::DuplicateCurve(name) => FamilyError::NamespaceCollision(name),
                other => FamilyError::Homology(other),
            })?
        };
        for letter in other_word.letters() {
            curves.class_of(&letter.curve)?;
        }
        FiberedFamily::new(
            self.base_state.boundary_sum(other),
            self.base_word.concat(other_word),
            curves,
            self.loop1.clone(),
            self.loop2.clone(),
            self.policy.shifted(other.hopf()),
            self.twist_type.clone(),
        )
    }

    /// One row per n in `from..=to`, computed through the state and ledger
    /// formulas.
    pub fn table(&self, from: i64, to: i64) -> Result<Vec<FamilyRow>, FamilyError> {
        if from > to {
            return Err(FamilyError::InvalidRange { from, to });
        }
        Ok((from..=to)
            .map(|n| {
                let (state, word) = self.member(n);
                FamilyRow {
                    n,
                    hopf: state.hopf(),
                    d3: state.d3(),
                    lambda: state.lambda(),
                    height_lower_bound: ledger::height_lower_bound(&state),
                    word_length: word.len(),
                }
            })
            .collect())
    }
}
