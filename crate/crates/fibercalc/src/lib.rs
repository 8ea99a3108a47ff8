//! Exact-integer invariants of fibered links in the 3-sphere.
//!
//! The crate tracks fiber surfaces through Hopf plumbing, mirroring, and
//! boundary sum at the level of their (euler characteristic, Hopf invariant)
//! pairs, derives stabilization-height lower bounds with a brute-force
//! enumeration cross-check, evaluates monodromy words as integer symplectic
//! matrices (Dehn twists as transvections), computes Alexander polynomials
//! exactly, and machine-checks single-commutator certificates for
//! twist-difference monodromies.
//!
//! Modules:
//!
//! * [`state`] — fiber states and the Hopf / d3 / lambda calculus
//! * [`ledger`] — stabilization records and height lower bounds
//! * [`homology`] — classes, transvections, words, transporters, Alexander
//! * [`family`] — twist-parameterized families and divergence tables
//! * [`certify`] — commutator certificates and scl bound reports
//! * [`scene`] — the `fibercalc-scene/1` JSON input format
//!
//! All arithmetic is exact: machine integers where ranges are documented,
//! `BigInt` in the matrix layer. No floating point anywhere.

pub mod certify;
pub mod family;
pub mod homology;
pub mod ledger;
pub mod scene;
pub mod state;

pub use certify::{commutator_certificate, scl_upper_bound, CommutatorCertificate, SclBoundReport};
pub use family::{apply_twisting, FamilyRow, FiberedFamily, HopfUpdatePolicy};
pub use homology::{
    alexander_polynomial, evaluate_word, pairing, symplectic_transporter, transvection,
    transvection_power, Curve, CurveSystem, HomologyClass, IntPolynomial, MonodromyWord,
    SymplecticMatrix,
};
pub use ledger::{
    feasible_stabilizations, height_lower_bound, height_lower_bound_oracle, record_from_counts,
    BoundReport, StabilizationRecord,
};
pub use scene::{Scene, SceneError};
pub use state::{FiberState, HalfInteger, HopfSign, Surface};
