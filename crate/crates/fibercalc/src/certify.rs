//! Machine-checked single-commutator certificates.
//!
//! For primitive classes c1, c2 and any n, the twist-difference
//! `T_{c1}^{-n} T_{c2}^{n}` equals the single commutator `[T_{c1}^{-n}, G]`
//! for any symplectic G with `G c1 = c2`, by conjugation covariance
//! `G T_{c1} G^{-1} = T_{G c1}`. A certificate records both sides of that
//! identity, computed independently and compared entrywise.
//!
//! This is the homological shadow of the corresponding rewriting for
//! surface diffeomorphisms: a necessary-condition check, not a mapping
//! class group statement. Reports describe it as a homological certificate.
//! The resulting scl bound is symbolic, `cl(psi_0) + 1`; `cl(psi_0)` is an
//! input, never computed here (no single Dehn twist is a single commutator,
//! by Korkmaz-Ozbagci, and cl can be infinite in low genus).

use thiserror::Error;

use crate::family::FiberedFamily;
use crate::homology::{
    symplectic_transporter, transvection_power, HomologyClass, HomologyError, SymplecticMatrix,
};

/// The symbolic scl bound attached to every certificate.
pub const BOUND_FORM: &str = "cl(psi_0) + 1";

/// Wording for what a certificate does and does not establish.
pub const CERTIFICATE_KIND: &str = "homological certificate";

/// Cited remark displayed with every scl report.
pub const SINGLE_TWIST_REMARK: &str =
    "no single Dehn twist is a single commutator (Korkmaz-Ozbagci); cl(psi_0) is supplied, never computed";

/// Errors from certificate construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error(transparent)]
    Homology(#[from] HomologyError),
    /// The two sides disagreed, which contradicts conjugation covariance:
    /// an artifact bug, never a reportable outcome.
    #[error("internal verification failure: commutator identity broke at n = {n}")]
    VerificationFailure { n: i64 },
}

/// A verified identity `T_{c1}^{-n} T_{c2}^{n} = [T_{c1}^{-n}, G]` with all
/// participating matrices retained for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutatorCertificate {
    pub n: i64,
    pub c1: HomologyClass,
    pub c2: HomologyClass,
    /// Symplectic G with `G c1 = c2`.
    pub transporter: SymplecticMatrix,
    /// `T_{c1}^{-n} T_{c2}^{n}`.
    pub lhs: SymplecticMatrix,
    /// `T_{c1}^{-n} G T_{c1}^{n} G^{-1}`.
    pub rhs: SymplecticMatrix,
    /// Always true on every constructed certificate; a mismatch surfaces as
    /// [`CertifyError::VerificationFailure`] instead.
    pub verified: bool,
}

/// Builds and checks the certificate for `(c1, c2, n)`.
pub fn commutator_certificate(
    c1: &HomologyClass,
    c2: &HomologyClass,
    n: i64,
) -> Result<CommutatorCertificate, CertifyError> {
    let transporter = symplectic_transporter(c1, c2)?;
    let t1_neg = transvection_power(c1, -n);
    let lhs = &t1_neg * &transvection_power(c2, n);
    let rhs = &(&t1_neg * &transporter) * &(&transvection_power(c1, n) * &transporter.inverse());
    if lhs != rhs {
        return Err(CertifyError::VerificationFailure { n });
    }
    Ok(CommutatorCertificate {
        n,
        c1: c1.clone(),
        c2: c2.clone(),
        transporter,
        lhs,
        rhs,
        verified: true,
    })
}

/// An scl upper-bound report for the n-th family member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SclBoundReport {
    pub n: i64,
    /// Always [`BOUND_FORM`]: the bound is `cl(psi_0) + 1`.
    pub bound_form: &'static str,
    /// `cl0 + 1` when the caller supplies an upper bound `cl0` on
    /// `cl(psi_0)`. Independent of n, which is the whole point: one
    /// constant bounds scl across the family.
    pub numeric_bound: Option<u64>,
    pub certificate: CommutatorCertificate,
}

/// Certifies the twist-difference of the n-th member of a family and
/// packages the scl bound.
pub fn scl_upper_bound(
    family: &FiberedFamily,
    n: i64,
    cl0: Option<u64>,
) -> Result<SclBoundReport, CertifyError> {
    let (c1, c2) = family.loop_classes();
    let certificate = commutator_certificate(c1, c2, n)?;
    Ok(SclBoundReport {
        n,
        bound_form: BOUND_FORM,
        numeric_bound: cl0.map(|k| k + 1),
        certificate,
    })
}
