//! Exact-arithmetic engine for graded Jacobian rings of (weighted)
//! homogeneous polynomials.
//!
//! The central object is the Jacobian quotient R(F) = S / J_F of a
//! homogeneous form F, presented degree by degree through exact linear
//! algebra over a prime field or over Q. On top of the graded slices the
//! crate computes:
//!
//! * Hilbert functions with an Artinian-ness certificate ([`QuotientRing`]);
//! * Hodge numbers of smooth hypersurfaces via the graded pieces at the
//!   degrees a_p = (p+1)d - (n+2) ([`Hypersurface`]);
//! * Weak and Strong Lefschetz witness tests and searches ([`lefschetz`]);
//! * multiplication step maps, n-fold Yukawa couplings, maximal-variation
//!   verdicts, and the infinitesimal Torelli rank ([`ivhs`]);
//! * Tjurina numbers, rank drops, and full scans along one-parameter
//!   degenerations ([`degeneration`]).
//!
//! Everything is exact: no floating point enters any rank. The default
//! coefficient domain is F_p for a 62-bit prime, where ranks are lower
//! bounds for the rank over Q (so graded dimensions are upper bounds and
//! a singular fiber can never pass for smooth); computations over Q via
//! [`Rationals`] or over several independent primes give as much
//! certainty as wanted.

pub mod degeneration;
pub mod domain;
pub mod error;
pub mod hodge;
pub mod ivhs;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod quotient;
pub mod ring;

pub use degeneration::{
    family_scan, rank_drop_delta, total_tjurina, DeltaReport, FamilyScan, FamilyScanConfig,
    FamilyTemplate, FiberRow, ParamDomain, TjurinaReport,
};
pub use num_rational::BigRational;
pub use domain::{is_prime_u64, Domain, PrimeField, Rationals, AGREEMENT_PRIMES, DEFAULT_PRIME};
pub use error::{Error, Result};
pub use hodge::{
    classify_ci, hodge_degree, hodge_slice_dims_unchecked, primitive_hodge_numbers, socle_degree,
    weighted_socle, CiClass, CiProfile, Hypersurface,
};
pub use ivhs::{
    family_extremes, FamilyExtremes, FiberOutcome, TorelliReport, VariationReport,
    VariationVerdict, YukawaEvaluation, YukawaPath,
};
pub use lefschetz::{
    find_lefschetz_witness, hf_obstruction, lefschetz_check, HfReport, HfVerdict, LefschetzMode,
    LefschetzReport, LefschetzVerdict, RankCheck, WitnessSearch,
};
pub use monomial::{monomials_of_degree, Monomial};
pub use parse::{infer_num_vars, parse_polynomial, parse_rational};
pub use quotient::{ci_hilbert_series, ArtinianOutcome, GradedMap, QuotientRing};
pub use ring::{
    euler_check_mod_p, euler_check_rational, euler_identity_holds, jacobian_generators,
    Polynomial, RingDescriptor,
};
