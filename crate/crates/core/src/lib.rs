//! Exact enumeration of the irreducible components of moduli of rank-2
//! torsion-free sheaves, and of Brill-Noether loci of point schemes, on
//! the projective plane, the quadric P1xP1, and ruled surfaces without
//! curves of negative self-intersection.
//!
//! Everything is computed from numerical data alone (Neron-Severi classes,
//! Chern classes, Euler characteristics); no sheaf or curve is ever
//! constructed symbolically. All arithmetic is exact: checked 64-bit
//! integers in the classification formulas, arbitrary-precision rationals
//! in the verification oracles. Half-integer intermediates are carried
//! doubled and divided at the end with an evenness check, so there is no
//! floating point anywhere.
//!
//! The crate is organized around the pipeline:
//!
//! * [`surface`] - surface models, intersection pairing, canonical and
//!   fiber classes, effectiveness predicates.
//! * [`euler`] - Euler characteristics: line bundles, sheaves via
//!   Riemann-Roch, the bilinear pairing chi(F,G), and the
//!   Harder-Narasimhan stratum characteristic.
//! * [`cohomology`] - (h0, h1, h2) of the generic line bundle in a
//!   numerical class.
//! * [`tf`] - components of the stack of rank-2 torsion-free sheaves:
//!   the prioritary existence criteria, the nonprioritary enumeration
//!   over a finite window, and the symbolic admissible-region report.
//! * [`bn`] - components of the Brill-Noether locus of N-point schemes
//!   imposing dependent conditions on a linear system, the Serre
//!   correspondence into the sheaf moduli, and the two-path codimension
//!   cross-check.
//! * [`oracle`] - independent verification: exact Hilbert-function
//!   computations on sampled point configurations, split-bundle chi
//!   oracles, and the cross-ruling diagnostic on the quadric.
//! * [`cli`] - the command-line front end (`tf`, `bn`, `chi`, `cohom`,
//!   `survey`, `verify`).
//!
//! See the `examples/` directory for runnable walkthroughs of each
//! capability.

pub mod bn;
pub mod cli;
pub mod cohomology;
pub mod config;
pub mod euler;
pub mod oracle;
pub mod output;
pub mod surface;
pub mod tf;

mod arith;

pub use bn::{bn_components, codim_two_path_check, serre_correspondence, BNComponent, BNKind};
pub use cohomology::{h1_of, line_cohomology, CohomologyTriple};
pub use euler::{chi_hn_stratum, chi_line_bundle, chi_pair, chi_self_pair, chi_sheaf};
pub use oracle::{
    chi_pair_split, cross_ruling_diagnostic, hilbert_function, monomial_basis,
    sample_component_configuration, sample_general_configuration, split_bundle_chern,
    witness_in_reach, CrossRulingReport, CurveSplit, HilbertReport, PointConfiguration,
};
pub use surface::{ChernData, DivisorClass, SurfaceKind, SurfaceModel};
pub use tf::{
    admissible_region_description, enumerate_nonprioritary, nonprioritary_admissible,
    prioritary_component, prioritary_exists, AdmissibleRegion, TFComponent, TFKind, Window,
};

/// Error type shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A divisor class has the wrong number of coefficients for the surface.
    #[error("divisor class has {got} coefficients but the surface lattice has rank {want}")]
    DimensionMismatch { want: usize, got: usize },
    /// Checked 64-bit arithmetic overflowed.
    #[error("integer overflow during {0}")]
    Overflow(&'static str),
    /// An intermediate that must be even came out odd; indicates a bug.
    #[error("odd intermediate where an even value is guaranteed, in {0}")]
    Parity(&'static str),
    /// The operation is not defined on the given surface kind.
    #[error("{0} is not supported on this surface")]
    UnsupportedSurface(&'static str),
    /// A point count or length parameter was negative.
    #[error("{name} must be nonnegative, got {value}")]
    NegativeCount { name: &'static str, value: i64 },
    /// Sheaf rank outside the defined range.
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(i64),
    /// N outside the range (0, chi(O(E))] required by the locus definition.
    #[error("N = {n} out of range: need 0 < N <= chi(O(E)) = {chi}")]
    NOutOfRange { n: i64, chi: i64 },
    /// E must be effective (all coefficients nonnegative).
    #[error("class {0} is not effective: all coefficients must be >= 0")]
    ENotEffective(String),
    /// The Serre correspondence landed on a non-admissible component.
    /// This is never ignored: it signals an implementation bug.
    #[error("Serre correspondence produced a non-admissible component: {0}")]
    AdmissibilityViolation(String),
    /// A point configuration violated a precondition (duplicate points).
    #[error("degenerate point configuration: {0}")]
    DegenerateInput(String),
    /// Random sampling failed to produce a usable object.
    #[error("sampling failed after {tries} attempts: {what}")]
    SamplingFailure { what: &'static str, tries: u32 },
    /// Anything else wrong with the inputs.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Process exit code for CLI reporting: 2 invalid input, 3 overflow,
    /// 4 consistency failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) | Error::Parity(_) => 3,
            Error::AdmissibilityViolation(_) => 4,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
