//! Error taxonomy shared by every module of the crate.
//!
//! Operations never panic on malformed mathematical input; they return one of
//! the variants below.  The CLI maps each variant to a stable exit code.

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vector had the wrong length for the ambient space it was used in.
    DimensionMismatch { expected: usize, got: usize },
    /// The requested recession cone contains a line (some ray and its
    /// negation), so the polyhedron has no vertices.
    NonStronglyConvexCone,
    /// Covolume requested for a polyhedron whose complement in the positive
    /// orthant has infinite volume.
    InfiniteCovolume,
    /// Covolume is only defined relative to the standard orthant recession.
    UnsupportedCone,
    /// Semigroup exponent vectors must be componentwise nonnegative.
    NegativeExponent,
    /// Semigroup generators must be nonzero lattice points of the positive
    /// orthant spanning a full-dimensional strongly convex cone.
    DegenerateCone,
    /// The semigroup generators do not generate the full ambient lattice.
    LatticeNotFull,
    /// Every generator of the ideal vanishes identically on the toric space,
    /// so there is no Newton polyhedron.
    EmptySupport,
    /// The zero germ has no order, no support and no Newton data.
    ZeroGerm,
    /// Differentiating a constant germ yields the zero ideal.
    ConstantGerm,
    /// A toric Laurent flattening was requested for a germ whose support
    /// contains the semigroup origin.
    ConstantTermPresent,
    /// A face-restriction was requested for a non-compact face.
    NonCompactFace,
    /// The operation requires Newton non-degeneracy certified exactly, but
    /// the decision procedure could only reach a heuristic verdict.
    NondegeneracyUnknown,
    /// A documented precondition of the operation does not hold.
    HypothesisNotMet(String),
    /// The monomial witness search exceeded its exploration bound.
    WitnessBoundExceeded,
    /// The quotient by the ideal is not finite dimensional.
    InfiniteColength,
    /// An enumeration bound was too small to certify the requested value.
    BoundTooSmall,
    /// A sequence-fitting operation needs more sample points than provided.
    RangeTooShort,
    /// The fitted Hilbert function disagrees with a check point, so the
    /// sampled range has not entered the polynomial regime.
    NonStabilized,
    /// An exact computation produced a non-integer where an integer was
    /// mathematically required.
    NonIntegerResult,
    /// The germ is not convenient: its support misses a coordinate axis.
    NotConvenient,
    /// Operation is defined for germs of the ambient affine space only.
    UnsupportedContext,
    /// Two exact computations of the same quantity disagree.  This is a bug
    /// in the crate, never a property of the input.
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NonStronglyConvexCone => {
                write!(f, "recession cone is not strongly convex")
            }
            Error::InfiniteCovolume => write!(f, "complement of the polyhedron has infinite volume"),
            Error::UnsupportedCone => {
                write!(f, "operation requires the standard orthant recession cone")
            }
            Error::NegativeExponent => write!(f, "exponent vector has a negative entry"),
            Error::DegenerateCone => {
                write!(f, "semigroup cone is not full-dimensional and strongly convex")
            }
            Error::LatticeNotFull => {
                write!(f, "semigroup generators do not generate the full ambient lattice")
            }
            Error::EmptySupport => write!(f, "every generator vanishes on the toric space"),
            Error::ZeroGerm => write!(f, "the zero germ is not allowed here"),
            Error::ConstantGerm => write!(f, "the germ has no nonconstant part"),
            Error::ConstantTermPresent => {
                write!(f, "germ has a constant term on the toric space")
            }
            Error::NonCompactFace => write!(f, "face restriction requires a compact face"),
            Error::NondegeneracyUnknown => {
                write!(f, "Newton non-degeneracy could not be certified exactly")
            }
            Error::HypothesisNotMet(why) => write!(f, "hypothesis not met: {why}"),
            Error::WitnessBoundExceeded => write!(f, "monomial witness search bound exceeded"),
            Error::InfiniteColength => write!(f, "ideal does not have finite colength"),
            Error::BoundTooSmall => write!(f, "enumeration bound too small to certify the value"),
            Error::RangeTooShort => write!(f, "sample range too short for the requested fit"),
            Error::NonStabilized => {
                write!(f, "Hilbert samples have not stabilized on the requested range")
            }
            Error::NonIntegerResult => write!(f, "exact computation produced an unexpected non-integer"),
            Error::NotConvenient => write!(f, "germ support does not touch every coordinate axis"),
            Error::UnsupportedContext => {
                write!(f, "operation is only defined for ambient affine germs")
            }
            Error::InternalInconsistency(what) => write!(f, "internal inconsistency: {what}"),
        }
    }
}

impl std::error::Error for Error {}
