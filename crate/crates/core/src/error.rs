use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    DivisionByZero,
    /// The spanning pair of a plane is not an orthogonal, equal-norm, nonzero pair.
    DegeneratePlane,
    /// The plane is required to have unit spanning vectors.
    NonUnitPlane,
    /// A vector that must lie in `Im 𝕆` has a nonzero real part.
    NotImaginary,
    /// The plane has support outside `span{e1..e5}`.
    OutsideSubspace,
    /// `w` is zero, not imaginary, or not orthogonal to `span{e0, x, y, xy}`.
    InadmissibleComplement,
    /// Two elements of the frame `(e0, x, y, xy, w, wx, wy, w(xy))` are not orthogonal.
    FrameNotOrthogonal {
        i: usize,
        j: usize,
    },
    /// A frame element has the wrong norm (1 for the first four, `|w|²` for the rest).
    FrameNorm {
        i: usize,
    },
    /// A product of frame elements is not a signed multiple of a frame element.
    FrameProduct {
        i: usize,
        j: usize,
    },
    NotOnCircle,
    NotAntisymmetric,
    Singular,
    NotUnitVector,
    TooFewSamples {
        samples: usize,
    },
    /// Consecutive image points are antipodal; the step direction is ambiguous.
    AntipodalStep {
        index: usize,
    },
    /// The commutative square had failing trials.
    SquareFailed {
        failures: usize,
    },
    LedgerNotIntegral,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::DegeneratePlane => {
                f.write_str("plane spanning pair must be orthogonal, of equal nonzero norm")
            }
            Error::NonUnitPlane => f.write_str("plane spanning pair must be unit vectors"),
            Error::NotImaginary => f.write_str("vector must be purely imaginary"),
            Error::OutsideSubspace => f.write_str("plane must be supported on e1..e5"),
            Error::InadmissibleComplement => {
                f.write_str("w must be nonzero, imaginary and orthogonal to e0, x, y, xy")
            }
            Error::FrameNotOrthogonal { i, j } => {
                write!(f, "frame elements {i} and {j} are not orthogonal")
            }
            Error::FrameNorm { i } => write!(f, "frame element {i} has the wrong norm"),
            Error::FrameProduct { i, j } => write!(
                f,
                "product of frame elements {i} and {j} is not a signed frame element"
            ),
            Error::NotOnCircle => f.write_str("point is not on the unit circle"),
            Error::NotAntisymmetric => f.write_str("matrix is not antisymmetric"),
            Error::Singular => f.write_str("matrix is singular"),
            Error::NotUnitVector => f.write_str("vector must have unit norm"),
            Error::TooFewSamples { samples } => {
                write!(f, "winding degree needs at least 8 samples, got {samples}")
            }
            Error::AntipodalStep { index } => write!(
                f,
                "image points {index} and {} are antipodal; increase samples",
                index + 1
            ),
            Error::SquareFailed { failures } => {
                write!(f, "commutative square failed on {failures} trial(s)")
            }
            Error::LedgerNotIntegral => f.write_str("degree ledger has no integer solution"),
        }
    }
}

impl core::error::Error for Error {}
