//! Numerical two-sided quaternion quadratic-phase Fourier transforms.
//!
//! This crate implements, for quaternion-valued signals sampled on uniform
//! 2D grids:
//!
//! * Hamilton quaternion arithmetic and the symplectic (i-plane) split
//!   ([`quaternion`]),
//! * sampled signals, grids, masks, norms, moments and chirp products
//!   ([`signal`]),
//! * the two-sided quaternion Fourier transform (QFT) with both an exact
//!   quadrature path and a fast complex-FFT path ([`qft`]),
//! * one-dimensional and single-axis quadratic-phase transforms
//!   ([`qpft1d`]),
//! * the two-sided quaternion quadratic-phase Fourier transform (Q-QPFT)
//!   parameterized by a quintuple `(a, b, c, d, e)` per axis, with direct,
//!   fast, sided and inverse paths plus closed-form Gaussian references and
//!   shift/modulation covariance checks ([`qqpft`]),
//! * uncertainty-principle functionals: Heisenberg, directional,
//!   logarithmic, Donoho–Stark, Hausdorff–Young and a Gaussian decay-rate
//!   diagnostic ([`uncertainty`]).
//!
//! Every fast path has an independently coded quadrature oracle and the two
//! are held together by tests at tolerances far below the quadrature error
//! of the underlying integrals.
//!
//! # Conventions
//!
//! The QFT normalization is `(1/2π)∬ e^{−i·x₁w₁} f(x) e^{−j·x₂w₂} dx`; the
//! quadratic-phase kernels carry the constant `√(b·unit/2π)` with the
//! principal branch. Space grids are centered with even sample counts; a
//! transform with frequency scaling `b_s < 0` produces a frequency grid
//! with descending coordinates, represented by a negative grid step.

pub mod qft;
pub mod qpft1d;
pub mod qqpft;
pub mod quaternion;
pub mod signal;
pub mod uncertainty;

pub use qft::{iqft, qft_direct, qft_fast};
pub use qpft1d::{
    qpft1d_forward, qpft1d_inverse, qpft_left2d, qpft_right2d, right_sided_parseval_check, Method,
    QSignal1D, QpftParams,
};
pub use qqpft::{
    forward_direct, forward_direct_at, forward_fast, forward_sided, gaussian_oracle, inverse,
    special_case_params, verify_modulation, verify_shift, verify_split_lemma, InverseMethod,
    QqpftParams, QqpftPlan, SidedVariant, SpecialCase, VerificationReport,
};
pub use quaternion::{
    sqrt_unit, symplectic_join, symplectic_split, ComplexI, Quaternion, UnitAxis,
};
pub use signal::{Axis, ChirpSide, Grid2D, GridMask, MomentKind, QSignal2D, SignalSpec};
pub use uncertainty::{
    decay_rate_fit, directional_ratio, donoho_stark_check, hausdorff_young_slack,
    heisenberg_ratio, log_up_slack, DecayFit, LogConstant, UpKind, UpReport, D_CORRECTED, D_PAPER,
};

/// Errors reported by constructors and transform entry points.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A quadratic-phase parameter quintuple has `b = 0`; the kernel is
    /// degenerate and the induced frequency grid undefined.
    ZeroB,
    /// Grid sizes must be even and at least 2 per axis.
    OddGridSize { n1: usize, n2: usize },
    /// Grid spacings must be finite and nonzero (positive for space grids).
    BadSpacing { dx1: f64, dx2: f64 },
    /// The operation requires a centered grid (`x₀ = −n·dx/2` per axis).
    NotCentered,
    /// Two operands live on different grids.
    GridMismatch,
    /// A signal/sample buffer length does not match its grid.
    LengthMismatch { expected: usize, got: usize },
    /// The operation is undefined for an identically zero signal.
    ZeroSignal,
    /// `lp_norm` order must satisfy `p ≥ 1` (or `p = ∞`).
    InvalidNormOrder { p: f64 },
    /// Gaussian decay rates must be strictly positive.
    NonPositiveDecay { k: f64 },
    /// A spatial shift must be an integer multiple of the grid spacing.
    OffGridShift { axis: usize, cells: f64 },
    /// A modulation frequency offset must land on the frequency grid.
    OffGridModulation { axis: usize, cells: f64 },
    /// Too few samples above the support threshold for a decay fit.
    InsufficientSupport { have: usize, need: usize },
    /// The fractional-transform angle has `sin θ = 0`; no parameters exist.
    DegenerateAngle { theta: f64 },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::ZeroB => write!(f, "b must be nonzero"),
            Error::OddGridSize { n1, n2 } => {
                write!(f, "grid sizes must be even and >= 2, got {n1} x {n2}")
            }
            Error::BadSpacing { dx1, dx2 } => {
                write!(f, "grid spacings must be finite and nonzero, got ({dx1}, {dx2})")
            }
            Error::NotCentered => write!(f, "operation requires a centered grid"),
            Error::GridMismatch => write!(f, "operands live on different grids"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "sample buffer holds {got} values, grid needs {expected}")
            }
            Error::ZeroSignal => write!(f, "operation undefined for the zero signal"),
            Error::InvalidNormOrder { p } => write!(f, "norm order must be >= 1, got {p}"),
            Error::NonPositiveDecay { k } => {
                write!(f, "Gaussian decay rate must be positive, got {k}")
            }
            Error::OffGridShift { axis, cells } => write!(
                f,
                "shift along axis {axis} is {cells} cells, must be an integer number of cells"
            ),
            Error::OffGridModulation { axis, cells } => write!(
                f,
                "modulation offset along axis {axis} is {cells} frequency cells, must be integral"
            ),
            Error::InsufficientSupport { have, need } => {
                write!(f, "decay fit needs {need} samples above threshold, found {have}")
            }
            Error::DegenerateAngle { theta } => {
                write!(f, "fractional angle {theta} has sin = 0, kernel degenerates")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
