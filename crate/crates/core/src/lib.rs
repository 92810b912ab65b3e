//! Exact-arithmetic toolkit for simultaneous arithmetic progressions on plane
//! algebraic curves.
//!
//! A simultaneous arithmetic progression (s.a.p.) of length `k` is a set of
//! points `(x_i, y_sigma(i))` whose x-coordinates and y-coordinates both form
//! arithmetic progressions, with `sigma` a permutation pairing them one per
//! grid column and row. The crate provides the constructive ingredients used
//! to bound how long an s.a.p. a curve of given degree can contain:
//!
//! * exact rational polynomial arithmetic, resultants and real-root isolation
//!   ([`unipoly`], [`bipoly`], [`resultant`], [`roots`]),
//! * Weierstrass-translate intersection machinery and curve decomposition
//!   ([`weierstrass`], [`budgets`], [`convex`], [`gauss`]),
//! * grid incidence counting, s.a.p. verification/search and interpolation
//!   ([`grid`], [`search`], [`scaling`]),
//! * the translate multigraph and its crossing statistics ([`graph`]),
//! * crossing-number bound arithmetic, including the elliptic maximum
//!   `k = 4319` ([`bounds`]).
//!
//! All decision procedures run over `BigRational`; floating point appears only
//! in explicitly approximate diagnostics (log-log slopes).

pub mod bipoly;
pub mod bisolve;
pub mod bounds;
pub mod budgets;
pub mod convex;
pub mod gauss;
pub mod gcd;
pub mod graph;
pub mod grid;
pub mod par;
pub mod rat;
pub mod resultant;
pub mod roots;
pub mod scaling;
pub mod search;
pub mod unipoly;
pub mod weierstrass;

use thiserror::Error;

/// Error type shared by every module; the variant name is the stable
/// machine-readable identifier reported on the CLI's standard error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Resultant input constant in the eliminated variable.
    #[error("DegenerateInput: {0}")]
    DegenerateInput(String),
    /// An operation that needs a nonzero polynomial received zero.
    #[error("ZeroPolynomial")]
    ZeroPolynomial,
    /// Translate vector (0, 0) passed where a proper translate is required.
    #[error("ZeroTranslation")]
    ZeroTranslation,
    /// A curve argument is constant.
    #[error("ConstantCurve")]
    ConstantCurve,
    /// Degree below the operation's minimum (budgets need d >= 2).
    #[error("DegreeTooSmall: degree {0} (minimum {1})")]
    DegreeTooSmall(u32, u32),
    /// gcd(f, f_x) or gcd(f, f_y) is nonconstant.
    #[error("NotCoprimeWithDerivative")]
    NotCoprimeWithDerivative,
    /// Square-free input required.
    #[error("NotSquareFree")]
    NotSquareFree,
    /// Complex substitution basis with beta or delta zero.
    #[error("DegenerateBasis")]
    DegenerateBasis,
    /// More interpolation points than the degree supports.
    #[error("TooManyPoints: {got} points exceed budget {max}")]
    TooManyPoints { got: usize, max: usize },
    /// Search invoked over an empty candidate space.
    #[error("EmptySearchSpace")]
    EmptySearchSpace,
    /// An s.a.p. point does not lie on the curve.
    #[error("SapNotOnCurve: point index {0}")]
    SapNotOnCurve(usize),
    /// Weierstrass curve whose real locus cannot be classified (singular).
    #[error("DegenerateCurve")]
    DegenerateCurve,
    /// Two curves share a whole component; isolated-point counts undefined.
    #[error("SharedComponent")]
    SharedComponent,
    /// Scaling experiment curve has a linear factor.
    #[error("LinearFactorDetected: {0}")]
    LinearFactorDetected(String),
    /// A common point is singular on both curves of a system; no shear
    /// separates its fiber, so isolation is refused rather than guessed.
    #[error("UnresolvedSingularConfiguration")]
    UnresolvedSingularConfiguration,
    /// Polynomial expression rejected by the parser (1-based column).
    #[error("ParseError: column {col}: {msg}")]
    ParseError { col: usize, msg: String },
    /// `^` applied to a non-integer exponent.
    #[error("ExponentNotInteger: column {col}")]
    ExponentNotInteger { col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
