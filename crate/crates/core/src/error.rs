use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, RtmError>;

/// Error taxonomy for the simulator and inversion toolkit.
///
/// `is_validation` distinguishes bad inputs/configuration (CLI exit code 2)
/// from numerical failures encountered mid-run (exit code 3).
#[derive(Debug, Error)]
pub enum RtmError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected a {expected} quantity, got {got}")]
    DimensionMismatch { expected: String, got: String },

    #[error("grid too small: requires span [{required_min}, {required_max}] scaled, has [{have_min}, {have_max}]")]
    GridTooSmall {
        required_min: f64,
        required_max: f64,
        have_min: f64,
        have_max: f64,
    },

    #[error("eigenbasis truncation captured only {captured:.12} of the norm (need >= {required})")]
    WeightDeficit { captured: f64, required: f64 },

    #[error("time step {dt:.3e} exceeds stability limit {dt_max:.3e} (set force_dt to override)")]
    StabilityViolation { dt: f64, dt_max: f64 },

    #[error("wave packet reached the grid boundary at t = {t:.6} (edge amplitude {amplitude:.3e})")]
    BoundaryTouched { t: f64, amplitude: f64 },

    #[error("insufficient signal: {0}")]
    InsufficientSignal(String),

    #[error("search window [{lo:.6}, {hi:.6}] not covered by signal [{have_lo:.6}, {have_hi:.6}]")]
    WindowNotCovered {
        lo: f64,
        hi: f64,
        have_lo: f64,
        have_hi: f64,
    },

    #[error("envelope maximum sits at the window edge (t = {t:.6}); widen the window")]
    EdgeMaximum { t: f64 },

    #[error("no level spacing matches ħω = {omega:.6e}; spectrum spans [{lo:.6e}, {hi:.6e}]")]
    NoResonance { omega: f64, lo: f64, hi: f64 },

    #[error("singular modulation context: {0}")]
    SingularContext(String),

    #[error("modulated revival time {t2_mod:.6} exceeds static value {t2:.6}; amplitude bracket is negative")]
    NegativeBracket { t2: f64, t2_mod: f64 },

    #[error("no root of the frequency equation in the physical interval [0, {s:.6e}) for alpha_T = {alpha_t:.6e}")]
    NoPhysicalRoot { alpha_t: f64, s: f64 },

    #[error("recovered energy {energy:.6e} exceeds the calibration ceiling {ceiling:.6e}")]
    CalibrationInconsistency { energy: f64, ceiling: f64 },

    #[error("recurrence order j = {0} not supported (j in 1..=3)")]
    UnsupportedOrder(u32),

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl RtmError {
    /// True for errors caused by bad inputs or configuration rather than a
    /// numerical failure during the run.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            RtmError::InvalidInput(_)
                | RtmError::DimensionMismatch { .. }
                | RtmError::GridTooSmall { .. }
                | RtmError::StabilityViolation { .. }
                | RtmError::UnsupportedOrder(_)
                | RtmError::ModeMismatch(_)
                | RtmError::Parse { .. }
                | RtmError::SingularContext(_)
                | RtmError::WindowNotCovered { .. }
        )
    }
}
