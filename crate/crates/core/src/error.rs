//! Error type shared by all processing stages.

use thiserror::Error;

/// Errors produced by signal processing, feature extraction and
/// classification stages.
#[derive(Debug, Error)]
pub enum Error {
    #[error("signal too short: {len} samples, need at least {need}")]
    SignalTooShort { len: usize, need: usize },
    #[error("bad STFT configuration: {0}")]
    BadConfig(String),
    #[error("spectrogram is already centered")]
    AlreadyCentered,
    #[error("spectrogram has wrong layout for this operation: expected {expected}")]
    WrongLayout { expected: &'static str },
    #[error("recording too short: {len} samples, segment needs {need}")]
    RecordingTooShort { len: usize, need: usize },
    #[error("bad feature length: {0}")]
    BadLength(String),
    #[error("bad subspace dimension {d}: must be in 1..={max}")]
    BadDim { d: usize, max: usize },
    #[error("degenerate rank {rank} < requested dimension {d}")]
    DegenerateRank { rank: usize, d: usize },
    #[error("subspace dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("vector length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("point set is empty")]
    EmptySet,
    #[error("training set is empty")]
    EmptyTraining,
    #[error("need at least two classes, found {0}")]
    SingleClass(usize),
    #[error("too few points for clustering: {points} < {k}")]
    TooFewPoints { points: usize, k: usize },
    #[error("class {label} has {count} samples, need at least {need}")]
    ClassTooSmall {
        label: String,
        count: usize,
        need: usize,
    },
    #[error("dictionary grid too large: {0} atoms")]
    GridTooLarge(usize),
    #[error("bad sparsity level: {0}")]
    BadSparsity(String),
    #[error("no class trajectories supplied")]
    NoClasses,
    #[error("jittered peak frequency {peak_hz} Hz would alias at fs={fs_hz} Hz")]
    AliasRisk { peak_hz: f64, fs_hz: f64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("data format error: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
