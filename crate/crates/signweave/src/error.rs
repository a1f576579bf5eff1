use std::path::PathBuf;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("file not found: {path}")]
    MissingFile { path: PathBuf },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write output {path}: {source}")]
    UnwritableOutput {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: malformed line: {reason}")]
    MalformedLine {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("malformed header in {path}: {reason}")]
    MalformedHeader { path: PathBuf, reason: String },

    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },

    #[error("lexicon contains no signable vocabulary")]
    EmptyLexicon,

    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("cosine similarity is undefined for an all-zero vector")]
    ZeroVector,

    #[error("expected 133 joints, got {got}")]
    BadJointCount { got: usize },

    #[error("non-finite coordinate at frame {frame}, joint {joint}")]
    NonFiniteCoordinate { frame: usize, joint: usize },

    #[error("a sign clip needs at least 2 frames")]
    TooFewFrames,

    #[error("frame rate must be positive, got {got}")]
    BadFps { got: f64 },

    #[error("a keyframe track needs at least 2 knots")]
    TooFewKnots,

    #[error("knot times must be strictly increasing (violation at index {index})")]
    DuplicateKnotTime { index: usize },

    #[error("degenerate skeleton: shoulder joints coincide")]
    DegenerateSkeleton,

    #[error("cannot stitch an empty clip list")]
    EmptyClipList,

    #[error("no gloss token could be resolved to a clip (missing: {})", missing.join(", "))]
    NoResolvableSigns { missing: Vec<String> },

    #[error("pose shape mismatch: {expected_frames}x{expected_joints} vs {got_frames}x{got_joints}")]
    ShapeMismatch {
        expected_frames: usize,
        expected_joints: usize,
        got_frames: usize,
        got_joints: usize,
    },

    #[error("metric input corpora are empty")]
    EmptyCorpus,

    #[error("invalid configuration: {reason}")]
    Config { reason: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        let path = path.into();
        if source.kind() == std::io::ErrorKind::NotFound {
            Error::MissingFile { path }
        } else {
            Error::Io { path, source }
        }
    }
}
