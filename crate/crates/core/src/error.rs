use thiserror::Error;

/// Errors raised by the packet and tableau computations.
///
/// `Inconsistency` and `IterationCap` indicate that two independent routes
/// disagreed or that the normalization did not settle; everything else is a
/// rejected input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("signature mismatch: expected U({expected_p},{expected_q}), got U({got_p},{got_q})")]
    SignatureMismatch {
        expected_p: usize,
        expected_q: usize,
        got_p: usize,
        got_q: usize,
    },

    #[error("weight is not unitarizable: {0}")]
    NotUnitarizable(String),

    #[error("outside lemma hypotheses: {0}")]
    OutsideHypotheses(String),

    #[error("rewrite unavailable: {0}")]
    RewriteUnavailable(String),

    #[error("block data is not in D(psi): {0}")]
    NotInPacket(String),

    #[error("normalization did not settle after {0} sweeps")]
    IterationCap(usize),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
