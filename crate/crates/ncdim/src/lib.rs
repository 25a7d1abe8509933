//! JSON formats, the dimension table and the `ncdim` command line, on top of
//! [`ncdim_core`].

pub mod cli;
pub mod format;
pub mod table;

/// Everything that can stop a command. Exit code 2 for bad input, 3 for a
/// broken internal invariant.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] ncdim_core::Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("cannot read input: {0}")]
    Io(String),
    #[error("usage: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 3,
            _ => 2,
        }
    }

    /// Stable machine-readable tag.
    pub fn kind(&self) -> &'static str {
        use ncdim_core::Error as E;
        match self {
            CliError::Malformed(_) => "malformed_input",
            CliError::Io(_) => "io",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                E::InvalidOrder(_) => "invalid_order",
                E::StackyIndex { .. } => "stacky_index",
                E::SignatureMismatch { .. } => "signature_mismatch",
                E::EmptyLocal { .. } => "empty_local",
                E::Integrality { .. } => "integrality",
                E::ZeroClass => "zero_class",
                E::NegativeRank(_) => "negative_rank",
                E::NotHeartEffective { .. } => "not_heart_effective",
                E::GeneratorDegree { .. } => "generator_degree",
                E::NonPositiveH(_) => "non_positive_h",
                E::EpsilonRange(_) => "epsilon_range",
                E::BoundTooSmall { .. } => "bound_too_small",
                E::UnsortedPieces => "unsorted_pieces",
                E::TorsionPiece(_) => "torsion_piece",
                E::TwistRank(_) => "twist_rank",
                E::GenusZero(_) => "genus_zero",
                E::EmptyQuiver => "empty_quiver",
                E::ArrowOutOfRange { .. } => "arrow_out_of_range",
                E::CyclicQuiver => "cyclic_quiver",
                E::DisconnectedQuiver => "disconnected_quiver",
                E::NotNegativeFamily { .. } => "not_negative_family",
                E::InvalidAdeType(_) => "invalid_ade_type",
                E::Internal(_) => "internal",
            },
        }
    }
}
