use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    /// An input lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A certified comparison could not be resolved within the precision cap.
    #[error("unresolved at {bits} bits: {what}")]
    Unresolved { what: String, bits: u32 },
}

pub type Result<T> = std::result::Result<T, CensusError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(CensusError::Domain(msg.into()))
}
