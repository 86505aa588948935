//! Mixed complexes of duplicial towers, Hochschild and cyclic homology, and contractibility
//! for entwined coefficients.

pub mod contract;
pub mod dims;
pub mod mixed;

pub use contract::{check_contractible, homotopy_s, homotopy_t, EntwinedSide};
pub use dims::{hc_dims, hh_dims, hh_dims_unnormalized, homology_report, homology_report_to, HomologyReport};
pub use mixed::{boundaries, check_f_identity, f_coefficients, hochschild_b, normalize, MixedComplex, Normalized};

use crate::duplicial::DuplicialError;
use crate::linalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("usage: {0}")]
    Usage(String),
    /// An identity that holds for every duplicial object failed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Duplicial(#[from] DuplicialError),
}

impl From<LinalgError> for HomologyError {
    fn from(e: LinalgError) -> Self {
        HomologyError::Duplicial(e.into())
    }
}

#[cfg(test)]
mod tests;
