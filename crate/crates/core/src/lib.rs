//! Alexander polynomials of C-groups and Hurwitz C-groups via Fox calculus.
//!
//! The pipeline: a [`presentation::CPresentation`] gives an
//! [`alexander::AlexanderMatrix`] of abelianized Fox derivatives, whose
//! minor GCD is the Alexander polynomial. Its cyclotomic factorization
//! feeds the structural checks in [`alexander::verify`] and the Betti numbers
//! in [`covering`].

pub mod alexander;
pub mod braid;
pub mod constructions;
pub mod covering;
pub mod laurent;
pub mod presentation;
pub mod words;

use thiserror::Error;

/// Any error raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Laurent(#[from] laurent::LaurentError),
    #[error(transparent)]
    WordSyntax(#[from] words::WordSyntaxError),
    #[error(transparent)]
    Parse(#[from] presentation::ParseError),
    #[error(transparent)]
    Presentation(#[from] presentation::PresentationError),
    #[error(transparent)]
    Braid(#[from] braid::BraidError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error(transparent)]
    Covering(#[from] covering::CoveringError),
}
