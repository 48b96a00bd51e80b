//! Geodesics, normal forms and harmonic analysis for Artin groups of large type.

pub mod dihedral;
pub mod error;
pub mod harmonic;
pub mod large_type;
pub mod oracle;
pub mod order;
pub mod parse;
pub mod presentation;
pub mod sweep;
pub mod word;

pub use error::{Error, ParseError, PresentationError, Result};
pub use order::LetterOrder;
pub use parse::parse_word;
pub use presentation::{Classification, CoxeterPresentation, Label};
pub use word::{Letter, SignClass, Word};
