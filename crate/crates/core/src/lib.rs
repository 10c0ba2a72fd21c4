//! Symbol-pair metrics and exact minimum pair distances for the repeated-root
//! cyclic codes `<(x - 1)^i>` of length `p^e` over F_{p^m}.
//!
//! The closed forms in [`codes`] are checked against the exhaustive search in
//! [`oracle`]; [`channel`] simulates a pair-read channel with a brute-force
//! nearest-codeword decoder.

pub mod channel;
pub mod cli;
pub mod codes;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod pairmetrics;
pub mod polyring;

pub use codes::{CodeSpec, DistanceRecord, PairDistance};
pub use error::{Error, Result};
pub use gf::{build_field, FieldElement, FieldSpec};
pub use pairmetrics::{PairVector, RunProfile};
pub use polyring::{Poly, RingElement};
