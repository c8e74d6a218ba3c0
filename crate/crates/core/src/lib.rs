//! Eta polynomials, theta polynomials and typed k'-tableaux, together with
//! the type D nilCoxeter machinery behind Stanley and Billey–Haiman type
//! polynomials of Weyl group elements.

pub mod error;
pub mod eta;
pub mod partition;
pub mod pieri;
pub mod poly;
pub mod raising;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use partition::{BoxPos, Partition, TypedPartition};
pub use poly::{SparsePoly, Truncation};
pub use raising::{Composition, OperatorExpansion, OperatorSpec};
