//! Indexing binary texts for jumbled (Parikh vector) pattern matching.
//!
//! A query `(x, y)` asks whether the text has a substring with exactly `x`
//! a's and `y` b's. [`CornerIndex`] answers it in `O(log |L|)` from two
//! sorted lists built directly from the run-length encoding of the text, in
//! `O(n + rho^2 log rho)` time where `rho` is the number of runs.
//!
//! ```
//! use jumbled::{CornerIndex, ParikhVector};
//!
//! let index = CornerIndex::build(b"aabababbaaabbaabbb").unwrap();
//! assert!(index.query(ParikhVector::new(3, 3)));
//! assert!(!index.query(ParikhVector::new(5, 1)));
//! ```

pub mod corner;
pub mod error;
pub mod oracle;
pub mod parikh;
pub mod persist;
pub mod pnf;
pub mod rle;
pub mod textgen;

pub use corner::{build_index, CornerIndex, CornerKind, CornerList};
pub use error::{Error, IndexCheck, Result};
pub use parikh::ParikhVector;
pub use pnf::{pnf_from_index, PnfPair};
pub use rle::{Alphabet, RunLengthEncoding};
