//! Partitions, Burge codes, the Oblak process and a nilpotent commutator
//! oracle over prime fields.

pub mod burge;
pub mod error;
pub mod fiber;
pub mod hooks;
pub mod matrix;
pub mod oblak;
pub mod partition;
pub mod word;

pub use burge::{BurgeChain, BurgeWord};
pub use error::{Error, ParseError, Result};
pub use fiber::{BoxCoordinates, DeltaVector, FiberEntry};
pub use matrix::{MatrixGFp, PrimeField};
pub use oblak::{IndexClasses, OblakChain};
pub use partition::{FrequencySeq, Partition, Spread};
pub use word::{Letter, Word};
