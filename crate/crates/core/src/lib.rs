//! Exact decomposition numbers for the Iwahori–Hecke algebra of type `D_n`
//! in the separated case, together with a word-basis Hecke algebra engine
//! used to check the underlying identities at small rank.

pub mod cli;
pub mod combinatorics;
pub mod dn;
pub mod error;
pub mod exact;
pub mod hecke;
pub mod par;
pub mod schur;
pub mod typea;
pub mod verify;

pub use error::{Error, Result};
