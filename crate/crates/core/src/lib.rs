//! Exact computations of bigraded logarithmic Hodge tables.
//!
//! * [`exactlin`]: sparse rational matrices and exact rank.
//! * [`gralg`]: graded polynomial rings, ideals and truncated quotients.
//! * [`koszul`]: the Koszul engine computing `Tor` tables of a quotient.
//! * [`grpcpt`]: closed forms and graph ideals for group compactifications.
//! * [`toric`]: smooth complete fans, h-vectors and Chow dimensions.
//! * [`bott`]: twisted forms on projective space.
//! * [`verify`]: strip and dlog-row checks on tables.
//! * [`cli`]: the `loghodge` command line and its JSON table format.

pub mod bott;
pub mod cli;
pub mod error;
pub mod exactlin;
pub mod gralg;
pub mod grpcpt;
pub mod koszul;
pub mod table;
pub mod toric;
pub mod verify;

pub use error::{Error, Result};
pub use table::{BigradedTable, Source, StripParams};
