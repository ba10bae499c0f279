//! Finite topologies, their regular closed algebras, extended contact
//! algebras and the relational frames that represent them.

pub mod algebra;
pub mod bits;
pub mod campaign;
pub mod caps;
pub mod commands;
pub mod error;
pub mod frames;
pub mod golden;
pub mod io;
pub mod pointset;
pub mod report;
pub mod representations;
pub mod topology;

pub use caps::Caps;
pub use error::{Error, Result};
pub use pointset::PointSet;
pub use report::{AxiomReport, CheckOutcome, Report, VerificationReport};
