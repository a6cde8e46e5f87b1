pub mod error;
pub mod cli;
pub mod exact;
pub mod grow;
pub mod lattice;
pub mod nichols;
pub mod qrep;
pub mod report;
pub mod rmx;
pub mod verify;

pub use error::{Error, Result};
