//! File formats, verification sweeps and the command-line front end for
//! [`opschmidt_core`].

pub mod app;
pub mod error;
pub mod formats;
pub mod verify;

pub use error::CliError;
