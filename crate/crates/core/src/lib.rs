//! Duality and trace in symmetric monoidal categories, made executable.

pub mod choice;
pub mod cli;
pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod functors;
pub mod laws;
pub mod linear;
pub mod smc;

pub use error::{Error, Result};
