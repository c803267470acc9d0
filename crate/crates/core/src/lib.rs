pub mod arith;
mod error;
pub mod hecke;
pub mod par;
pub mod shapes;
pub mod strip;
pub mod verify;

pub use error::{Error, Result};
