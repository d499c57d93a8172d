//! Generalized Artin-Mumford curves `L1(X) * L2(Y) = 1` over finite fields.

pub mod bipoly;
pub mod curve;
mod error;
pub mod gf;
pub mod io;
pub mod linpoly;
pub mod autgroup;
pub mod quotient;

pub use error::{Error, Result};
