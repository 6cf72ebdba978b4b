pub mod code;
pub mod construct;
pub mod cyclic;
pub mod error;
pub mod fixtures;
pub mod gf;
pub mod io;
pub mod matrix;
pub mod ring;
pub mod weighing;

pub use error::{Error, Result};
