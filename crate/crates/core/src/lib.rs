pub mod arith;
pub mod char_sums;
pub mod cli;
pub mod error;
pub mod field;
pub mod k3;
pub mod lucas;
pub mod melas;
pub mod niho;
pub mod params;
pub mod suite;

pub use error::{Error, Result};
