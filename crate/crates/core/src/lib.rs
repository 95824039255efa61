pub mod cli;
pub mod error;
pub mod exactalg;
pub mod ihring;
pub mod models;
pub mod pairing;
pub mod residue;
pub mod stratify;
pub mod witten;

pub use error::{Error, Result};
