pub mod classsum;
pub mod classtypes;
pub mod error;
pub mod exactalg;
pub mod geometry;
pub mod lefschetz;
pub mod lfun;
pub mod motive;
pub mod oracle;
pub mod parse;
pub mod verify;

pub use error::{Error, Result};
