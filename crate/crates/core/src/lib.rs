pub mod algebra;
pub mod corpus;
pub mod error;
pub mod hankel;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod schur;
pub mod selftest;
pub mod stieltjes;
pub mod toeplitz;

pub use error::{Error, Result};
