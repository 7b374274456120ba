//! Characters and conjugacy classes of `GL_n(q)` extended by the
//! transpose-inverse automorphism, with an independent character-table oracle.

pub mod cyc;
pub mod error;
pub mod ffield;
pub mod groupcore;
pub mod oracle;
pub mod parametrize;
pub mod partitions;
pub mod tables;
pub mod weyl;
pub mod weylcosets;

pub use cyc::CycValue;
pub use error::{Error, Result};
pub use partitions::{BiPartition, Partition};
