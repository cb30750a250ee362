//! placeholder
pub mod incomplete;
