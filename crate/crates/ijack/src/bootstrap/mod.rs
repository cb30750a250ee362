//! placeholder
pub mod exact;
pub mod mc;
