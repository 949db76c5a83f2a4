pub mod assignment;
pub mod cli;
pub mod construct;
pub mod error;
pub mod io;
pub mod linalg;
pub mod matrix;
pub mod oracle;
pub mod pattern;
pub mod permanent;
pub mod potentials;
#[cfg(test)]
mod properties;
pub mod rational;
pub mod search;
pub mod sinkhorn;
pub mod structure;
