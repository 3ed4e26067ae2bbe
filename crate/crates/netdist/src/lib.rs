//! File formats, a shared normalization-width cache, multi-threaded drivers
//! and the command-line front end for [`netdist_core`].

pub mod cache;
pub mod cli;
pub mod error;
pub mod io;
pub mod parallel;

pub use error::AppError;
pub use netdist_core;
