//! File formats, a Groebner basis cache, parallel matrix assembly and the
//! `shapes` command line on top of `shapes-core`.

pub mod cache;
pub mod cli;
pub mod format;
pub mod parallel;
pub mod verify;
