//! Files, reports, parallel sweeps and the command line for
//! `hypermatch-core`.

pub mod cli;
pub mod format;
pub mod report;
pub mod runner;
