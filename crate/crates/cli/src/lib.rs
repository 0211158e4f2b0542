//! Command-line front end for `lecalc-core`.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod input;
pub mod report;
pub mod selftest;
