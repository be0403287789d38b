//! `jforge`: check, analyze, construct, peel, tkk and catalog over JSON algebra files.
//!
//! Exit codes: 0 when every checked property holds, 1 when one fails (the report says which),
//! 2 for bad input.

pub mod app;
pub mod commands;
pub mod files;
pub mod report;
