//! Command-line front end for the anyonic algebra toolkit.

#![allow(clippy::needless_range_loop)]

pub mod commands;
pub mod expr;
pub mod format;
pub mod search;
