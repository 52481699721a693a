//! Command-line front end for the mixable shuffle algebra library:
//! expression parsing, subcommand dispatch and deterministic rendering.

pub mod app;
pub mod expr;
