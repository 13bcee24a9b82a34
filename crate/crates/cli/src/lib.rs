//! Library side of the `ehspec` command-line tool: config parsing, table
//! emission, subcommand drivers, and the embedded published reference
//! tables. The binary in `main.rs` is a thin argument-parsing shell over
//! this.

pub mod commands;
pub mod config;
pub mod emit;
pub mod reference;
