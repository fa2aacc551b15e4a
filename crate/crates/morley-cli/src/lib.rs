//! Library side of the `morley` command-line tool: input loading,
//! report rendering, subcommand execution, and the built-in selftest
//! corpus. The binary in `main.rs` is a thin wrapper over `app::run`.

pub mod app;
pub mod input;
pub mod render;
pub mod selftest;
