//! Command-line workbench: configuration, floating-point simulation,
//! output formats, parallel counting and SVG rendering.

pub mod cli;
pub mod config;
pub mod float_sim;
pub mod formats;
pub mod parallel;
pub mod render;
