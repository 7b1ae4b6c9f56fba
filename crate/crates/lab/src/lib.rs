//! Runs the micz-core checks over parameter grids and renders the results
//! as JSON lines or markdown.

pub mod config;
pub mod record;
pub mod render;
pub mod suites;

pub use config::{ConfigError, RunConfig, Suite, GRID_MU, GRID_N};
pub use record::Record;
pub use suites::run;
