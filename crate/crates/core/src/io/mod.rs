//! Instance files, generators, layout, and rendering.

pub mod generate;
pub mod instance;
pub mod layout;
pub mod report;
pub mod svg;
