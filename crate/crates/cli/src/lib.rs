//! Catalog loading, reports and the verification campaigns of `projlink`.

pub mod campaigns;
pub mod catalog;
pub mod report;

pub use campaigns::Settings;
pub use catalog::Catalog;
pub use report::{Report, Verdict};
