//! Special-function kernels, series and quadrature engines, and a verdict
//! engine that checks closed-form identities for log-gamma integrals.

pub mod cli;
mod error;
pub mod quad;
pub mod registry;
pub mod report;
pub mod series;
mod settings;
pub mod specfun;

pub use error::{Error, Result};
pub use settings::{Settings, DEFAULT_MAX_TERMS};
