use crate::quad::{DEFAULT_LEVEL_CAP, MAX_LEVEL_CAP};
use crate::{Error, Result};

/// Numerical knobs shared by the series, quadrature and registry layers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Directly summed terms before a series tail model takes over.
    pub max_terms: u64,
    pub quad_level_cap: u32,
}

pub const DEFAULT_MAX_TERMS: u64 = 10_000;

impl Default for Settings {
    fn default() -> Self {
        Settings { max_terms: DEFAULT_MAX_TERMS, quad_level_cap: DEFAULT_LEVEL_CAP }
    }
}

impl Settings {
    pub fn new(max_terms: u64, quad_level_cap: u32) -> Result<Self> {
        if max_terms < 1 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if quad_level_cap > MAX_LEVEL_CAP {
            return Err(Error::Domain(format!("quadrature level cap {quad_level_cap} exceeds {MAX_LEVEL_CAP}")));
        }
        Ok(Settings { max_terms, quad_level_cap })
    }

    /// Term budgets quadrupled, as used when adjudicating disputed entries.
    pub fn quadrupled(self) -> Self {
        Settings { max_terms: self.max_terms * 4, quad_level_cap: (self.quad_level_cap + 2).min(MAX_LEVEL_CAP) }
    }
}
