use serde::{Deserialize, Serialize};

use crate::error::{arg, Result};

/// Cutoffs governing every numerical rank and zero decision.
///
/// Singular values below `rel_eps * sigma_max` are treated as zero, and a
/// family whose largest singular value is below `abs_eps` has rank zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub rel_eps: f64,
    pub abs_eps: f64,
}

impl Tolerance {
    pub const DEFAULT_REL: f64 = 1e-8;
    pub const DEFAULT_ABS: f64 = 1e-10;

    pub fn new(rel_eps: f64, abs_eps: f64) -> Result<Self> {
        if !(abs_eps > 0.0 && abs_eps <= rel_eps && rel_eps < 1.0) {
            return Err(arg(alloc::format!(
                "tolerance requires 0 < abs_eps <= rel_eps < 1, got rel={rel_eps:e} abs={abs_eps:e}"
            )));
        }
        Ok(Self { rel_eps, abs_eps })
    }

    /// Rank cut for a family whose largest singular value is `sigma_max`.
    pub fn cutoff(&self, sigma_max: f64) -> f64 {
        (self.rel_eps * sigma_max).max(self.abs_eps)
    }

    /// True when `residual` lies within a factor of ten of `rel_eps` on
    /// either side, i.e. too close to the cut to trust a boolean.
    pub fn is_borderline(&self, residual: f64) -> bool {
        residual > self.rel_eps / 10.0 && residual < self.rel_eps * 10.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { rel_eps: Self::DEFAULT_REL, abs_eps: Self::DEFAULT_ABS }
    }
}
