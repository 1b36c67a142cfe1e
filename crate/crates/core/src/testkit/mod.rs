//! Randomized property suite and the oracles behind it.
//!
//! Every randomized property draws from its own ChaCha8 stream seeded by
//! `(seed, property)`, so a report is a pure function of [`OracleConfig`].

mod gen;
mod oracles;
mod suite;

pub use gen::{random_imaginary_unit, random_linear_product, random_polynomial, random_quaternion, LinearProduct};
pub use oracles::{
    oracle_eval, oracle_sphere_scan, oracle_star_at, oracle_star_coeffs, oracle_star_pointwise, SphereScan,
};
pub use suite::{run_acceptance, run_property_suite, PropertyResult, SuiteReport};

use serde::{Deserialize, Serialize};

/// Parameters of the randomized suite.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OracleConfig {
    pub seed: u64,
    /// Trial count of the largest property; the others scale with it.
    pub trials: usize,
    pub degree_cap: usize,
    pub coeff_norm_cap: f64,
    pub unit_samples: usize,
    pub fd_step: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { seed: 0, trials: 1000, degree_cap: 8, coeff_norm_cap: 4.0, unit_samples: 64, fd_step: 1e-5 }
    }
}

impl OracleConfig {
    pub fn with_seed(seed: u64) -> Self {
        OracleConfig { seed, ..Default::default() }
    }

    /// `base` trials at the default size, scaled by `trials / 1000`.
    pub(crate) fn scaled(&self, base: usize) -> usize {
        (self.trials * base).div_ceil(1000)
    }
}
