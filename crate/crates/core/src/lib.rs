//! Slice analysis on `H^n`: quaternions, slice domains, stem functions,
//! slice functions with their `*`-algebra, and zero sets.

pub mod domain;
pub mod error;
pub mod paths;
pub mod quaternion;
pub mod slice_fn;
pub mod stem;
pub mod testkit;
pub mod zeros;

/// Version tag carried by every JSON document.
pub const SCHEMA: &str = "sliceworks/1";

pub use num_complex::Complex64;

pub use domain::{Region, SamplingConfig, SliceDomain, SliceUnits};
pub use error::{Error, Result};
pub use paths::{CPoint, PathBallSpec, PathCn};
pub use quaternion::{frak_i, sphere_sample, vandermonde2_inverse, ImaginaryUnit, QMatrix2, Quaternion, SlicePoint};
pub use slice_fn::{star_product, FnHandle, SlicePolynomial, SlicePowerSeries, TwoSliceGlued};
pub use stem::{PathStem, StemValue};
