use serde::{Deserialize, Serialize};
use sliceworks::domain::DomainCheckReport;
use sliceworks::zeros::{IsolatedZero, RealRoot, ZeroCheckReport, ZeroSphere};
use sliceworks::{Complex64, FnHandle, ImaginaryUnit, Quaternion};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootsOutput {
    pub schema: String,
    pub real_roots: Vec<RealRoot>,
    pub isolated: Vec<IsolatedZero>,
    pub spheres: Vec<ZeroSphere>,
    /// Spherical zeros counted twice; equals the degree when all zeros are in the domain.
    pub total_multiplicity: usize,
    pub inclusion: ZeroCheckReport,
    pub warnings: Vec<String>,
    pub domain_checks: Vec<DomainCheckReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionOutput {
    pub schema: String,
    pub function: FnHandle,
    pub warnings: Vec<String>,
    pub domain_checks: Vec<DomainCheckReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointValue {
    pub at: Vec<Quaternion>,
    pub value: Quaternion,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtendOutput {
    pub schema: String,
    pub values: Vec<PointValue>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EndpointInfo {
    pub endpoint: Vec<Complex64>,
    /// Every unit admits the path when true; `units` then lists the sample.
    pub all_units: bool,
    pub units: Vec<ImaginaryUnit>,
    /// `None` when no sampled direction leaves the domain.
    pub radius_path_ball: Option<f64>,
    pub radius_two_units: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomainInfoOutput {
    pub schema: String,
    pub dim: usize,
    pub checks: Vec<DomainCheckReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoint: Option<EndpointInfo>,
}
