use serde::{Deserialize, Serialize};

use super::{FnHandle, SlicePolynomial, SlicePowerSeries, TwoSliceGlued};
use crate::domain::SliceDomain;
use crate::error::Error;
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::SCHEMA;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exp: Vec<u32>,
    pub coef: Quaternion,
}

/// JSON form of a function handle.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FnSpec {
    Poly {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        schema: Option<String>,
        n: usize,
        terms: Vec<TermSpec>,
    },
    Series {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        schema: Option<String>,
        center: f64,
        radius: f64,
        coeffs: Vec<Quaternion>,
    },
    Glued {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        schema: Option<String>,
        #[serde(rename = "J")]
        j: ImaginaryUnit,
        #[serde(rename = "K")]
        k: ImaginaryUnit,
        #[serde(rename = "hJ")]
        h_j: Vec<Quaternion>,
        #[serde(rename = "hK")]
        h_k: Vec<Quaternion>,
        domain: SliceDomain,
    },
}

fn check_schema(schema: &Option<String>) -> Result<(), Error> {
    match schema {
        Some(s) if s != SCHEMA => Err(Error::InvalidInput(format!("unsupported schema {s:?}, expected {SCHEMA:?}"))),
        _ => Ok(()),
    }
}

impl TryFrom<FnSpec> for FnHandle {
    type Error = Error;

    fn try_from(spec: FnSpec) -> Result<Self, Error> {
        match spec {
            FnSpec::Poly { schema, n, terms } => {
                check_schema(&schema)?;
                Ok(FnHandle::Poly(SlicePolynomial::new(n, terms.into_iter().map(|t| (t.exp, t.coef)))?))
            }
            FnSpec::Series { schema, center, radius, coeffs } => {
                check_schema(&schema)?;
                Ok(FnHandle::Series(SlicePowerSeries::new(center, radius, coeffs)?))
            }
            FnSpec::Glued { schema, j, k, h_j, h_k, domain } => {
                check_schema(&schema)?;
                Ok(FnHandle::Glued(TwoSliceGlued::new(j, k, h_j, h_k, domain)?))
            }
        }
    }
}

impl From<FnHandle> for FnSpec {
    fn from(f: FnHandle) -> Self {
        let schema = Some(SCHEMA.to_string());
        match f {
            FnHandle::Poly(p) => FnSpec::Poly {
                schema,
                n: p.dim(),
                terms: p.terms().map(|(k, c)| TermSpec { exp: k.clone(), coef: *c }).collect(),
            },
            FnHandle::Series(s) => {
                FnSpec::Series { schema, center: s.center(), radius: s.radius(), coeffs: s.coeffs().to_vec() }
            }
            FnHandle::Glued(g) => {
                let (j, k) = g.units();
                FnSpec::Glued {
                    schema,
                    j,
                    k,
                    h_j: g.h_j().to_vec(),
                    h_k: g.h_k().to_vec(),
                    domain: g.domain().clone(),
                }
            }
        }
    }
}

impl Serialize for SlicePolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FnSpec::from(FnHandle::Poly(self.clone())).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SlicePolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match FnHandle::deserialize(d)? {
            FnHandle::Poly(p) => Ok(p),
            other => Err(serde::de::Error::custom(format!("expected a polynomial, found {}", other.kind()))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_spec() {
        let f: FnHandle = serde_json::from_str(
            r#"{"type":"poly","n":1,"terms":[{"exp":[2],"coef":[1,0,0,0]},{"exp":[0],"coef":[1,0,0,0]}]}"#,
        )
        .unwrap();
        assert_eq!(f, SlicePolynomial::from_real_coeffs(&[1.0, 0.0, 1.0]).into());
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.contains(r#""schema":"sliceworks/1""#));
        assert_eq!(serde_json::from_str::<FnHandle>(&text).unwrap(), f);
    }

    #[test]
    fn rejects_unknown_keys_and_schemas() {
        assert!(serde_json::from_str::<FnHandle>(r#"{"type":"poly","n":1,"terms":[],"colour":1}"#).is_err());
        assert!(serde_json::from_str::<FnHandle>(r#"{"type":"poly","n":1,"terms":[],"schema":"other/2"}"#).is_err());
        assert!(serde_json::from_str::<FnHandle>(r#"{"type":"poly","n":2,"terms":[{"exp":[1],"coef":[1,0,0,0]}]}"#)
            .is_err());
    }

    #[test]
    fn series_and_glued_specs() {
        let s: FnHandle =
            serde_json::from_str(r#"{"type":"series","center":0.5,"radius":1,"coeffs":[[1,0,0,0],[0,1,0,0]]}"#).unwrap();
        assert_eq!(s.kind(), "series");
        let g: FnHandle = serde_json::from_str(
            r#"{"type":"glued","J":[0,1,0,0],"K":[0,0,1,0],"hJ":[[0,0,0,1]],"hK":[[0,0,0,1]],
                "domain":{"axial":{"ball":{"center":[[0,0]],"radius":1}}}}"#,
        )
        .unwrap();
        let back: FnHandle = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        assert_eq!(back, g);
    }
}
