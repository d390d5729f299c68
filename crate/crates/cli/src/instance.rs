//! Problem-instance files.
//!
//! ```text
//! {
//!   "algebra": {"family": "A", "rank": 3},
//!   "L": [{"node": 2, "width": 2, "multiplicity": 1}],
//!   "lambda": [1, 0, 1, 2],
//!   "element": [[[1, 0]], [[2, -1], [1, -1]], [[2, -1]]]
//! }
//! ```
//!
//! `weight` (fundamental-weight coordinates) and `lambda` (type A only) are optional and
//! must agree when both are given. `element` lists `[length, label]` strings node by node.

use std::io::Read;
use std::path::Path;

use rigged_core::{
    AlgebraData, AlgebraSpec, Family, KrFactor, MultiplicityArray, RcSpace, RiggedConfiguration, Shape,
    TypeATuple, Weight,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    pub algebra: AlgebraSpec,
    #[serde(rename = "L")]
    pub factors: Vec<KrFactor>,
    #[serde(default)]
    pub weight: Option<Vec<i64>>,
    #[serde(default)]
    pub lambda: Option<Vec<usize>>,
    #[serde(default)]
    pub element: Option<Vec<Vec<(usize, i64)>>>,
}

/// A parsed and validated instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub space: RcSpace,
    pub weight: Option<Weight>,
    pub lambda: Option<TypeATuple>,
    pub element: Option<RiggedConfiguration>,
}

impl Instance {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = read_input(path)?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let spec: InstanceSpec =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("instance: {e}")))?;
        Self::from_spec(spec)
    }

    pub fn from_spec(spec: InstanceSpec) -> Result<Self, CliError> {
        let alg = AlgebraData::try_from(spec.algebra)?;
        let rank = alg.rank();
        let space = RcSpace::new(alg, MultiplicityArray::from_factors(&spec.factors)?)?;

        let lambda = match spec.lambda {
            None => None,
            Some(parts) => {
                if space.algebra().family() != Family::A {
                    return Err(CliError::Input(format!(
                        "lambda is only meaningful in type A, not {}",
                        space.algebra()
                    )));
                }
                if parts.len() != rank + 1 {
                    return Err(CliError::Input(format!(
                        "lambda has {} parts, {} needs {}",
                        parts.len(),
                        space.algebra(),
                        rank + 1
                    )));
                }
                Some(TypeATuple::new(parts))
            }
        };
        let weight = match spec.weight {
            None => None,
            Some(coords) => {
                if coords.len() != rank {
                    return Err(rigged_core::Error::WeightLength { expected: rank, got: coords.len() }.into());
                }
                Some(Weight::new(coords))
            }
        };
        let weight = match (weight, &lambda) {
            (Some(w), Some(l)) if w != l.to_weight() => {
                return Err(CliError::Input(format!(
                    "weight {w} disagrees with lambda = {l} (weight {})",
                    l.to_weight()
                )))
            }
            (Some(w), _) => Some(w),
            (None, Some(l)) => Some(l.to_weight()),
            (None, None) => None,
        };
        let element = match spec.element {
            None => None,
            Some(nodes) => {
                let rc = RiggedConfiguration::new(nodes)?;
                if rc.rank() != rank {
                    return Err(rigged_core::Error::ShapeMismatch { expected: rank, got: rc.rank() }.into());
                }
                Some(rc)
            }
        };
        Ok(Instance { space, weight, lambda, element })
    }

    pub fn require_element(&self, command: &str) -> Result<&RiggedConfiguration, CliError> {
        self.element
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("`{command}` needs an \"element\" in the instance")))
    }
}

/// Reads a file, or standard input for `-`.
pub fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        return Ok(text);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_instance() {
        let inst = Instance::parse(
            r#"{"algebra":{"family":"A","rank":3},
                "L":[{"node":2,"width":2,"multiplicity":1}],
                "lambda":[1,0,1,2],
                "element":[[[1,0]],[[1,-1],[2,-1]],[[2,-1]]]}"#,
        )
        .unwrap();
        assert_eq!(inst.weight, Some(Weight::new(vec![1, -1, -1])));
        assert_eq!(inst.element.unwrap().to_string(), "(1,0) | (2,-1)(1,-1) | (2,-1)");
    }

    #[test]
    fn rejects_unknown_fields_and_bad_shapes() {
        let bad = [
            r#"{"algebra":{"family":"A","rank":2},"L":[],"extra":1}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[],"weight":[1]}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[],"lambda":[1,0]}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[],"weight":[1,0],"lambda":[0,1,0]}"#,
            r#"{"algebra":{"family":"D","rank":4},"L":[],"lambda":[1,0,0,0,0]}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[],"element":[[]]}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[],"element":[[[0,1]],[]]}"#,
            r#"{"algebra":{"family":"A","rank":2},"L":[{"node":3,"width":1,"multiplicity":1}]}"#,
            r#"{"algebra":{"family":"B","rank":2},"L":[]}"#,
        ];
        for text in bad {
            assert!(Instance::parse(text).is_err(), "{text}");
        }
    }
}
