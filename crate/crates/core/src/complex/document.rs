use serde::{Deserialize, Serialize};

use super::{ComplexError, WeightedComplex};
use crate::ring::Field;

/// One `{"v": [...], "w": ...}` record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplexEntry {
    pub v: Vec<u32>,
    pub w: u32,
}

/// On-disk JSON form of a weighted complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    #[serde(default = "default_field")]
    pub field: String,
    #[serde(default)]
    pub auto_close: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub simplices: Vec<SimplexEntry>,
}

fn default_field() -> String {
    "Q".to_string()
}

impl ComplexDocument {
    /// Canonical document: all faces listed, sorted by dimension then
    /// lexicographically, `auto_close` off.
    pub fn from_complex(x: &WeightedComplex) -> Self {
        ComplexDocument {
            field: x.field().tag(),
            auto_close: false,
            names: x.names().map(<[String]>::to_vec),
            simplices: x
                .iter()
                .map(|(s, w)| SimplexEntry {
                    v: s.vertices().to_vec(),
                    w,
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<WeightedComplex, ComplexError> {
        let field = Field::parse_tag(&self.field)?;
        let x = WeightedComplex::new(
            field,
            self.simplices.iter().map(|e| (e.v.clone(), e.w)),
            self.auto_close,
        )?;
        Ok(x.with_names(self.names.clone()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

/// Parses and validates a JSON complex document.
pub fn load_complex(text: &str) -> Result<WeightedComplex, ComplexError> {
    let doc: ComplexDocument =
        serde_json::from_str(text).map_err(|e| ComplexError::Parse(e.to_string()))?;
    doc.build()
}

impl WeightedComplex {
    pub fn to_json(&self) -> String {
        ComplexDocument::from_complex(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{random_complex, RandomParams};
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn kite_document_loads() {
        let x = fixtures::kite();
        assert_eq!(x.total_count(), 12);
        assert_eq!(x.names().unwrap()[0], "A");
    }

    #[test]
    fn empty_document() {
        let x = load_complex(r#"{"simplices": []}"#).unwrap();
        assert!(x.is_empty());
    }

    #[test]
    fn parse_errors_carry_location() {
        let err = load_complex("{\"simplices\": [ {\"v\": [0], \"w\": -1} ]}").unwrap_err();
        let ComplexError::Parse(msg) = err else { panic!() };
        assert!(msg.contains("line 1"), "{msg}");
        assert!(load_complex(r#"{"simplices": [], "extra": 1}"#).is_err());
        assert!(load_complex(r#"{"field": "Fp:4", "simplices": []}"#).is_err());
    }

    #[test]
    fn monotonicity_error_names_pair() {
        let doc = r#"{"auto_close": true, "simplices": [
            {"v": [0,1], "w": 1}, {"v": [0,1,2], "w": 2}]}"#;
        let err = load_complex(doc).unwrap_err().to_string();
        assert!(err.contains("[0,1] (1)") && err.contains("[0,1,2] (2)"), "{err}");
    }

    #[test]
    fn canonical_round_trip_for_fixtures() {
        for x in [fixtures::kite(), fixtures::loop_nerve(), fixtures::rp2(), fixtures::torus()] {
            let text = x.to_json();
            let y = load_complex(&text).unwrap();
            assert_eq!(x, y);
            assert_eq!(text, y.to_json());
        }
    }

    proptest! {
        #[test]
        fn load_save_identity(seed in 0u64..500) {
            let x = random_complex(seed, RandomParams { max_dim: 3, per_dim: 8, max_weight: 6 });
            let doc = ComplexDocument::from_complex(&x);
            let y = doc.build().unwrap();
            prop_assert_eq!(ComplexDocument::from_complex(&y), doc);
        }
    }
}
