//! JSON interchange format for algebras.
//!
//! ```json
//! {"dim": 1, "labels": ["e"], "structure": [[0, 0, 0, "1/1"]],
//!  "grading": [0], "involution": [[0, 0, "1/1"]]}
//! ```
//!
//! `involution` lists the nonzero entries `[row, col, value]` of the
//! involution matrix; column `k` is the image of basis vector `k`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::algebra::{StarSuperAlgebra, WedderburnBlock, WedderburnData};
use crate::error::{Error, Result};
use crate::family::FamilyTag;
use crate::rational::{format_rational, parse_rational, zero_vec};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    dim: usize,
    labels: Vec<String>,
    structure: Vec<(usize, usize, usize, String)>,
    grading: Vec<u8>,
    involution: Vec<(usize, usize, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    wedderburn: Option<WedderburnDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WedderburnDoc {
    blocks: Vec<BlockDoc>,
    radical: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockDoc {
    indices: Vec<usize>,
    #[serde(default)]
    family: Option<String>,
    #[serde(default)]
    params: Option<Map<String, Value>>,
}

/// Serializes to the interchange format (pretty-printed, deterministic).
pub fn to_json(alg: &StarSuperAlgebra) -> String {
    let d = alg.dim();
    let structure = alg
        .structure_entries()
        .into_iter()
        .map(|(i, j, k, c)| (i, j, k, format_rational(&c)))
        .collect();
    let mut involution = Vec::new();
    for col in 0..d {
        for (row, c) in alg.star_image(col).iter().enumerate() {
            if !c.is_zero() {
                involution.push((row, col, format_rational(c)));
            }
        }
    }
    involution.sort();
    let wedderburn = alg.wedderburn().map(|w| WedderburnDoc {
        blocks: w
            .blocks
            .iter()
            .map(|b| BlockDoc {
                indices: b.indices.clone(),
                family: b.family.map(|f| f.name().to_string()),
                params: b.family.map(|f| match f.params_json() {
                    Value::Object(m) => m,
                    _ => Map::new(),
                }),
            })
            .collect(),
        radical: w.radical.clone(),
    });
    let doc = AlgebraDoc {
        dim: d,
        labels: alg.labels().to_vec(),
        structure,
        grading: alg.grading().to_vec(),
        involution,
        wedderburn,
    };
    serde_json::to_string_pretty(&doc).expect("algebra documents always serialize")
}

/// Parses the interchange format. Checks shapes and ranges only; call
/// [`StarSuperAlgebra::validate`] for the algebraic laws.
pub fn from_json(text: &str) -> Result<StarSuperAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let d = doc.dim;
    if doc.labels.len() != d {
        return Err(Error::LengthMismatch { expected: d, got: doc.labels.len() });
    }
    let structure = doc
        .structure
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, parse_rational(c)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut star_cols = vec![zero_vec(d); d];
    for (row, col, c) in &doc.involution {
        if *row >= d || *col >= d {
            return Err(Error::InvalidAlgebra(format!(
                "involution entry ({row}, {col}) out of range for dimension {d}"
            )));
        }
        star_cols[*col][*row] += parse_rational(c)?;
    }
    let wedderburn = doc
        .wedderburn
        .map(|w| -> Result<WedderburnData> {
            let blocks = w
                .blocks
                .into_iter()
                .map(|b| {
                    let family = match b.family {
                        Some(name) => {
                            Some(FamilyTag::from_json(&name, &b.params.unwrap_or_default())?)
                        }
                        None => None,
                    };
                    Ok(WedderburnBlock { indices: b.indices, family })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(WedderburnData { blocks, radical: w.radical })
        })
        .transpose()?;
    StarSuperAlgebra::new(doc.labels, structure, doc.grading, star_cols, wedderburn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_family, ut_star, UtSpec};
    use crate::family::Diamond;

    #[test]
    fn round_trip_families() {
        for tag in [
            FamilyTag::MhlT { h: 1, l: 1 },
            FamilyTag::MhhS { h: 1 },
            FamilyTag::MnCmnStar { n: 2, diamond: Diamond::S },
        ] {
            let a = build_family(tag).unwrap();
            let text = to_json(&a);
            let b = from_json(&text).unwrap();
            assert_eq!(a, b);
            assert_eq!(to_json(&b), text);
        }
    }

    #[test]
    fn round_trip_ut() {
        let spec = UtSpec::new(vec![FamilyTag::MhlT { h: 1, l: 0 }; 2], vec![0, 1]).unwrap();
        let a = ut_star(&spec).unwrap().algebra;
        assert_eq!(from_json(&to_json(&a)).unwrap(), a);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(from_json("{"), Err(Error::Parse(_))));
        let short = r#"{"dim": 2, "labels": ["a"], "structure": [], "grading": [0, 0],
            "involution": []}"#;
        assert!(matches!(from_json(short), Err(Error::LengthMismatch { .. })));
        let bad_rat = r#"{"dim": 1, "labels": ["a"], "structure": [[0, 0, 0, "1/0"]],
            "grading": [0], "involution": [[0, 0, "1/1"]]}"#;
        assert!(from_json(bad_rat).is_err());
        let out_of_range = r#"{"dim": 1, "labels": ["a"], "structure": [],
            "grading": [0], "involution": [[1, 0, "1/1"]]}"#;
        assert!(matches!(from_json(out_of_range), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn unknown_family_is_rejected() {
        let doc = r#"{"dim": 1, "labels": ["e"], "structure": [[0, 0, 0, "1/1"]],
            "grading": [0], "involution": [[0, 0, "1/1"]],
            "wedderburn": {"blocks": [{"indices": [0], "family": "NOPE", "params": {}}],
                           "radical": []}}"#;
        assert!(from_json(doc).is_err());
    }
}
