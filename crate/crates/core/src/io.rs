//! JSON interchange: `{ "n": 4, "entries": [["q^2", "0", ...], ...] }`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::parse_scalar;
use crate::{Mat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&Mat> for MatrixJson {
    fn from(m: &Mat) -> Self {
        Self {
            n: m.rows(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(Scalar::to_string).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_mat(&self) -> Result<Mat> {
        if self.entries.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: self.entries.len(),
            });
        }
        let rows = self
            .entries
            .iter()
            .map(|row| {
                if row.len() != self.n {
                    return Err(Error::DimensionMismatch {
                        expected: self.n,
                        found: row.len(),
                    });
                }
                row.iter()
                    .map(|s| parse_scalar(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Mat::from_rows(rows)
    }
}

/// Serde adapter so that `Mat` fields serialize in the interchange format.
pub mod mat_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Mat, s: S) -> Result<S::Ok, S::Error> {
        MatrixJson::from(m).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Mat, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        j.to_mat().map_err(serde::de::Error::custom)
    }
}

/// Same as [`mat_serde`] for optional matrices.
pub mod opt_mat_serde {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &Option<Mat>, s: S) -> Result<S::Ok, S::Error> {
        m.as_ref().map(MatrixJson::from).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Mat>, D::Error> {
        let j = Option::<MatrixJson>::deserialize(d)?;
        j.map(|j| j.to_mat().map_err(serde::de::Error::custom))
            .transpose()
    }
}

pub fn mat_to_json(m: &Mat) -> serde_json::Value {
    serde_json::to_value(MatrixJson::from(m)).expect("matrix serializes")
}

pub fn mat_from_json_str(s: &str) -> std::result::Result<Mat, serde_json::Error> {
    let j: MatrixJson = serde_json::from_str(s)?;
    j.to_mat().map_err(serde::de::Error::custom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn reads_the_documented_layout() {
        let m =
            mat_from_json_str(r#"{"n": 2, "entries": [["q^2", "0"], ["-(q-1)/q", "1/2 + 3*i"]]}"#)
                .unwrap();
        assert_eq!(m[(0, 0)], Scalar::q_pow(2));
        assert_eq!(m[(1, 0)], (Scalar::one() - Scalar::q()) / Scalar::q());
        let back = mat_from_json_str(&mat_to_json(&m).to_string()).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn shape_errors() {
        assert!(mat_from_json_str(r#"{"n": 2, "entries": [["1", "0"]]}"#).is_err());
        assert!(mat_from_json_str(r#"{"n": 2, "entries": [["1", "0"], ["1"]]}"#).is_err());
        let err = mat_from_json_str(r#"{"n": 1, "entries": [["q +"]]}"#).unwrap_err();
        assert!(err.to_string().contains("parse error at"));
    }
}
