//! Machine-readable verification reports.
//!
//! Reports are emitted as JSON on standard output. `verdict` is `"clean"`
//! exactly when the defect count is zero; defect entries carry the basis
//! indices they were evaluated at plus the nonzero components of the defect
//! value, all rationals as strings. Entries are ordered lexicographically
//! by index, so reports diff deterministically.

use serde::Serialize;

use crate::matrix::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::{ThreeTensor, TwoTensor};

#[derive(Clone, Debug, Serialize)]
pub struct DefectComponent {
    pub at: Vec<usize>,
    pub c: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectEntry {
    pub family: String,
    pub indices: Vec<usize>,
    pub components: Vec<DefectComponent>,
}

impl DefectEntry {
    pub fn from_vector(family: &str, indices: Vec<usize>, v: &Vector) -> Self {
        let components = (0..v.len())
            .filter(|&i| !v[i].is_zero())
            .map(|i| DefectComponent {
                at: vec![i],
                c: v[i].to_string(),
            })
            .collect();
        DefectEntry {
            family: family.to_string(),
            indices,
            components,
        }
    }

    pub fn from_matrix(family: &str, indices: Vec<usize>, m: &Matrix) -> Self {
        let mut components = Vec::new();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() {
                    components.push(DefectComponent {
                        at: vec![i, j],
                        c: m[(i, j)].to_string(),
                    });
                }
            }
        }
        DefectEntry {
            family: family.to_string(),
            indices,
            components,
        }
    }

    pub fn from_two_tensor(family: &str, indices: Vec<usize>, t: &TwoTensor) -> Self {
        let components = t
            .entries()
            .into_iter()
            .map(|(i, j, c)| DefectComponent {
                at: vec![i, j],
                c: c.to_string(),
            })
            .collect();
        DefectEntry {
            family: family.to_string(),
            indices,
            components,
        }
    }

    pub fn from_three_tensor(family: &str, indices: Vec<usize>, t: &ThreeTensor) -> Self {
        let components = t
            .entries()
            .into_iter()
            .map(|(x, y, z, c)| DefectComponent {
                at: vec![x, y, z],
                c: c.to_string(),
            })
            .collect();
        DefectEntry {
            family: family.to_string(),
            indices,
            components,
        }
    }

    pub fn from_scalar(family: &str, indices: Vec<usize>, c: &Scalar) -> Self {
        DefectEntry {
            family: family.to_string(),
            indices,
            components: vec![DefectComponent {
                at: vec![],
                c: c.to_string(),
            }],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    pub defect_count: usize,
    pub defects: Vec<DefectEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<serde_json::Value>,
    pub elapsed_ms: u128,
    pub inputs: Vec<InputDigest>,
}

impl Report {
    /// Assemble a report; `quiet` keeps the count but drops defect bodies.
    pub fn new(
        defects: Vec<DefectEntry>,
        classification: Option<String>,
        data: Option<serde_json::Value>,
        elapsed_ms: u128,
        inputs: Vec<InputDigest>,
        quiet: bool,
    ) -> Self {
        let defect_count = defects.len();
        let verdict = if defect_count == 0 { "clean" } else { "defects" };
        Report {
            verdict: verdict.to_string(),
            classification,
            defect_count,
            defects: if quiet { Vec::new() } else { defects },
            data,
            elapsed_ms,
            inputs,
        }
    }

    pub fn error(message: &str, elapsed_ms: u128, inputs: Vec<InputDigest>) -> Self {
        Report {
            verdict: "error".to_string(),
            classification: None,
            defect_count: 0,
            defects: Vec::new(),
            data: Some(serde_json::json!({ "error": message })),
            elapsed_ms,
            inputs,
        }
    }

    pub fn is_clean(&self) -> bool {
        self.verdict == "clean"
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_tracks_defect_count() {
        let clean = Report::new(vec![], None, None, 1, vec![], false);
        assert_eq!(clean.verdict, "clean");
        let v = Vector::from_entries(vec![Scalar::one(), Scalar::zero()]);
        let entry = DefectEntry::from_vector("assoc", vec![0, 1, 1], &v);
        let bad = Report::new(vec![entry], None, None, 1, vec![], false);
        assert_eq!(bad.verdict, "defects");
        assert_eq!(bad.defect_count, 1);
        assert_eq!(bad.defects[0].components.len(), 1);
        assert_eq!(bad.defects[0].components[0].c, "1");
    }

    #[test]
    fn quiet_drops_bodies_but_keeps_count() {
        let v = Vector::from_entries(vec![Scalar::ratio(-1, 2)]);
        let entry = DefectEntry::from_vector("left-comm", vec![0, 0, 0], &v);
        let r = Report::new(vec![entry], None, None, 0, vec![], true);
        assert_eq!(r.defect_count, 1);
        assert!(r.defects.is_empty());
        assert_eq!(r.verdict, "defects");
    }
}
