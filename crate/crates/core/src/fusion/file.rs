//! JSON ring files.
//!
//! ```json
//! { "rank": 2, "labels": ["1", "X"], "unit": 0, "dual": [0, 1],
//!   "tensor": [[["1","0"],["0","1"]], [["0","1"],["1","1"]]] }
//! ```
//!
//! `tensor[i][j][k]` is `N[i][j][k]`. Structure constants are written as decimal
//! strings; plain JSON integers are accepted on input.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{FusionError, FusionRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Number(u64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct RingFile {
    rank: usize,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    tensor: Vec<Vec<Vec<Entry>>>,
}

impl FusionRing {
    pub fn to_json(&self) -> String {
        let r = self.rank();
        let tensor = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| (0..r).map(|k| Entry::Text(self.n(i, j, k).to_string())).collect())
                    .collect()
            })
            .collect();
        let file = RingFile {
            rank: r,
            labels: self.labels().to_vec(),
            unit: self.unit(),
            dual: self.duals().to_vec(),
            tensor,
        };
        serde_json::to_string_pretty(&file).expect("ring file serializes")
    }

    pub fn from_json(text: &str) -> Result<FusionRing, FusionError> {
        let file: RingFile =
            serde_json::from_str(text).map_err(|e| FusionError::Parse(e.to_string()))?;
        let r = file.rank;
        if file.labels.len() != r {
            return Err(FusionError::Shape(format!(
                "rank is {r} but {} labels were given",
                file.labels.len()
            )));
        }
        if file.tensor.len() != r
            || file.tensor.iter().any(|m| m.len() != r || m.iter().any(|row| row.len() != r))
        {
            return Err(FusionError::Shape(format!("tensor must be {r}x{r}x{r}")));
        }
        let mut tensor = Vec::with_capacity(r * r * r);
        for (i, m) in file.tensor.iter().enumerate() {
            for (j, row) in m.iter().enumerate() {
                for (k, e) in row.iter().enumerate() {
                    let v = match e {
                        Entry::Text(s) => BigInt::from_str(s.trim()).map_err(|_| {
                            FusionError::Parse(format!("tensor[{i}][{j}][{k}] = {s:?} is not an integer"))
                        })?,
                        Entry::Number(n) => BigInt::from(*n),
                    };
                    tensor.push(v);
                }
            }
        }
        FusionRing::new(file.labels, file.unit, file.dual, tensor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const YANG_LEE: &str = r#"{ "rank": 2, "labels": ["1", "X"], "unit": 0, "dual": [0, 1],
        "tensor": [[["1","0"],["0","1"]], [["0","1"],["1",1]]] }"#;

    #[test]
    fn parses_strings_and_numbers() {
        let ring = FusionRing::from_json(YANG_LEE).unwrap();
        assert_eq!(ring.rank(), 2);
        assert_eq!(ring.n(1, 1, 1), &BigInt::from(1));
        assert!(ring.validate().is_empty());
    }

    #[test]
    fn round_trip() {
        let ring = FusionRing::from_json(YANG_LEE).unwrap();
        let again = FusionRing::from_json(&ring.to_json()).unwrap();
        assert_eq!(ring, again);
        assert!(ring.to_json().contains("\"1\""));
    }

    #[test]
    fn huge_entries_survive() {
        let ring = FusionRing::from_json(YANG_LEE).unwrap();
        let big = BigInt::from_str("123456789012345678901234567890").unwrap();
        let bumped = ring.with_entry(1, 1, 1, big.clone());
        let again = FusionRing::from_json(&bumped.to_json()).unwrap();
        assert_eq!(again.n(1, 1, 1), &big);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FusionRing::from_json("{"), Err(FusionError::Parse(_))));
        let bad = YANG_LEE.replace("\"rank\": 2", "\"rank\": 3");
        assert!(matches!(FusionRing::from_json(&bad), Err(FusionError::Shape(_))));
        let bad = YANG_LEE.replace("[\"0\",\"1\"]]", "[\"0\",\"x\"]]");
        assert!(FusionRing::from_json(&bad).is_err());
    }
}
