//! JSON file formats for diagrams and decompositions.
//!
//! Rationals are written as strings (`"p/q"`, or `"p"` for integers) so no
//! precision is lost. Output is canonical: sorted keys, entries sorted by
//! `(i, j)`, summands in elimination order.

use serde::{Deserialize, Serialize};

use crate::decompose::{Decomposition, Summand};
use crate::diagram::{BettiDiagram, DegreeSequence};
use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryRecord {
    pub i: usize,
    pub j: i64,
    pub value: Rat,
}

/// `{"entries": [{"i", "j", "value"}], "codim": c}` with `j` the internal degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    pub entries: Vec<EntryRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub codim: Option<usize>,
}

impl DiagramFile {
    pub fn from_diagram(b: &BettiDiagram, codim: Option<usize>) -> Self {
        let entries = b
            .iter()
            .map(|(i, j, v)| EntryRecord { i, j, value: v.clone() })
            .collect();
        DiagramFile { entries, codim }
    }

    /// Rejects duplicate keys and non-positive values.
    pub fn to_diagram(&self) -> Result<BettiDiagram> {
        BettiDiagram::from_entries(self.entries.iter().map(|e| (e.i, e.j, e.value.clone())))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("diagram file: {e}")))
    }

    pub fn to_json(&self) -> String {
        to_pretty(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandRecord {
    pub lambda: Rat,
    pub degrees: DegreeSequence,
}

/// `{"beta0": "p/q", "summands": [{"lambda", "degrees"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionFile {
    pub beta0: Rat,
    pub summands: Vec<SummandRecord>,
}

impl DecompositionFile {
    pub fn from_decomposition(dec: &Decomposition) -> Self {
        DecompositionFile {
            beta0: dec.source_beta0.clone(),
            summands: dec
                .summands
                .iter()
                .map(|s| SummandRecord { lambda: s.lambda.clone(), degrees: s.degrees.clone() })
                .collect(),
        }
    }

    /// Checks positivity of every lambda and that they sum to `beta0`.
    pub fn validate(&self) -> Result<()> {
        for (k, s) in self.summands.iter().enumerate() {
            if !s.lambda.is_positive() {
                return Err(Error::InvalidDiagram(format!("summand {k}: lambda {} is not positive", s.lambda)));
            }
        }
        let total: Rat = self.summands.iter().map(|s| &s.lambda).sum();
        if total != self.beta0 {
            return Err(Error::InvalidDiagram(format!(
                "lambdas sum to {total}, but beta0 is {}",
                self.beta0
            )));
        }
        Ok(())
    }

    pub fn to_decomposition(&self) -> Result<Decomposition> {
        self.validate()?;
        Ok(Decomposition {
            summands: self
                .summands
                .iter()
                .map(|s| Summand { lambda: s.lambda.clone(), degrees: s.degrees.clone() })
                .collect(),
            source_beta0: self.beta0.clone(),
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let f: Self =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("decomposition file: {e}")))?;
        f.validate()?;
        Ok(f)
    }

    pub fn to_json(&self) -> String {
        to_pretty(self)
    }
}

/// Pretty JSON with object keys sorted and a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompose::greedy_decompose;

    const MPRIME: &str = r#"{"entries": [
        {"i": 0, "j": 0, "value": "1"},
        {"i": 1, "j": 2, "value": "4"},
        {"i": 2, "j": 3, "value": "2"},
        {"i": 2, "j": 4, "value": "3"},
        {"i": 3, "j": 5, "value": "2"}]}"#;

    #[test]
    fn parses_and_decomposes() {
        let f = DiagramFile::from_json(MPRIME).unwrap();
        assert_eq!(f.codim, None);
        let dec = greedy_decompose(&f.to_diagram().unwrap()).unwrap();
        let out = DecompositionFile::from_decomposition(&dec);
        let json = out.to_json();
        assert!(json.contains("\"lambda\": \"2/5\""));
        assert_eq!(DecompositionFile::from_json(&json).unwrap(), out);
    }

    #[test]
    fn serialization_is_stable() {
        let f = DiagramFile::from_json(MPRIME).unwrap();
        let again = DiagramFile::from_json(&f.to_json()).unwrap();
        assert_eq!(f.to_json(), again.to_json());
        assert!(f.to_json().starts_with("{\n  \"entries\""));
    }

    #[test]
    fn rejects_bad_input() {
        let dup = r#"{"entries": [{"i":0,"j":0,"value":"1"},{"i":0,"j":0,"value":"2"}]}"#;
        assert!(DiagramFile::from_json(dup).unwrap().to_diagram().is_err());
        let neg = r#"{"entries": [{"i":0,"j":0,"value":"-1"}]}"#;
        assert!(DiagramFile::from_json(neg).unwrap().to_diagram().is_err());
        assert!(DiagramFile::from_json(r#"{"entries": [{"i":0,"j":0,"value":1}]}"#).is_err());
        assert!(DiagramFile::from_json("{").is_err());
        let sum = r#"{"beta0":"1","summands":[{"lambda":"1/2","degrees":[0,1,2]}]}"#;
        assert!(DecompositionFile::from_json(sum).is_err());
        let bad = r#"{"beta0":"1","summands":[{"lambda":"1","degrees":[0,2,2]}]}"#;
        assert!(DecompositionFile::from_json(bad).is_err());
    }
}
