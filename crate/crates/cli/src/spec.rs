//! Problem documents: a Cartan matrix, a word, a divisor and options.
//!
//! ```json
//! {
//!   "cartan": {"type": "A", "rank": 3},
//!   "word": [2, 1, 3, 2],
//!   "divisor": [-1, -1, 1, 0],
//!   "options": {"witnesses": true}
//! }
//! ```
//!
//! `cartan` may also be an explicit matrix (list of rows). Word letters are
//! 1-based.

use bottsam_core::{BottData, CartanFamily, DivisorCoeffs, GeneralizedCartanMatrix, TableOptions, ToricDivisor, Word};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CartanSpec {
    Family {
        #[serde(rename = "type")]
        family: String,
        rank: usize,
    },
    Matrix(Vec<Vec<i64>>),
}

impl CartanSpec {
    pub fn build(&self) -> Result<GeneralizedCartanMatrix, CliError> {
        match self {
            CartanSpec::Family { family, rank } => {
                let mut chars = family.chars();
                let letter = match (chars.next(), chars.next()) {
                    (Some(c), None) => CartanFamily::from_letter(c.to_ascii_uppercase()),
                    _ => None,
                };
                let family = letter
                    .ok_or_else(|| CliError::Invalid(format!("unknown Cartan type {family:?} (expected A, B, C or D)")))?;
                Ok(GeneralizedCartanMatrix::of_type(family, *rank)?)
            }
            CartanSpec::Matrix(rows) => Ok(GeneralizedCartanMatrix::new(rows)?),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    /// Record witness weights in toric tables.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub witnesses: bool,
    /// Run the Čech oracle as part of `analyze`.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub oracle: bool,
    /// Skip the toric table in `analyze`.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub no_toric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cap: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_cap: Option<usize>,
    /// Per-index `[lo, hi]` ranges for `scan`; a single range applies to
    /// every index.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_ranges: Option<Vec<[i64; 2]>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub cartan: CartanSpec,
    pub word: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor_minus: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "is_default")]
    pub options: Options,
}

fn is_default(o: &Options) -> bool {
    *o == Options::default()
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("cannot parse problem: {e}")))
    }

    pub fn bott(&self) -> Result<BottData, CliError> {
        let gcm = self.cartan.build()?;
        Ok(BottData::new(gcm, Word::from_one_based(&self.word)?)?)
    }

    /// `a`, which must have one entry per letter.
    pub fn coeffs(&self) -> Result<DivisorCoeffs, CliError> {
        let a = self
            .divisor
            .clone()
            .ok_or_else(|| CliError::Invalid("missing field `divisor`".into()))?;
        self.check_len("divisor", a.len())?;
        Ok(DivisorCoeffs(a))
    }

    /// `(a, b)`, with `b = 0` when `divisor_minus` is absent.
    pub fn toric_divisor(&self) -> Result<ToricDivisor, CliError> {
        let a = self.coeffs()?.0;
        let b = match &self.divisor_minus {
            Some(b) => {
                self.check_len("divisor_minus", b.len())?;
                b.clone()
            }
            None => vec![0; a.len()],
        };
        Ok(ToricDivisor::new(a, b)?)
    }

    /// The divisor as `Σ a_i Z_i`; rejects nonzero `divisor_minus`.
    pub fn picard_coeffs(&self) -> Result<DivisorCoeffs, CliError> {
        Ok(self.toric_divisor()?.picard_coeffs()?)
    }

    pub fn table_options(&self) -> TableOptions {
        let mut opts = TableOptions::default();
        if let Some(cap) = self.options.cap {
            opts.cap = cap;
        }
        if let Some(w) = self.options.witness_cap {
            opts.witness_cap = w;
        }
        opts.collect_witnesses = self.options.witnesses;
        opts
    }

    /// Scan ranges expanded to one per index.
    pub fn scan_ranges(&self) -> Result<Vec<(i64, i64)>, CliError> {
        let n = self.word.len();
        let ranges = self
            .options
            .scan_ranges
            .as_ref()
            .ok_or_else(|| CliError::Invalid("scan needs `options.scan_ranges` or --range".into()))?;
        match ranges.len() {
            1 => Ok(vec![(ranges[0][0], ranges[0][1]); n]),
            len if len == n => Ok(ranges.iter().map(|r| (r[0], r[1])).collect()),
            len => Err(CliError::Invalid(format!(
                "scan_ranges has {len} entries; expected 1 or {n}"
            ))),
        }
    }

    fn check_len(&self, field: &str, len: usize) -> Result<(), CliError> {
        if len != self.word.len() {
            return Err(CliError::Invalid(format!(
                "`{field}` has {len} entries but the word has {} letters",
                self.word.len()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_and_matrix_forms() {
        let s = ProblemSpec::parse(r#"{"cartan":{"type":"A","rank":2},"word":[1,2],"divisor":[1,0]}"#).unwrap();
        assert_eq!(
            s.cartan,
            CartanSpec::Family {
                family: "A".into(),
                rank: 2
            }
        );
        let m = ProblemSpec::parse(r#"{"cartan":[[2,-1],[-1,2]],"word":[1,2],"divisor":[1,0]}"#).unwrap();
        assert_eq!(s.cartan.build().unwrap(), m.cartan.build().unwrap());
    }

    #[test]
    fn round_trip() {
        let text = r#"{"cartan":{"type":"C","rank":3},"word":[3,2,1],"divisor":[1,-2,0],
            "divisor_minus":[0,1,0],"options":{"witnesses":true,"cap":1000,"scan_ranges":[[-1,1]]}}"#;
        let s = ProblemSpec::parse(text).unwrap();
        let again = ProblemSpec::parse(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn validation() {
        let bad_len = ProblemSpec::parse(r#"{"cartan":{"type":"A","rank":2},"word":[1,2],"divisor":[1]}"#).unwrap();
        assert!(bad_len.coeffs().is_err());
        let bad_letter = ProblemSpec::parse(r#"{"cartan":{"type":"A","rank":2},"word":[3],"divisor":[1]}"#).unwrap();
        assert!(bad_letter.bott().is_err());
        let bad_type = ProblemSpec::parse(r#"{"cartan":{"type":"Q","rank":2},"word":[1],"divisor":[1]}"#).unwrap();
        assert!(bad_type.bott().is_err());
        assert!(ProblemSpec::parse(r#"{"cartan":[[2]],"word":[1],"divisor":[1],"extra":1}"#).is_err());
        let minus = ProblemSpec::parse(r#"{"cartan":[[2]],"word":[1],"divisor":[1],"divisor_minus":[1]}"#).unwrap();
        assert!(minus.picard_coeffs().is_err());
        assert!(minus.toric_divisor().is_ok());
    }
}
