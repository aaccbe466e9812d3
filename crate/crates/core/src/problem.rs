//! JSON problem files over ℍ(ℚ).
//!
//! ```json
//! {
//!   "left":  [{"node": "i", "value": "1"}],
//!   "right": [{"node": "1+j", "value": "0"}],
//!   "options": {"reduce": false, "parameters": [["1", "-1/2"]]}
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{parse_rational, Quaternion, Rational};
use crate::two_sided::TwoSidedProblem;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub left: Vec<ConditionText>,
    #[serde(default)]
    pub right: Vec<ConditionText>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConditionText {
    pub node: String,
    pub value: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default)]
    pub reduce: bool,
    /// Coefficient vectors for the homogeneous basis; each selects one
    /// member of the solution family.
    #[serde(default)]
    pub parameters: Vec<Vec<RationalText>>,
}

/// A rational given either as a JSON integer or as text such as `"-3/4"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    pub fn parse(&self) -> Result<Rational> {
        match self {
            RationalText::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalText::Text(s) => parse_rational(s.trim(), 0),
        }
    }
}

/// A fully parsed problem file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub problem: TwoSidedProblem<Quaternion>,
    pub reduce: bool,
    pub parameters: Vec<Vec<Rational>>,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input {
            location: format!("line {}, column {}", e.line(), e.column()),
            message: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn from_problem(p: &TwoSidedProblem<Quaternion>) -> Self {
        let conv = |v: &[(Quaternion, Quaternion)]| {
            v.iter()
                .map(|(a, c)| ConditionText {
                    node: a.to_string(),
                    value: c.to_string(),
                })
                .collect()
        };
        ProblemFile {
            left: conv(p.left()),
            right: conv(p.right()),
            options: Options::default(),
        }
    }

    /// Parses every node and value; duplicate nodes within a side are
    /// rejected.
    pub fn parse(&self) -> Result<Problem> {
        let left = parse_side(&self.left, "left")?;
        let right = parse_side(&self.right, "right")?;
        let problem = TwoSidedProblem::new(left, right).map_err(|e| match e {
            Error::DuplicateNode { side, index } => Error::Input {
                location: format!("{side}[{index}].node"),
                message: "duplicate node".into(),
            },
            other => other,
        })?;
        let parameters = self
            .options
            .parameters
            .iter()
            .enumerate()
            .map(|(t, v)| {
                v.iter()
                    .enumerate()
                    .map(|(s, r)| {
                        r.parse().map_err(|e| Error::Input {
                            location: format!("options.parameters[{t}][{s}]"),
                            message: e.to_string(),
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Problem {
            problem,
            reduce: self.options.reduce,
            parameters,
        })
    }
}

fn parse_side(conds: &[ConditionText], side: &str) -> Result<Vec<(Quaternion, Quaternion)>> {
    conds
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let field = |name: &str, text: &str| {
                text.parse::<Quaternion>().map_err(|e| Error::Input {
                    location: format!("{side}[{i}].{name}"),
                    message: e.to_string(),
                })
            };
            Ok((field("node", &c.node)?, field("value", &c.value)?))
        })
        .collect()
}

impl std::str::FromStr for Problem {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        ProblemFile::from_json(text)?.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = r#"{"left": [{"node": "i", "value": "1"}],
                       "right": [{"node": "1+j", "value": "0"}],
                       "options": {"parameters": [[1, "-1/2"]]}}"#;
        let p: Problem = text.parse().unwrap();
        assert_eq!(p.problem.left().len(), 1);
        assert_eq!(p.parameters[0][1], crate::scalar::ratio(-1, 2));
        let again = ProblemFile::from_problem(&p.problem).parse().unwrap();
        assert_eq!(again.problem, p.problem);
    }

    #[test]
    fn errors_carry_locations() {
        let e = "{\"left\": [{\"node\": \"i\", \"value\": \"1\"}, {\"node\": \"i\", \"value\": \"2\"}]}"
            .parse::<Problem>()
            .unwrap_err();
        assert_eq!(e.to_string(), "left[1].node: duplicate node");
        let e = r#"{"right": [{"node": "1+q", "value": "0"}]}"#
            .parse::<Problem>()
            .unwrap_err();
        assert!(e.to_string().starts_with("right[0].node: parse error at column"));
        let e = "{\n  \"left\": [,]\n}".parse::<Problem>().unwrap_err();
        assert!(e.to_string().starts_with("line 2, column"));
    }
}
