use std::fmt::Write as _;

use serde::Serialize;
use skewlagrange::{Quaternion, Side, SkewPoly};

use crate::Format;

type P = SkewPoly<Quaternion>;

#[derive(Debug, Serialize)]
pub struct Report {
    pub status: &'static str,
    pub polynomial: Option<String>,
    pub coefficients: Vec<String>,
    pub degree: Option<usize>,
    pub homogeneous_basis: Vec<String>,
    pub forced_conditions: Vec<Forced>,
    pub witnesses: Vec<Witness>,
    pub members: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Forced {
    pub side: Side,
    pub index: usize,
    pub node: String,
    pub forced: String,
    pub prescribed: String,
    pub consistent: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<usize>,
    pub message: String,
}

impl Report {
    pub fn solved(f: &P) -> Self {
        Report {
            status: "solved",
            polynomial: Some(f.to_string()),
            coefficients: f.coeffs().iter().map(ToString::to_string).collect(),
            degree: f.degree(),
            homogeneous_basis: Vec::new(),
            forced_conditions: Vec::new(),
            witnesses: Vec::new(),
            members: Vec::new(),
        }
    }

    pub fn inconsistent(witness: Witness) -> Self {
        Report {
            status: "inconsistent",
            polynomial: None,
            coefficients: Vec::new(),
            degree: None,
            homogeneous_basis: Vec::new(),
            forced_conditions: Vec::new(),
            witnesses: vec![witness],
            members: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "status: {}", self.status);
        if let Some(p) = &self.polynomial {
            let _ = writeln!(out, "polynomial: {p}");
            match self.degree {
                Some(d) => {
                    let _ = writeln!(out, "degree: {d}");
                }
                None => out.push_str("degree: -\n"),
            }
        }
        for (t, h) in self.homogeneous_basis.iter().enumerate() {
            let _ = writeln!(out, "homogeneous[{t}]: {h}");
        }
        for f in &self.forced_conditions {
            let verdict = if f.consistent { "consistent" } else { "CONFLICT" };
            let _ = writeln!(
                out,
                "forced {}[{}] at {}: {} (prescribed {}, {verdict})",
                f.side, f.index, f.node, f.forced, f.prescribed
            );
        }
        for w in &self.witnesses {
            out.push_str("witness:");
            if let Some(l) = w.left {
                let _ = write!(out, " left[{l}]");
            }
            if let Some(r) = w.right {
                let _ = write!(out, " right[{r}]");
            }
            let _ = writeln!(out, " {}", w.message);
        }
        for (t, m) in self.members.iter().enumerate() {
            let _ = writeln!(out, "member[{t}]: {m}");
        }
        out
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data");
    s.push('\n');
    s
}
