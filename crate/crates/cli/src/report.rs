//! Input loading, error objects, and the two output views.

use std::fmt;
use std::io::Read;

use balrig_core::combinat::{BalancedComplex, BipartiteGraph, ComplexJson, GraphJson};
use balrig_core::exactla::TrialError;
use balrig_core::families::{self, FamilySpec, Generated};
use balrig_core::Error;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Usage,
    Input,
    SizeCap,
    TrialDisagreement,
}

impl Kind {
    pub fn code(self) -> u8 {
        match self {
            Kind::Usage => 2,
            Kind::Input => 3,
            Kind::SizeCap => 4,
            Kind::TrialDisagreement => 5,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub kind: Kind,
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        Self { kind, code: kind.code(), message: message.into() }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        Self::new(Kind::Usage, message)
    }

    pub fn input(message: impl Into<String>) -> Self {
        Self::new(Kind::Input, message)
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let kind = match &e {
            Error::SizeCap(_) => Kind::SizeCap,
            Error::Trial(TrialError::Disagreement { .. }) => Kind::TrialDisagreement,
            Error::Trial(TrialError::NoTrials) | Error::Field(_) => Kind::Usage,
            Error::Combinat(_) | Error::Invalid(_) => Kind::Input,
        };
        Self::new(kind, e.to_string())
    }
}

/// Raw text of an input argument: inline JSON if it starts with `{`, stdin
/// for `-`, a file path otherwise.
fn read_source(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(arg).map_err(|e| CliError::input(format!("{arg}: {e}")))
}

/// Parses `name key=value key=value`; commas may replace spaces.
pub fn parse_family(spec: &str, seed: u64) -> Result<FamilySpec, CliError> {
    let mut parts = spec.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty());
    let name = parts.next().ok_or_else(|| CliError::usage("empty family spec"))?;
    let mut params = Vec::new();
    for p in parts {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("family parameter {p:?} is not key=value")))?;
        let v: usize = v
            .parse()
            .map_err(|_| CliError::usage(format!("family parameter {k}: {v:?} is not a non-negative integer")))?;
        params.push((k, v));
    }
    Ok(FamilySpec::new(name, &params, seed))
}

pub enum Input {
    Graph(BipartiteGraph),
    Complex(BalancedComplex),
}

pub fn load(graph: Option<&str>, complex: Option<&str>, family: Option<&str>, seed: u64) -> Result<Input, CliError> {
    match (graph, complex, family) {
        (Some(g), None, None) => {
            let j: GraphJson = serde_json::from_str(&read_source(g)?)
                .map_err(|e| CliError::input(format!("graph json: {e}")))?;
            Ok(Input::Graph(BipartiteGraph::from_json(&j).map_err(Error::from)?))
        }
        (None, Some(c), None) => {
            let j: ComplexJson = serde_json::from_str(&read_source(c)?)
                .map_err(|e| CliError::input(format!("complex json: {e}")))?;
            Ok(Input::Complex(BalancedComplex::from_json(&j).map_err(Error::from)?))
        }
        (None, None, Some(f)) => Ok(match families::generate(&parse_family(f, seed)?)? {
            Generated::Graph(g) => Input::Graph(g),
            Generated::Complex(k) => Input::Complex(k),
        }),
        (None, None, None) => Err(CliError::usage("no input: pass --graph, --complex or --family")),
        _ => Err(CliError::usage("pass exactly one of --graph, --complex, --family")),
    }
}

pub fn load_graph(graph: Option<&str>, family: Option<&str>, seed: u64) -> Result<BipartiteGraph, CliError> {
    match load(graph, None, family, seed)? {
        Input::Graph(g) => Ok(g),
        Input::Complex(k) => k
            .to_graph()
            .map_err(|e| CliError::input(format!("this command needs a bipartite graph: {e}"))),
    }
}

pub fn load_complex(complex: Option<&str>, family: Option<&str>, seed: u64) -> Result<BalancedComplex, CliError> {
    match load(None, complex, family, seed)? {
        Input::Complex(k) => Ok(k),
        Input::Graph(g) => Ok(BalancedComplex::from_graph(&g)),
    }
}

/// One `key  value` line per top-level field; nested values stay compact
/// JSON. A view for people, never parsed back.
pub fn table(v: &Value) -> String {
    let Value::Object(map) = v else {
        return format!("{v}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let shown = match v {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {shown}\n"));
    }
    out
}
