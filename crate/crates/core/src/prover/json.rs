use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::check::positions_at;
use super::{Derivation, RuleInstance, RuleName};
use crate::structure::{parse, ParseError, Position, Structure};

/// Wire form of a derivation, steps bottom-up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationJson {
    pub conclusion: String,
    pub steps: Vec<StepJson>,
}

/// `path` leads to the node holding the redex in the step's conclusion
/// (the contractum in the premise for `ai_up`). When the redex is a group
/// of that node's children the group is recovered on reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepJson {
    pub rule: String,
    #[serde(default)]
    pub path: Vec<usize>,
    #[serde(default = "unit_text")]
    pub redex: String,
    #[serde(default = "unit_text")]
    pub contractum: String,
    #[serde(default = "unit_text")]
    pub premise: String,
}

fn unit_text() -> String {
    "o".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("invalid derivation JSON: {0}")]
    Json(String),
    #[error("conclusion: {0}")]
    Conclusion(ParseError),
    #[error("step {step}: {field}: {error}")]
    Field {
        step: usize,
        field: &'static str,
        error: ParseError,
    },
    #[error("step {step}: unknown rule {name:?}")]
    UnknownRule { step: usize, name: String },
}

impl DerivationError {
    /// The step the error was found in, if any.
    pub fn step(&self) -> Option<usize> {
        match self {
            DerivationError::Field { step, .. } | DerivationError::UnknownRule { step, .. } => Some(*step),
            _ => None,
        }
    }
}

impl Derivation {
    pub fn to_json(&self) -> DerivationJson {
        DerivationJson {
            conclusion: self.conclusion.to_string(),
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    rule: s.instance.rule.json_name().into(),
                    path: s.instance.position.path.clone(),
                    redex: s.instance.redex.to_string(),
                    contractum: s.instance.contractum.to_string(),
                    premise: s.premise.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("derivations serialize")
    }

    pub fn from_json(json: &DerivationJson) -> Result<Derivation, DerivationError> {
        let conclusion = parse(&json.conclusion).map_err(DerivationError::Conclusion)?;
        let mut d = Derivation::new(conclusion);
        for (step, s) in json.steps.iter().enumerate() {
            let rule = RuleName::from_json_name(&s.rule).ok_or_else(|| DerivationError::UnknownRule {
                step,
                name: s.rule.clone(),
            })?;
            let field = |field, text: &str| parse(text).map_err(|error| DerivationError::Field { step, field, error });
            let redex = field("redex", &s.redex)?;
            let contractum = field("contractum", &s.contractum)?;
            let premise = field("premise", &s.premise)?;
            let position = resolve(rule, &s.path, d.top(), &redex, &contractum, &premise);
            d.push(
                RuleInstance {
                    rule,
                    position,
                    redex,
                    contractum,
                    witnesses: Vec::new(),
                },
                premise,
            );
        }
        Ok(d)
    }

    pub fn from_json_str(text: &str) -> Result<Derivation, DerivationError> {
        let json: DerivationJson = serde_json::from_str(text).map_err(|e| DerivationError::Json(e.to_string()))?;
        Derivation::from_json(&json)
    }
}

/// The full position behind a path: the first candidate whose rewrite
/// yields the stated premise, else the bare node.
fn resolve(
    rule: RuleName,
    path: &[usize],
    conclusion: &Structure,
    redex: &Structure,
    contractum: &Structure,
    premise: &Structure,
) -> Position {
    let (host, target, replacement, other) = if rule == RuleName::AiUp {
        (premise, contractum, redex, conclusion)
    } else {
        (conclusion, redex, contractum, premise)
    };
    positions_at(host, path, target)
        .into_iter()
        .find(|p| p.replace(host, replacement.clone()).as_ref() == Some(other))
        .unwrap_or_else(|| Position::node(path.to_vec()))
}
