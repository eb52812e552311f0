use std::fmt;

use thiserror::Error;

use super::{Derivation, RuleName};
use crate::structure::{Kind, Position, Structure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum System {
    /// ∘↓, ai↓, s, q↓.
    BV,
    /// BV together with ai↑ and q↑.
    SBV,
}

impl System {
    pub fn contains(self, rule: RuleName) -> bool {
        self == System::SBV || !rule.is_up()
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            System::BV => "BV",
            System::SBV => "SBV",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CheckFailure {
    #[error("rule {0} is not in system {1}")]
    RuleNotInSystem(RuleName, System),
    #[error("not an instance of {rule}: {detail}")]
    BadShape { rule: RuleName, detail: String },
    #[error("no occurrence of {0} at the given path")]
    RedexNotFound(String),
    #[error("premise mismatch: rewriting gives {expected}, step states {found}")]
    PremiseMismatch { expected: String, found: String },
    #[error("axiom must be the last step and close on the unit")]
    MisplacedAxiom,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("step {step}: {failure}")]
pub struct CheckError {
    pub step: usize,
    pub failure: CheckFailure,
}

/// Checks every step, bottom-up, stopping at the first failure.
///
/// Each step's conclusion is the previous step's premise. Structures are
/// canonical, so chaining holds up to the equational theory exactly when
/// the canonical forms agree.
pub fn check(d: &Derivation, system: System) -> Result<(), CheckError> {
    for (i, step) in d.steps.iter().enumerate() {
        let fail = |failure| CheckError { step: i, failure };
        let inst = &step.instance;
        if !system.contains(inst.rule) {
            return Err(fail(CheckFailure::RuleNotInSystem(inst.rule, system)));
        }
        let conclusion = d.conclusion_of(i);
        if inst.rule == RuleName::Axiom {
            if !conclusion.is_unit() || !step.premise.is_unit() || i + 1 != d.steps.len() {
                return Err(fail(CheckFailure::MisplacedAxiom));
            }
            continue;
        }
        check_shape(inst.rule, &inst.redex, &inst.contractum)
            .map_err(|detail| fail(CheckFailure::BadShape { rule: inst.rule, detail }))?;
        // ai↑ rewrites a unit: read it top-down, removing the contractum
        // from the premise.
        let (host, target, replacement, other) = if inst.rule == RuleName::AiUp {
            (&step.premise, &inst.contractum, &inst.redex, conclusion)
        } else {
            (conclusion, &inst.redex, &inst.contractum, &step.premise)
        };
        let candidates = positions_at(host, &inst.position.path, target);
        if candidates.is_empty() {
            return Err(fail(CheckFailure::RedexNotFound(target.to_string())));
        }
        let results: Vec<Structure> = candidates
            .iter()
            .filter_map(|p| p.replace(host, replacement.clone()))
            .collect();
        if !results.contains(other) {
            let (expected, found) = if inst.rule == RuleName::AiUp {
                (results[0].to_string(), conclusion.to_string())
            } else {
                (results[0].to_string(), step.premise.to_string())
            };
            return Err(fail(CheckFailure::PremiseMismatch { expected, found }));
        }
    }
    Ok(())
}

/// Positions at `path` whose subterm is `target`: the node itself, or a
/// group of its children.
pub(crate) fn positions_at(host: &Structure, path: &[usize], target: &Structure) -> Vec<Position> {
    let Some(node) = host.get(path) else {
        return Vec::new();
    };
    if node == target {
        return vec![Position::node(path.to_vec())];
    }
    Position::locate(node, target)
        .into_iter()
        .filter(|p| p.path.is_empty() && p.group.is_some())
        .map(|p| Position {
            path: path.to_vec(),
            group: p.group,
        })
        .collect()
}

/// Whether `redex` / `contractum` match the rule's schemes.
fn check_shape(rule: RuleName, redex: &Structure, contractum: &Structure) -> Result<(), String> {
    let ok = match rule {
        RuleName::Axiom => true,
        RuleName::AiDown => contractum.is_unit() && is_dual_pair(redex, Kind::Par),
        RuleName::AiUp => redex.is_unit() && is_dual_pair(contractum, Kind::Copar),
        RuleName::Switch => redex.par_splits().iter().any(|(x, t)| {
            x.copar_splits()
                .iter()
                .any(|(r, r2)| &Structure::copar([Structure::par([r.clone(), t.clone()]), r2.clone()]) == contractum)
        }),
        RuleName::QDown => redex.par_splits().iter().any(|(u, v)| {
            u.seq_splits().iter().any(|(r, r2)| {
                v.seq_splits().iter().any(|(t, t2)| {
                    &Structure::seq([
                        Structure::par([r.clone(), t.clone()]),
                        Structure::par([r2.clone(), t2.clone()]),
                    ]) == contractum
                })
            })
        }),
        RuleName::QUp => redex.seq_splits().iter().any(|(x, y)| {
            x.copar_splits().iter().any(|(r, r2)| {
                y.copar_splits().iter().any(|(t, t2)| {
                    &Structure::copar([
                        Structure::seq([r.clone(), t.clone()]),
                        Structure::seq([r2.clone(), t2.clone()]),
                    ]) == contractum
                })
            })
        }),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{redex} => {contractum}"))
    }
}

fn is_dual_pair(s: &Structure, kind: Kind) -> bool {
    s.kind() == Some(kind)
        && matches!(s.children(), [x, y] if x.as_atom().zip(y.as_atom()).is_some_and(|(a, b)| a.is_dual_of(b)))
}
