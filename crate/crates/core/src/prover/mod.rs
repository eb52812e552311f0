//! Proof search, derivation checking and the atom-deletion transformation
//! for System BV, with checking extended to the up rules of SBV.
//!
//! Derivations are read bottom-up: a step turns its conclusion into its
//! premise by rewriting the redex (in the conclusion) into the contractum
//! (in the premise).

mod analysis;
mod check;
mod delete;
mod expand;
mod json;
mod prune;
mod search;

use std::fmt;

use crate::structure::{Position, PositionedContext, Structure};

pub use analysis::{
    first_redex_analysis, first_redex_analysis_with, least_provable_first_redex_depth, min_first_redex_depth, FirstRedex,
};
pub use check::{check, CheckError, CheckFailure, System};
pub use delete::{delete_atom_pair, DeleteError};
pub use expand::expand;
pub use json::{DerivationError, DerivationJson, StepJson};
pub use search::{prove, prove_all, ProveOutcome, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleName {
    /// The unit axiom closing a proof.
    Axiom,
    AiDown,
    Switch,
    QDown,
    AiUp,
    QUp,
}

impl RuleName {
    pub const ALL: [RuleName; 6] = [
        RuleName::Axiom,
        RuleName::AiDown,
        RuleName::Switch,
        RuleName::QDown,
        RuleName::AiUp,
        RuleName::QUp,
    ];

    pub fn json_name(self) -> &'static str {
        match self {
            RuleName::Axiom => "axiom",
            RuleName::AiDown => "ai_down",
            RuleName::Switch => "switch",
            RuleName::QDown => "q_down",
            RuleName::AiUp => "ai_up",
            RuleName::QUp => "q_up",
        }
    }

    pub fn from_json_name(name: &str) -> Option<RuleName> {
        RuleName::ALL.into_iter().find(|r| r.json_name() == name)
    }

    pub fn is_up(self) -> bool {
        matches!(self, RuleName::AiUp | RuleName::QUp)
    }
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleName::Axiom => "o↓",
            RuleName::AiDown => "ai↓",
            RuleName::Switch => "s",
            RuleName::QDown => "q↓",
            RuleName::AiUp => "ai↑",
            RuleName::QUp => "q↑",
        })
    }
}

/// One rule application.
///
/// `position` addresses the redex in the conclusion, except for `ai↑`
/// whose redex is the unit: there it addresses the contractum in the
/// premise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleInstance {
    pub rule: RuleName,
    pub position: Position,
    pub redex: Structure,
    pub contractum: Structure,
    /// Bindings of the rule's schematic variables, such as `R`, `R'`, `T`,
    /// `T'` or the atom `a`.
    pub witnesses: Vec<(&'static str, Structure)>,
}

impl RuleInstance {
    pub fn axiom() -> RuleInstance {
        RuleInstance {
            rule: RuleName::Axiom,
            position: Position::root(),
            redex: Structure::Unit,
            contractum: Structure::Unit,
            witnesses: Vec::new(),
        }
    }

    /// The instance's context inside the structure its position refers to.
    pub fn context(&self, host: &Structure) -> PositionedContext {
        PositionedContext::new(host.clone(), self.position.clone())
    }

    pub fn redex_depth(&self) -> usize {
        self.position.depth()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub instance: RuleInstance,
    pub premise: Structure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Structure,
    /// Bottom-up.
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn new(conclusion: Structure) -> Derivation {
        Derivation {
            conclusion,
            steps: Vec::new(),
        }
    }

    /// Number of rule instances, the axiom included.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// The topmost structure.
    pub fn top(&self) -> &Structure {
        self.steps.last().map_or(&self.conclusion, |s| &s.premise)
    }

    /// The conclusion of step `i`.
    pub fn conclusion_of(&self, i: usize) -> &Structure {
        if i == 0 {
            &self.conclusion
        } else {
            &self.steps[i - 1].premise
        }
    }

    pub fn is_proof(&self) -> bool {
        self.top().is_unit()
            && self
                .steps
                .last()
                .is_some_and(|s| s.instance.rule == RuleName::Axiom)
    }

    pub fn push(&mut self, instance: RuleInstance, premise: Structure) {
        self.steps.push(Step { instance, premise });
    }

    /// Appends the steps of `upper`, whose conclusion must be this
    /// derivation's top.
    pub fn extend(&mut self, upper: Derivation) {
        debug_assert_eq!(self.top(), &upper.conclusion);
        self.steps.extend(upper.steps);
    }
}

impl fmt::Display for Derivation {
    /// Top-down listing, each premise above its conclusion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_proof() {
            writeln!(f, "---- {}", RuleName::Axiom)?;
        }
        writeln!(f, "{}", self.top())?;
        for (i, step) in self.steps.iter().enumerate().rev() {
            let inst = &step.instance;
            if inst.rule == RuleName::Axiom {
                continue;
            }
            writeln!(
                f,
                "---- {} at {:?}: {} => {}",
                inst.rule, inst.position.path, inst.redex, inst.contractum
            )?;
            writeln!(f, "{}", self.conclusion_of(i))?;
        }
        Ok(())
    }
}
