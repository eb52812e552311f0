use std::collections::HashMap;

use super::prune::may_be_provable;
use super::{expand, Derivation, RuleInstance};
use crate::exec::{map_slice, Exec};
use crate::structure::Structure;

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProveOutcome {
    Proof(Derivation),
    Unprovable,
    /// The memo table reached the budget; `explored` structures were seen.
    BudgetExceeded { explored: usize },
}

impl ProveOutcome {
    pub fn is_proof(&self) -> bool {
        matches!(self, ProveOutcome::Proof(_))
    }
}

enum Status {
    InProgress,
    Disproved,
    /// Proved via this first step; `None` for the unit.
    Proved(Option<Box<(RuleInstance, Structure)>>),
}

pub(crate) struct Exhausted(pub usize);

/// Depth-first search memoized on canonical forms.
///
/// s and q↓ keep the atom multiset and ai↓ removes a dual pair, so each
/// goal has finitely many reachable premises and the memo makes the search
/// a decision procedure. A structure met again while still in progress
/// fails that branch. With the instances [`expand`] produces this never
/// happens: a non-trivial s or q↓ step strictly lowers the number of atom
/// pairs related by par, so the search graph is acyclic. The check is kept
/// as a guard. Structures failing the necessary conditions in
/// `may_be_provable` are refuted without expansion.
pub(crate) struct Prover {
    memo: HashMap<Structure, Status>,
    budget: usize,
}

impl Prover {
    pub(crate) fn new(budget: usize) -> Prover {
        Prover {
            memo: HashMap::new(),
            budget,
        }
    }

    pub(crate) fn provable(&mut self, s: &Structure) -> Result<bool, Exhausted> {
        match self.memo.get(s) {
            Some(Status::Proved(_)) => return Ok(true),
            Some(_) => return Ok(false),
            None => {}
        }
        if s.is_unit() {
            self.memo.insert(Structure::Unit, Status::Proved(None));
            return Ok(true);
        }
        if self.memo.len() >= self.budget {
            return Err(Exhausted(self.memo.len()));
        }
        if !may_be_provable(s) {
            self.memo.insert(s.clone(), Status::Disproved);
            return Ok(false);
        }
        self.memo.insert(s.clone(), Status::InProgress);
        for (inst, premise) in expand(s) {
            if self.provable(&premise)? {
                self.memo
                    .insert(s.clone(), Status::Proved(Some(Box::new((inst, premise)))));
                return Ok(true);
            }
        }
        self.memo.insert(s.clone(), Status::Disproved);
        Ok(false)
    }

    /// The proof recorded for a structure already known provable.
    pub(crate) fn proof(&self, goal: &Structure) -> Derivation {
        let mut d = Derivation::new(goal.clone());
        let mut cur = goal.clone();
        loop {
            match self.memo.get(&cur) {
                Some(Status::Proved(Some(step))) => {
                    let (inst, premise) = step.as_ref().clone();
                    cur = premise.clone();
                    d.push(inst, premise);
                }
                Some(Status::Proved(None)) => break,
                _ => unreachable!("proof requested for an unproved structure"),
            }
        }
        d.push(RuleInstance::axiom(), Structure::Unit);
        d
    }
}

pub fn prove(goal: &Structure, budget: usize) -> ProveOutcome {
    let mut prover = Prover::new(budget);
    match prover.provable(goal) {
        Ok(true) => ProveOutcome::Proof(prover.proof(goal)),
        Ok(false) => ProveOutcome::Unprovable,
        Err(Exhausted(explored)) => ProveOutcome::BudgetExceeded { explored },
    }
}

/// Proves each goal independently, each with its own memo table.
pub fn prove_all(goals: &[Structure], budget: usize, exec: Exec) -> Vec<ProveOutcome> {
    map_slice(exec, goals, |g| prove(g, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::RuleName;
    use crate::structure::parse;

    fn verdict(t: &str) -> ProveOutcome {
        prove(&parse(t).unwrap(), DEFAULT_BUDGET)
    }

    #[test]
    fn interaction_proof_has_two_steps() {
        let ProveOutcome::Proof(d) = verdict("[a,~a]") else {
            panic!()
        };
        assert_eq!(d.length(), 2);
        assert_eq!(d.steps[0].instance.rule, RuleName::AiDown);
        assert!(d.is_proof());
    }

    #[test]
    fn simple_verdicts() {
        assert_eq!(verdict("(a,~a)"), ProveOutcome::Unprovable);
        assert_eq!(verdict("a"), ProveOutcome::Unprovable);
        assert!(verdict("o").is_proof());
        assert!(verdict("<[a,~a];[b,~b]>").is_proof());
        assert!(verdict("[(a,b),~a,~b]").is_proof());
        assert!(verdict("[<a;b>,<~a;~b>]").is_proof());
        assert_eq!(verdict("[<a;b>,<~b;~a>]"), ProveOutcome::Unprovable);
    }

    #[test]
    fn budget_is_reported() {
        let out = prove(&parse("[<[a,b];c>,<~a;[~b,~c]>]").unwrap(), 3);
        assert!(matches!(out, ProveOutcome::BudgetExceeded { explored: 3 }));
    }

    #[test]
    fn batch_modes_agree() {
        let goals: Vec<_> = ["[a,~a]", "(a,~a)", "[(a,b),~a,~b]"].iter().map(|t| parse(t).unwrap()).collect();
        assert_eq!(
            prove_all(&goals, 1000, Exec::Sequential),
            prove_all(&goals, 1000, Exec::Parallel)
        );
    }
}
