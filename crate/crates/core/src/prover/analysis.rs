use super::search::{Exhausted, Prover};
use super::{expand, ProveOutcome, RuleInstance};
use crate::exec::{map_slice, Exec};
use crate::structure::Structure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstRedex {
    pub instance: RuleInstance,
    pub premise: Structure,
    pub redex_depth: usize,
    pub premise_provable: bool,
}

pub fn first_redex_analysis(goal: &Structure, budget: usize) -> Result<Vec<FirstRedex>, ProveOutcome> {
    first_redex_analysis_with(goal, budget, Exec::default())
}

/// Decides every one-step premise of `goal`. Premises are independent and
/// searched in parallel under `exec`, each with a private memo table
/// bounded by `budget`. Fails with [`ProveOutcome::BudgetExceeded`] if
/// any premise exhausts it.
pub fn first_redex_analysis_with(
    goal: &Structure,
    budget: usize,
    exec: Exec,
) -> Result<Vec<FirstRedex>, ProveOutcome> {
    let candidates = expand(goal);
    let verdicts = map_slice(exec, &candidates, |(_, premise)| Prover::new(budget).provable(premise));
    candidates
        .into_iter()
        .zip(verdicts)
        .map(|((instance, premise), verdict)| match verdict {
            Ok(premise_provable) => Ok(FirstRedex {
                redex_depth: instance.redex_depth(),
                instance,
                premise,
                premise_provable,
            }),
            Err(Exhausted(explored)) => Err(ProveOutcome::BudgetExceeded { explored }),
        })
        .collect()
}

/// Least redex depth among provable first steps.
pub fn min_first_redex_depth(entries: &[FirstRedex]) -> Option<usize> {
    entries
        .iter()
        .filter(|e| e.premise_provable)
        .map(|e| e.redex_depth)
        .min()
}

/// The least redex depth of a provable first step, deciding candidates
/// shallowest first and stopping at the first provable one. Each premise
/// gets its own memo bounded by `budget`. A premise that exhausts it makes
/// the answer unknown only if no premise at the same depth is provable.
pub fn least_provable_first_redex_depth(goal: &Structure, budget: usize) -> Result<Option<usize>, ProveOutcome> {
    let mut candidates: Vec<(usize, Structure)> = expand(goal)
        .into_iter()
        .map(|(instance, premise)| (instance.redex_depth(), premise))
        .collect();
    candidates.sort_by_key(|(depth, _)| *depth);
    let mut exhausted: Option<(usize, usize)> = None;
    for (depth, premise) in candidates {
        if let Some((level, explored)) = exhausted {
            if level < depth {
                return Err(ProveOutcome::BudgetExceeded { explored });
            }
        }
        match Prover::new(budget).provable(&premise) {
            Ok(true) => return Ok(Some(depth)),
            Ok(false) => {}
            Err(Exhausted(explored)) => exhausted = exhausted.or(Some((depth, explored))),
        }
    }
    match exhausted {
        Some((_, explored)) => Err(ProveOutcome::BudgetExceeded { explored }),
        None => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::parse;

    #[test]
    fn interaction_has_one_provable_entry() {
        // besides ai↓ there are the two seq orderings
        let got = first_redex_analysis(&parse("[a,~a]").unwrap(), 100).unwrap();
        assert_eq!(got.len(), 3);
        let provable: Vec<_> = got.iter().filter(|e| e.premise_provable).collect();
        assert_eq!(provable.len(), 1);
        assert_eq!(provable[0].redex_depth, 0);
        assert_eq!(min_first_redex_depth(&got), Some(0));
    }

    #[test]
    fn least_depth_agrees_with_full_analysis() {
        for t in ["[<[a,b];c>,<~a;[~b,~c]>]", "[(a,b),~a,~b]", "[a,~a]", "(a,~a)", "[<a;b>,<~a;~b>]"] {
            let goal = parse(t).unwrap();
            let full = min_first_redex_depth(&first_redex_analysis(&goal, 100_000).unwrap());
            assert_eq!(least_provable_first_redex_depth(&goal, 100_000), Ok(full), "{t}");
        }
    }

    #[test]
    fn modes_agree() {
        let goal = parse("[(a,b),~a,~b]").unwrap();
        assert_eq!(
            first_redex_analysis_with(&goal, 1000, Exec::Sequential),
            first_redex_analysis_with(&goal, 1000, Exec::Parallel)
        );
    }
}
