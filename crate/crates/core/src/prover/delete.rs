use thiserror::Error;

use super::{Derivation, RuleInstance, RuleName};
use crate::structure::{Atom, Position, Structure};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DeleteError {
    #[error("atom {0} does not occur in the conclusion")]
    AtomNotFound(String),
    #[error("atom {0} occurs more than once in the conclusion")]
    AmbiguousOccurrence(String),
    #[error("step {0}: rewritten instance no longer applies")]
    Broken(usize),
}

/// Replaces both occurrences of `a` and its dual by the unit throughout a
/// derivation.
///
/// Every structure is re-canonicalized, steps that become identities are
/// dropped and the remaining positions are recomputed. The axiom step is
/// kept, so deleting the only pair of `[a,~a]` leaves the one-step proof
/// of the unit.
pub fn delete_atom_pair(d: &Derivation, a: &Atom) -> Result<Derivation, DeleteError> {
    let dual = a.dual();
    for x in [a, &dual] {
        match d.conclusion.atoms().iter().filter(|y| **y == x).count() {
            0 => return Err(DeleteError::AtomNotFound(x.to_string())),
            1 => {}
            _ => return Err(DeleteError::AmbiguousOccurrence(x.to_string())),
        }
    }
    let erase = |s: &Structure| {
        s.map_atoms(&|y: &Atom| {
            if *y == *a || *y == dual {
                Structure::Unit
            } else {
                Structure::Atom(y.clone())
            }
        })
    };

    let mut out = Derivation::new(erase(&d.conclusion));
    for (i, step) in d.steps.iter().enumerate() {
        let conclusion = out.top().clone();
        let premise = erase(&step.premise);
        let inst = &step.instance;
        if inst.rule == RuleName::Axiom {
            out.push(inst.clone(), premise);
            continue;
        }
        if premise == conclusion {
            continue;
        }
        let redex = erase(&inst.redex);
        let contractum = erase(&inst.contractum);
        let (host, target, replacement, other) = if inst.rule == RuleName::AiUp {
            (&premise, &contractum, &redex, &conclusion)
        } else {
            (&conclusion, &redex, &contractum, &premise)
        };
        let position = Position::locate(host, target)
            .into_iter()
            .find(|p| p.replace(host, replacement.clone()).as_ref() == Some(other))
            .ok_or(DeleteError::Broken(i))?;
        let witnesses = inst.witnesses.iter().map(|(k, w)| (*k, erase(w))).collect();
        out.push(
            RuleInstance {
                rule: inst.rule,
                position,
                redex,
                contractum,
                witnesses,
            },
            premise,
        );
    }
    Ok(out)
}
