//! A necessary condition for provability used to cut the search.
//!
//! Read top-down, ai↓ creates a dual pair related by par, and s and q↓ only
//! turn copar or seq relations into par without touching any others. So
//! every structure in a proof pairs off its occurrences into dual pairs
//! that are related by par. Structures with no such pairing are
//! unprovable.
//!
//! When atoms are pairwise distinct a second test applies. Deleting dual
//! pairs from a proof leaves a proof of the rest, and deleting keeps the
//! relations among the remaining occurrences. So a provable structure has
//! no two dual pairs arranged like one of the unprovable forbidden
//! patterns.

use std::collections::HashMap;

use crate::structure::{Atom, Structure};
use crate::web::{forbidden_configs, web_of, Relation, Web};

/// True when `s` passes both necessary conditions.
pub(crate) fn may_be_provable(s: &Structure) -> bool {
    let w = web_of(s);
    par_linked(&w) && forbidden_configs(&w).map_or(true, |found| found.is_empty())
}

#[cfg(test)]
pub(crate) fn has_par_linking(s: &Structure) -> bool {
    par_linked(&web_of(s))
}

fn par_linked(w: &Web) -> bool {
    let mut by_name: HashMap<Atom, (Vec<usize>, Vec<usize>)> = HashMap::new();
    for o in &w.occurrences().entries {
        let entry = by_name.entry(o.atom.positive()).or_default();
        if o.atom.is_negated() {
            entry.1.push(o.id);
        } else {
            entry.0.push(o.id);
        }
    }
    by_name
        .values()
        .all(|(pos, neg)| pos.len() == neg.len() && perfect_matching(w, pos, neg))
}

/// Kuhn's augmenting-path matching between `pos` and `neg` along par edges.
fn perfect_matching(w: &Web, pos: &[usize], neg: &[usize]) -> bool {
    let mut owner: Vec<Option<usize>> = vec![None; neg.len()];
    for p in 0..pos.len() {
        let mut seen = vec![false; neg.len()];
        if !augment(w, pos, neg, p, &mut seen, &mut owner) {
            return false;
        }
    }
    true
}

fn augment(
    w: &Web,
    pos: &[usize],
    neg: &[usize],
    p: usize,
    seen: &mut [bool],
    owner: &mut [Option<usize>],
) -> bool {
    for n in 0..neg.len() {
        if seen[n] || w.relation(pos[p], neg[n]) != Relation::Par {
            continue;
        }
        seen[n] = true;
        if owner[n].is_none_or(|q| augment(w, pos, neg, q, seen, owner)) {
            owner[n] = Some(p);
            return true;
        }
    }
    false
}
