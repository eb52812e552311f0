//! Recovering a structure from a web by merging partitions.
//!
//! Start with one partition per occurrence. Two partitions may merge when
//! every pair across them carries the same relation (same direction for
//! seq) and every outside occurrence relates identically to all their
//! members. The merged partition stands for `[U,V]`, `(U,V)` or `<U;V>`.
//! The candidate is a web exactly when this ends in a single partition.
//!
//! Among eligible merges the one with the smallest combined size is taken,
//! ties broken by the least member ids, so substructures are assembled
//! smallest first.

use super::{Relation, Web, WebError};
use crate::structure::Structure;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    pub structure: Structure,
    /// Partition states, from all singletons to the final merge. Each state
    /// lists partitions ordered by their least occurrence id.
    pub trace: Vec<Vec<Structure>>,
}

impl Reconstruction {
    pub fn merges(&self) -> usize {
        self.trace.len().saturating_sub(1)
    }
}

struct Part {
    members: Vec<usize>,
    structure: Structure,
}

pub fn reconstruct(w: &Web) -> Result<Reconstruction, WebError> {
    if w.is_empty() {
        return Ok(Reconstruction {
            structure: Structure::Unit,
            trace: vec![vec![]],
        });
    }
    let mut parts: Vec<Part> = (0..w.len())
        .map(|i| Part {
            members: vec![i],
            structure: Structure::Atom(w.atom(i).clone()),
        })
        .collect();
    let snapshot = |parts: &[Part]| parts.iter().map(|p| p.structure.clone()).collect::<Vec<_>>();
    let mut trace = vec![snapshot(&parts)];

    while parts.len() > 1 {
        let mut best: Option<(usize, usize, usize, Relation)> = None;
        for x in 0..parts.len() {
            for y in x + 1..parts.len() {
                let size = parts[x].members.len() + parts[y].members.len();
                if best.is_some_and(|(_, _, s, _)| s <= size) {
                    continue;
                }
                if let Some(rel) = mergeable(w, &parts, x, y) {
                    best = Some((x, y, size, rel));
                }
            }
        }
        let Some((x, y, _, rel)) = best else {
            return Err(WebError::NotAWeb(parts.len()));
        };
        let right = parts.remove(y);
        let left = &mut parts[x];
        let (u, v) = (left.structure.clone(), right.structure);
        left.structure = match rel {
            Relation::Par => Structure::par([u, v]),
            Relation::Copar => Structure::copar([u, v]),
            Relation::Seq => Structure::seq([u, v]),
            Relation::CoSeq => Structure::seq([v, u]),
        };
        left.members.extend(right.members);
        left.members.sort_unstable();
        trace.push(snapshot(&parts));
    }
    Ok(Reconstruction {
        structure: parts.pop().unwrap().structure,
        trace,
    })
}

/// The uniform relation from partition `x` to partition `y`, if they can
/// merge.
fn mergeable(w: &Web, parts: &[Part], x: usize, y: usize) -> Option<Relation> {
    let (mu, nu) = (&parts[x].members, &parts[y].members);
    let rel = w.relation(mu[0], nu[0]);
    if !mu.iter().all(|&a| nu.iter().all(|&b| w.relation(a, b) == rel)) {
        return None;
    }
    let probe = mu[0];
    for (k, other) in parts.iter().enumerate() {
        if k == x || k == y {
            continue;
        }
        for &c in &other.members {
            let r = w.relation(probe, c);
            if !mu.iter().chain(nu).all(|&a| w.relation(a, c) == r) {
                return None;
            }
        }
    }
    Some(rel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{parse, Atom};
    use crate::web::web_of;

    #[test]
    fn single_atom() {
        let w = web_of(&parse("a").unwrap());
        let r = reconstruct(&w).unwrap();
        assert_eq!(r.structure, parse("a").unwrap());
        assert_eq!(r.merges(), 0);
    }

    #[test]
    fn six_occurrence_example_trace() {
        let names = ["a", "b", "c", "d", "e", "f"];
        let atoms: Vec<_> = names.iter().map(|n| Atom::new(n)).collect();
        let w = Web::from_fn(atoms, |i, j| match (names[i], names[j]) {
            ("a", "c") | ("b", "c") => Relation::Copar,
            ("d", "e") | ("d", "f") => Relation::Seq,
            _ => Relation::Par,
        });
        let r = reconstruct(&w).unwrap();
        assert_eq!(r.structure, parse("[([a,b],c),<d;[e,f]>]").unwrap());
        let expected: Vec<Vec<Structure>> = [
            &["a", "b", "c", "d", "e", "f"][..],
            &["[a,b]", "c", "d", "e", "f"],
            &["[a,b]", "c", "d", "[e,f]"],
            &["([a,b],c)", "d", "[e,f]"],
            &["([a,b],c)", "<d;[e,f]>"],
            &["[([a,b],c),<d;[e,f]>]"],
        ]
        .iter()
        .map(|state| state.iter().map(|t| parse(t).unwrap()).collect())
        .collect();
        assert_eq!(r.trace, expected);
    }

    #[test]
    fn triangle_candidate_is_rejected() {
        let atoms = vec![Atom::new("a"), Atom::new("b"), Atom::new("c")];
        let w = Web::from_fn(atoms, |i, j| match (i, j) {
            (0, 1) => Relation::Par,
            (1, 2) => Relation::Copar,
            _ => Relation::Seq,
        });
        assert_eq!(reconstruct(&w), Err(WebError::NotAWeb(3)));
    }

    #[test]
    fn round_trip_with_repeated_atoms() {
        let s = parse("<a;[a,(b,<a;b>)]>").unwrap();
        let r = reconstruct(&web_of(&s)).unwrap();
        assert_eq!(r.structure, s);
    }
}
