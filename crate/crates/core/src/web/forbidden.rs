//! Dual-pair configurations that never occur in webs of provable
//! structures with pairwise distinct atoms.
//!
//! The three patterns are the webs of `[(a,~b),(~a,b)]`, `[<a;~b>,(~a,b)]`
//! and `[<a;~b>,<b;~a>]`, computed with [`web_of`] rather than written out.
//! A sub-web matches when some assignment of the roles `a, ~a, b, ~b` to
//! two dual pairs reproduces the pattern; swapping the pairs and flipping
//! either pair's polarity are all tried.

use std::sync::OnceLock;

use super::{web_of, Relation, Web, WebError};
use crate::structure::{parse, Atom, Structure};

const PATTERN_TEXTS: [&str; 3] = ["[(a,~b),(~a,b)]", "[<a;~b>,(~a,b)]", "[<a;~b>,<b;~a>]"];

pub fn forbidden_pattern_structures() -> Vec<Structure> {
    PATTERN_TEXTS.iter().map(|t| parse(t).unwrap()).collect()
}

/// Relations between the roles `[a, ~a, b, ~b]` in each pattern.
fn patterns() -> &'static [[[Option<Relation>; 4]; 4]; 3] {
    static PATTERNS: OnceLock<[[[Option<Relation>; 4]; 4]; 3]> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        let a = Atom::new("a");
        let b = Atom::new("b");
        let roles = [a.clone(), a.dual(), b.clone(), b.dual()];
        let mut out = [[[None; 4]; 4]; 3];
        for (k, s) in forbidden_pattern_structures().iter().enumerate() {
            let w = web_of(s);
            let ids: Vec<usize> = roles.iter().map(|r| w.occurrences().find(r)[0]).collect();
            for x in 0..4 {
                for y in 0..4 {
                    if x != y {
                        out[k][x][y] = Some(w.relation(ids[x], ids[y]));
                    }
                }
            }
        }
        out
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenWitness {
    /// 1, 2 or 3, in the order listed above.
    pub pattern: usize,
    /// Occurrence ids playing the roles `a, ~a, b, ~b`.
    pub roles: [usize; 4],
}

/// All pattern matches over pairs of dual pairs. The web's atoms must be
/// pairwise distinct.
pub fn forbidden_configs(w: &Web) -> Result<Vec<ForbiddenWitness>, WebError> {
    let occ = w.occurrences();
    if !occ.atoms_distinct() {
        let mut seen = std::collections::HashSet::new();
        let dup = occ.entries.iter().find(|o| !seen.insert(&o.atom)).unwrap();
        return Err(WebError::DuplicateAtoms(dup.atom.to_string()));
    }
    let dual_pairs: Vec<(usize, usize)> = occ
        .entries
        .iter()
        .filter(|o| !o.atom.is_negated())
        .filter_map(|o| occ.find(&o.atom.dual()).first().map(|&n| (o.id, n)))
        .collect();

    let mut out = Vec::new();
    for (i, &p) in dual_pairs.iter().enumerate() {
        for &q in &dual_pairs[i + 1..] {
            for (k, pattern) in patterns().iter().enumerate() {
                if let Some(roles) = assignments(p, q).find(|roles| matches(w, pattern, roles)) {
                    out.push(ForbiddenWitness {
                        pattern: k + 1,
                        roles,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn assignments(p: (usize, usize), q: (usize, usize)) -> impl Iterator<Item = [usize; 4]> {
    let flip = |(x, y): (usize, usize), f: bool| if f { (y, x) } else { (x, y) };
    [(p, q), (q, p)].into_iter().flat_map(move |(first, second)| {
        [false, true].into_iter().flat_map(move |f1| {
            [false, true].into_iter().map(move |f2| {
                let (a, na) = flip(first, f1);
                let (b, nb) = flip(second, f2);
                [a, na, b, nb]
            })
        })
    })
}

fn matches(w: &Web, pattern: &[[Option<Relation>; 4]; 4], roles: &[usize; 4]) -> bool {
    (0..4).all(|x| {
        (0..4)
            .filter(|&y| y != x)
            .all(|y| pattern[x][y] == Some(w.relation(roles[x], roles[y])))
    })
}
