//! Relation webs.
//!
//! A web assigns to every unordered pair of atom occurrences exactly one of
//! seq (with a direction), par or copar. Co-seq is never stored: it is the
//! seq relation read backwards, so the inverse law holds by construction.

mod forbidden;
mod io;
mod reconstruct;
mod verify;

use std::collections::HashMap;
use std::ops::Deref;

use thiserror::Error;

use crate::structure::{occurrences, Atom, Occurrence, OccurrenceTable, Structure};

pub use forbidden::{forbidden_configs, forbidden_pattern_structures, ForbiddenWitness};
pub use io::{web_from_json, web_to_dot, web_to_json, OccurrenceJson, RelationJson, WebJson};
pub use reconstruct::{reconstruct, Reconstruction};
pub use verify::{
    check_inverse_square, check_inverse_square_with, verify_web_properties,
    verify_web_properties_with, Property, PropertyReport, Violation,
};

/// Relation of one occurrence to another, as read from the first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// First occurrence comes before the second.
    Seq,
    /// First occurrence comes after the second.
    CoSeq,
    Par,
    Copar,
}

impl Relation {
    pub fn inverse(self) -> Relation {
        match self {
            Relation::Seq => Relation::CoSeq,
            Relation::CoSeq => Relation::Seq,
            other => other,
        }
    }

    /// Seq and co-seq fall in the same class.
    pub fn class(self) -> RelationClass {
        match self {
            Relation::Seq | Relation::CoSeq => RelationClass::Seq,
            Relation::Par => RelationClass::Par,
            Relation::Copar => RelationClass::Copar,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Seq => "seq",
            Relation::CoSeq => "coseq",
            Relation::Par => "par",
            Relation::Copar => "copar",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationClass {
    Seq,
    Par,
    Copar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Link {
    /// Lower id before higher id when `forward`.
    Seq { forward: bool },
    Par,
    Copar,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WebError {
    #[error("atoms are not pairwise distinct (atom {0} repeats)")]
    DuplicateAtoms(String),
    #[error("bad occurrence matching: {0}")]
    BadMatching(String),
    #[error("not a relation web: no merge applies with {0} partitions left")]
    NotAWeb(usize),
    #[error("malformed web: {0}")]
    Malformed(String),
}

/// A web candidate: occurrences plus a total pairwise relation assignment.
///
/// Irreflexivity, totality, the seq/co-seq inverse law and symmetry of par
/// and copar hold by construction; the remaining characterization
/// properties are checked by [`verify_web_properties`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Web {
    occurrences: OccurrenceTable,
    links: Vec<Link>,
}

/// Web of an actual structure, as computed by [`web_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWeb(Web);

impl Deref for RelationWeb {
    type Target = Web;

    fn deref(&self) -> &Web {
        &self.0
    }
}

impl RelationWeb {
    pub fn into_inner(self) -> Web {
        self.0
    }
}

fn slot(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

impl Web {
    /// Builds a candidate from atoms (ids are their indices) and the
    /// relation of `i` to `j` for every `i < j`.
    pub fn from_fn(atoms: Vec<Atom>, mut rel: impl FnMut(usize, usize) -> Relation) -> Web {
        let n = atoms.len();
        let occurrences = OccurrenceTable {
            entries: atoms
                .into_iter()
                .enumerate()
                .map(|(id, atom)| Occurrence {
                    id,
                    atom,
                    path: Vec::new(),
                })
                .collect(),
        };
        let mut links = vec![Link::Par; n * n.saturating_sub(1) / 2];
        for j in 0..n {
            for i in 0..j {
                links[slot(i, j)] = match rel(i, j) {
                    Relation::Seq => Link::Seq { forward: true },
                    Relation::CoSeq => Link::Seq { forward: false },
                    Relation::Par => Link::Par,
                    Relation::Copar => Link::Copar,
                };
            }
        }
        Web { occurrences, links }
    }

    pub fn len(&self) -> usize {
        self.occurrences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.occurrences.is_empty()
    }

    pub fn occurrences(&self) -> &OccurrenceTable {
        &self.occurrences
    }

    pub fn atom(&self, id: usize) -> &Atom {
        self.occurrences.atom(id)
    }

    /// Relation of `i` to `j`; `i != j`.
    pub fn relation(&self, i: usize, j: usize) -> Relation {
        assert_ne!(i, j, "webs have no self-relations");
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        let r = match self.links[slot(lo, hi)] {
            Link::Seq { forward: true } => Relation::Seq,
            Link::Seq { forward: false } => Relation::CoSeq,
            Link::Par => Relation::Par,
            Link::Copar => Relation::Copar,
        };
        if i < j {
            r
        } else {
            r.inverse()
        }
    }

    /// Every unordered pair once, as `(i, j, relation of i to j)` with `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, Relation)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j, self.relation(i, j))))
    }

    /// Sub-web on the given occurrence ids, renumbered in the given order.
    pub fn restrict(&self, ids: &[usize]) -> Web {
        let atoms = ids.iter().map(|&i| self.atom(i).clone()).collect();
        Web::from_fn(atoms, |a, b| self.relation(ids[a], ids[b]))
    }

    fn label_index(&self) -> Result<HashMap<&Atom, usize>, WebError> {
        let mut index = HashMap::new();
        for o in &self.occurrences.entries {
            if index.insert(&o.atom, o.id).is_some() {
                return Err(WebError::DuplicateAtoms(o.atom.to_string()));
            }
        }
        Ok(index)
    }

    /// Equality under the bijection matching equal atom labels. Defined only
    /// for webs whose atoms are pairwise distinct.
    pub fn equal_by_label(&self, other: &Web) -> Result<bool, WebError> {
        let mine = self.label_index()?;
        let theirs = other.label_index()?;
        if mine.len() != theirs.len() {
            return Ok(false);
        }
        let mut map = vec![0; self.len()];
        for (atom, &i) in &mine {
            match theirs.get(atom) {
                Some(&j) => map[i] = j,
                None => return Ok(false),
            }
        }
        Ok(self
            .pairs()
            .all(|(i, j, r)| other.relation(map[i], map[j]) == r))
    }
}

/// The relation web of a canonical structure; the unit has the empty web.
pub fn web_of(s: &Structure) -> RelationWeb {
    let occ = occurrences(s);
    let n = occ.len();
    let mut links = vec![Link::Par; n * n.saturating_sub(1) / 2];
    let mut next = 0;
    assign(s, &mut next, &mut links);
    RelationWeb(Web {
        occurrences: occ,
        links,
    })
}

/// Assigns relations between the children of every node; returns the id
/// range covered by `s`.
fn assign(s: &Structure, next: &mut usize, links: &mut [Link]) -> std::ops::Range<usize> {
    let start = *next;
    match s {
        Structure::Unit => {}
        Structure::Atom(_) => *next += 1,
        node => {
            let link = match node {
                Structure::Par(_) => Link::Par,
                Structure::Copar(_) => Link::Copar,
                _ => Link::Seq { forward: true },
            };
            let ranges: Vec<_> = node.children().iter().map(|c| assign(c, next, links)).collect();
            for (k, left) in ranges.iter().enumerate() {
                for right in &ranges[k + 1..] {
                    for j in right.clone() {
                        for i in left.clone() {
                            links[slot(i, j)] = link;
                        }
                    }
                }
            }
        }
    }
    start..*next
}

/// A pair whose relation differs between two webs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationChange {
    /// Occurrence ids in the first web.
    pub a: usize,
    pub b: usize,
    pub before: Relation,
    pub after: Relation,
}

/// Pairs of matched occurrences whose relation is not preserved.
///
/// `matching` lists `(id in first, id in second)` and must be injective in
/// both components.
pub fn relation_diff(
    first: &Web,
    second: &Web,
    matching: &[(usize, usize)],
) -> Result<Vec<RelationChange>, WebError> {
    let mut seen_l = vec![false; first.len()];
    let mut seen_r = vec![false; second.len()];
    for &(l, r) in matching {
        if l >= first.len() || r >= second.len() {
            return Err(WebError::BadMatching(format!("({l}, {r}) out of range")));
        }
        if std::mem::replace(&mut seen_l[l], true) || std::mem::replace(&mut seen_r[r], true) {
            return Err(WebError::BadMatching(format!("({l}, {r}) not injective")));
        }
    }
    let mut sorted = matching.to_vec();
    sorted.sort();
    let mut out = Vec::new();
    for (x, &(l1, r1)) in sorted.iter().enumerate() {
        for &(l2, r2) in &sorted[x + 1..] {
            let before = first.relation(l1, l2);
            let after = second.relation(r1, r2);
            if before != after {
                out.push(RelationChange {
                    a: l1,
                    b: l2,
                    before,
                    after,
                });
            }
        }
    }
    Ok(out)
}

/// Matches occurrences with equal atom labels. Both webs must have pairwise
/// distinct atoms; atoms present in only one web stay unmatched.
pub fn label_matching(first: &Web, second: &Web) -> Result<Vec<(usize, usize)>, WebError> {
    let theirs = second.label_index()?;
    first.label_index()?;
    Ok(first
        .occurrences
        .entries
        .iter()
        .filter_map(|o| theirs.get(&o.atom).map(|&j| (o.id, j)))
        .collect())
}
