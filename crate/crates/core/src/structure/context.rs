use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::parse::{parse_raw_with_hole, ParseError};
use super::raw::canonicalize;
use super::{Atom, Kind, Structure};

/// A subterm occurrence inside a canonical structure.
///
/// `path` leads from the root to a node. With `group == None` the hole is
/// the node itself; otherwise the hole stands for the listed children of
/// that node taken together (at least two, fewer than all, contiguous for
/// seq). Groupings make substructures such as `[a,b]` inside `[a,b,c]`
/// addressable even though canonical form merges them into the parent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Position {
    pub path: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<usize>>,
}

impl Position {
    pub fn root() -> Self {
        Position {
            path: Vec::new(),
            group: None,
        }
    }

    pub fn node(path: Vec<usize>) -> Self {
        Position { path, group: None }
    }

    pub fn grouping(path: Vec<usize>, group: Vec<usize>) -> Self {
        Position {
            path,
            group: Some(group),
        }
    }

    /// Depth of the surrounding context.
    ///
    /// Canonical forms never nest a node inside a node of the same kind, so
    /// every node crossed on the way to the hole changes kind and counts
    /// once; a grouping adds one more for the node that encloses it.
    pub fn depth(&self) -> usize {
        self.path.len() + usize::from(self.group.is_some())
    }

    /// The structure filling the hole.
    pub fn subterm(&self, root: &Structure) -> Option<Structure> {
        let node = root.get(&self.path)?;
        match &self.group {
            None => Some(node.clone()),
            Some(group) => {
                let kind = node.kind()?;
                let cs = node.children();
                let picked: Option<Vec<_>> = group.iter().map(|&i| cs.get(i).cloned()).collect();
                Some(Structure::node(kind, picked?))
            }
        }
    }

    /// Replaces the hole's content by `replacement`, re-canonicalizing up
    /// to the root.
    pub fn replace(&self, root: &Structure, replacement: Structure) -> Option<Structure> {
        let group = self.group.clone();
        replace_at(root, &self.path, move |node| match group {
            None => Some(replacement),
            Some(group) => {
                let kind = node.kind()?;
                let cs = node.children();
                if group.iter().any(|&i| i >= cs.len()) {
                    return None;
                }
                let first = *group.iter().min()?;
                let mut out = Vec::with_capacity(cs.len());
                for (i, c) in cs.iter().enumerate() {
                    if i == first {
                        out.push(replacement.clone());
                    }
                    if !group.contains(&i) {
                        out.push(c.clone());
                    }
                }
                Some(Structure::node(kind, out))
            }
        })
    }

    /// All positions in `root` whose subterm is `target`.
    ///
    /// For commutative nodes at most one grouping per node is returned: any
    /// two groupings with the same children give the same replacement.
    pub fn locate(root: &Structure, target: &Structure) -> Vec<Position> {
        let mut out = Vec::new();
        if target.is_unit() {
            return out;
        }
        let mut path = Vec::new();
        locate_rec(root, target, &mut path, &mut out);
        out
    }
}

fn locate_rec(node: &Structure, target: &Structure, path: &mut Vec<usize>, out: &mut Vec<Position>) {
    if node == target {
        out.push(Position::node(path.clone()));
    } else if node.kind().is_some() && node.kind() == target.kind() {
        let cs = node.children();
        let want = target.children();
        if want.len() < cs.len() {
            if node.kind().unwrap().is_commutative() {
                if let Some(group) = sub_multiset(cs, want) {
                    out.push(Position::grouping(path.clone(), group));
                }
            } else {
                for start in 0..=cs.len() - want.len() {
                    if &cs[start..start + want.len()] == want {
                        out.push(Position::grouping(path.clone(), (start..start + want.len()).collect()));
                    }
                }
            }
        }
    }
    for (i, c) in node.children().iter().enumerate() {
        path.push(i);
        locate_rec(c, target, path, out);
        path.pop();
    }
}

/// Indices into the sorted `hay` matching every element of the sorted `want`.
fn sub_multiset(hay: &[Structure], want: &[Structure]) -> Option<Vec<usize>> {
    let mut picked = Vec::with_capacity(want.len());
    let mut j = 0;
    for (i, h) in hay.iter().enumerate() {
        if j < want.len() && *h == want[j] {
            picked.push(i);
            j += 1;
        }
    }
    (j == want.len()).then_some(picked)
}

fn replace_at(
    s: &Structure,
    path: &[usize],
    f: impl FnOnce(&Structure) -> Option<Structure>,
) -> Option<Structure> {
    match path.split_first() {
        None => f(s),
        Some((&i, rest)) => {
            let kind = s.kind()?;
            let cs = s.children();
            let new_child = replace_at(cs.get(i)?, rest, f)?;
            let mut out = cs.to_vec();
            out[i] = new_child;
            Some(Structure::node(kind, out))
        }
    }
}

/// A structure together with a designated hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionedContext {
    pub root: Structure,
    pub position: Position,
}

impl PositionedContext {
    pub fn new(root: Structure, position: Position) -> Self {
        PositionedContext { root, position }
    }

    pub fn depth(&self) -> usize {
        self.position.depth()
    }

    pub fn subterm(&self) -> Structure {
        self.position
            .subterm(&self.root)
            .expect("position resolves in its own root")
    }

    /// `S{r}` as a canonical structure.
    pub fn fill(&self, r: Structure) -> Structure {
        self.position
            .replace(&self.root, r)
            .expect("position resolves in its own root")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContextError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("a context needs exactly one hole `{{}}`, found {0}")]
    HoleCount(usize),
}

/// Parses a context written with a single `{}` hole, e.g. `[a,b,{}]`.
///
/// The returned root holds a placeholder leaf at the hole, printed as `{}`.
pub fn parse_context(text: &str) -> Result<PositionedContext, ContextError> {
    let raw = parse_raw_with_hole(text)?;
    let root = canonicalize(&raw);
    let holes: Vec<_> = occurrences(&root)
        .entries
        .into_iter()
        .filter(|o| o.atom.is_hole())
        .collect();
    if holes.len() != 1 {
        return Err(ContextError::HoleCount(holes.len()));
    }
    let path = holes.into_iter().next().unwrap().path;
    Ok(PositionedContext::new(root, Position::node(path)))
}

/// Every subterm occurrence of `s`, including proper groupings of children.
///
/// Single-child groupings are not listed separately: they denote the same
/// context as the child's own node position.
pub fn positions(s: &Structure) -> Vec<(PositionedContext, Structure)> {
    let mut out = Vec::new();
    let mut path = Vec::new();
    positions_rec(s, s, &mut path, &mut out);
    out
}

fn positions_rec(
    root: &Structure,
    node: &Structure,
    path: &mut Vec<usize>,
    out: &mut Vec<(PositionedContext, Structure)>,
) {
    out.push((
        PositionedContext::new(root.clone(), Position::node(path.clone())),
        node.clone(),
    ));
    if let Some(kind) = node.kind() {
        for group in groupings(kind, node.children().len()) {
            let position = Position::grouping(path.clone(), group);
            let sub = position.subterm(root).unwrap();
            out.push((PositionedContext::new(root.clone(), position), sub));
        }
        for (i, c) in node.children().iter().enumerate() {
            path.push(i);
            positions_rec(root, c, path, out);
            path.pop();
        }
    }
}

/// Proper groupings of size at least two: subsets for commutative kinds,
/// contiguous ranges for seq.
pub(crate) fn groupings(kind: Kind, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if kind.is_commutative() {
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size >= 2 && size < n {
                out.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
            }
        }
    } else {
        for len in 2..n {
            for start in 0..=n - len {
                out.push((start..start + len).collect());
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub id: usize,
    pub atom: Atom,
    pub path: Vec<usize>,
}

/// Atom occurrences in left-to-right order of the canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OccurrenceTable {
    pub entries: Vec<Occurrence>,
}

impl OccurrenceTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn atom(&self, id: usize) -> &Atom {
        &self.entries[id].atom
    }

    /// True when no atom (name, index and polarity) occurs twice.
    pub fn atoms_distinct(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.entries.iter().all(|o| seen.insert(&o.atom))
    }

    pub fn find(&self, atom: &Atom) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|o| &o.atom == atom)
            .map(|o| o.id)
            .collect()
    }
}

pub fn occurrences(s: &Structure) -> OccurrenceTable {
    let mut entries = Vec::new();
    let mut path = Vec::new();
    occ_rec(s, &mut path, &mut entries);
    OccurrenceTable { entries }
}

fn occ_rec(s: &Structure, path: &mut Vec<usize>, out: &mut Vec<Occurrence>) {
    match s {
        Structure::Unit => {}
        Structure::Atom(a) => out.push(Occurrence {
            id: out.len(),
            atom: a.clone(),
            path: path.clone(),
        }),
        node => {
            for (i, c) in node.children().iter().enumerate() {
                path.push(i);
                occ_rec(c, path, out);
                path.pop();
            }
        }
    }
}

impl Structure {
    /// Maximum context depth over all atom occurrences.
    pub fn depth(&self) -> usize {
        occurrences(self)
            .entries
            .iter()
            .map(|o| o.path.len())
            .max()
            .unwrap_or(0)
    }
}
