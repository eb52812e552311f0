//! BV structures in canonical normal form.
//!
//! A [`Structure`] is always kept canonical: units only at the top, no node
//! nested directly inside a node of the same kind, par and copar children
//! sorted, and negation pushed down to atoms. The smart constructors
//! [`Structure::par`], [`Structure::copar`] and [`Structure::seq`] take
//! canonical children and restore these invariants, so two structures are
//! equal modulo the equational theory exactly when they are `==`.

mod context;
mod parse;
mod raw;

use std::fmt;
use std::sync::Arc;

pub use context::{
    occurrences, parse_context, positions, ContextError, Occurrence, OccurrenceTable, Position,
    PositionedContext,
};
pub use parse::{parse, ParseError};
pub use raw::{canonicalize, RawStructure};

/// An atom, possibly negated and possibly carrying an index such as `a_0.1`.
///
/// Field order matters: the derived ordering compares by name, then index,
/// then polarity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    name: Arc<str>,
    index: Arc<[u32]>,
    negated: bool,
}

impl Atom {
    pub fn new(name: &str) -> Self {
        Self::with_index(name, &[])
    }

    pub fn with_index(name: &str, index: &[u32]) -> Self {
        Atom {
            name: Arc::from(name),
            index: Arc::from(index),
            negated: false,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn index(&self) -> &[u32] {
        &self.index
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    /// The atom with the polarity flipped.
    pub fn dual(&self) -> Atom {
        Atom {
            negated: !self.negated,
            ..self.clone()
        }
    }

    /// The positive atom with the same name and index.
    pub fn positive(&self) -> Atom {
        Atom {
            negated: false,
            ..self.clone()
        }
    }

    pub fn is_dual_of(&self, other: &Atom) -> bool {
        self.name == other.name && self.index == other.index && self.negated != other.negated
    }

    /// Placeholder atom marking the hole of a context; the parser never
    /// produces it from an identifier.
    pub(crate) fn hole() -> Atom {
        Atom::new("{}")
    }

    pub(crate) fn is_hole(&self) -> bool {
        &*self.name == "{}"
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("~")?;
        }
        f.write_str(&self.name)?;
        if !self.index.is_empty() {
            f.write_str("_")?;
            for (i, n) in self.index.iter().enumerate() {
                if i > 0 {
                    f.write_str(".")?;
                }
                write!(f, "{n}")?;
            }
        }
        Ok(())
    }
}

/// The three structural relations a composite node can stand for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Par,
    Copar,
    Seq,
}

impl Kind {
    pub fn is_commutative(self) -> bool {
        !matches!(self, Kind::Seq)
    }

    /// The kind a node turns into under negation.
    pub fn dual(self) -> Kind {
        match self {
            Kind::Par => Kind::Copar,
            Kind::Copar => Kind::Par,
            Kind::Seq => Kind::Seq,
        }
    }
}

/// A structure in canonical form.
///
/// The variant order is the kind rank used for sorting commutative children
/// (unit, atom, par, copar, seq); composite nodes compare lexicographically
/// by their child lists. Build composite values through the smart
/// constructors rather than the variants.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Structure {
    Unit,
    Atom(Atom),
    Par(Vec<Structure>),
    Copar(Vec<Structure>),
    Seq(Vec<Structure>),
}

impl Structure {
    pub fn atom(atom: Atom) -> Self {
        Structure::Atom(atom)
    }

    pub fn par(children: impl IntoIterator<Item = Structure>) -> Self {
        Self::node(Kind::Par, children)
    }

    pub fn copar(children: impl IntoIterator<Item = Structure>) -> Self {
        Self::node(Kind::Copar, children)
    }

    pub fn seq(children: impl IntoIterator<Item = Structure>) -> Self {
        Self::node(Kind::Seq, children)
    }

    /// Builds a node of `kind` from canonical children: same-kind children
    /// are spliced in, units dropped, commutative children sorted and
    /// singletons collapsed.
    pub fn node(kind: Kind, children: impl IntoIterator<Item = Structure>) -> Self {
        let mut flat = Vec::new();
        for child in children {
            match child {
                Structure::Unit => {}
                c if c.kind() == Some(kind) => {
                    if let Some(grand) = c.into_children() {
                        flat.extend(grand);
                    }
                }
                c => flat.push(c),
            }
        }
        if kind.is_commutative() {
            flat.sort();
        }
        match flat.len() {
            0 => Structure::Unit,
            1 => flat.pop().unwrap(),
            _ => match kind {
                Kind::Par => Structure::Par(flat),
                Kind::Copar => Structure::Copar(flat),
                Kind::Seq => Structure::Seq(flat),
            },
        }
    }

    pub fn kind(&self) -> Option<Kind> {
        match self {
            Structure::Par(_) => Some(Kind::Par),
            Structure::Copar(_) => Some(Kind::Copar),
            Structure::Seq(_) => Some(Kind::Seq),
            _ => None,
        }
    }

    pub fn children(&self) -> &[Structure] {
        match self {
            Structure::Par(cs) | Structure::Copar(cs) | Structure::Seq(cs) => cs,
            _ => &[],
        }
    }

    fn into_children(self) -> Option<Vec<Structure>> {
        match self {
            Structure::Par(cs) | Structure::Copar(cs) | Structure::Seq(cs) => Some(cs),
            _ => None,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Structure::Unit)
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            Structure::Atom(a) => Some(a),
            _ => None,
        }
    }

    /// De Morgan dual. Seq order is preserved.
    pub fn negate(&self) -> Structure {
        match self {
            Structure::Unit => Structure::Unit,
            Structure::Atom(a) => Structure::Atom(a.dual()),
            node => {
                let kind = node.kind().unwrap().dual();
                Structure::node(kind, node.children().iter().map(Structure::negate))
            }
        }
    }

    /// Atom leaves in left-to-right order.
    pub fn atoms(&self) -> Vec<&Atom> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a Atom>) {
        match self {
            Structure::Unit => {}
            Structure::Atom(a) => out.push(a),
            node => node.children().iter().for_each(|c| c.collect_atoms(out)),
        }
    }

    pub fn atom_count(&self) -> usize {
        match self {
            Structure::Unit => 0,
            Structure::Atom(_) => 1,
            node => node.children().iter().map(Structure::atom_count).sum(),
        }
    }

    /// Subterm at a child-index path.
    pub fn get(&self, path: &[usize]) -> Option<&Structure> {
        path.iter().try_fold(self, |s, &i| s.children().get(i))
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        self.check_canonical(true)
    }

    fn check_canonical(&self, top: bool) -> bool {
        match self {
            Structure::Unit => top,
            Structure::Atom(_) => true,
            node => {
                let kind = node.kind();
                let cs = node.children();
                cs.len() >= 2
                    && cs.iter().all(|c| c.kind() != kind && c.check_canonical(false))
                    && (!kind.unwrap().is_commutative() || cs.windows(2).all(|w| w[0] <= w[1]))
            }
        }
    }

    /// Replaces every atom leaf by `f(atom)` and re-canonicalizes.
    pub fn map_atoms(&self, f: &impl Fn(&Atom) -> Structure) -> Structure {
        match self {
            Structure::Unit => Structure::Unit,
            Structure::Atom(a) => f(a),
            node => Structure::node(
                node.kind().unwrap(),
                node.children().iter().map(|c| c.map_atoms(f)),
            ),
        }
    }

    /// All `(a, b)` with `[a, b] = self`.
    pub fn par_splits(&self) -> Vec<(Structure, Structure)> {
        self.commutative_splits(Kind::Par)
    }

    /// All `(a, b)` with `(a, b) = self`.
    pub fn copar_splits(&self) -> Vec<(Structure, Structure)> {
        self.commutative_splits(Kind::Copar)
    }

    fn commutative_splits(&self, kind: Kind) -> Vec<(Structure, Structure)> {
        if self.kind() != Some(kind) {
            return trivial_splits(self);
        }
        let cs = self.children();
        let n = cs.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1u64 << n) {
            let (mut left, mut right) = (Vec::new(), Vec::new());
            for (i, c) in cs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    left.push(c.clone());
                } else {
                    right.push(c.clone());
                }
            }
            out.push((Structure::node(kind, left), Structure::node(kind, right)));
        }
        out
    }

    /// All `(a, b)` with `<a; b> = self`, including the unit paddings.
    pub fn seq_splits(&self) -> Vec<(Structure, Structure)> {
        match self {
            Structure::Seq(cs) => (0..=cs.len())
                .map(|k| {
                    (
                        Structure::seq(cs[..k].iter().cloned()),
                        Structure::seq(cs[k..].iter().cloned()),
                    )
                })
                .collect(),
            other => trivial_splits(other),
        }
    }
}

fn trivial_splits(s: &Structure) -> Vec<(Structure, Structure)> {
    if s.is_unit() {
        vec![(Structure::Unit, Structure::Unit)]
    } else {
        vec![(Structure::Unit, s.clone()), (s.clone(), Structure::Unit)]
    }
}

impl From<Atom> for Structure {
    fn from(a: Atom) -> Self {
        Structure::Atom(a)
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, sep, close) = match self {
            Structure::Unit => return f.write_str("o"),
            Structure::Atom(a) => return write!(f, "{a}"),
            Structure::Par(_) => ("[", ",", "]"),
            Structure::Copar(_) => ("(", ",", ")"),
            Structure::Seq(_) => ("<", ";", ">"),
        };
        f.write_str(open)?;
        for (i, c) in self.children().iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(close)
    }
}

impl std::str::FromStr for Structure {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Structure {
        parse(text).unwrap()
    }

    #[test]
    fn negation_block() {
        assert_eq!(Structure::Unit.negate(), Structure::Unit);
        assert_eq!(s("<a;b>").negate(), s("<~a;~b>"));
        assert_eq!(s("(a,b)").negate(), s("[~a,~b]"));
        assert_eq!(s("[a,(b,c)]").negate(), s("(~a,[~b,~c])"));
    }

    #[test]
    fn node_flattens_and_sorts() {
        let built = Structure::par([s("b"), Structure::par([s("c"), s("a")]), Structure::Unit]);
        assert_eq!(built.to_string(), "[a,b,c]");
        assert!(built.is_canonical());
        assert_eq!(Structure::seq([Structure::Unit, s("a")]), s("a"));
    }

    #[test]
    fn kind_rank_orders_children() {
        assert_eq!(s("[<x;y>,(p,q),a]").to_string(), "[a,(p,q),<x;y>]");
    }

    #[test]
    fn splits_cover_paddings() {
        let seq = s("<a;b>");
        let splits = seq.seq_splits();
        assert_eq!(splits.len(), 3);
        assert!(splits.contains(&(Structure::Unit, seq.clone())));
        assert_eq!(s("a").par_splits().len(), 2);
        assert_eq!(s("[a,b,c]").par_splits().len(), 8);
    }

    #[test]
    fn atom_display_with_index() {
        let a = Atom::with_index("a", &[0, 1]).dual();
        assert_eq!(a.to_string(), "~a_0.1");
        assert!(a.is_dual_of(&Atom::with_index("a", &[0, 1])));
    }
}
