use super::{Atom, Kind, Structure};

/// An arbitrary structure expression, not yet taken modulo the equations.
///
/// This is what the parser produces; [`canonicalize`] maps it to the
/// canonical representative of its equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawStructure {
    Unit,
    Atom(Atom),
    Par(Vec<RawStructure>),
    Copar(Vec<RawStructure>),
    Seq(Vec<RawStructure>),
    Neg(Box<RawStructure>),
}

impl RawStructure {
    pub fn node(kind: Kind, children: Vec<RawStructure>) -> Self {
        match kind {
            Kind::Par => RawStructure::Par(children),
            Kind::Copar => RawStructure::Copar(children),
            Kind::Seq => RawStructure::Seq(children),
        }
    }

    pub fn negation(inner: RawStructure) -> Self {
        RawStructure::Neg(Box::new(inner))
    }

    pub fn atom_count(&self) -> usize {
        match self {
            RawStructure::Unit => 0,
            RawStructure::Atom(_) => 1,
            RawStructure::Neg(inner) => inner.atom_count(),
            RawStructure::Par(cs) | RawStructure::Copar(cs) | RawStructure::Seq(cs) => {
                cs.iter().map(RawStructure::atom_count).sum()
            }
        }
    }
}

impl From<&Structure> for RawStructure {
    fn from(s: &Structure) -> Self {
        match s {
            Structure::Unit => RawStructure::Unit,
            Structure::Atom(a) => RawStructure::Atom(a.clone()),
            node => RawStructure::node(
                node.kind().unwrap(),
                node.children().iter().map(RawStructure::from).collect(),
            ),
        }
    }
}

/// Canonical representative of the equivalence class of `raw`.
pub fn canonicalize(raw: &RawStructure) -> Structure {
    canon(raw, false)
}

fn canon(raw: &RawStructure, negated: bool) -> Structure {
    match raw {
        RawStructure::Unit => Structure::Unit,
        RawStructure::Atom(a) if negated && !a.is_hole() => Structure::Atom(a.dual()),
        RawStructure::Atom(a) => Structure::Atom(a.clone()),
        RawStructure::Neg(inner) => canon(inner, !negated),
        RawStructure::Par(cs) => combine(Kind::Par, cs, negated),
        RawStructure::Copar(cs) => combine(Kind::Copar, cs, negated),
        RawStructure::Seq(cs) => combine(Kind::Seq, cs, negated),
    }
}

fn combine(kind: Kind, cs: &[RawStructure], negated: bool) -> Structure {
    let kind = if negated { kind.dual() } else { kind };
    Structure::node(kind, cs.iter().map(|c| canon(c, negated)))
}
