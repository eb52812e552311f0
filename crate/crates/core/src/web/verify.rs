//! Exhaustive checks of the triangle and square properties.

use std::fmt;

use super::{Relation, RelationClass, Web};
use crate::exec::{flat_map_range, Exec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    S4Transitivity,
    S6Triangular,
    S7Seq,
    S7Par,
    S7Copar,
    InverseSquarePar,
    InverseSquareCopar,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::S4Transitivity => "S4-transitivity",
            Property::S6Triangular => "S6-triangular",
            Property::S7Seq => "S7-seq",
            Property::S7Par => "S7-par",
            Property::S7Copar => "S7-copar",
            Property::InverseSquarePar => "inverse-square-par",
            Property::InverseSquareCopar => "inverse-square-copar",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub property: Property,
    /// Occurrence ids in the order the property names them (a, b, c[, d]).
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl PropertyReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        PropertyReport {
            passed: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, property: Property) -> bool {
        self.violations.iter().any(|v| v.property == property)
    }
}

pub fn verify_web_properties(w: &Web) -> PropertyReport {
    verify_web_properties_with(w, Exec::default())
}

/// Seq transitivity and the triangular property over all triples, then the
/// square property in its three forms over all ordered quadruples.
pub fn verify_web_properties_with(w: &Web, exec: Exec) -> PropertyReport {
    let n = w.len();
    let violations = flat_map_range(exec, n, |a| {
        let mut out = Vec::new();
        for b in (0..n).filter(|&b| b != a) {
            for c in (0..n).filter(|&c| c != a && c != b) {
                if w.relation(a, b) == Relation::Seq
                    && w.relation(b, c) == Relation::Seq
                    && w.relation(a, c) != Relation::Seq
                {
                    out.push(Violation {
                        property: Property::S4Transitivity,
                        witness: vec![a, b, c],
                    });
                }
                if a < b && b < c {
                    let (x, y, z) = (
                        w.relation(a, b).class(),
                        w.relation(b, c).class(),
                        w.relation(c, a).class(),
                    );
                    if x != y && y != z && z != x {
                        out.push(Violation {
                            property: Property::S6Triangular,
                            witness: vec![a, b, c],
                        });
                    }
                }
                for d in (0..n).filter(|&d| d != a && d != b && d != c) {
                    square(w, [a, b, c, d], &mut out);
                }
            }
        }
        out
    });
    PropertyReport::from_violations(violations)
}

fn square(w: &Web, [a, b, c, d]: [usize; 4], out: &mut Vec<Violation>) {
    let seq = Relation::Seq;
    if w.relation(a, b) == seq && w.relation(a, d) == seq && w.relation(c, d) == seq {
        let linked = |x, y| w.relation(x, y).class() == RelationClass::Seq;
        if !(linked(a, c) || linked(b, c) || linked(b, d)) {
            out.push(Violation {
                property: Property::S7Seq,
                witness: vec![a, b, c, d],
            });
        }
    }
    for (rel, property) in [
        (Relation::Par, Property::S7Par),
        (Relation::Copar, Property::S7Copar),
    ] {
        let r = |x, y| w.relation(x, y) == rel;
        if r(a, b) && r(a, d) && r(c, d) && !(r(a, c) || r(b, c) || r(b, d)) {
            out.push(Violation {
                property,
                witness: vec![a, b, c, d],
            });
        }
    }
}

pub fn check_inverse_square(w: &Web) -> PropertyReport {
    check_inverse_square_with(w, Exec::default())
}

/// Both clauses of the inverse square property (par and copar).
pub fn check_inverse_square_with(w: &Web, exec: Exec) -> PropertyReport {
    let n = w.len();
    let violations = flat_map_range(exec, n, |a| {
        let mut out = Vec::new();
        for b in (0..n).filter(|&b| b != a) {
            for c in (0..n).filter(|&c| c != a && c != b) {
                for d in (0..n).filter(|&d| d != a && d != b && d != c) {
                    for (rel, property) in [
                        (Relation::Par, Property::InverseSquarePar),
                        (Relation::Copar, Property::InverseSquareCopar),
                    ] {
                        let r = |x, y| w.relation(x, y) == rel;
                        if !r(a, b) && !r(a, d) && !r(c, d) && r(a, c) && r(b, d) && r(b, c) {
                            out.push(Violation {
                                property,
                                witness: vec![a, b, c, d],
                            });
                        }
                    }
                }
            }
        }
        out
    });
    PropertyReport::from_violations(violations)
}
