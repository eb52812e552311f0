//! JSON and Graphviz forms of webs.

use std::collections::HashSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{Relation, Web, WebError};
use crate::structure::Atom;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebJson {
    pub occurrences: Vec<OccurrenceJson>,
    pub relations: Vec<RelationJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OccurrenceJson {
    pub id: usize,
    pub atom: String,
    #[serde(default)]
    pub neg: bool,
    #[serde(default)]
    pub index: Vec<u32>,
}

/// `"seq"` means `a` comes before `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationJson {
    pub a: usize,
    pub b: usize,
    pub rel: String,
}

pub fn web_to_json(w: &Web) -> WebJson {
    let occurrences = w
        .occurrences()
        .entries
        .iter()
        .map(|o| OccurrenceJson {
            id: o.id,
            atom: o.atom.name().to_string(),
            neg: o.atom.is_negated(),
            index: o.atom.index().to_vec(),
        })
        .collect();
    let relations = w
        .pairs()
        .map(|(i, j, r)| {
            let (a, b) = if r == Relation::CoSeq { (j, i) } else { (i, j) };
            RelationJson {
                a,
                b,
                rel: r.class_name().to_string(),
            }
        })
        .collect();
    WebJson {
        occurrences,
        relations,
    }
}

impl Relation {
    fn class_name(self) -> &'static str {
        match self {
            Relation::Seq | Relation::CoSeq => "seq",
            Relation::Par => "par",
            Relation::Copar => "copar",
        }
    }
}

/// Reads a candidate; every unordered pair must be given exactly once.
pub fn web_from_json(json: &WebJson) -> Result<Web, WebError> {
    let n = json.occurrences.len();
    let mut atoms = vec![None; n];
    for o in &json.occurrences {
        if o.id >= n || atoms[o.id].is_some() {
            return Err(WebError::Malformed(format!("occurrence ids must be 0..{n}, each once")));
        }
        let mut atom = Atom::with_index(&o.atom, &o.index);
        if o.neg {
            atom = atom.dual();
        }
        atoms[o.id] = Some(atom);
    }
    let mut rel = vec![vec![None; n]; n];
    let mut seen = HashSet::new();
    for r in &json.relations {
        let (a, b) = (r.a, r.b);
        if a >= n || b >= n {
            return Err(WebError::Malformed(format!("relation {a}-{b} out of range")));
        }
        if a == b {
            return Err(WebError::Malformed(format!("self-relation on {a}")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(WebError::Malformed(format!("pair {a}-{b} given twice")));
        }
        let forward = match r.rel.as_str() {
            "seq" => Relation::Seq,
            "par" => Relation::Par,
            "copar" => Relation::Copar,
            other => return Err(WebError::Malformed(format!("unknown relation {other:?}"))),
        };
        rel[a][b] = Some(forward);
        rel[b][a] = Some(forward.inverse());
    }
    if seen.len() != n * n.saturating_sub(1) / 2 {
        return Err(WebError::Malformed("relation assignment is not total".into()));
    }
    Ok(Web::from_fn(
        atoms.into_iter().map(Option::unwrap).collect(),
        |i, j| rel[i][j].unwrap(),
    ))
}

/// Graphviz digraph: seq as a red arrow, par as a plain blue line, copar as
/// a dashed green line.
pub fn web_to_dot(w: &Web) -> String {
    let mut out = String::from("digraph web {\n");
    for o in &w.occurrences().entries {
        let _ = writeln!(out, "  n{} [label=\"{}\"];", o.id, o.atom);
    }
    for (i, j, r) in w.pairs() {
        let _ = match r {
            Relation::Seq => writeln!(out, "  n{i} -> n{j} [color=red];"),
            Relation::CoSeq => writeln!(out, "  n{j} -> n{i} [color=red];"),
            Relation::Par => writeln!(out, "  n{i} -> n{j} [dir=none, color=blue];"),
            Relation::Copar => {
                writeln!(out, "  n{i} -> n{j} [dir=none, style=dashed, color=darkgreen];")
            }
        };
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::parse;
    use crate::web::web_of;

    #[test]
    fn json_round_trip_keeps_direction() {
        let w = web_of(&parse("(<b;~a_1.2>,[c,d])").unwrap());
        let json = web_to_json(&w);
        let text = serde_json::to_string(&json).unwrap();
        let back = web_from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(web_to_json(&back), json);
    }

    #[test]
    fn rejects_partial_and_conflicting() {
        let mut json = web_to_json(&web_of(&parse("[a,b,c]").unwrap()));
        json.relations.pop();
        assert!(web_from_json(&json).is_err());
        json.relations.push(RelationJson {
            a: 0,
            b: 1,
            rel: "par".into(),
        });
        assert!(web_from_json(&json).is_err());
    }

    #[test]
    fn dot_styles() {
        let dot = web_to_dot(&web_of(&parse("(<a;b>,c)").unwrap()));
        assert!(dot.contains("n1 -> n2 [color=red]"));
        assert!(dot.contains("style=dashed"));
    }
}
