//! Structure schemes, the logical-strength order and shallow rules.
//!
//! A scheme is written in the ordinary syntax; atoms whose name starts with
//! an uppercase letter are variables. Webs of schemes treat variables as
//! atom occurrences, and the occurrences of a rule's two sides are matched
//! by label, so labels must not repeat within a side.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::structure::{parse, positions, Atom, ParseError, Position, Structure};
use crate::web::{label_matching, relation_diff, web_of, Relation, RelationChange, WebError};

pub fn is_variable(a: &Atom) -> bool {
    a.name().starts_with(|c: char| c.is_ascii_uppercase())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureScheme {
    pub structure: Structure,
    /// Variables that stand for atoms only.
    pub atomic: BTreeSet<String>,
}

impl StructureScheme {
    pub fn new(structure: Structure) -> StructureScheme {
        StructureScheme {
            structure,
            atomic: BTreeSet::new(),
        }
    }

    pub fn parse(text: &str) -> Result<StructureScheme, ParseError> {
        parse(text).map(StructureScheme::new)
    }

    pub fn with_atomic(mut self, names: &[&str]) -> StructureScheme {
        self.atomic.extend(names.iter().map(|n| n.to_string()));
        self
    }

    /// Variable occurrences, by name, in occurrence order.
    pub fn variables(&self) -> Vec<String> {
        self.structure
            .atoms()
            .into_iter()
            .filter(|a| is_variable(a))
            .map(|a| a.name().to_string())
            .collect()
    }

    pub fn depth(&self) -> usize {
        self.structure.depth()
    }

    /// Replaces each variable by its binding (negated for `~A`); unbound
    /// variables stay.
    pub fn instantiate(&self, bindings: &HashMap<String, Structure>) -> Structure {
        self.structure.map_atoms(&|a: &Atom| match bindings.get(a.name()) {
            Some(s) if is_variable(a) && a.is_negated() => s.negate(),
            Some(s) if is_variable(a) => s.clone(),
            _ => Structure::Atom(a.clone()),
        })
    }
}

impl fmt::Display for StructureScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.structure.fmt(f)
    }
}

/// A rule read bottom-up: `conclusion` below, `premise` above.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RuleScheme {
    pub name: String,
    pub conclusion: StructureScheme,
    pub premise: StructureScheme,
}

impl RuleScheme {
    pub fn parse(name: &str, conclusion: &str, premise: &str) -> Result<RuleScheme, ParseError> {
        Ok(RuleScheme {
            name: name.into(),
            conclusion: StructureScheme::parse(conclusion)?,
            premise: StructureScheme::parse(premise)?,
        })
    }

    pub fn depth(&self) -> usize {
        self.conclusion.depth().max(self.premise.depth())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("occurrences differ: {0}")]
    OccMismatch(String),
    #[error("the structures are equal")]
    Equal,
}

/// A pair whose relations break one clause of the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClauseViolation {
    /// 1, 3 or 4; clause 2 admits every relation.
    pub clause: u8,
    pub a: Atom,
    pub b: Atom,
    /// Relation of `a` to `b` in the stronger structure `T`.
    pub in_t: Relation,
    /// Relation of `a` to `b` in `R`.
    pub in_r: Relation,
}

impl fmt::Display for ClauseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "clause {}: {} {} {} in T but {} in R",
            self.clause,
            self.a,
            self.in_t.symbol(),
            self.b,
            self.in_r.symbol()
        )
    }
}

fn labels(s: &Structure) -> Result<BTreeSet<Atom>, OrderError> {
    let mut out = BTreeSet::new();
    for a in s.atoms() {
        if !out.insert(a.clone()) {
            return Err(OrderError::OccMismatch(format!("label {a} repeats")));
        }
    }
    Ok(out)
}

/// All clause violations of `R ≺ T`, with occurrences matched by label.
pub fn prec_violations(r: &Structure, t: &Structure) -> Result<Vec<ClauseViolation>, OrderError> {
    let (lr, lt) = (labels(r)?, labels(t)?);
    if lr != lt {
        let only: Vec<String> = lr.symmetric_difference(&lt).map(|a| a.to_string()).collect();
        return Err(OrderError::OccMismatch(format!("unmatched {}", only.join(", "))));
    }
    if r == t {
        return Err(OrderError::Equal);
    }
    let (wr, wt) = (web_of(r), web_of(t));
    let matching = label_matching(&wr, &wt).expect("labels are distinct");
    let mut out = Vec::new();
    for (x, &(ri, ti)) in matching.iter().enumerate() {
        for &(rj, tj) in &matching[x + 1..] {
            for (ri, ti, rj, tj) in [(ri, ti, rj, tj), (rj, tj, ri, ti)] {
                let in_t = wt.relation(ti, tj);
                let in_r = wr.relation(ri, rj);
                let clause = match in_t {
                    Relation::Par if in_r != Relation::Par => 1,
                    Relation::Seq if !matches!(in_r, Relation::Seq | Relation::Par) => 3,
                    Relation::CoSeq if !matches!(in_r, Relation::CoSeq | Relation::Par) => 4,
                    _ => continue,
                };
                // each unordered pair reports once
                if clause == 4 || (clause == 1 && ri > rj) {
                    continue;
                }
                out.push(ClauseViolation {
                    clause,
                    a: wr.atom(ri).clone(),
                    b: wr.atom(rj).clone(),
                    in_t,
                    in_r,
                });
            }
        }
    }
    Ok(out)
}

pub fn prec_order(r: &Structure, t: &Structure) -> Result<bool, OrderError> {
    prec_violations(r, t).map(|v| v.is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShallowVerdict {
    pub shallow: bool,
    pub depth: usize,
    pub reasons: Vec<String>,
}

/// Non-unit sides, variables distinct within each side, equal
/// occurrences and conclusion ≺ premise.
pub fn validate_shallow_rule(rule: &RuleScheme) -> ShallowVerdict {
    let mut reasons = Vec::new();
    for (side, s) in [("conclusion", &rule.conclusion), ("premise", &rule.premise)] {
        if s.structure.is_unit() {
            reasons.push(format!("{side} is the unit"));
        }
        let vars = s.variables();
        let distinct: BTreeSet<_> = vars.iter().collect();
        if distinct.len() != vars.len() {
            reasons.push(format!("{side} repeats a variable"));
        }
    }
    match prec_violations(&rule.conclusion.structure, &rule.premise.structure) {
        Ok(violations) => reasons.extend(violations.iter().map(|v| v.to_string())),
        Err(e) => {
            let text = e.to_string();
            if !reasons.iter().any(|r| text.contains(r.as_str())) {
                reasons.push(text);
            }
        }
    }
    ShallowVerdict {
        shallow: reasons.is_empty(),
        depth: rule.depth(),
        reasons,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ShallowError {
    #[error("rule {0} is not shallow")]
    NotShallow(String),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShallowSystem {
    pub rules: Vec<RuleScheme>,
}

impl ShallowSystem {
    pub fn new(rules: Vec<RuleScheme>) -> ShallowSystem {
        ShallowSystem { rules }
    }

    /// Largest rule depth; 0 for no rules.
    pub fn depth(&self) -> Result<usize, ShallowError> {
        self.rules.iter().try_fold(0, |acc, r| {
            let v = validate_shallow_rule(r);
            if v.shallow {
                Ok(acc.max(v.depth))
            } else {
                Err(ShallowError::NotShallow(r.name.clone()))
            }
        })
    }
}

/// Schemes of the rules used as shallow examples: switch, q↓, the
/// depth-3 rule and the mix-like `[A,A'] / (A,A')`.
pub fn standard_rules() -> Vec<RuleScheme> {
    [
        ("switch", "[(A,B),C]", "([A,C],B)"),
        ("q_down", "[<A;B>,<C;D>]", "<[A,C];[B,D]>"),
        ("rho", "[A,B,(C,C')]", "[A,([B,C],C')]"),
        ("mix", "[A,A']", "(A,A')"),
    ]
    .iter()
    .map(|(n, c, p)| RuleScheme::parse(n, c, p).expect("catalog schemes parse"))
    .collect()
}

/// A substructure deeper than the rule whose relations changed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeepWitness {
    pub position: Position,
    pub substructure: Structure,
    pub change: RelationChange,
}

/// Checks that an instance of a depth-`n` rule keeps every relation inside
/// every substructure of the conclusion at depth greater than `n`.
///
/// `matching` pairs occurrence ids of the conclusion with those of the
/// premise and must be a bijection: shallow rules neither create nor
/// delete occurrences.
pub fn check_deep_preservation(
    conclusion: &Structure,
    premise: &Structure,
    matching: &[(usize, usize)],
    n: usize,
) -> Result<Option<DeepWitness>, WebError> {
    let (wc, wp) = (web_of(conclusion), web_of(premise));
    if wc.len() != wp.len() || matching.len() != wc.len() {
        return Err(WebError::BadMatching(format!(
            "{} pairs for {} and {} occurrences",
            matching.len(),
            wc.len(),
            wp.len()
        )));
    }
    let changes = relation_diff(&wc, &wp, matching)?;
    if changes.is_empty() {
        return Ok(None);
    }
    let occ = wc.occurrences();
    for (ctx, sub) in positions(conclusion) {
        let position = ctx.position;
        if position.depth() <= n {
            continue;
        }
        let inside = |id: usize| {
            let path = &occ.entries[id].path;
            path.starts_with(&position.path)
                && match &position.group {
                    None => true,
                    Some(g) => path.get(position.path.len()).is_some_and(|i| g.contains(i)),
                }
        };
        if let Some(change) = changes.iter().find(|c| inside(c.a) && inside(c.b)) {
            return Ok(Some(DeepWitness {
                position,
                substructure: sub,
                change: change.clone(),
            }));
        }
    }
    Ok(None)
}

/// Label matching between two structures with distinct atoms.
pub fn matching_by_label(conclusion: &Structure, premise: &Structure) -> Result<Vec<(usize, usize)>, WebError> {
    label_matching(&web_of(conclusion), &web_of(premise))
}

/// Instantiates a rule with `bindings` and returns its conclusion and
/// premise.
pub fn instance(rule: &RuleScheme, bindings: &HashMap<String, Structure>) -> (Structure, Structure) {
    (rule.conclusion.instantiate(bindings), rule.premise.instantiate(bindings))
}
