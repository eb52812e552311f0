use std::collections::HashSet;

use super::{RuleInstance, RuleName};
use crate::structure::{Kind, Position, Structure};

/// Every non-trivial one-step bottom-up rule application to `goal`, one per
/// distinct premise.
///
/// All three rules rewrite a group of children of some par node, so only
/// par nodes are visited. Instances come in rule order ai↓, q↓, s; the
/// prover tries them in that order.
pub fn expand(goal: &Structure) -> Vec<(RuleInstance, Structure)> {
    let mut ai = Vec::new();
    let mut q = Vec::new();
    let mut s = Vec::new();
    let mut path = Vec::new();
    visit(goal, goal, &mut path, &mut |root, path, cs| {
        ai_down(root, path, cs, &mut ai);
        q_down(root, path, cs, &mut q);
        switch(root, path, cs, &mut s);
    });
    let mut seen = HashSet::new();
    ai.into_iter()
        .chain(q)
        .chain(s)
        .filter(|(_, premise)| premise != goal && seen.insert(premise.clone()))
        .collect()
}

fn visit(
    root: &Structure,
    node: &Structure,
    path: &mut Vec<usize>,
    f: &mut impl FnMut(&Structure, &[usize], &[Structure]),
) {
    if let Structure::Par(cs) = node {
        f(root, path, cs);
    }
    for (i, c) in node.children().iter().enumerate() {
        path.push(i);
        visit(root, c, path, f);
        path.pop();
    }
}

type Out = Vec<(RuleInstance, Structure)>;

/// Position of the children `picked` (sorted) of the par node at `path`.
fn position(path: &[usize], picked: Vec<usize>, arity: usize) -> Position {
    if picked.len() == arity {
        Position::node(path.to_vec())
    } else {
        Position::grouping(path.to_vec(), picked)
    }
}

fn emit(
    root: &Structure,
    out: &mut Out,
    rule: RuleName,
    position: Position,
    redex: Structure,
    contractum: Structure,
    witnesses: Vec<(&'static str, Structure)>,
) {
    let premise = position
        .replace(root, contractum.clone())
        .expect("positions built from the goal are valid");
    out.push((
        RuleInstance {
            rule,
            position,
            redex,
            contractum,
            witnesses,
        },
        premise,
    ));
}

fn ai_down(root: &Structure, path: &[usize], cs: &[Structure], out: &mut Out) {
    for (i, x) in cs.iter().enumerate() {
        let Some(a) = x.as_atom().filter(|a| !a.is_negated()) else {
            continue;
        };
        if let Some(j) = cs.iter().position(|y| y.as_atom().is_some_and(|b| b.is_dual_of(a))) {
            let picked = if i < j { vec![i, j] } else { vec![j, i] };
            emit(
                root,
                out,
                RuleName::AiDown,
                position(path, picked, cs.len()),
                Structure::par([x.clone(), cs[j].clone()]),
                Structure::Unit,
                vec![("a", x.clone())],
            );
        }
    }
}

/// `[<R;R'>,<T;T'>]` becomes `<[R,T];[R',T']>` for every pair of children.
fn q_down(root: &Structure, path: &[usize], cs: &[Structure], out: &mut Out) {
    for u in 0..cs.len() {
        for v in u + 1..cs.len() {
            for (r, r2) in cs[u].seq_splits() {
                for (t, t2) in cs[v].seq_splits() {
                    let contractum = Structure::seq([
                        Structure::par([r.clone(), t.clone()]),
                        Structure::par([r2.clone(), t2.clone()]),
                    ]);
                    emit(
                        root,
                        out,
                        RuleName::QDown,
                        position(path, vec![u, v], cs.len()),
                        Structure::par([cs[u].clone(), cs[v].clone()]),
                        contractum,
                        vec![("R", r.clone()), ("R'", r2.clone()), ("T", t), ("T'", t2)],
                    );
                }
            }
        }
    }
}

/// `[(R,R'),T]` becomes `([R,T],R')` for a child `U = (R,R')` and a
/// nonempty group `T` of the other children. `R'` is nonempty, `R` may be
/// the unit.
fn switch(root: &Structure, path: &[usize], cs: &[Structure], out: &mut Out) {
    let n = cs.len();
    for u in 0..n {
        if !matches!(cs[u], Structure::Copar(_)) {
            continue;
        }
        let splits: Vec<(Structure, Structure)> = cs[u]
            .copar_splits()
            .into_iter()
            .filter(|(_, r2)| !r2.is_unit())
            .collect();
        let others: Vec<usize> = (0..n).filter(|&i| i != u).collect();
        for mask in 1u64..(1u64 << others.len()) {
            let chosen: Vec<usize> = (0..others.len())
                .filter(|k| mask >> k & 1 == 1)
                .map(|k| others[k])
                .collect();
            let t = Structure::node(Kind::Par, chosen.iter().map(|&i| cs[i].clone()));
            let mut picked = chosen.clone();
            picked.push(u);
            picked.sort_unstable();
            let redex = Structure::par([cs[u].clone(), t.clone()]);
            for (r, r2) in &splits {
                let contractum =
                    Structure::copar([Structure::par([r.clone(), t.clone()]), r2.clone()]);
                emit(
                    root,
                    out,
                    RuleName::Switch,
                    position(path, picked.clone(), n),
                    redex.clone(),
                    contractum,
                    vec![("R", r.clone()), ("R'", r2.clone()), ("T", t.clone())],
                );
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::parse;

    fn premises(t: &str, rule: Option<RuleName>) -> HashSet<Structure> {
        expand(&parse(t).unwrap())
            .into_iter()
            .filter(|(i, _)| rule.is_none_or(|r| i.rule == r))
            .map(|(_, p)| p)
            .collect()
    }

    fn set(ts: &[&str]) -> HashSet<Structure> {
        ts.iter().map(|t| parse(t).unwrap()).collect()
    }

    #[test]
    fn interaction() {
        let got = expand(&parse("[a,~a]").unwrap());
        assert!(got.iter().any(|(i, p)| i.rule == RuleName::AiDown && p.is_unit()));
    }

    #[test]
    fn switch_premises() {
        assert_eq!(
            premises("[(a,b),c]", Some(RuleName::Switch)),
            set(&["([a,c],b)", "([b,c],a)", "(a,b,c)"])
        );
        // seq paddings add the two orderings
        assert_eq!(
            premises("[(a,b),c]", None),
            set(&["([a,c],b)", "([b,c],a)", "(a,b,c)", "<(a,b);c>", "<c;(a,b)>"])
        );
    }

    #[test]
    fn q_down_middle_split() {
        let got = premises("[<a;b>,<~a;~b>]", Some(RuleName::QDown));
        assert!(got.contains(&parse("<[a,~a];[b,~b]>").unwrap()));
    }

    #[test]
    fn copar_has_no_instances() {
        assert!(expand(&parse("(a,~a)").unwrap()).is_empty());
    }

    #[test]
    fn premises_keep_atoms() {
        let goal = parse("[<[a,b];c>,<~a;[~b,~c]>]").unwrap();
        for (inst, p) in expand(&goal) {
            let lost = goal.atom_count() - p.atom_count();
            assert_eq!(lost, if inst.rule == RuleName::AiDown { 2 } else { 0 });
            assert_eq!(inst.position.replace(&goal, inst.contractum.clone()).unwrap(), p);
            assert_eq!(inst.position.subterm(&goal).unwrap(), inst.redex);
        }
    }
}
