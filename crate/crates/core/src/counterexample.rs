//! The self-similar family `alpha_n` and `S_n`, provable structures whose
//! proofs must start at depth `2n`, with derivations built without search.
//!
//! ```text
//! alpha_0(u,R,T) = [<[a_u,b_u,R];c_u>, <~a_u;[~b_u,~c_u,T]>]
//! alpha_n(u,R,T) = [<alpha_{n-1}(u.0, a_u, [b_u,R]);c_u>,
//!                   <~a_u;alpha_{n-1}(u.1, ~b_u, [~c_u,T])>]
//! S_n            = alpha_n(0, o, o)
//! ```

use thiserror::Error;

use crate::prover::{Derivation, RuleInstance, RuleName};
use crate::structure::{occurrences, Atom, Kind, Position, Structure};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CounterexampleError {
    #[error("{0} is not a flat par structure")]
    NotFlat(String),
    #[error("parameter atoms clash with generated atoms: {0} repeats")]
    NotFresh(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaParams {
    pub n: usize,
    pub u: Vec<u32>,
    pub r: Structure,
    pub t: Structure,
}

impl AlphaParams {
    pub fn s(n: usize) -> AlphaParams {
        AlphaParams {
            n,
            u: vec![0],
            r: Structure::Unit,
            t: Structure::Unit,
        }
    }
}

/// An `alpha_0` occurrence inside a generated structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaBlock {
    pub u: Vec<u32>,
    pub position: Position,
}

/// A generated structure together with the positions of its `alpha_0`
/// blocks. The tags live beside the structure, which stays canonical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alpha {
    pub structure: Structure,
    pub blocks: Vec<AlphaBlock>,
}

/// Unit, an atom, or a par of atoms.
fn is_flat_par(s: &Structure) -> bool {
    match s {
        Structure::Unit | Structure::Atom(_) => true,
        Structure::Par(cs) => cs.iter().all(|c| c.as_atom().is_some()),
        _ => false,
    }
}

fn validate(p: &AlphaParams) -> Result<(), CounterexampleError> {
    for x in [&p.r, &p.t] {
        if !is_flat_par(x) {
            return Err(CounterexampleError::NotFlat(x.to_string()));
        }
    }
    Ok(())
}

struct Names {
    a: Structure,
    b: Structure,
    c: Structure,
}

fn names(u: &[u32]) -> Names {
    let atom = |n| Structure::Atom(Atom::with_index(n, u));
    Names {
        a: atom("a"),
        b: atom("b"),
        c: atom("c"),
    }
}

fn child(u: &[u32], k: u32) -> Vec<u32> {
    let mut v = u.to_vec();
    v.push(k);
    v
}

fn par2(x: &Structure, y: &Structure) -> Structure {
    Structure::par([x.clone(), y.clone()])
}

fn seq2(x: &Structure, y: &Structure) -> Structure {
    Structure::seq([x.clone(), y.clone()])
}

fn build(n: usize, u: &[u32], r: &Structure, t: &Structure, blocks: &mut Vec<(Vec<u32>, Structure)>) -> Structure {
    let Names { a, b, c } = names(u);
    let s = if n == 0 {
        par2(
            &seq2(&Structure::par([a.clone(), b.clone(), r.clone()]), &c),
            &seq2(&a.negate(), &Structure::par([b.negate(), c.negate(), t.clone()])),
        )
    } else {
        let left = build(n - 1, &child(u, 0), &a, &par2(&b, r), blocks);
        let right = build(n - 1, &child(u, 1), &b.negate(), &par2(&c.negate(), t), blocks);
        par2(&seq2(&left, &c), &seq2(&a.negate(), &right))
    };
    if n == 0 {
        blocks.push((u.to_vec(), s.clone()));
    }
    s
}

pub fn alpha(p: &AlphaParams) -> Result<Alpha, CounterexampleError> {
    validate(p)?;
    let mut raw_blocks = Vec::new();
    let structure = build(p.n, &p.u, &p.r, &p.t, &mut raw_blocks);
    let occ = occurrences(&structure);
    if !occ.atoms_distinct() {
        let mut seen = std::collections::HashSet::new();
        let dup = occ.entries.iter().find(|o| !seen.insert(&o.atom)).unwrap();
        return Err(CounterexampleError::NotFresh(dup.atom.to_string()));
    }
    let blocks = raw_blocks
        .into_iter()
        .map(|(u, block)| AlphaBlock {
            position: Position::locate(&structure, &block)
                .into_iter()
                .next()
                .expect("generated blocks occur in the result"),
            u,
        })
        .collect();
    Ok(Alpha { structure, blocks })
}

pub fn s_n(n: usize) -> Alpha {
    alpha(&AlphaParams::s(n)).expect("S_n parameters are valid")
}

/// Context depth of every `alpha_0` block.
pub fn alpha_zero_depths(alpha: &Alpha) -> Vec<usize> {
    alpha.blocks.iter().map(|b| b.position.depth()).collect()
}

/// Atom occurrences in `S_n`: `6 (2^(n+1) - 1)`.
pub fn s_n_atom_count(n: usize) -> usize {
    6 * ((1 << (n + 1)) - 1)
}

/// A derivation with premise `[R,T]` and conclusion `alpha_n(u,R,T)`.
pub fn alpha_derivation(p: &AlphaParams) -> Result<Derivation, CounterexampleError> {
    let conclusion = alpha(p)?.structure;
    let d = derive(p.n, &p.u, &p.r, &p.t);
    debug_assert_eq!(d.conclusion, conclusion);
    Ok(d)
}

/// The certified proof of `S_n`: its derivation from the unit, then the
/// axiom.
pub fn proof_of_sn(n: usize) -> Derivation {
    let mut d = alpha_derivation(&AlphaParams::s(n)).expect("S_n parameters are valid");
    d.push(RuleInstance::axiom(), Structure::Unit);
    d
}

fn derive(n: usize, u: &[u32], r: &Structure, t: &Structure) -> Derivation {
    if n == 0 {
        return base_derivation(u, r, t);
    }
    let Names { a, b, c } = names(u);
    let (na, nb, nc) = (a.negate(), b.negate(), c.negate());
    let left_r = par2(&b, r);
    let right_t = par2(&nc, t);
    let right = build(n - 1, &child(u, 1), &nb, &right_t, &mut Vec::new());

    // Delta_2 builds the left alpha_{n-1} inside <{};c_u>, Delta_1 the right
    // one inside <~a_u;{}>, and Delta_0 is the base case.
    let d2 = derive(n - 1, &child(u, 0), &a, &left_r);
    let d1 = derive(n - 1, &child(u, 1), &nb, &right_t);
    let right_ctx = seq2(&na, &right);
    let lifted2 = lift(&d2, |x| par2(&seq2(x, &c), &right_ctx));
    let left_ctx = seq2(&Structure::par([a.clone(), b.clone(), r.clone()]), &c);
    let lifted1 = lift(&d1, |x| par2(&left_ctx, &seq2(&na, x)));

    let mut d = lifted2;
    d.extend(lifted1);
    d.extend(base_derivation(u, r, t));
    d
}

/// Places every step of `d` inside the context `fill`.
fn lift(d: &Derivation, fill: impl Fn(&Structure) -> Structure) -> Derivation {
    let mut out = Derivation::new(fill(&d.conclusion));
    for step in &d.steps {
        let conclusion = out.top().clone();
        let premise = fill(&step.premise);
        let inst = &step.instance;
        let position = find_position(&conclusion, &inst.redex, &inst.contractum, &premise);
        out.push(
            RuleInstance {
                position,
                ..inst.clone()
            },
            premise,
        );
    }
    out
}

fn find_position(conclusion: &Structure, redex: &Structure, contractum: &Structure, premise: &Structure) -> Position {
    Position::locate(conclusion, redex)
        .into_iter()
        .find(|p| p.replace(conclusion, contractum.clone()).as_ref() == Some(premise))
        .expect("scheme steps rewrite their conclusion into their premise")
}

/// The seven steps from `[R,T]` up to `alpha_0(u,R,T)`, bottom-up.
fn base_derivation(u: &[u32], r: &Structure, t: &Structure) -> Derivation {
    let Names { a, b, c } = names(u);
    let (na, nb, nc) = (a.negate(), b.negate(), c.negate());
    let o = Structure::Unit;
    let br = par2(&b, r);
    let nbt = par2(&nb, t);
    let br_c = seq2(&br, &c);
    let all = Structure::par([b.clone(), nb.clone(), r.clone(), t.clone()]);

    let steps: Vec<(RuleName, Structure, Structure, Structure)> = vec![
        (
            RuleName::QDown,
            par2(&seq2(&a, &o), &seq2(&o, &br)),
            Structure::seq([par2(&a, &o), par2(&o, &br)]),
            par2(&Structure::seq([a.clone(), br.clone(), c.clone()]), &seq2(&na, &Structure::par([nb.clone(), nc.clone(), t.clone()]))),
        ),
        (
            RuleName::QDown,
            par2(&Structure::seq([a.clone(), br.clone(), c.clone()]), &seq2(&na, &Structure::par([nb.clone(), nc.clone(), t.clone()]))),
            seq2(&par2(&a, &na), &Structure::par([br_c.clone(), nb.clone(), nc.clone(), t.clone()])),
            seq2(&par2(&a, &na), &Structure::par([br_c.clone(), nb.clone(), nc.clone(), t.clone()])),
        ),
        (RuleName::AiDown, par2(&a, &na), o.clone(), Structure::par([br_c.clone(), nb.clone(), nc.clone(), t.clone()])),
        (
            RuleName::QDown,
            par2(&br_c, &seq2(&nbt, &o)),
            seq2(&par2(&br, &nbt), &par2(&c, &o)),
            par2(&seq2(&all, &c), &nc),
        ),
        (
            RuleName::QDown,
            par2(&seq2(&all, &c), &seq2(&o, &nc)),
            seq2(&all, &par2(&c, &nc)),
            seq2(&all, &par2(&c, &nc)),
        ),
        (RuleName::AiDown, par2(&c, &nc), o.clone(), all.clone()),
        (RuleName::AiDown, par2(&b, &nb), o.clone(), par2(r, t)),
    ];

    let mut d = Derivation::new(
        par2(
            &seq2(&Structure::par([a.clone(), b.clone(), r.clone()]), &c),
            &seq2(&na, &Structure::par([nb.clone(), nc.clone(), t.clone()])),
        ),
    );
    for (rule, redex, contractum, premise) in steps {
        let position = find_position(d.top(), &redex, &contractum, &premise);
        d.push(
            RuleInstance {
                rule,
                position,
                redex,
                contractum,
                witnesses: Vec::new(),
            },
            premise,
        );
    }
    d
}

/// A par substructure `[P, Q]` (modulo the equations) with `Q` the negation
/// of `P`, if any. Every pair of disjoint groups of children of every par
/// node is tried.
pub fn check_no_dual_pars(s: &Structure) -> Result<(), (Structure, Structure)> {
    if let Structure::Par(cs) = s {
        let n = cs.len();
        let group = |mask: u64| Structure::node(Kind::Par, (0..n).filter(|i| mask >> i & 1 == 1).map(|i| cs[i].clone()));
        for m1 in 1u64..(1 << n) {
            let p = group(m1);
            let neg = p.negate();
            let rest = ((1u64 << n) - 1) & !m1;
            let mut m2 = rest;
            while m2 != 0 {
                if group(m2) == neg {
                    return Err((p, neg));
                }
                m2 = (m2 - 1) & rest;
            }
        }
    }
    s.children().iter().try_for_each(check_no_dual_pars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prover::{check, System};
    use crate::structure::parse;

    #[test]
    fn s0_is_the_base_structure() {
        let s0 = s_n(0);
        assert_eq!(s0.structure, parse("[<[a_0,b_0];c_0>,<~a_0;[~b_0,~c_0]>]").unwrap());
        assert_eq!(alpha_zero_depths(&s0), vec![0]);
    }

    #[test]
    fn atom_counts() {
        for n in 0..4 {
            assert_eq!(s_n(n).structure.atom_count(), s_n_atom_count(n));
        }
        assert_eq!((0..4).map(s_n_atom_count).collect::<Vec<_>>(), vec![6, 18, 42, 90]);
    }

    #[test]
    fn s1_has_two_blocks_at_depth_two() {
        let s1 = s_n(1);
        assert_eq!(alpha_zero_depths(&s1), vec![2, 2]);
        assert_eq!(s1.blocks[0].u, vec![0, 0]);
    }

    #[test]
    fn base_derivation_matches_plain_proof() {
        let d = proof_of_sn(0);
        assert_eq!(d.length(), 8);
        check(&d, System::BV).unwrap();
        assert!(d.is_proof());
    }

    #[test]
    fn parameterized_derivations_check() {
        let p = AlphaParams {
            n: 1,
            u: vec![3],
            r: parse("[x,y]").unwrap(),
            t: parse("z").unwrap(),
        };
        let d = alpha_derivation(&p).unwrap();
        assert_eq!(d.top(), &parse("[x,y,z]").unwrap());
        assert_eq!(d.conclusion, alpha(&p).unwrap().structure);
        check(&d, System::BV).unwrap();
    }

    #[test]
    fn parameter_errors() {
        let mut p = AlphaParams::s(0);
        p.r = parse("<x;y>").unwrap();
        assert!(matches!(alpha(&p), Err(CounterexampleError::NotFlat(_))));
        let mut p = AlphaParams::s(0);
        p.t = parse("a_0").unwrap();
        assert!(matches!(alpha(&p), Err(CounterexampleError::NotFresh(_))));
    }

    #[test]
    fn dual_pars() {
        assert!(check_no_dual_pars(&s_n(2).structure).is_ok());
        let (p, q) = check_no_dual_pars(&parse("[a,~a,b]").unwrap()).unwrap_err();
        assert_eq!(p.negate(), q);
        let (p, q) = check_no_dual_pars(&parse("[<a;b>,<~a;~b>,c]").unwrap()).unwrap_err();
        let mut got = [p, q];
        got.sort();
        let mut want = [parse("<a;b>").unwrap(), parse("<~a;~b>").unwrap()];
        want.sort();
        assert_eq!(got, want);
    }
}
