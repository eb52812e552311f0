//! Test-side oracles and generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use bv_core::structure::{positions, RawStructure};
use bv_core::{Atom, Kind, Structure};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(text: &str) -> Structure {
    bv_core::parse(text).unwrap()
}

/// Every structure derivable from the unit by applying ai↓, s and q↓
/// top-down, restricted to at most `max_atoms` atoms over `names`.
///
/// Rules are applied to every subterm position: wrapping `Y` as `[Y,a,~a]`,
/// `(Y,[a,~a])`, `<Y;[a,~a]>` or `<[a,~a];Y>` places the interaction
/// anywhere a unit could stand; `([R,T],R')` becomes `[(R,R'),T]`;
/// `<[R,T];[R',T']>` becomes `[<R;R'>,<T;T'>]`.
pub fn provable_closure(names: &[&str], max_atoms: usize) -> HashSet<Structure> {
    let pairs: Vec<Structure> = names
        .iter()
        .map(|n| {
            let a = Atom::new(n);
            Structure::par([Structure::Atom(a.clone()), Structure::Atom(a.dual())])
        })
        .collect();
    let mut seen: HashSet<Structure> = HashSet::new();
    let mut frontier = vec![Structure::Unit];
    seen.insert(Structure::Unit);
    while let Some(s) = frontier.pop() {
        for next in top_down_steps(&s, &pairs, max_atoms) {
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen
}

fn top_down_steps(s: &Structure, pairs: &[Structure], max_atoms: usize) -> Vec<Structure> {
    let mut out = Vec::new();
    if s.atom_count() + 2 <= max_atoms {
        if s.is_unit() {
            out.extend(pairs.iter().cloned());
        }
        for (ctx, y) in positions(s) {
            for pair in pairs {
                for wrapped in [
                    Structure::par([y.clone(), pair.clone()]),
                    Structure::copar([y.clone(), pair.clone()]),
                    Structure::seq([y.clone(), pair.clone()]),
                    Structure::seq([pair.clone(), y.clone()]),
                ] {
                    out.push(ctx.fill(wrapped));
                }
            }
        }
    }
    for (ctx, y) in positions(s) {
        for (x, r2) in y.copar_splits() {
            for (r, t) in x.par_splits() {
                out.push(ctx.fill(Structure::par([Structure::copar([r.clone(), r2.clone()]), t])));
            }
        }
        for (x, z) in y.seq_splits() {
            for (r, t) in x.par_splits() {
                for (r2, t2) in z.par_splits() {
                    out.push(ctx.fill(Structure::par([
                        Structure::seq([r.clone(), r2]),
                        Structure::seq([t.clone(), t2]),
                    ])));
                }
            }
        }
    }
    out
}

/// All canonical structures with between one and `max_leaves` atom
/// occurrences over the given literals, plus the unit.
pub fn all_structures(literals: &[Structure], max_leaves: usize) -> BTreeSet<Structure> {
    let mut by_size: Vec<BTreeSet<Structure>> = vec![BTreeSet::new(); max_leaves + 1];
    by_size[1] = literals.iter().cloned().collect();
    for size in 2..=max_leaves {
        let mut level = BTreeSet::new();
        for left in 1..size {
            let right = size - left;
            for x in &by_size[left] {
                for y in &by_size[right] {
                    level.insert(Structure::par([x.clone(), y.clone()]));
                    level.insert(Structure::copar([x.clone(), y.clone()]));
                    level.insert(Structure::seq([x.clone(), y.clone()]));
                }
            }
        }
        by_size[size] = level;
    }
    let mut all: BTreeSet<Structure> = by_size.into_iter().flatten().collect();
    all.insert(Structure::Unit);
    all
}

pub fn literals(names: &[&str]) -> Vec<Structure> {
    names
        .iter()
        .flat_map(|n| {
            let a = Atom::new(n);
            [Structure::Atom(a.dual()), Structure::Atom(a)]
        })
        .collect()
}

/// A random canonical structure with `1..=max_atoms` atoms drawn from
/// `names` and their duals.
pub fn random_structure(rng: &mut impl Rng, names: &[&str], max_atoms: usize) -> Structure {
    let n = rng.gen_range(1..=max_atoms);
    random_tree(rng, n, &mut |rng| {
        let a = Atom::new(names.choose(rng).unwrap());
        if rng.gen() {
            a.dual()
        } else {
            a
        }
    })
}

/// A random structure whose `n` atoms are pairwise distinct fresh names.
pub fn random_distinct(rng: &mut impl Rng, n: usize) -> Structure {
    random_fresh(rng, n, "x")
}

/// Like [`random_distinct`] with atom names `{prefix}1`, `{prefix}2`, ...
pub fn random_fresh(rng: &mut impl Rng, n: usize, prefix: &str) -> Structure {
    let mut next = 0;
    random_tree(rng, n, &mut |rng| {
        next += 1;
        let a = Atom::new(&format!("{prefix}{next}"));
        if rng.gen() {
            a.dual()
        } else {
            a
        }
    })
}

/// A random structure over exactly `atoms`, in random order.
pub fn random_over(rng: &mut impl Rng, atoms: &[Atom]) -> Structure {
    let mut pool = atoms.to_vec();
    pool.shuffle(rng);
    let mut next = pool.into_iter();
    random_tree(rng, atoms.len(), &mut |_| next.next().unwrap())
}

fn random_tree(rng: &mut impl Rng, n: usize, leaf: &mut impl FnMut(&mut dyn rand::RngCore) -> Atom) -> Structure {
    if n == 1 {
        return Structure::Atom(leaf(rng));
    }
    let k = rng.gen_range(1..n);
    let left = random_tree(rng, k, leaf);
    let right = random_tree(rng, n - k, leaf);
    let kind = [Kind::Par, Kind::Copar, Kind::Seq][rng.gen_range(0..3)];
    Structure::node(kind, [left, right])
}

/// A random expression equal to `s` under the equations: children of
/// commutative nodes are permuted, runs of children regrouped, units
/// inserted, and subterms written as the negation of their dual.
pub fn shuffle(rng: &mut impl Rng, s: &Structure) -> RawStructure {
    let raw = match s {
        Structure::Unit => RawStructure::Unit,
        Structure::Atom(a) => RawStructure::Atom(a.clone()),
        node => {
            let kind = node.kind().unwrap();
            let mut cs: Vec<RawStructure> = node.children().iter().map(|c| shuffle(rng, c)).collect();
            if kind.is_commutative() {
                cs.shuffle(rng);
            }
            if cs.len() > 2 && rng.gen_bool(0.5) {
                let start = rng.gen_range(0..cs.len() - 1);
                let end = rng.gen_range(start + 2..=cs.len());
                let run: Vec<_> = cs.drain(start..end).collect();
                cs.insert(start, RawStructure::node(kind, run));
            }
            if rng.gen_bool(0.3) {
                let at = rng.gen_range(0..=cs.len());
                cs.insert(at, RawStructure::Unit);
            }
            RawStructure::node(kind, cs)
        }
    };
    match rng.gen_range(0..6) {
        0 => RawStructure::negation(shuffle(rng, &s.negate())),
        1 => RawStructure::Par(vec![raw, RawStructure::Unit]),
        _ => raw,
    }
}

/// Proptest strategy for canonical structures with up to `max_atoms`
/// atoms over `a`, `b`, `c` and their duals.
pub fn structure_strategy(max_atoms: u32) -> impl proptest::strategy::Strategy<Value = Structure> {
    use proptest::prelude::*;
    let leaf = prop::sample::select(literals(&["a", "b", "c"]));
    leaf.prop_recursive(4, max_atoms, 2, |inner| {
        (prop::sample::select(vec![Kind::Par, Kind::Copar, Kind::Seq]), inner.clone(), inner)
            .prop_map(|(k, l, r)| Structure::node(k, [l, r]))
    })
    .prop_filter("atom bound", move |s| s.atom_count() <= max_atoms as usize)
}
