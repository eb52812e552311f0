mod support;

use std::collections::BTreeSet;

use bv_core::prover::{check, delete_atom_pair, prove, ProveOutcome, System, DEFAULT_BUDGET};
use bv_core::structure::canonicalize;
use bv_core::web::{forbidden_configs, web_of};
use bv_core::{Atom, Structure};
use rand::seq::IteratorRandom;
use rand::Rng;
use support::{provable_closure, random_over, random_structure, rng, shuffle};

fn proof_of(s: &Structure) -> bv_core::prover::Derivation {
    match prove(s, DEFAULT_BUDGET) {
        ProveOutcome::Proof(d) => d,
        other => panic!("{s}: {other:?}"),
    }
}

fn sample_provable(n: usize, seed: u64) -> Vec<Structure> {
    let closure: BTreeSet<Structure> = provable_closure(&["a", "b", "c"], 6).into_iter().collect();
    closure.into_iter().choose_multiple(&mut rng(seed), n)
}

#[test]
fn proofs_of_provable_goals_check() {
    for goal in sample_provable(100, 1) {
        let d = proof_of(&goal);
        assert_eq!(d.conclusion, goal);
        assert!(d.is_proof());
        check(&d, System::BV).unwrap_or_else(|e| panic!("{goal}: {e}"));
        check(&d, System::SBV).unwrap();
    }
}

#[test]
fn deleting_a_pair_keeps_proofs_checkable() {
    for goal in sample_provable(100, 2) {
        let d = proof_of(&goal);
        let names: BTreeSet<&str> = goal.atoms().into_iter().map(|a| a.name()).collect();
        for name in names {
            let atom = Atom::new(name);
            match delete_atom_pair(&d, &atom) {
                Ok(reduced) => {
                    assert_eq!(reduced.conclusion.atom_count() + 2, goal.atom_count());
                    check(&reduced, System::BV).unwrap_or_else(|e| panic!("{goal} without {atom}: {e}"));
                }
                // repeated names cannot be deleted unambiguously
                Err(e) => assert!(goal.atoms().iter().filter(|a| a.name() == name).count() > 2, "{goal}: {e}"),
            }
        }
    }
}

#[test]
fn structure_par_its_negation_is_provable() {
    let mut r = rng(3);
    for _ in 0..300 {
        let s = random_structure(&mut r, &["a", "b", "c"], 3);
        let goal = Structure::par([s.clone(), s.negate()]);
        check(&proof_of(&goal), System::BV).unwrap();
    }
}

#[test]
fn verdict_is_stable_under_equations() {
    let mut r = rng(4);
    for _ in 0..300 {
        let s = random_structure(&mut r, &["a", "b"], 6);
        let t = canonicalize(&shuffle(&mut r, &s));
        assert_eq!(prove(&s, DEFAULT_BUDGET).is_proof(), prove(&t, DEFAULT_BUDGET).is_proof(), "{s}");
    }
}

#[test]
fn forbidden_configurations_refute() {
    let mut r = rng(5);
    let mut hits = 0;
    for _ in 0..1000 {
        let pairs = r.gen_range(2..=4);
        let atoms: Vec<Atom> = (0..pairs)
            .flat_map(|i| {
                let a = Atom::new(&format!("p{i}"));
                [a.dual(), a]
            })
            .collect();
        let s = random_over(&mut r, &atoms);
        if !forbidden_configs(&web_of(&s)).unwrap().is_empty() {
            hits += 1;
            assert!(!prove(&s, DEFAULT_BUDGET).is_proof(), "{s}");
        }
    }
    assert!(hits > 50, "{hits}");
}
