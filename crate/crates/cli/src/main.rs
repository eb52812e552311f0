//! `bv`: command-line front end for bv-core.
//!
//! Exit codes: 0 positive verdict, 1 negative verdict, 2 usage or parse
//! error, 3 search budget exceeded.

use std::fs;
use std::process::ExitCode;

use bv_core::counterexample::{proof_of_sn, s_n};
use bv_core::fixtures::catalog;
use bv_core::prover::{
    check, delete_atom_pair, first_redex_analysis, min_first_redex_depth, prove, Derivation, ProveOutcome, System,
    DEFAULT_BUDGET,
};
use bv_core::shallow::{prec_violations, validate_shallow_rule, RuleScheme};
use bv_core::structure::parse_context;
use bv_core::web::{
    forbidden_configs, reconstruct, verify_web_properties, web_from_json, web_of, web_to_dot, web_to_json, Web,
    WebJson,
};
use bv_core::{parse, Atom, Structure};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "bv", version, about = "System BV: structures, relation webs, proof search and checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SystemArg {
    Bv,
    Sbv,
}

/// Structure arguments accept inline text, `@file`, or `S<n>` for the
/// counterexample family member.
#[derive(Subcommand)]
enum Command {
    /// Search for a proof; prints the derivation as JSON.
    Prove {
        structure: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Print the derivation top-down instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Check a derivation given as JSON.
    Check {
        derivation: String,
        #[arg(long, value_enum, default_value = "bv")]
        system: SystemArg,
    },
    /// Decide equality modulo the equations.
    Equiv { first: String, second: String },
    /// Print the relation web of a structure.
    Web {
        structure: String,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Check a web candidate (JSON) against the characterization.
    VerifyWeb { web: String },
    /// Rebuild a structure from a web candidate (JSON).
    Reconstruct {
        web: String,
        #[arg(long)]
        json: bool,
    },
    /// Print S_n, or with `--derivation` its certified proof as JSON.
    GenSn {
        n: usize,
        #[arg(long)]
        derivation: bool,
    },
    /// Decide every one-step premise of a goal and report redex depths.
    FirstRedex {
        #[arg(long)]
        goal: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Delete an atom and its dual from a derivation.
    DeletePair { derivation: String, atom: String },
    /// Validate a rule scheme as shallow; prints JSON diagnostics.
    ShallowCheck {
        conclusion: String,
        premise: String,
        #[arg(long, default_value = "rule")]
        name: String,
    },
    /// Depth of a structure, or of the hole in a context written with `{}`.
    Depth { text: String },
    /// Worked examples with known answers.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// Run every fixture and print one PASS/FAIL line each.
    Run {
        /// Also run the long optional cases.
        #[arg(long)]
        optional: bool,
    },
}

const POSITIVE: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const BUDGET: u8 = 3;

struct Failure(u8, String);

fn usage(e: impl ToString) -> Failure {
    Failure(USAGE, e.to_string())
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

fn structure_arg(arg: &str) -> Result<Structure, Failure> {
    let text = read_arg(arg)?;
    let text = text.trim();
    if let Some(n) = text.strip_prefix('S').and_then(|n| n.parse::<usize>().ok()) {
        return Ok(s_n(n).structure);
    }
    parse(text).map_err(usage)
}

fn derivation_arg(arg: &str) -> Result<Derivation, Failure> {
    Derivation::from_json_str(&read_arg(arg)?).map_err(usage)
}

fn web_arg(arg: &str) -> Result<Web, Failure> {
    let json: WebJson = serde_json::from_str(&read_arg(arg)?).map_err(usage)?;
    web_from_json(&json).map_err(usage)
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Prove { structure, budget, text } => {
            let goal = structure_arg(&structure)?;
            match prove(&goal, budget) {
                ProveOutcome::Proof(d) => {
                    if text {
                        print!("{d}");
                    } else {
                        println!("{}", d.to_json_string());
                    }
                    Ok(POSITIVE)
                }
                ProveOutcome::Unprovable => {
                    println!("unprovable: {goal}");
                    Ok(NEGATIVE)
                }
                ProveOutcome::BudgetExceeded { explored } => {
                    Err(Failure(BUDGET, format!("budget exceeded after {explored} structures")))
                }
            }
        }
        Command::Check { derivation, system } => {
            let d = derivation_arg(&derivation)?;
            let system = match system {
                SystemArg::Bv => System::BV,
                SystemArg::Sbv => System::SBV,
            };
            match check(&d, system) {
                Ok(()) if d.is_proof() => {
                    println!("ok: proof of {} in {system}", d.conclusion);
                    Ok(POSITIVE)
                }
                Ok(()) => {
                    println!("ok: derivation from {} to {} in {system}", d.top(), d.conclusion);
                    Ok(POSITIVE)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Equiv { first, second } => {
            let (a, b) = (structure_arg(&first)?, structure_arg(&second)?);
            println!("{}", if a == b { "equal" } else { "different" });
            Ok(if a == b { POSITIVE } else { NEGATIVE })
        }
        Command::Web { structure, json, dot } => {
            let w = web_of(&structure_arg(&structure)?);
            if json {
                println!("{}", serde_json::to_string_pretty(&web_to_json(&w)).expect("webs serialize"));
            } else if dot {
                print!("{}", web_to_dot(&w));
            } else {
                for (i, j, r) in w.pairs() {
                    println!("{} {} {}", w.atom(i), r.symbol(), w.atom(j));
                }
            }
            Ok(POSITIVE)
        }
        Command::VerifyWeb { web } => {
            let w = web_arg(&web)?;
            let report = verify_web_properties(&w);
            let violations: Vec<_> = report
                .violations
                .iter()
                .map(|v| json!({"property": v.property.to_string(), "witness": v.witness}))
                .collect();
            let forbidden = forbidden_configs(&w)
                .map(|ws| {
                    ws.iter()
                        .map(|f| json!({"pattern": f.pattern, "roles": f.roles}))
                        .collect::<Vec<_>>()
                })
                .ok();
            println!(
                "{}",
                pretty(&json!({"passed": report.passed, "violations": violations, "forbidden": forbidden}))
            );
            Ok(if report.passed { POSITIVE } else { NEGATIVE })
        }
        Command::Reconstruct { web, json } => match reconstruct(&web_arg(&web)?) {
            Ok(r) => {
                if json {
                    let trace: Vec<Vec<String>> = r
                        .trace
                        .iter()
                        .map(|state| state.iter().map(|s| s.to_string()).collect())
                        .collect();
                    println!("{}", pretty(&json!({"structure": r.structure.to_string(), "trace": trace})));
                } else {
                    for state in &r.trace {
                        let parts: Vec<String> = state.iter().map(|s| s.to_string()).collect();
                        println!("{{{}}}", parts.join(" | "));
                    }
                    println!("{}", r.structure);
                }
                Ok(POSITIVE)
            }
            Err(e) => {
                println!("{e}");
                Ok(NEGATIVE)
            }
        },
        Command::GenSn { n, derivation } => {
            if derivation {
                println!("{}", proof_of_sn(n).to_json_string());
            } else {
                println!("{}", s_n(n).structure);
            }
            Ok(POSITIVE)
        }
        Command::FirstRedex { goal, budget, json } => {
            let goal = structure_arg(&goal)?;
            let entries = match first_redex_analysis(&goal, budget) {
                Ok(entries) => entries,
                Err(ProveOutcome::BudgetExceeded { explored }) => {
                    return Err(Failure(BUDGET, format!("budget exceeded after {explored} structures")))
                }
                Err(other) => unreachable!("analysis fails only on budget: {other:?}"),
            };
            let min = min_first_redex_depth(&entries);
            if json {
                let list: Vec<_> = entries
                    .iter()
                    .map(|e| {
                        json!({
                            "rule": e.instance.rule.json_name(),
                            "path": e.instance.position.path,
                            "redex": e.instance.redex.to_string(),
                            "contractum": e.instance.contractum.to_string(),
                            "premise": e.premise.to_string(),
                            "redex_depth": e.redex_depth,
                            "premise_provable": e.premise_provable,
                        })
                    })
                    .collect();
                println!("{}", pretty(&json!({"goal": goal.to_string(), "candidates": list, "min_provable_depth": min})));
            } else {
                println!("{} candidate first steps for {goal}", entries.len());
                for e in entries.iter().filter(|e| e.premise_provable) {
                    println!(
                        "provable: {} on {} at depth {} -> {}",
                        e.instance.rule, e.instance.redex, e.redex_depth, e.premise
                    );
                }
                match min {
                    Some(d) => println!("least provable redex depth: {d}"),
                    None => println!("no provable first step"),
                }
            }
            Ok(if min.is_some() { POSITIVE } else { NEGATIVE })
        }
        Command::DeletePair { derivation, atom } => {
            let d = derivation_arg(&derivation)?;
            let atom: Atom = match parse(&atom).map_err(usage)? {
                Structure::Atom(a) => a,
                other => return Err(usage(format!("{other} is not an atom"))),
            };
            match delete_atom_pair(&d, &atom) {
                Ok(reduced) => {
                    println!("{}", reduced.to_json_string());
                    Ok(POSITIVE)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::ShallowCheck { conclusion, premise, name } => {
            let rule = RuleScheme::parse(&name, &read_arg(&conclusion)?, &read_arg(&premise)?).map_err(usage)?;
            let verdict = validate_shallow_rule(&rule);
            let clauses: Vec<_> = prec_violations(&rule.conclusion.structure, &rule.premise.structure)
                .unwrap_or_default()
                .iter()
                .map(|v| {
                    json!({
                        "clause": v.clause,
                        "a": v.a.to_string(),
                        "b": v.b.to_string(),
                        "premise": v.in_t.symbol(),
                        "conclusion": v.in_r.symbol(),
                    })
                })
                .collect();
            println!(
                "{}",
                pretty(&json!({
                    "rule": rule.name,
                    "conclusion": rule.conclusion.to_string(),
                    "premise": rule.premise.to_string(),
                    "shallow": verdict.shallow,
                    "depth": verdict.depth,
                    "reasons": verdict.reasons,
                    "clauses": clauses,
                }))
            );
            Ok(if verdict.shallow { POSITIVE } else { NEGATIVE })
        }
        Command::Depth { text } => {
            let text = read_arg(&text)?;
            let depth = if text.contains("{}") {
                parse_context(&text).map_err(usage)?.depth()
            } else {
                structure_arg(&text)?.depth()
            };
            println!("{depth}");
            Ok(POSITIVE)
        }
        Command::Fixtures {
            action: FixturesAction::Run { optional },
        } => {
            let mut failed = 0;
            for case in catalog().into_iter().filter(|c| optional || !c.optional) {
                match (case.run)() {
                    Ok(()) => println!("PASS {} (criterion {})", case.name, case.criterion),
                    Err(e) => {
                        failed += 1;
                        println!("FAIL {} (criterion {}): {e}", case.name, case.criterion);
                    }
                }
            }
            Ok(if failed == 0 { POSITIVE } else { NEGATIVE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, message)) => {
            eprintln!("bv: {message}");
            ExitCode::from(code)
        }
    }
}

