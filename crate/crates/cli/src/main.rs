//! `cbs`: command-line front end for canonical basic set computations.
//!
//! Text conventions shared by every subcommand:
//! - multipartitions list components left to right as `λ¹|…|λˡ`, parts
//!   separated by `.`, an empty component written `-` (`4.1|-|2.2`);
//! - rationals are `p/q` or integers, lists are comma-separated;
//! - `symbol` prints its array bottom-to-top, i.e. the row of component `l`
//!   first and the row of component 1 last. Its JSON rows run in component
//!   order, `rows[0]` being component 1.
//!
//! Exit status: 0 on success, 1 when the inputs parse but violate a
//! precondition (or a verification suite finds a counterexample), 2 on
//! malformed command lines.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cbs_core::classify::classify;
use cbs_core::crystal::{crystal_generate, flotw_set, CrystalGraph, CrystalSpec};
use cbs_core::multipartition::enumerate_multipartitions;
use cbs_core::symbol::{a_value, b_sequence, common_size, compare_llm, minimal_symbol_size, shifted_symbol};
use cbs_core::verify::{run, Suite, VerifyConfig};
use cbs_core::{Exec, Multicharge, Multipartition, Perm, WeightSequence};

#[derive(Debug, Parser)]
#[command(name = "cbs", version, about = "Canonical basic sets for Ariki-Koike algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the l-partitions of rank n.
    Enumerate {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the shifted m-symbol of λ, top row = component l.
    Symbol {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        m: WeightSequence,
        #[arg(long, value_parser = parse_multipartition)]
        lambda: Multipartition,
        /// Symbol size; defaults to the smallest admissible one.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Compare λ and μ in the order ≪_m.
    Compare {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        m: WeightSequence,
        #[arg(long, value_parser = parse_multipartition)]
        lambda: Multipartition,
        #[arg(long, value_parser = parse_multipartition)]
        mu: Multipartition,
        #[arg(long)]
        json: bool,
    },
    /// Generate a crystal graph from the empty multipartition up to rank n.
    Crystal {
        #[arg(long, value_parser = parse_charge, allow_hyphen_values = true)]
        charge: Multicharge,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Order::Uglov)]
        order: Order,
        /// Component priority for the Kleshchev order (one-line, 1-based).
        #[arg(long, value_parser = parse_perm)]
        pi: Option<Perm>,
        /// Tie-break permutation for the twisted Uglov order (one-line, 1-based).
        #[arg(long, value_parser = parse_perm)]
        sigma: Option<Perm>,
        /// Write the graph in DOT format.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Vertices per rank and edge triples as JSON, to FILE or stdout.
        #[arg(long, value_name = "FILE", num_args = 0..=1)]
        json: Option<Option<PathBuf>>,
        #[arg(long)]
        sequential: bool,
    },
    /// List the FLOTW multipartitions of rank n; the charge must lie in the strip.
    Flotw {
        #[arg(long, value_parser = parse_charge, allow_hyphen_values = true)]
        charge: Multicharge,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Classify m as regular, asymptotic or singular; always prints JSON.
    Classify {
        #[arg(long, value_parser = parse_weights, allow_hyphen_values = true)]
        m: WeightSequence,
        #[arg(long, value_parser = parse_charge, allow_hyphen_values = true)]
        charge: Multicharge,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        n: usize,
        /// Accepted for uniformity; the output is JSON regardless.
        #[arg(long)]
        json: bool,
    },
    /// Run a property suite exhaustively; exits 1 on any counterexample.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, value_parser = parse_suites)]
        suite: SuiteChoice,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_l: Option<usize>,
        /// Moduli, comma-separated.
        #[arg(long, value_parser = parse_moduli)]
        e: Option<Moduli>,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Order {
    Uglov,
    TwistedUglov,
    Kleshchev,
}

#[derive(Debug, Clone)]
struct SuiteChoice(Vec<Suite>);

#[derive(Debug, Clone)]
struct Moduli(Vec<i64>);

fn parse_weights(s: &str) -> Result<WeightSequence, String> {
    s.parse().map_err(|e: cbs_core::Error| e.to_string())
}

fn parse_charge(s: &str) -> Result<Multicharge, String> {
    s.parse().map_err(|e: cbs_core::Error| e.to_string())
}

fn parse_multipartition(s: &str) -> Result<Multipartition, String> {
    s.parse().map_err(|e: cbs_core::Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<Perm, String> {
    let images = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("`{x}` is not a positive integer")))
        .collect::<Result<Vec<_>, _>>()?;
    Perm::from_one_line(&images).map_err(|e| e.to_string())
}

fn parse_suites(s: &str) -> Result<SuiteChoice, String> {
    if s == "all" {
        return Ok(SuiteChoice(Suite::ALL.to_vec()));
    }
    let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
    s.parse::<Suite>()
        .map(|x| SuiteChoice(vec![x]))
        .map_err(|_| format!("unknown suite `{s}`; expected one of: all, {}", names.join(", ")))
}

fn parse_moduli(s: &str) -> Result<Moduli, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("`{x}` is not an integer")))
        .collect::<Result<Vec<_>, _>>()
        .map(Moduli)
}

/// Failure after successful argument parsing.
#[derive(Debug)]
enum Failure {
    Domain(String),
    Counterexample,
}

impl From<cbs_core::Error> for Failure {
    fn from(e: cbs_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Counterexample) => ExitCode::from(1),
    }
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}

fn print_set(set: &BTreeSet<Multipartition>, json: bool) {
    if json {
        println!("{}", Value::from(strings(set)));
    } else {
        for x in set {
            println!("{x}");
        }
    }
}

fn check_level(what: &str, level: usize, expected: usize) -> Result<(), Failure> {
    if level == expected {
        Ok(())
    } else {
        Err(Failure::Domain(format!("{what} has {level} components but the weight sequence has {expected}")))
    }
}

fn execute(command: Command) -> Result<(), Failure> {
    match command {
        Command::Enumerate { l, n, json } => {
            if l == 0 {
                return Err(Failure::Domain("level must be at least 1".into()));
            }
            let all: BTreeSet<_> = enumerate_multipartitions(l, n).into_iter().collect();
            print_set(&all, json);
        }
        Command::Symbol { m, lambda, size, json } => {
            check_level("λ", lambda.level(), m.level())?;
            let size = size.unwrap_or_else(|| minimal_symbol_size(&lambda, &m));
            let sym = shifted_symbol(&lambda, &m, size)?;
            if json {
                let rows: Vec<Vec<String>> = sym.rows().iter().map(strings).collect();
                println!("{}", json!({ "size": size, "rows": rows }));
            } else {
                println!("{sym}");
            }
        }
        Command::Compare { m, lambda, mu, json } => {
            check_level("λ", lambda.level(), m.level())?;
            check_level("μ", mu.level(), m.level())?;
            let verdict = compare_llm(&lambda, &mu, &m)?;
            let size = common_size(&lambda, &mu, &m);
            if json {
                println!(
                    "{}",
                    json!({
                        "verdict": verdict.as_str(),
                        "size": size,
                        "b_lambda": strings(b_sequence(&lambda, &m, size)?),
                        "b_mu": strings(b_sequence(&mu, &m, size)?),
                        "a_lambda": a_value(&lambda, &m)?.to_string(),
                        "a_mu": a_value(&mu, &m)?.to_string(),
                    })
                );
            } else {
                println!("{}", verdict.as_str());
            }
        }
        Command::Crystal { charge, e, n, order, pi, sigma, dot, json, sequential } => {
            let l = charge.level();
            let spec = match order {
                Order::Uglov => {
                    if pi.is_some() || sigma.is_some() {
                        return Err(Failure::Domain("--pi and --sigma do not apply to the Uglov order".into()));
                    }
                    CrystalSpec::uglov(&charge, e)?
                }
                Order::TwistedUglov => {
                    CrystalSpec::twisted_uglov(&charge, &sigma.unwrap_or_else(|| Perm::identity(l)), e)?
                }
                Order::Kleshchev => CrystalSpec::kleshchev(&charge, &pi.unwrap_or_else(|| Perm::identity(l)), e)?,
            };
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let graph = crystal_generate(&spec, n, exec);
            if let Some(path) = dot {
                fs::write(path, graph.to_dot())?;
            }
            match json {
                Some(None) => println!("{}", crystal_json(&graph, &charge, e)),
                Some(Some(path)) => {
                    fs::write(path, format!("{}\n", crystal_json(&graph, &charge, e)))?;
                    print_set(&graph.top(), false);
                }
                None => print_set(&graph.top(), false),
            }
        }
        Command::Flotw { charge, e, n, json } => print_set(&flotw_set(&charge, e, n)?, json),
        Command::Classify { m, charge, e, n, json: _ } => {
            let c = classify(&m, &charge, e, n)?;
            let out = json!({
                "class": c.class_name(),
                "adapted_charge": c.adapted_charge.values(),
                "sigma": c.adapted_permutation.as_ref().map(Perm::one_line),
                "pi": c.reordering_permutation.as_ref().map(Perm::one_line),
                "basic_set": c.basic_set.as_ref().map(strings),
                "hyperplanes": c.hyperplanes,
            });
            println!("{out}");
        }
        Command::Verify { suite, max_n, max_l, e, sequential, json } => {
            let base = VerifyConfig::default();
            let cfg = VerifyConfig {
                max_n: max_n.unwrap_or(base.max_n),
                max_l: max_l.unwrap_or(base.max_l),
                e_list: e.map(|x| x.0).unwrap_or(base.e_list),
                exec: if sequential { Exec::Sequential } else { Exec::default() },
            };
            if let Some(&bad) = cfg.e_list.iter().find(|&&x| x < 2) {
                return Err(Failure::Domain(format!("e must be at least 2, got {bad}")));
            }
            let mut all_passed = true;
            for s in suite.0 {
                let report = run(s, &cfg)?;
                all_passed &= report.passed();
                if json {
                    println!(
                        "{}",
                        json!({
                            "suite": s.name(),
                            "passed": report.passed(),
                            "checks": report.checks,
                            "skipped": report.skipped,
                            "counterexamples": report.failures,
                            "witnesses": report.witnesses,
                        })
                    );
                } else {
                    println!("{report}");
                }
            }
            if !all_passed {
                return Err(Failure::Counterexample);
            }
        }
    }
    Ok(())
}

fn crystal_json(graph: &CrystalGraph, charge: &Multicharge, e: i64) -> Value {
    let levels: Vec<Vec<String>> = graph.levels.iter().map(strings).collect();
    let edges: Vec<Value> = graph
        .edges
        .iter()
        .map(|(from, to, i)| json!([from.to_string(), to.to_string(), i]))
        .collect();
    json!({ "charge": charge.values(), "e": e, "levels": levels, "edges": edges })
}
