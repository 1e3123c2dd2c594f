//! Command-line workbench for finite Heyting algebras: algebra I/O and
//! analysis, embedding and quotient queries, characteristic formulas, the
//! primitivity decision, and DOT export of Hasse diagrams.
//!
//! Exit codes: 0 for success or a true verdict, 1 for a false verdict
//! ("not primitive", "none" for a missing embedding), 2 for input errors,
//! 3 for an exceeded search budget.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use heyting::catalog;
use heyting::kernel::{from_covers, is_isomorphic, sum, AlgebraMap, HeytingAlgebra};
use heyting::logic::{
    self, assemble_verdict, jankov_formula, parse_axiom_file, prohibited_report,
    AlgebraOutcome, LogicError, Valuation,
};
use heyting::morphisms::{embeds, homomorphic_images, in_generated_variety};
use heyting::structure::{
    classify, coatoms, is_si, nodeless_decomposition, nodes, smallest_dense,
};
use heyting::wqo::block_signature;

/// On-disk algebra interchange document: a named Hasse diagram. Bottom and
/// top are inferred, never declared.
#[derive(Serialize, Deserialize)]
struct AlgebraDocument {
    name: String,
    size: usize,
    covers: Vec<(usize, usize)>,
}

impl AlgebraDocument {
    fn of(alg: &HeytingAlgebra, fallback: &str) -> Self {
        AlgebraDocument {
            name: alg.name().unwrap_or(fallback).to_string(),
            size: alg.size(),
            covers: alg
                .covers()
                .iter()
                .map(|&(l, u)| (l.index(), u.index()))
                .collect(),
        }
    }

    fn build(&self) -> Result<HeytingAlgebra, CliError> {
        if self.size == 0 {
            return Err(CliError::Input(format!(
                "document {}: size must be positive",
                self.name
            )));
        }
        from_covers(self.size, &self.covers)
            .map(|a| a.with_name(&self.name))
            .map_err(|e| CliError::Input(format!("document {}: {e}", self.name)))
    }
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Budget(String),
}

impl From<LogicError> for CliError {
    fn from(e: LogicError) -> Self {
        match e {
            LogicError::SearchBudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Parser)]
#[command(name = "heyt", version, about = "finite Heyting algebra workbench")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Cap on connective evaluations per validity search. The HEYT_BUDGET
    /// environment variable overrides this flag.
    #[arg(long, global = true, default_value_t = logic::DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads for independent checks.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for sampled property runs; reserved. All outputs are
    /// deterministic for a fixed seed and job count.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the operation tables and element classification of an algebra.
    Show { target: String },
    /// Classify elements: dense/regular/ordinary, coatoms, nodes, smallest
    /// dense element, subdirect irreducibility, nodeless decomposition.
    Analyze { target: String },
    /// Coalesced ordinal sum of two or more algebras.
    Sum {
        #[arg(num_args = 2..)]
        targets: Vec<String>,
    },
    /// Search for an embedding of the first algebra into the second.
    Embed { small: String, large: String },
    /// List all homomorphic images (one per principal filter).
    Hom { target: String },
    /// Search for an isomorphism.
    Iso { left: String, right: String },
    /// Does the first algebra lie in the variety generated by the second?
    Variety { inner: String, generator: String },
    /// Print the characteristic formula of a subdirectly irreducible algebra.
    Jankov { target: String },
    /// Check validity of a formula (or of every formula in a file).
    Valid { target: String, formula: String },
    /// Decide whether the variety axiomatized by a file of formulas is
    /// primitive, equivalently whether the logic is hereditarily
    /// structurally complete.
    Primitive { axioms: PathBuf },
    /// Block signature of a diamond-headed projective-shaped algebra.
    Signature { target: String },
    /// Stream all algebras whose join-irreducible poset has at most the
    /// given number of elements, as algebra documents.
    Corpus { max_poset_size: usize },
    /// Hasse diagram as a DOT digraph.
    ExportDot { target: String },
}

fn load_algebra(target: &str) -> Result<HeytingAlgebra, CliError> {
    if let Some(alg) = catalog::by_name(target) {
        return Ok(alg);
    }
    let path = Path::new(target);
    if !path.exists() {
        return Err(CliError::Input(format!(
            "'{target}' is neither a catalog name ({}) nor a file",
            catalog::names().join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{target}: {e}")))?;
    let doc: AlgebraDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{target}: {e}")))?;
    doc.build()
}

/// Name an algebra by catalog lookup, for human-readable reports.
fn identify(alg: &HeytingAlgebra) -> String {
    for entry in catalog::entries() {
        if entry.algebra.size() == alg.size()
            && is_isomorphic(&entry.algebra, alg).is_some()
        {
            return entry.name.to_string();
        }
    }
    format!("?{}", alg.size())
}

fn dot_of(alg: &HeytingAlgebra, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{name}\" {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for x in alg.elements() {
        let mut attrs = String::new();
        if x == alg.bottom() {
            attrs = " [shape=box]".into();
        } else if x == alg.top() {
            attrs = " [shape=doublecircle]".into();
        }
        writeln!(out, "  n{x}{attrs};").unwrap();
    }
    for (l, u) in alg.covers() {
        writeln!(out, "  n{l} -> n{u};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

fn valuation_json(v: &Valuation) -> serde_json::Value {
    serde_json::Value::Object(
        v.iter()
            .map(|(k, e)| (k.to_string(), serde_json::json!(e.index())))
            .collect(),
    )
}

fn classification_json(alg: &HeytingAlgebra) -> serde_json::Value {
    let cls = classify(alg);
    let ids = |v: Vec<heyting::ElementId>| -> Vec<usize> {
        v.into_iter().map(|e| e.index()).collect()
    };
    serde_json::json!({
        "dense": ids(cls.dense_elements()),
        "regular": ids(cls.regular_elements()),
        "ordinary": ids(cls.ordinary_elements()),
        "coatoms": ids(cls.coatoms()),
        "nodes": ids(cls.nodes()),
    })
}

fn print_table(alg: &HeytingAlgebra, label: &str, f: impl Fn(usize, usize) -> usize) {
    println!("{label}:");
    for i in 0..alg.size() {
        let row: Vec<String> = (0..alg.size()).map(|j| f(i, j).to_string()).collect();
        println!("  {i:>3} | {}", row.join(" "));
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Show { target } => {
            let alg = load_algebra(target)?;
            match cli.format {
                Format::Dot => print!("{}", dot_of(&alg, target)),
                Format::Json => {
                    let doc = AlgebraDocument::of(&alg, target);
                    let value = serde_json::json!({
                        "name": doc.name,
                        "size": doc.size,
                        "covers": doc.covers,
                        "bottom": alg.bottom().index(),
                        "top": alg.top().index(),
                        "meet": table_json(&alg, |i, j| alg.meet(alg.element(i), alg.element(j)).index()),
                        "join": table_json(&alg, |i, j| alg.join(alg.element(i), alg.element(j)).index()),
                        "imp": table_json(&alg, |i, j| alg.imp(alg.element(i), alg.element(j)).index()),
                        "neg": (0..alg.size()).map(|i| alg.neg(alg.element(i)).index()).collect::<Vec<_>>(),
                        "classification": classification_json(&alg),
                    });
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                Format::Text => {
                    println!(
                        "{} ({} elements, bottom {}, top {})",
                        alg.name().unwrap_or(target),
                        alg.size(),
                        alg.bottom(),
                        alg.top()
                    );
                    let covers: Vec<String> = alg
                        .covers()
                        .iter()
                        .map(|(l, u)| format!("{l}<{u}"))
                        .collect();
                    println!("covers: {}", covers.join(" "));
                    print_table(&alg, "meet", |i, j| {
                        alg.meet(alg.element(i), alg.element(j)).index()
                    });
                    print_table(&alg, "join", |i, j| {
                        alg.join(alg.element(i), alg.element(j)).index()
                    });
                    print_table(&alg, "imp", |i, j| {
                        alg.imp(alg.element(i), alg.element(j)).index()
                    });
                    let neg: Vec<String> = (0..alg.size())
                        .map(|i| alg.neg(alg.element(i)).index().to_string())
                        .collect();
                    println!("neg: {}", neg.join(" "));
                    print_classification(&alg);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { target } => {
            let alg = load_algebra(target)?;
            match cli.format {
                Format::Json => {
                    let mut value = classification_json(&alg);
                    let obj = value.as_object_mut().unwrap();
                    obj.insert("name".into(), serde_json::json!(alg.name().unwrap_or(target)));
                    obj.insert("size".into(), serde_json::json!(alg.size()));
                    if !alg.is_trivial() {
                        obj.insert(
                            "smallest_dense".into(),
                            serde_json::json!(smallest_dense(&alg).unwrap().index()),
                        );
                        obj.insert(
                            "subdirectly_irreducible".into(),
                            serde_json::json!(is_si(&alg).unwrap()),
                        );
                        let dec = nodeless_decomposition(&alg).unwrap();
                        obj.insert(
                            "decomposition".into(),
                            serde_json::json!(dec
                                .components
                                .iter()
                                .map(identify)
                                .collect::<Vec<_>>()),
                        );
                        obj.insert(
                            "junction_nodes".into(),
                            serde_json::json!(dec
                                .junction_nodes
                                .iter()
                                .map(|e| e.index())
                                .collect::<Vec<_>>()),
                        );
                    }
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                _ => {
                    println!("{} ({} elements)", alg.name().unwrap_or(target), alg.size());
                    print_classification(&alg);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sum { targets } => {
            let mut acc = load_algebra(&targets[0])?;
            for t in &targets[1..] {
                acc = sum(&acc, &load_algebra(t)?);
            }
            let name = targets.join("+");
            emit_algebra(&acc, &name, cli.format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { small, large } => {
            let a = load_algebra(small)?;
            let b = load_algebra(large)?;
            emit_map(embeds(&a, &b).as_ref(), cli.format)
        }
        Command::Iso { left, right } => {
            let a = load_algebra(left)?;
            let b = load_algebra(right)?;
            emit_map(is_isomorphic(&a, &b).as_ref(), cli.format)
        }
        Command::Hom { target } => {
            let alg = load_algebra(target)?;
            let images = homomorphic_images(&alg);
            match cli.format {
                Format::Json => {
                    let list: Vec<serde_json::Value> = images
                        .iter()
                        .map(|q| {
                            serde_json::json!({
                                "generator": q.generator.index(),
                                "size": q.quotient.size(),
                                "name": identify(&q.quotient),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&list).unwrap());
                }
                _ => {
                    for q in &images {
                        println!(
                            "filter at {}: {} elements, {}",
                            q.generator,
                            q.quotient.size(),
                            identify(&q.quotient)
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Variety { inner, generator } => {
            let w = load_algebra(inner)?;
            let p = load_algebra(generator)?;
            let verdict = in_generated_variety(&w, &p);
            match cli.format {
                Format::Json => println!("{}", serde_json::json!({ "member": verdict })),
                _ => println!("{verdict}"),
            }
            Ok(if verdict { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Jankov { target } => {
            let alg = load_algebra(target)?;
            let formula = jankov_formula(&alg)?;
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::json!({ "formula": formula.to_string() }))
                }
                _ => println!("{formula}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Valid { target, formula } => {
            let alg = load_algebra(target)?;
            let formulas: Vec<(String, logic::Formula)> = if Path::new(formula).exists() {
                let text = std::fs::read_to_string(formula)
                    .map_err(|e| CliError::Input(format!("{formula}: {e}")))?;
                parse_axiom_file(&text)?
                    .into_iter()
                    .map(|f| (f.to_string(), f))
                    .collect()
            } else {
                let f = logic::parse(formula)?;
                vec![(f.to_string(), f)]
            };
            let budget = cli.budget;
            let results: Vec<(String, Option<Valuation>)> = pool(cli.jobs).install(|| {
                formulas
                    .par_iter()
                    .map(|(s, f)| {
                        logic::is_valid_with_budget(&alg, f, budget).map(|r| (s.clone(), r))
                    })
                    .collect::<Result<_, _>>()
            })?;
            let mut all_valid = true;
            match cli.format {
                Format::Json => {
                    let list: Vec<serde_json::Value> = results
                        .iter()
                        .map(|(s, r)| match r {
                            None => serde_json::json!({ "formula": s, "valid": true }),
                            Some(v) => {
                                all_valid = false;
                                serde_json::json!({
                                    "formula": s,
                                    "valid": false,
                                    "countervaluation": valuation_json(v),
                                })
                            }
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&list).unwrap());
                }
                _ => {
                    for (s, r) in &results {
                        match r {
                            None => println!("valid: {s}"),
                            Some(v) => {
                                all_valid = false;
                                println!("invalid: {s}  [{v}]");
                            }
                        }
                    }
                }
            }
            Ok(if all_valid { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Primitive { axioms } => {
            let text = std::fs::read_to_string(axioms)
                .map_err(|e| CliError::Input(format!("{}: {e}", axioms.display())))?;
            let parsed = parse_axiom_file(&text)?;
            let budget = cli.budget;
            let reports = pool(cli.jobs).install(|| {
                (1..=5usize)
                    .into_par_iter()
                    .map(|i| prohibited_report(i, &parsed, budget))
                    .collect::<Result<Vec<_>, _>>()
            })?;
            let verdict = assemble_verdict(reports);
            match cli.format {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = verdict
                        .reports
                        .iter()
                        .map(|r| match &r.outcome {
                            AlgebraOutcome::Model => {
                                serde_json::json!({ "algebra": r.name, "model": true })
                            }
                            AlgebraOutcome::Refutes { axiom, countervaluation } => {
                                serde_json::json!({
                                    "algebra": r.name,
                                    "model": false,
                                    "axiom": axiom,
                                    "countervaluation": valuation_json(countervaluation),
                                })
                            }
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "primitive": verdict.primitive,
                            "reports": rows,
                        }))
                        .unwrap()
                    );
                }
                _ => {
                    for r in &verdict.reports {
                        match &r.outcome {
                            AlgebraOutcome::Model => {
                                println!("{}: model of every axiom", r.name)
                            }
                            AlgebraOutcome::Refutes { axiom, countervaluation } => {
                                println!(
                                    "{}: refutes axiom {} [{}]",
                                    r.name, axiom, countervaluation
                                );
                            }
                        }
                    }
                    println!(
                        "verdict: {}",
                        if verdict.primitive { "primitive" } else { "not primitive" }
                    );
                }
            }
            Ok(if verdict.primitive { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Signature { target } => {
            let alg = load_algebra(target)?;
            let sig = block_signature(&alg)
                .map_err(|e| CliError::Input(e.to_string()))?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({ "head": sig.head(), "word": sig.word() })
                ),
                _ => println!("{sig}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Corpus { max_poset_size } => {
            let iter = catalog::corpus(*max_poset_size)
                .map_err(|e| CliError::Input(e.to_string()))?;
            for alg in iter {
                let doc = AlgebraDocument::of(&alg, "corpus");
                match cli.format {
                    Format::Json => println!("{}", serde_json::to_string(&doc).unwrap()),
                    _ => {
                        let covers: Vec<String> = doc
                            .covers
                            .iter()
                            .map(|(l, u)| format!("{l}<{u}"))
                            .collect();
                        println!("{}: size {}, covers {}", doc.name, doc.size, covers.join(" "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ExportDot { target } => {
            let alg = load_algebra(target)?;
            print!("{}", dot_of(&alg, alg.name().unwrap_or(target)));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn table_json(alg: &HeytingAlgebra, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..alg.size())
        .map(|i| (0..alg.size()).map(|j| f(i, j)).collect())
        .collect()
}

fn print_classification(alg: &HeytingAlgebra) {
    let cls = classify(alg);
    let fmt = |v: Vec<heyting::ElementId>| -> String {
        v.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
    };
    println!("dense: {}", fmt(cls.dense_elements()));
    println!("regular: {}", fmt(cls.regular_elements()));
    println!("ordinary: {}", fmt(cls.ordinary_elements()));
    println!("coatoms: {}", fmt(coatoms(alg)));
    println!("nodes: {}", fmt(nodes(alg)));
    if !alg.is_trivial() {
        println!("smallest dense: {}", smallest_dense(alg).unwrap());
        println!("subdirectly irreducible: {}", is_si(alg).unwrap());
        let dec = nodeless_decomposition(alg).unwrap();
        let parts: Vec<String> = dec.components.iter().map(identify).collect();
        println!("nodeless decomposition: [{}]", parts.join(", "));
    }
}

fn emit_algebra(alg: &HeytingAlgebra, name: &str, format: Format) {
    match format {
        Format::Dot => print!("{}", dot_of(alg, name)),
        Format::Json => {
            let doc = AlgebraDocument::of(alg, name);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            let doc = AlgebraDocument::of(alg, name);
            let covers: Vec<String> =
                doc.covers.iter().map(|(l, u)| format!("{l}<{u}")).collect();
            println!("{}: size {}, covers {}", doc.name, doc.size, covers.join(" "));
        }
    }
}

fn emit_map(map: Option<&AlgebraMap>, format: Format) -> Result<ExitCode, CliError> {
    match map {
        Some(m) => {
            match format {
                Format::Json => {
                    let assign: Vec<usize> =
                        m.assignments().iter().map(|e| e.index()).collect();
                    println!(
                        "{}",
                        serde_json::json!({ "found": true, "map": assign })
                    );
                }
                _ => {
                    for (i, e) in m.assignments().iter().enumerate() {
                        println!("{i} -> {e}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        None => {
            match format {
                Format::Json => println!("{}", serde_json::json!({ "found": false })),
                _ => println!("none"),
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

fn main() -> ExitCode {
    // die quietly when a downstream pipe closes, as pipeline tools do
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let mut cli = Cli::parse();
    if let Ok(raw) = std::env::var("HEYT_BUDGET") {
        match raw.parse::<u64>() {
            Ok(v) => cli.budget = v,
            Err(_) => {
                eprintln!("error: HEYT_BUDGET must be an integer, got '{raw}'");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
