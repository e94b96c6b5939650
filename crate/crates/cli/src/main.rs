//! `pcmat`: load universes, partitions, coverings and matroids from JSON,
//! run an operation, and emit a JSON result.
//!
//! Every command prints one JSON document to stdout with the stable shape
//! `{"schema": 1, "command": ..., "result": ..., "diagnostics": [...]}`
//! (keys alphabetical, output byte-identical across runs). Validation
//! errors exit 1, brute-force capacity errors exit 2; errors are reported
//! as `{"schema": 1, "command": ..., "error": {...}}` plus a line on
//! stderr.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pcmat::json::{partition_value, sets_value, subset_value, InputDoc};
use pcmat::matroid::{check_base_axioms, check_circuit_axioms, check_independence_axioms, Matroid};
use pcmat::verify::{run_all, SweepConfig};
use pcmat::{Error, Partition, PartitionCircuitMatroid, Result, SetFamily, Subset, Universe};

#[derive(Parser)]
#[command(
    name = "pcmat",
    version,
    about = "Partition matroids and rough-set queries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower and upper approximations of a set under a partition or relation
    Approx(CommonArgs),
    /// Lower and upper approximation numbers of a set under a covering
    #[command(name = "approx-number")]
    ApproxNumber(CommonArgs),
    /// Check independence, base, or circuit axioms of a set family
    #[command(name = "check-axioms")]
    CheckAxioms(CommonArgs),
    /// Build a matroid from circuits or independents and dump its families
    Build(CommonArgs),
    /// Rank of a set in a partition-induced or explicit matroid
    Rank(CommonArgs),
    /// Closure of a set in a partition-induced or explicit matroid
    Closure(CommonArgs),
    /// Circuit family of a matroid
    Circuits(CommonArgs),
    /// Base family of a matroid
    Bases(CommonArgs),
    /// Dual matroid: capacities for partition input, families otherwise
    Dual(CommonArgs),
    /// Greedy maximum-weight independent set of a partition matroid
    Greedy(CommonArgs),
    /// Run the verification sweeps
    Verify(CommonArgs),
}

impl Command {
    fn parts(&self) -> (&'static str, &CommonArgs) {
        match self {
            Command::Approx(a) => ("approx", a),
            Command::ApproxNumber(a) => ("approx-number", a),
            Command::CheckAxioms(a) => ("check-axioms", a),
            Command::Build(a) => ("build", a),
            Command::Rank(a) => ("rank", a),
            Command::Closure(a) => ("closure", a),
            Command::Circuits(a) => ("circuits", a),
            Command::Bases(a) => ("bases", a),
            Command::Dual(a) => ("dual", a),
            Command::Greedy(a) => ("greedy", a),
            Command::Verify(a) => ("verify", a),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Read the JSON input document from this file (stdin when absent)
    #[arg(long)]
    input: Option<PathBuf>,
    /// Inline JSON input document
    #[arg(long)]
    json: Option<String>,
    /// Query set as comma-separated element names
    #[arg(long)]
    set: Option<String>,
    /// Per-block capacities as comma-separated integers
    #[arg(long)]
    capacities: Option<String>,
    /// Per-element weights as comma-separated numbers
    #[arg(long)]
    weights: Option<String>,
    /// Exhaustive bound for the verification sweeps
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Close relations reflexively before validating them
    #[arg(long)]
    reflexive_close: bool,
    /// Which axiom system check-axioms should apply
    #[arg(long, value_parser = ["independents", "bases", "circuits"])]
    kind: Option<String>,
    /// Pretty-print the JSON output
    #[arg(long)]
    pretty: bool,
}

struct Outcome {
    result: Value,
    diagnostics: Vec<String>,
    failed: bool,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome {
            result,
            diagnostics: Vec::new(),
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version land here too; they are not failures.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let (name, args) = cli.command.parts();
    match run(name, args) {
        Ok(outcome) => {
            emit(
                name,
                json!({
                    "schema": 1,
                    "command": name,
                    "result": outcome.result,
                    "diagnostics": outcome.diagnostics,
                }),
                args.pretty,
            );
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(error) => {
            let kind = if error.is_capacity() {
                "capacity"
            } else {
                "validation"
            };
            emit(
                name,
                json!({
                    "schema": 1,
                    "command": name,
                    "error": {"kind": kind, "message": error.to_string()},
                }),
                args.pretty,
            );
            eprintln!("error: {error}");
            ExitCode::from(if error.is_capacity() { 2 } else { 1 })
        }
    }
}

fn emit(_command: &str, doc: Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(&doc)
    } else {
        serde_json::to_string(&doc)
    }
    .expect("JSON values serialize");
    println!("{text}");
}

fn run(name: &'static str, args: &CommonArgs) -> Result<Outcome> {
    match name {
        "approx" => cmd_approx(args),
        "approx-number" => cmd_approx_number(args),
        "check-axioms" => cmd_check_axioms(args),
        "build" => cmd_build(args),
        "rank" => cmd_rank(args),
        "closure" => cmd_closure(args),
        "circuits" => cmd_circuits(args),
        "bases" => cmd_bases(args),
        "dual" => cmd_dual(args),
        "greedy" => cmd_greedy(args),
        "verify" => cmd_verify(args),
        _ => unreachable!("command names are a closed set"),
    }
}

fn load_doc(args: &CommonArgs) -> Result<InputDoc> {
    let text = if let Some(inline) = &args.json {
        inline.clone()
    } else if let Some(path) = &args.input {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Json(format!("cannot read {}: {e}", path.display())))?
    } else {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::Json(format!("cannot read stdin: {e}")))?;
        buffer
    };
    InputDoc::parse(&text)
}

/// The query set: `--set` wins over a `"set"` field in the document.
fn query_set(args: &CommonArgs, doc: &InputDoc, universe: &Universe) -> Result<Subset> {
    if let Some(csv) = &args.set {
        return parse_set(universe, csv);
    }
    doc.set(universe)?
        .ok_or(Error::MissingField { field: "set" })
}

fn parse_set(universe: &Universe, csv: &str) -> Result<Subset> {
    if csv.trim().is_empty() {
        return Ok(universe.empty_set());
    }
    let indices = csv
        .split(',')
        .map(|name| {
            let name = name.trim();
            universe.index_of(name).ok_or_else(|| Error::UnknownLabel {
                label: name.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    universe.subset(indices)
}

fn parse_csv<T: std::str::FromStr>(csv: &str, what: &'static str) -> Result<Vec<T>> {
    csv.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| Error::Json(format!("cannot parse {what} entry {:?}", part.trim())))
        })
        .collect()
}

/// Partition from blocks, or from pairs when the document holds a relation.
fn partition_from_doc(args: &CommonArgs, doc: &InputDoc) -> Result<Partition> {
    if doc.pairs.is_some() {
        Ok(doc.relation(args.reflexive_close)?.to_partition())
    } else {
        doc.partition()
    }
}

fn cmd_approx(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    let partition = partition_from_doc(args, &doc)?;
    let x = query_set(args, &doc, partition.universe())?;
    Ok(Outcome::ok(json!({
        "lower": subset_value(&partition.lower_approx(&x)?),
        "upper": subset_value(&partition.upper_approx(&x)?),
    })))
}

fn cmd_approx_number(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    let covering = doc.covering()?;
    let x = query_set(args, &doc, covering.universe())?;
    let mut outcome = Outcome::ok(json!({
        "lower": covering.lower_number(&x)?,
        "upper": covering.upper_number(&x)?,
    }));
    if covering.deduplicated() {
        outcome
            .diagnostics
            .push("duplicate blocks removed".to_string());
    }
    Ok(outcome)
}

fn cmd_check_axioms(args: &CommonArgs) -> Result<Outcome> {
    let kind = args
        .kind
        .as_deref()
        .ok_or(Error::MissingField { field: "--kind" })?;
    let doc = load_doc(args)?;
    let family = doc.family_for(kind)?;
    let report = match kind {
        "independents" => check_independence_axioms(&family)?,
        "bases" => check_base_axioms(&family)?,
        "circuits" => check_circuit_axioms(&family)?,
        _ => unreachable!("clap restricts the kinds"),
    };
    let mut outcome = Outcome::ok(Value::Bool(report.holds()));
    if let Some(violation) = report.violation() {
        outcome.diagnostics.push(violation.to_string());
    }
    Ok(outcome)
}

fn matroid_dump(matroid: &Matroid) -> Result<Value> {
    Ok(json!({
        "independents": sets_value(matroid.independents()),
        "bases": sets_value(matroid.bases().members().expect("explicit family")),
        "circuits": sets_value(matroid.circuits()?.members().expect("explicit family")),
        "rank": matroid.rank_of_universe(),
    }))
}

fn cmd_build(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    let matroid = doc.matroid()?;
    Ok(Outcome::ok(matroid_dump(&matroid)?))
}

fn cmd_rank(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    if doc.has_partition() {
        let matroid = PartitionCircuitMatroid::from_partition(partition_from_doc(args, &doc)?);
        let x = query_set(args, &doc, matroid.universe())?;
        Ok(Outcome::ok(json!(matroid.rank(&x)?)))
    } else {
        let matroid = doc.matroid()?;
        let x = query_set(args, &doc, matroid.universe())?;
        Ok(Outcome::ok(json!(matroid.rank(&x)?)))
    }
}

fn cmd_closure(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    if doc.has_partition() {
        let matroid = PartitionCircuitMatroid::from_partition(partition_from_doc(args, &doc)?);
        let x = query_set(args, &doc, matroid.universe())?;
        Ok(Outcome::ok(subset_value(&matroid.closure(&x)?)))
    } else {
        let matroid = doc.matroid()?;
        let x = query_set(args, &doc, matroid.universe())?;
        Ok(Outcome::ok(subset_value(&matroid.closure(&x)?)))
    }
}

fn oracle_of_partition(partition: &Partition) -> Result<Matroid> {
    let blocks = SetFamily::explicit(partition.universe(), partition.blocks().to_vec())?;
    Matroid::from_circuits(&blocks)
}

fn cmd_circuits(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    if doc.has_partition() {
        let matroid = PartitionCircuitMatroid::from_partition(partition_from_doc(args, &doc)?);
        let circuits = matroid.circuits();
        Ok(Outcome::ok(sets_value(
            circuits.members().expect("explicit family"),
        )))
    } else {
        let matroid = doc.matroid()?;
        let circuits = matroid.circuits()?;
        Ok(Outcome::ok(sets_value(
            circuits.members().expect("explicit family"),
        )))
    }
}

fn cmd_bases(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    let matroid = if doc.has_partition() {
        oracle_of_partition(&partition_from_doc(args, &doc)?)?
    } else {
        doc.matroid()?
    };
    let bases = matroid.bases();
    Ok(Outcome::ok(sets_value(
        bases.members().expect("explicit family"),
    )))
}

fn cmd_dual(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    if doc.has_partition() {
        let matroid = partition_matroid_from(args, &doc)?;
        let dual = matroid.dual();
        let mut outcome = Outcome::ok(json!({
            "partition": partition_value(dual.partition()),
            "capacities": dual.capacities(),
        }));
        if matroid.clamped() {
            outcome
                .diagnostics
                .push("capacities clamped to block sizes".to_string());
        }
        Ok(outcome)
    } else {
        let dual = doc.matroid()?.dual()?;
        Ok(Outcome::ok(matroid_dump(&dual)?))
    }
}

fn partition_matroid_from(args: &CommonArgs, doc: &InputDoc) -> Result<pcmat::PartitionMatroid> {
    let partition = partition_from_doc(args, doc)?;
    let capacities = if let Some(csv) = &args.capacities {
        parse_csv::<usize>(csv, "capacity")?
    } else if let Some(capacities) = &doc.capacities {
        capacities.clone()
    } else {
        partition
            .blocks()
            .iter()
            .map(|b| b.cardinality() - 1)
            .collect()
    };
    pcmat::PartitionMatroid::new(partition, capacities)
}

fn cmd_greedy(args: &CommonArgs) -> Result<Outcome> {
    let doc = load_doc(args)?;
    let matroid = partition_matroid_from(args, &doc)?;
    let weights = if let Some(csv) = &args.weights {
        parse_csv::<f64>(csv, "weight")?
    } else {
        doc.weights
            .clone()
            .ok_or(Error::MissingField { field: "weights" })?
    };
    let picked = matroid.greedy_max_weight_independent(&weights)?;
    let total: f64 = picked.iter().map(|e| weights[e]).sum();
    let mut outcome = Outcome::ok(json!({
        "set": subset_value(&picked),
        "weight": total,
    }));
    if matroid.clamped() {
        outcome
            .diagnostics
            .push("capacities clamped to block sizes".to_string());
    }
    Ok(outcome)
}

fn cmd_verify(args: &CommonArgs) -> Result<Outcome> {
    let config = SweepConfig {
        exhaustive_max_n: args.max_n,
        ..SweepConfig::default()
    };
    let reports = run_all(&config);
    for report in &reports {
        eprintln!("{report}");
    }
    let failures: u64 = reports.iter().map(|r| r.failures).sum();
    let sweeps: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "checks": r.checks,
                "failures": r.failures,
            })
        })
        .collect();
    Ok(Outcome {
        result: json!({"sweeps": sweeps, "failures": failures}),
        diagnostics: reports
            .iter()
            .filter_map(|r| r.first_failure.clone())
            .collect(),
        failed: failures > 0,
    })
}
