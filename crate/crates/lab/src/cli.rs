use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use engel_core::{
    construct::GroupSpec,
    engel_outcome,
    group::{prime_divisors, EnumerationCap},
    lab::{
        default_corpus, reproduce_example, star_search, sylow_engel_hunt, theorem_scan_many, ExampleId, SpanFilter,
        StarCondition, TheoremId,
    },
    mutual_engel, series, ConstructionSpec, Error, Group, Permutation,
};
use serde_json::{json, Value};

use crate::{
    golden::{self, GoldenOutcome},
    report::{Report, Status, Timing},
    LabError, Pool, SCHEMA,
};

#[derive(Debug, Parser)]
#[command(name = "engel-lab", version, about = "Engel elements and nilpotency in finite permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Print the report as JSON.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Print the report as indented text (default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Largest group the tool will enumerate element by element.
    #[arg(long, global = true, default_value_t = EnumerationCap::DEFAULT.max_elements)]
    pub cap: usize,
    /// Threads used by searches; defaults to the number of CPUs.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce a worked example and compare it with its golden report.
    Examples {
        /// dihedral(n), wreath or s8
        #[arg(long)]
        id: ExampleId,
    },
    /// Engel degrees of x against y and of y against x.
    Degree {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Lower central and derived series and structural predicates.
    Analyze {
        #[arg(long)]
        group: GroupSpec,
    },
    /// All y with [x, _n y] = [y, _n x] = 1, classified up to C(x).
    SearchStar {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
    },
    /// Scan a nilpotency criterion over a corpus of groups.
    Theorems {
        /// A criterion id, or `all`.
        #[arg(long)]
        id: String,
        /// Groups to scan, separated by `;` or given repeatedly.
        #[arg(long, value_delimiter = ';')]
        corpus: Vec<ConstructionSpec>,
    },
    /// Pairs of p-elements with a p-element commutator and a non-nilpotent span.
    SylowHunt {
        #[arg(long)]
        group: GroupSpec,
        #[arg(long)]
        prime: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Nonnilpotent,
}

impl From<FilterArg> for SpanFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => SpanFilter::All,
            FilterArg::Nonnilpotent => SpanFilter::NonnilpotentSpan,
        }
    }
}

fn quote(arg: &str) -> String {
    if !arg.is_empty() && arg.chars().all(|c| c.is_ascii_alphanumeric() || "-_./=,".contains(c)) {
        arg.to_string()
    } else {
        format!("'{}'", arg.replace('\'', r"'\''"))
    }
}

/// Shell-style echo of an argument vector.
pub fn echo<S: AsRef<str>>(args: &[S]) -> String {
    args.iter().map(|a| quote(a.as_ref())).collect::<Vec<_>>().join(" ")
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

fn element(group: &Group, text: &str) -> Result<Permutation, LabError> {
    let p = Permutation::parse(text, Some(group.degree()))?;
    if !group.contains(&p)? {
        return Err(Error::NotMember(p.to_string()).into());
    }
    Ok(p)
}

/// Runs one parsed command. `command` is the echo stored in the report.
pub fn run(cli: &Cli, command: String) -> Result<Report, LabError> {
    let start = Instant::now();
    let cap = EnumerationCap::new(cli.cap);
    let pool = Pool::new(cli.workers).map_err(|e| LabError::Usage(e.to_string()))?;
    let mut status = Status::Ok;

    let (inputs, results) = match &cli.command {
        Command::Examples { id } => {
            let report = reproduce_example(*id, cap, &pool)?;
            let value = to_value(&report);
            let golden = golden::compare(*id, &value)?;
            if !report.passed() || golden == GoldenOutcome::Mismatch {
                status = Status::Mismatch;
            }
            (
                json!({ "example": id.to_string() }),
                json!({
                    "passed": report.passed(),
                    "golden": golden.as_str(),
                    "golden_file": golden::file_name(*id),
                    "report": value,
                }),
            )
        }
        Command::Degree { group, x, y } => {
            let g = group.build()?;
            let (x, y) = (element(&g, x)?, element(&g, y)?);
            let mutual = mutual_engel(&x, &y);
            (
                json!({ "group": group.to_string(), "x": x, "y": y }),
                json!({
                    "mutual": mutual,
                    "mutual_degree": mutual.mutual_degree(),
                    "x_against_y": engel_outcome(&x, &y),
                    "y_against_x": engel_outcome(&y, &x),
                }),
            )
        }
        Command::Analyze { group } => {
            let g = group.build()?;
            (json!({ "group": group.to_string() }), analyze(&g, cap)?)
        }
        Command::SearchStar { group, x, n, filter } => {
            let g = group.build()?;
            let x = element(&g, x)?;
            let report = star_search(&g, &x, StarCondition { n: *n as usize }, (*filter).into(), cap, &pool)?;
            (
                json!({ "group": group.to_string(), "x": x, "n": n, "filter": SpanFilter::from(*filter) }),
                json!({
                    "solution_count": report.solution_count(),
                    "orbit_count": report.orbits.len(),
                    "orbit_arithmetic_holds": report.orbit_arithmetic_holds(),
                    "search": report,
                }),
            )
        }
        Command::Theorems { id, corpus } => {
            let ids: Vec<TheoremId> = if id.trim() == "all" { TheoremId::ALL.to_vec() } else { vec![id.parse()?] };
            let corpus = if corpus.is_empty() { default_corpus() } else { corpus.clone() };
            let reports = theorem_scan_many(&corpus, &ids, cap, &pool)?;
            let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
            if violations > 0 {
                status = Status::Mismatch;
            }
            (
                json!({
                    "theorems": ids.iter().map(TheoremId::as_str).collect::<Vec<_>>(),
                    "corpus": corpus.iter().map(ToString::to_string).collect::<Vec<_>>(),
                }),
                json!({ "total_violations": violations, "scans": reports }),
            )
        }
        Command::SylowHunt { group, prime } => {
            let g = group.build()?;
            let report = sylow_engel_hunt(&g, *prime, cap, &pool)?;
            (
                json!({ "group": group.to_string(), "prime": prime }),
                json!({ "hit_count": report.hits.len(), "hunt": report }),
            )
        }
    };

    Ok(Report {
        schema: SCHEMA.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        command,
        inputs,
        status,
        results,
        timing: Timing { wall_ms: start.elapsed().as_millis() as u64, workers: pool.workers() },
    })
}

fn analyze(g: &Group, cap: EnumerationCap) -> Result<Value, LabError> {
    let lower = series::lower_central_series(g);
    let derived = series::derived_series(g);
    let center = g.center(cap)?;
    let mut sylow = Vec::new();
    for p in prime_divisors(g.order()) {
        let s = g.sylow_subgroup(p, cap)?;
        sylow.push(json!({
            "prime": p,
            "order": s.order(),
            "class": series::nilpotency_class(&s),
            "normal": g.is_normal(&s)?,
        }));
    }
    Ok(json!({
        "order": g.order(),
        "degree": g.degree(),
        "generators": g.generators(),
        "abelian": g.is_abelian(),
        "nilpotent": lower.terminated_trivial,
        "nilpotency_class": lower.class_or_length,
        "soluble": derived.terminated_trivial,
        "derived_length": derived.class_or_length,
        "metabelian": series::is_metabelian(g),
        "nilpotent_by_abelian": series::is_nilpotent_by_abelian(g),
        "abelian_by_class": (1..=3).map(|c| json!({ "class": c, "holds": series::is_abelian_by_class(g, c) })).collect::<Vec<_>>(),
        "center_order": center.order(),
        "lower_central": lower,
        "derived": derived,
        "sylow": sylow,
    }))
}
