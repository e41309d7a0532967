//! Command-line driver: validation, operator computation, classification,
//! subspace induction, verification sweeps, counterexample mining, and
//! enumeration streams.
//!
//! Exit codes: 0 = pass / witness found; 1 = verification failure or
//! exhausted search or classification disagreement; 2 = usage, parse, or
//! validation error.

use clap::{Parser, Subcommand, ValueEnum};
use gt_core::doc::{MappingDoc, SpaceDoc};
use gt_core::enumerate::{
    canonicalize, enumerate_strong_gts, EnumBounds, EnumMode,
};
use gt_core::mapping::ClassificationVector;
use gt_core::set::SubSet;
use gt_core::verify::{
    mine_counterexample, run_suite, MineOutcome, MinePreset, TheoremId, TheoremStatus,
};
use serde_json::json;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gt", about = "Finite generalized-topological-space engine", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Operator {
    Interior,
    Closure,
    Derived,
    Nbhd,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a space document and report strongness/topology flags.
    Validate {
        /// Path to a space document, or - for stdin.
        #[arg(long)]
        input: String,
    },
    /// Apply an operator to a subset (or a point, for nbhd) of a space.
    Compute {
        #[arg(long)]
        input: String,
        #[arg(long, value_enum)]
        op: Operator,
        /// Comma-separated point labels; empty string for the empty set.
        #[arg(long, default_value = "")]
        set: String,
        /// Single point label (nbhd only).
        #[arg(long)]
        point: Option<String>,
    },
    /// Classify a mapping document by the five mapping classes.
    Classify {
        #[arg(long)]
        input: String,
        /// Evaluate every characterization condition and hereditary flag.
        #[arg(long)]
        full: bool,
    },
    /// Induce the subspace on a carrier, optionally applying a relative operator.
    Subspace {
        #[arg(long)]
        input: String,
        /// Comma-separated carrier labels.
        #[arg(long)]
        carrier: String,
        #[arg(long, value_enum)]
        op: Option<Operator>,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Run theorem verification sweeps over the exhaustive population.
    Verify {
        /// Bounds as NxM (max domain x max codomain points).
        #[arg(long, default_value = "3x3")]
        bounds: String,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long)]
        theorems: Option<String>,
        /// Sample this many seeded random instances instead of enumerating.
        #[arg(long)]
        random_count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Mine a minimal counterexample separating two mapping classes.
    Mine {
        /// One of the named presets (see --help for the list).
        #[arg(long, value_parser = MinePreset::parse)]
        preset: MinePreset,
        #[arg(long, default_value = "4x3")]
        bounds: String,
    },
    /// Enumerate all strong GT-spaces on n points.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print only the count.
        #[arg(long)]
        count: bool,
        /// Emit one relabeling class per canonical form.
        #[arg(long)]
        dedupe_iso: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            if cli.format == Format::Json {
                eprintln!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("failed to read stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("failed to read {input}: {e}"))
    }
}

fn load_space(input: &str) -> Result<gt_core::GtSpace, String> {
    let text = read_input(input)?;
    let doc: SpaceDoc = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    doc.to_space().map_err(|e| e.to_string())
}

fn load_mapping(input: &str) -> Result<gt_core::GtMapping, String> {
    let text = read_input(input)?;
    let doc: MappingDoc = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let base: Option<PathBuf> = if input == "-" {
        None
    } else {
        Path::new(input).parent().map(|p| p.to_path_buf())
    };
    doc.to_mapping(base.as_deref()).map_err(|e| e.to_string())
}

fn parse_label_set(space: &gt_core::GtSpace, set: &str) -> Result<SubSet, String> {
    if set.is_empty() {
        return Ok(SubSet::empty(space.len()));
    }
    space.subset_from_labels(set.split(','))
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once('x')
        .ok_or_else(|| format!("bounds must look like NxM, got {s:?}"))?;
    let n = a.parse().map_err(|_| format!("bad bound {a:?}"))?;
    let m = b.parse().map_err(|_| format!("bad bound {b:?}"))?;
    Ok((n, m))
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Validate { input } => {
            let space = load_space(input)?;
            let out = json!({
                "valid": true,
                "strong": true,
                "is_topology": space.is_topology(),
                "space": SpaceDoc::from_space(&space),
            });
            emit(cli.format, &out, |_| {
                format!(
                    "valid strong GT-space on {} points; topology: {}",
                    space.len(),
                    space.is_topology()
                )
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Compute {
            input,
            op,
            set,
            point,
        } => {
            let space = load_space(input)?;
            let result = match op {
                Operator::Nbhd => {
                    let label = point
                        .as_deref()
                        .ok_or("--point is required for op nbhd")?;
                    let p = space
                        .point_by_label(label)
                        .ok_or_else(|| format!("unknown point label {label:?}"))?;
                    space.neighborhood_core(p)
                }
                _ => {
                    let b = parse_label_set(&space, set)?;
                    match op {
                        Operator::Interior => space.interior(b),
                        Operator::Closure => space.closure(b),
                        Operator::Derived => space.derived_set(b),
                        Operator::Nbhd => unreachable!(),
                    }
                }
            };
            let labels = space.labels_of(result);
            emit(cli.format, &json!({ "result": labels }), |_| {
                format!("[{}]", labels.join(","))
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { input, full } => {
            let f = load_mapping(input)?;
            let vector = ClassificationVector::classify(&f);
            let summary = json!({
                "g_continuous": f.is_g_continuous(),
                "open": f.is_g_open(),
                "closed": f.is_g_closed(),
                "pseudo_open": f.is_g_pseudo_open(),
                "quotient": f.is_g_quotient(),
            });
            let out = if *full {
                json!({ "classes": summary, "conditions": vector })
            } else {
                json!({ "classes": summary })
            };
            emit(cli.format, &out, |_| {
                format!(
                    "continuous={} open={} closed={} pseudo_open={} quotient={}",
                    f.is_g_continuous(),
                    f.is_g_open(),
                    f.is_g_closed(),
                    f.is_g_pseudo_open(),
                    f.is_g_quotient()
                )
            });
            if *full && !vector.is_consistent() {
                eprintln!("internal equivalence disagreement: implementation bug");
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Subspace {
            input,
            carrier,
            op,
            set,
        } => {
            let space = load_space(input)?;
            let carrier_set = parse_label_set(&space, carrier)?;
            let emb = gt_core::induce_subspace(&space, carrier_set)
                .map_err(|e| e.to_string())?;
            let child_doc = SpaceDoc::from_space(emb.child());
            let relative = match op {
                None => None,
                Some(Operator::Nbhd) => {
                    return Err("nbhd is not a relative operator".into())
                }
                Some(o) => {
                    let a = parse_label_set(&space, set)?;
                    let r = match o {
                        Operator::Interior => emb.relative_interior(a),
                        Operator::Closure => emb.relative_closure(a),
                        Operator::Derived => {
                            Ok(emb.to_parent(emb.child().derived_set(emb.to_child(a))))
                        }
                        Operator::Nbhd => unreachable!(),
                    }
                    .map_err(|e| e.to_string())?;
                    Some(space.labels_of(r))
                }
            };
            let mut out = json!({ "subspace": child_doc });
            if let Some(r) = &relative {
                out["result"] = json!(r);
            }
            emit(cli.format, &out, |_| {
                match &relative {
                    Some(r) => format!("[{}]", r.join(",")),
                    None => format!("subspace on {} points", emb.child().len()),
                }
            });
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            bounds,
            theorems,
            random_count,
            seed,
        } => {
            let (n, m) = parse_bounds(bounds)?;
            let mode = match random_count {
                Some(count) => EnumMode::Random {
                    seed: *seed,
                    count: *count,
                },
                None => EnumMode::Exhaustive,
            };
            let bounds = EnumBounds {
                max_dom_points: n,
                max_cod_points: m,
                mode,
                dedupe_iso: false,
            };
            let ids: Vec<TheoremId> = match theorems {
                None => TheoremId::ALL.to_vec(),
                Some(list) => list
                    .split(',')
                    .map(|s| TheoremId::parse(s.trim()).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?,
            };
            let report = run_suite(&bounds, &ids).map_err(|e| e.to_string())?;
            emit(cli.format, &json!(report), |_| {
                let mut lines = vec![format!(
                    "population: {} spaces, {} mappings",
                    report.population.spaces, report.population.mappings
                )];
                for r in &report.results {
                    lines.push(format!(
                        "{}: {} ({} checked)",
                        r.id,
                        match r.status {
                            TheoremStatus::Pass => "pass",
                            TheoremStatus::Fail => "FAIL",
                            TheoremStatus::WitnessFound => "witness found",
                            TheoremStatus::Exhausted => "exhausted",
                        },
                        r.checked
                    ));
                }
                lines.join("\n")
            });
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Mine { preset, bounds } => {
            let (n, m) = parse_bounds(bounds)?;
            let (premise, conclusion) = preset.target();
            let outcome =
                mine_counterexample(premise, conclusion, &EnumBounds::exhaustive(n, m))
                    .map_err(|e| e.to_string())?;
            match outcome {
                MineOutcome::Witness(w) => {
                    emit(cli.format, &json!({ "witness": w }), |_| {
                        format!(
                            "witness at |X|={}, |Y|={}: table {:?}",
                            w.mapping.dom_points, w.mapping.cod_points, w.mapping.table
                        )
                    });
                    Ok(ExitCode::SUCCESS)
                }
                MineOutcome::Exhausted { searched } => {
                    emit(
                        cli.format,
                        &json!({ "exhausted": { "searched": searched } }),
                        |_| format!("exhausted: no witness in {searched} instances"),
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Enumerate {
            n,
            count,
            dedupe_iso,
        } => {
            let spaces = enumerate_strong_gts(*n).map_err(|e| e.to_string())?;
            let spaces: Vec<_> = if *dedupe_iso {
                let mut seen = std::collections::BTreeSet::new();
                spaces
                    .into_iter()
                    .filter(|s| seen.insert(canonicalize(s)))
                    .collect()
            } else {
                spaces
            };
            if *count {
                emit(cli.format, &json!({ "count": spaces.len() }), |_| {
                    spaces.len().to_string()
                });
            } else {
                // JSON-lines stream, one canonical space document per line
                for s in &spaces {
                    println!("{}", serde_json::to_string(&SpaceDoc::from_space(s)).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit(format: Format, value: &serde_json::Value, text: impl Fn(&serde_json::Value) -> String) {
    match format {
        Format::Json => println!("{value}"),
        Format::Text => println!("{}", text(value)),
    }
}
