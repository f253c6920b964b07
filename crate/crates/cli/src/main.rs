use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use chordgirth::bounds::{d_regular_gamma2_upper, gamma_bounds, moore_bound, BoundRow};
use chordgirth::constructions::{
    blow_up, construct_gamma2, construct_gamma3, projective_plane_incidence,
    random_decomposed_regular,
};
use chordgirth::data;
use chordgirth::decompose::{eliminate_bridges_traced, petersen_decompose};
use chordgirth::graph::decomp_format::{parse_decomp, serialize_decomp};
use chordgirth::graph::graph6::{parse_graph6, write_graph6};
use chordgirth::search::{exhaustive_gamma, PruneMode, SearchError, SearchOptions, DEFAULT_MAX_N};
use chordgirth::{
    min_chord_cycle, min_chord_cycle_all_k, ChordCycleResult, DecomposedGraph, Graph,
};

/// Short cycles with few chords in cubic and regular graphs.
///
/// Graph files are DECOMP (decomposed graph) or graph6. `-` reads stdin; a
/// name that is not an existing file is looked up among the bundled data
/// files (heawood.g6, petersen.g6, tutte_coxeter.g6, tutte_coxeter.decomp).
#[derive(Parser)]
#[command(name = "chordgirth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a decomposed graph (or, for `pg`, a plain graph6 graph).
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Write here instead of stdout.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
    },
    /// Shortest cycle using at most K chords.
    Solve {
        #[arg(long = "in", value_name = "FILE")]
        input: String,
        #[arg(long)]
        k: usize,
        /// Report every budget 0..=K.
        #[arg(long)]
        all_k: bool,
        #[arg(long)]
        json: bool,
    },
    /// Petersen decomposition of a bridgeless cubic graph6 graph.
    Decompose {
        #[arg(long = "in", value_name = "FILE")]
        input: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Rewire the bridges of a connected cubic graph away; graph6 out.
    FixBridges {
        #[arg(long = "in", value_name = "FILE")]
        input: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Print each rewiring on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustive gamma_k(n). Stdout is the witness as DECOMP, preceded by a
    /// commented summary.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Record completed work units here; an existing file is resumed.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, default_value = "orbit")]
        prune: PruneMode,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Stop after this many work units (resume with the checkpoint).
        #[arg(long)]
        max_units: Option<usize>,
        /// Also write the witness DECOMP here.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Table of bounds on gamma_k(n); with --d/--g also the Moore bound and
    /// the d-regular two-chord bound.
    Bounds {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Run the reproduction suite.
    Verify {
        #[arg(long, default_value = "paper", value_parser = ["paper"])]
        suite: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// Hamiltonian construction on 8l²+6l vertices, two-chord value 4l+2.
    Gamma2 {
        #[arg(long)]
        l: usize,
    },
    /// Bipartite variant, three-chord value 2l+2.
    Gamma3 {
        #[arg(long)]
        l: usize,
    },
    /// Replace every vertex of a regular graph by a 2d-cycle.
    Blowup {
        #[arg(long, value_name = "FILE")]
        base: String,
    },
    /// Points-versus-lines incidence graph of the projective plane over F_q.
    Pg {
        #[arg(long)]
        q: usize,
    },
    /// Hamilton cycle plus d-2 random perfect matchings.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        seed: u64,
    },
}

enum Failure {
    Verification(String),
    Usage(anyhow::Error),
    Input(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
        }
    }
}

fn usage(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Usage(e.into())
}

fn input(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Input(e.into())
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Verification(msg) => eprintln!("chordgirth: {msg}"),
                Failure::Usage(e) | Failure::Input(e) => eprintln!("chordgirth: {e:#}"),
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct { what, out } => construct(what, out.as_deref()),
        Command::Solve {
            input,
            k,
            all_k,
            json,
        } => solve(&input, k, all_k, json),
        Command::Decompose { input: path, out } => {
            let g = load_graph(&path)?;
            let dg = petersen_decompose(&g).map_err(input)?;
            emit(out.as_deref(), serialize_decomp(&dg).as_bytes())
        }
        Command::FixBridges {
            input: path,
            out,
            trace,
        } => {
            let g = load_graph(&path)?;
            let (fixed, steps) = eliminate_bridges_traced(&g).map_err(input)?;
            if trace {
                for s in &steps {
                    eprintln!(
                        "bridge {}: removed {} {}, added {} {}",
                        s.bridge, s.removed[0], s.removed[1], s.added[0], s.added[1]
                    );
                }
            }
            let mut bytes = write_graph6(&fixed);
            bytes.push(b'\n');
            emit(out.as_deref(), &bytes)
        }
        Command::Search {
            n,
            k,
            checkpoint,
            threads,
            prune,
            max_n,
            max_units,
            witness,
            json,
        } => {
            let options = SearchOptions {
                prune,
                threads,
                max_n,
                checkpoint,
                max_units,
            };
            search(n, k, &options, witness.as_deref(), json)
        }
        Command::Bounds { n, k, d, g, json } => bounds(n, k, d, g, json),
        Command::Verify { suite: _, json } => verify(json),
    }
}

fn read_source(name: &str) -> Result<String, Failure> {
    if name == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")
            .map_err(input)?;
        return Ok(text);
    }
    let path = Path::new(name);
    if path.exists() {
        return fs::read_to_string(path)
            .with_context(|| format!("reading {name}"))
            .map_err(input);
    }
    data::lookup(name).ok_or_else(|| input(anyhow!("{name}: no such file or bundled graph")))
}

fn is_decomp(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| l.split_whitespace().next() == Some("n"))
}

/// A decomposed graph from DECOMP, or from graph6 via a Petersen
/// decomposition.
fn load_decomposed(name: &str) -> Result<DecomposedGraph, Failure> {
    let text = read_source(name)?;
    if is_decomp(&text) {
        return parse_decomp(&text)
            .with_context(|| name.to_string())
            .map_err(input);
    }
    let g = parse_graph6(text.as_bytes())
        .with_context(|| name.to_string())
        .map_err(input)?;
    petersen_decompose(&g)
        .with_context(|| name.to_string())
        .map_err(input)
}

fn load_graph(name: &str) -> Result<Graph, Failure> {
    let text = read_source(name)?;
    if is_decomp(&text) {
        let dg = parse_decomp(&text)
            .with_context(|| name.to_string())
            .map_err(input)?;
        return Ok(dg.graph().clone());
    }
    parse_graph6(text.as_bytes())
        .with_context(|| name.to_string())
        .map_err(input)
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Outcome {
    match out {
        Some(path) => fs::write(path, bytes)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(input),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|()| stdout.flush())
                .map_err(input)
        }
    }
}

fn construct(what: Construct, out: Option<&Path>) -> Outcome {
    let dg = match what {
        Construct::Gamma2 { l } => construct_gamma2(l).map_err(usage)?,
        Construct::Gamma3 { l } => construct_gamma3(l).map_err(usage)?,
        Construct::Blowup { base } => {
            let h = load_graph(&base)?;
            blow_up(&h).map_err(input)?
        }
        Construct::Random { n, d, seed } => random_decomposed_regular(n, d, seed).map_err(usage)?,
        Construct::Pg { q } => {
            let g = projective_plane_incidence(q).map_err(usage)?;
            let mut bytes = write_graph6(&g);
            bytes.push(b'\n');
            return emit(out, &bytes);
        }
    };
    emit(out, serialize_decomp(&dg).as_bytes())
}

fn witness_text(w: &[usize]) -> String {
    w.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn solve(name: &str, k: usize, all_k: bool, json: bool) -> Outcome {
    let dg = load_decomposed(name)?;
    let started = Instant::now();
    let results: Vec<ChordCycleResult> = if all_k {
        min_chord_cycle_all_k(&dg, k)
    } else {
        vec![min_chord_cycle(&dg, k)]
    };
    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;

    let mut out = String::new();
    if json {
        let rows: Vec<_> = results
            .iter()
            .map(|r| {
                json!({
                    "n": dg.n(),
                    "k": r.budget,
                    "length": r.length,
                    "witness": r.witness,
                    "chords_used": r.chords_used,
                    "elapsed_ms": elapsed_ms,
                })
            })
            .collect();
        let value = if all_k { json!(rows) } else { rows[0].clone() };
        out = serde_json::to_string_pretty(&value).expect("json values serialize");
        out.push('\n');
    } else {
        for r in &results {
            if all_k {
                out.push_str(&format!("k={} ", r.budget));
            }
            out.push_str(&format!(
                "length={} chords={} witness={}\n",
                r.length,
                r.chords_used,
                witness_text(&r.witness)
            ));
        }
    }
    emit(None, out.as_bytes())
}

fn search(
    n: usize,
    k: usize,
    options: &SearchOptions,
    witness: Option<&Path>,
    json: bool,
) -> Outcome {
    let result = exhaustive_gamma(n, k, options).map_err(|e| match e {
        SearchError::Interrupted { .. } => {
            Failure::Verification(format!("{e}; rerun with the same --checkpoint to resume"))
        }
        SearchError::Io(_)
        | SearchError::Checkpoint { .. }
        | SearchError::CheckpointMismatch { .. } => input(e),
        other => usage(other),
    })?;
    let decomp = serialize_decomp(&result.witness);
    if let Some(path) = witness {
        emit(Some(path), decomp.as_bytes())?;
    }
    let text = if json {
        let value = json!({
            "n": result.n,
            "k": result.k,
            "gamma": result.gamma,
            "decompositions_examined": result.decompositions_examined,
            "units": result.units,
            "resumed_units": result.resumed_units,
            "prune": options.prune.name(),
            "elapsed_ms": result.elapsed.as_secs_f64() * 1e3,
            "witness": decomp,
        });
        format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("json values serialize")
        )
    } else {
        format!(
            "# gamma_{k}({n}) = {}\n# over connected decomposed cubic graphs; {} decompositions examined ({} pruning), {} work units ({} resumed), {:.2?}\n{decomp}",
            result.gamma,
            result.decompositions_examined,
            options.prune.name(),
            result.units,
            result.resumed_units,
            result.elapsed,
        )
    };
    emit(None, text.as_bytes())
}

fn bound_line(row: &BoundRow) -> String {
    let relation = match row.direction {
        chordgirth::bounds::Direction::Lower => "≥",
        chordgirth::bounds::Direction::Upper => "≤",
    };
    let mut notes = vec![row.source.to_string()];
    if let Some(j) = row.via_k {
        notes.push(format!("via k={j}"));
    }
    if row.asymptotic {
        notes.push("asymptotic, O(1) dropped".into());
    }
    if row.special_n {
        notes.push("n = 8l²+6l only".into());
    }
    format!(
        "{:<6} {} = {:.2}  (γ {relation} {})  [{}]\n",
        match row.direction {
            chordgirth::bounds::Direction::Lower => "lower",
            chordgirth::bounds::Direction::Upper => "upper",
        },
        row.label,
        row.value,
        row.integer,
        notes.join("; ")
    )
}

fn bounds(n: usize, k: usize, d: Option<usize>, g: Option<usize>, json: bool) -> Outcome {
    let report = gamma_bounds(k, n);
    let moore = match (d, g) {
        (Some(d), Some(g)) => Some(moore_bound(d, g).map_err(usage)?),
        (None, Some(_)) => return Err(usage(anyhow!("--g needs --d"))),
        _ => None,
    };
    let d_regular = match d {
        Some(d) => Some(d_regular_gamma2_upper(d, n).map_err(usage)?),
        _ => None,
    };

    if json {
        let value = json!({
            "report": report,
            "assertable_lower": report.assertable_lower(),
            "assertable_upper": report.assertable_upper(),
            "moore_bound": moore.map(|m| m.to_string()),
            "d_regular_gamma2_upper": d_regular,
        });
        let text = format!(
            "{}\n",
            serde_json::to_string_pretty(&value).expect("json values serialize")
        );
        return emit(None, text.as_bytes());
    }

    let mut out = format!(
        "bounds on gamma_{k}({n}); connected cubic graphs, upper bounds for 2-connected ones\n"
    );
    if let Some(e) = report.exact {
        out.push_str(&format!("exact  γ = {e}\n"));
    }
    for row in report.lower.iter().chain(&report.upper) {
        out.push_str(&bound_line(row));
    }
    for o in &report.omitted {
        out.push_str(&format!("omitted {}: {}\n", o.id, o.reason));
    }
    if let Some(v) = report.assertable_upper() {
        out.push_str(&format!("every instance: shortest cycle ≤ {v}\n"));
    }
    if let (Some(d), Some(g), Some(m)) = (d, g, moore) {
        out.push_str(&format!("moore  d={d} g={g}: n ≥ {m}\n"));
    }
    if let (Some(d), Some(v)) = (d, d_regular) {
        out.push_str(&format!(
            "upper  √(2n/(d−2)) = {v:.2}  (d={d}, two chords)\n"
        ));
    }
    emit(None, out.as_bytes())
}

fn verify(json: bool) -> Outcome {
    let mut failed = Vec::new();
    let mut reports = Vec::new();
    for criterion in chordgirth::verify::criteria() {
        let report = chordgirth::verify::run(&criterion);
        if !json {
            println!("{report}");
        }
        if !report.passed {
            failed.push(report.id);
        }
        reports.push(report);
    }
    if json {
        let text = format!(
            "{}\n",
            serde_json::to_string_pretty(&reports).expect("json values serialize")
        );
        emit(None, text.as_bytes())?;
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("criteria {failed:?} failed")))
    }
}
