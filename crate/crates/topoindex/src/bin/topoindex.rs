//! Command line front door: compute invariants, generate graphs, enumerate
//! and search trees, take spectra, run randomized experiments, drive the
//! claim suite, and replay the embedded tables.
//!
//! Exit codes: 0 on success, 1 on a usage or input error, 2 when `verify`
//! finds a violated gated claim.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use topoindex::degree_indices::{
    degree_index, matching_formula_indices, IndexKind, IndexParams, IndexValue, VertexFn,
};
use topoindex::distance_indices::{distance_index, DistanceKind, DistanceParams};
use topoindex::dsl;
use topoindex::enumeration::{
    all_trees, classify_tree, extremal_over_multisets, extremal_over_trees,
    trees_with_degree_sequence, SearchReport, TreeFamily,
};
use topoindex::generators::greedy_tree;
use topoindex::graph::{DegreeSequence, Graph};
use topoindex::harness::{registry, run_suite, SuiteConfig, SuiteReport};
use topoindex::io;
use topoindex::random::{
    derive_rng, giant_component_experiment, gnp, largest_component_fraction,
    randic_clt_experiment, DegreeProfile,
};
use topoindex::spectral::{
    adjacency_spectrum, charpoly, sombor_matrix, symmetric_eigen, vertex_energies_of, Spectrum,
};
use topoindex::tables;

#[derive(Parser)]
#[command(
    name = "topoindex",
    version,
    about = "Degree and distance invariants, extremal tree search, spectra, random models, and a claim-checking suite"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for randomized work (default 7).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Output format; default is readable text.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate invariants on one graph.
    Compute {
        /// Edge-list file to read.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Graph described in the spec language, e.g. "cycle:7" or "greedy:4,3,3,1,1,1,1".
        #[arg(long)]
        spec: Option<String>,
        /// Comma-separated invariant names, e.g. "SO,M1,SDD,W,Gut:a=0.5,b=1".
        #[arg(long, required = true)]
        index: String,
        /// Shared parameters as key=value pairs: c, tau, a, r, f (square|xlnx|pow:E).
        #[arg(long, default_value = "")]
        params: String,
    },
    /// Build a graph from a spec and emit it as an edge list.
    Generate {
        #[arg(long, required = true)]
        spec: String,
    },
    /// List trees of a given order, optionally restricted to a family or a degree multiset.
    Enumerate {
        /// Number of vertices.
        #[arg(long)]
        n: Option<usize>,
        /// all | pendants:P | segments:S | branch:B | matching
        #[arg(long, default_value = "all")]
        family: String,
        /// Restrict to maximum degree 4.
        #[arg(long)]
        chemical: bool,
        /// Exact degree multiset, e.g. "3,2,2,1,1,1"; overrides --family.
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Search a tree family for the extrema of an invariant.
    Extremal {
        #[arg(long, required = true)]
        n: usize,
        /// all | pendants:P | segments:S | branch:B | matching
        #[arg(long, default_value = "all")]
        family: String,
        /// Invariant to optimize (any compute name).
        #[arg(long, required = true)]
        objective: String,
        #[arg(long, default_value = "")]
        params: String,
        /// Restrict to maximum degree 4.
        #[arg(long)]
        chemical: bool,
        /// Search degree multisets instead of trees (degree-determined objectives only).
        #[arg(long)]
        multiset: bool,
        /// Write witness trees as edge-list files into this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Eigenvalues, energy, and vertex energies of a graph matrix.
    Spectra {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        spec: Option<String>,
        /// adjacency | sombor
        #[arg(long, default_value = "adjacency")]
        matrix: String,
        /// Also emit the characteristic polynomial (adjacency only).
        #[arg(long)]
        charpoly: bool,
    },
    /// Randomized graph experiments.
    Random {
        /// config | clt | gnp
        #[arg(long, required = true)]
        model: String,
        /// Degree profile for the config model, e.g. "1:0.5,3:0.5".
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, default_value_t = 2000)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Edge probability for clt / gnp.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Randic exponent for the clt model.
        #[arg(long, default_value_t = -0.5, allow_hyphen_values = true)]
        tau: f64,
        /// Sample count for the clt model.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
    /// Run the claim suite.
    Verify {
        /// TOML suite configuration file.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated claim ids to run, e.g. "C1,C6".
        #[arg(long)]
        claims: Option<String>,
        /// Use the reduced corpora.
        #[arg(long)]
        quick: bool,
        /// List registered claims without running anything.
        #[arg(long)]
        list: bool,
    },
    /// Replay an embedded table against fresh computation.
    Table {
        /// 1, 2, or 3.
        which: u8,
        /// Degree sequence for table 2, e.g. "2,3,1,4".
        #[arg(long)]
        sequence: Option<String>,
        /// Spine degree count for the table 3 formulas.
        #[arg(long)]
        k: Option<usize>,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let is_help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            std::process::exit(if is_help { 0 } else { 1 });
        }
    };
    if let Ok(threads) = std::env::var("TOPOINDEX_THREADS") {
        match threads.trim().parse::<usize>() {
            Ok(k) if k >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
            _ => {
                eprintln!("error: TOPOINDEX_THREADS must be a positive integer");
                std::process::exit(1);
            }
        }
    }
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, String> {
    let seed = cli.seed.unwrap_or(7);
    let (text, code) = match cli.command {
        Command::Compute { graph, spec, index, params } => {
            (compute(&graph, &spec, &index, &params, cli.format)?, 0)
        }
        Command::Generate { spec } => (generate(&spec, cli.format)?, 0),
        Command::Enumerate { n, family, chemical, degrees } => {
            (enumerate(n, &family, chemical, &degrees, cli.format)?, 0)
        }
        Command::Extremal { n, family, objective, params, chemical, multiset, witness_dir } => (
            extremal(n, &family, &objective, &params, chemical, multiset, &witness_dir, cli.format)?,
            0,
        ),
        Command::Spectra { graph, spec, matrix, charpoly } => {
            (spectra(&graph, &spec, &matrix, charpoly, cli.format)?, 0)
        }
        Command::Random { model, profile, n, trials, p, tau, samples } => {
            (random(&model, &profile, n, trials, p, tau, samples, seed, cli.format)?, 0)
        }
        Command::Verify { config, claims, quick, list } => {
            if list {
                (list_claims(cli.format), 0)
            } else {
                let report = verify(&config, &claims, quick, cli.seed)?;
                let code = if report.passed { 0 } else { 2 };
                (render_suite(&report, cli.format), code)
            }
        }
        Command::Table { which, sequence, k } => (table(which, &sequence, k, cli.format)?, 0),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| format!("writing {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(code)
}

// ---------------------------------------------------------------------------
// Shared plumbing.

/// Six significant digits for text output; exact integers keep all digits.
fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(5 - mag);
    let rounded = (x * factor).round() / factor;
    // Rounding can push the magnitude up (0.999999 -> 1.0), so recompute.
    let mag = rounded.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{:.*}", decimals, rounded)
}

fn value_text(v: IndexValue) -> String {
    match v {
        IndexValue::Int(i) => i.to_string(),
        IndexValue::Real(x) => sig6(x),
    }
}

fn value_full(v: IndexValue) -> String {
    match v {
        IndexValue::Int(i) => i.to_string(),
        IndexValue::Real(x) => format!("{x}"),
    }
}

fn load_graph(graph: &Option<PathBuf>, spec: &Option<String>) -> Result<(Graph, String), String> {
    match (graph, spec) {
        (Some(path), None) => {
            let g = io::read_graph_file(path).map_err(|e| e.to_string())?;
            let fp = dsl::fingerprint(&g);
            Ok((g, fp))
        }
        (None, Some(s)) => {
            let g = dsl::parse_graph(s).map_err(|e| e.to_string())?;
            Ok((g, s.clone()))
        }
        _ => Err("provide exactly one of --graph and --spec".into()),
    }
}

fn num(text: &str) -> Result<f64, String> {
    text.trim().parse().map_err(|_| format!("expected a number, got {text:?}"))
}

fn parse_vertex_fn(text: &str) -> Result<VertexFn, String> {
    match text.trim() {
        "square" => Ok(VertexFn::Square),
        "xlnx" => Ok(VertexFn::XLnX),
        other => match other.strip_prefix("pow:") {
            Some(e) => Ok(VertexFn::Power(num(e)?)),
            None => Err(format!("unknown vertex function {other:?} (square, xlnx, pow:E)")),
        },
    }
}

fn parse_index_params(text: &str) -> Result<IndexParams, String> {
    let mut p = IndexParams::default();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) =
            part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        match key.trim() {
            "c" => p.c = num(value)?,
            "tau" => p.tau = num(value)?,
            "a" => p.a = num(value)?,
            "r" => p.r = num(value)?,
            "f" => p.f = parse_vertex_fn(value)?,
            other => return Err(format!("unknown parameter {other:?} (expected c, tau, a, r, f)")),
        }
    }
    Ok(p)
}

enum Invariant {
    Degree(IndexKind),
    Distance(DistanceKind, DistanceParams),
}

/// Resolves one --index entry: a degree-index name, a distance-index name,
/// or "Gut:a=A,b=B" for the two-exponent variant.
fn parse_invariant(entry: &str) -> Result<Invariant, String> {
    let (head, inline) = entry.split_once(':').unwrap_or((entry, ""));
    let dist = match head.to_ascii_lowercase().as_str() {
        "w" | "wiener" => Some(DistanceKind::Wiener),
        "sz" | "szeged" => Some(DistanceKind::Szeged),
        "mostar" | "mo" => Some(DistanceKind::Mostar),
        "gut" | "gutman" => Some(DistanceKind::Gutman),
        _ => None,
    };
    if let Some(kind) = dist {
        if inline.is_empty() {
            return Ok(Invariant::Distance(kind, DistanceParams::default()));
        }
        if !matches!(kind, DistanceKind::Gutman) {
            return Err(format!("{head} takes no parameters"));
        }
        let mut p = DistanceParams::default();
        for part in inline.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) =
                part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            match key.trim() {
                "a" => p.a = num(value)?,
                "b" => p.b = num(value)?,
                other => return Err(format!("unknown Gut parameter {other:?}")),
            }
        }
        return Ok(Invariant::Distance(DistanceKind::GutmanGeneral, p));
    }
    IndexKind::parse(entry).map(Invariant::Degree).map_err(|e| e.to_string())
}

fn eval_invariant(g: &Graph, inv: &Invariant, p: &IndexParams) -> Result<IndexValue, String> {
    match inv {
        Invariant::Degree(kind) => degree_index(g, *kind, p).map_err(|e| e.to_string()),
        Invariant::Distance(kind, dp) => distance_index(g, *kind, dp).map_err(|e| e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Subcommands.

fn compute(
    graph: &Option<PathBuf>,
    spec: &Option<String>,
    index: &str,
    params: &str,
    format: Format,
) -> Result<String, String> {
    let (g, source) = load_graph(graph, spec)?;
    let p = parse_index_params(params)?;
    // Splitting the list on commas would cut "Gut:a=0.5,b=1" in half, so a
    // bare key=value piece continues the previous parameterized entry.
    let mut entries: Vec<String> = Vec::new();
    for part in index.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let continues_previous = part.contains('=')
            && !part.contains(':')
            && entries.last().is_some_and(|prev| prev.contains(':'));
        match entries.last_mut() {
            Some(prev) if continues_previous => {
                prev.push(',');
                prev.push_str(part);
            }
            _ => entries.push(part.to_string()),
        }
    }
    let mut rows: Vec<(String, IndexValue)> = Vec::new();
    for entry in &entries {
        let inv = parse_invariant(entry)?;
        rows.push((entry.clone(), eval_invariant(&g, &inv, &p)?));
    }
    if rows.is_empty() {
        return Err("no invariant named in --index".into());
    }
    Ok(match format {
        Format::Text => {
            let mut out = format!("graph {source} ({} vertices, {} edges)\n", g.n(), g.m());
            for (name, value) in &rows {
                out.push_str(&format!("{name:<16} {}\n", value_text(*value)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("index,value\n");
            for (name, value) in &rows {
                out.push_str(&format!("{name},{}\n", value_full(*value)));
            }
            out
        }
        Format::Json => {
            let values: Vec<_> =
                rows.iter().map(|(name, value)| json!({"index": name, "value": value})).collect();
            pretty(&json!({
                "graph": source,
                "n": g.n(),
                "m": g.m(),
                "values": values,
            }))
        }
    })
}

fn generate(spec: &str, format: Format) -> Result<String, String> {
    let g = dsl::parse_graph(spec).map_err(|e| e.to_string())?;
    Ok(match format {
        Format::Text => {
            let mut buf = Vec::new();
            io::write_graph(&g, &mut buf).map_err(|e| e.to_string())?;
            String::from_utf8(buf).expect("edge lists are ascii")
        }
        Format::Csv => {
            let mut out = String::from("u,v\n");
            for (u, v) in g.edges() {
                out.push_str(&format!("{u},{v}\n"));
            }
            out
        }
        Format::Json => pretty(&json!({
            "spec": spec,
            "n": g.n(),
            "m": g.m(),
            "edges": g.edges(),
        })),
    })
}

fn parse_family(text: &str) -> Result<TreeFamily, String> {
    let (head, arg) = text.split_once(':').unwrap_or((text, ""));
    let count = || arg.parse::<usize>().map_err(|_| format!("expected a count after {head}:"));
    match head {
        "all" if arg.is_empty() => Ok(TreeFamily::All),
        "matching" if arg.is_empty() => Ok(TreeFamily::PerfectMatching),
        "pendants" => Ok(TreeFamily::Pendants(count()?)),
        "segments" => Ok(TreeFamily::Segments(count()?)),
        "branch" => Ok(TreeFamily::BranchVertices(count()?)),
        _ => Err(format!(
            "unknown family {text:?} (all, pendants:P, segments:S, branch:B, matching)"
        )),
    }
}

fn enumerate(
    n: Option<usize>,
    family: &str,
    chemical: bool,
    degrees: &Option<String>,
    format: Format,
) -> Result<String, String> {
    let (label, trees): (String, Vec<Graph>) = match degrees {
        Some(list) => {
            let seq = DegreeSequence::new(
                io::parse_degree_list(list).map_err(|e| e.to_string())?,
            );
            let trees = trees_with_degree_sequence(&seq).map_err(|e| e.to_string())?;
            (format!("degrees {list}"), trees)
        }
        None => {
            let n = n.ok_or("either --n or --degrees is required")?;
            let fam = parse_family(family)?;
            let trees: Vec<Graph> = all_trees(n)
                .map_err(|e| e.to_string())?
                .into_iter()
                .filter(|t| {
                    let shape = classify_tree(t).expect("enumerated trees are trees");
                    fam.admits_shape(&shape) && (!chemical || t.max_degree() <= 4)
                })
                .collect();
            (format!("n={n} family={family} chemical={chemical}"), trees)
        }
    };
    Ok(match format {
        Format::Text => {
            let mut out = format!("{label}: {} trees\n", trees.len());
            for t in &trees {
                let d: Vec<String> =
                    t.degree_sequence().values().iter().map(|d| d.to_string()).collect();
                out.push_str(&format!("degrees {:<24} {}\n", d.join(" "), dsl::fingerprint(t)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("degrees,fingerprint\n");
            for t in &trees {
                let d: Vec<String> =
                    t.degree_sequence().values().iter().map(|d| d.to_string()).collect();
                out.push_str(&format!("{},{}\n", d.join(" "), dsl::fingerprint(t)));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = trees
                .iter()
                .map(|t| json!({"degrees": t.degree_sequence().values(), "fingerprint": dsl::fingerprint(t)}))
                .collect();
            pretty(&json!({"query": label, "count": trees.len(), "trees": items}))
        }
    })
}

#[allow(clippy::too_many_arguments)]
fn extremal(
    n: usize,
    family: &str,
    objective: &str,
    params: &str,
    chemical: bool,
    multiset: bool,
    witness_dir: &Option<PathBuf>,
    format: Format,
) -> Result<String, String> {
    let fam = parse_family(family)?;
    let inv = parse_invariant(objective)?;
    let p = parse_index_params(params)?;
    let report: SearchReport = if multiset {
        let Invariant::Degree(kind) = inv else {
            return Err("--multiset requires a degree-based objective".into());
        };
        if !kind.is_degree_determined() {
            return Err(format!("{objective} is not determined by the degree multiset"));
        }
        let obj = move |d: &DegreeSequence| {
            let tree = greedy_tree(d).expect("feasible multisets build");
            degree_index(&tree.graph, kind, &p).expect("defined on trees").as_f64()
        };
        extremal_over_multisets(n, fam, chemical, obj).map_err(|e| e.to_string())?
    } else {
        let obj = move |g: &Graph| {
            eval_invariant(g, &inv, &p).expect("defined on trees").as_f64()
        };
        extremal_over_trees(n, fam, chemical, obj).map_err(|e| e.to_string())?
    };
    if let Some(dir) = witness_dir {
        std::fs::create_dir_all(dir).map_err(|e| format!("creating {}: {e}", dir.display()))?;
        for (side, ext) in [("min", &report.min), ("max", &report.max)] {
            for (i, tree) in ext.witness_trees.iter().enumerate() {
                let path = dir.join(format!("{side}_{i}.edges"));
                io::write_graph_file(tree, &path).map_err(|e| e.to_string())?;
            }
        }
    }
    let side_json = |ext: &topoindex::enumeration::Extremum| {
        json!({
            "value": ext.value,
            "witness_degrees": ext.witness_degrees.iter().map(|d| d.values().to_vec()).collect::<Vec<_>>(),
            "witness_trees": ext.witness_trees.iter().map(dsl::fingerprint).collect::<Vec<_>>(),
        })
    };
    Ok(match format {
        Format::Text => {
            let mut out = format!(
                "n={n} family={family} chemical={chemical} objective={objective}: {} candidates\n",
                report.candidates
            );
            for (side, ext) in [("min", &report.min), ("max", &report.max)] {
                out.push_str(&format!("{side} {}\n", sig6(ext.value)));
                for d in &ext.witness_degrees {
                    let list: Vec<String> = d.values().iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("  degrees {}\n", list.join(" ")));
                }
                for t in &ext.witness_trees {
                    out.push_str(&format!("  tree {}\n", dsl::fingerprint(t)));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("side,value,witness_degrees\n");
            for (side, ext) in [("min", &report.min), ("max", &report.max)] {
                for d in &ext.witness_degrees {
                    let list: Vec<String> = d.values().iter().map(|x| x.to_string()).collect();
                    out.push_str(&format!("{side},{},{}\n", ext.value, list.join(" ")));
                }
            }
            out
        }
        Format::Json => pretty(&json!({
            "n": n,
            "family": family,
            "chemical": chemical,
            "objective": objective,
            "candidates": report.candidates,
            "min": side_json(&report.min),
            "max": side_json(&report.max),
        })),
    })
}

fn spectra(
    graph: &Option<PathBuf>,
    spec: &Option<String>,
    matrix: &str,
    with_charpoly: bool,
    format: Format,
) -> Result<String, String> {
    let (g, source) = load_graph(graph, spec)?;
    let spectrum: Spectrum = match matrix {
        "adjacency" => adjacency_spectrum(&g).map_err(|e| e.to_string())?,
        "sombor" => symmetric_eigen(&sombor_matrix(&g)).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown matrix {other:?} (adjacency, sombor)")),
    };
    let vertex = (matrix == "adjacency").then(|| vertex_energies_of(&spectrum, g.n()));
    let poly = if with_charpoly {
        if matrix != "adjacency" {
            return Err("--charpoly applies to the adjacency matrix".into());
        }
        Some(charpoly(&g).map_err(|e| e.to_string())?)
    } else {
        None
    };
    Ok(match format {
        Format::Text => {
            let mut out = format!("graph {source} ({} vertices, {} edges), {matrix} matrix\n", g.n(), g.m());
            let vals: Vec<String> = spectrum.values.iter().map(|&v| sig6(v)).collect();
            out.push_str(&format!("eigenvalues {}\n", vals.join(" ")));
            out.push_str(&format!("radius {}\n", sig6(spectrum.radius())));
            out.push_str(&format!("spread {}\n", sig6(spectrum.spread())));
            out.push_str(&format!("energy {}\n", sig6(spectrum.energy())));
            if let Some(ve) = &vertex {
                let vals: Vec<String> = ve.iter().map(|&v| sig6(v)).collect();
                out.push_str(&format!("vertex energies {}\n", vals.join(" ")));
            }
            if let Some(poly) = &poly {
                let cs: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("charpoly (leading first) {}\n", cs.join(" ")));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("vertex,eigenvalue,vertex_energy\n");
            for i in 0..spectrum.values.len() {
                let ve = vertex.as_ref().map_or(String::new(), |ve| format!("{}", ve[i]));
                out.push_str(&format!("{i},{},{ve}\n", spectrum.values[i]));
            }
            out
        }
        Format::Json => {
            let mut obj = json!({
                "graph": source,
                "matrix": matrix,
                "eigenvalues": spectrum.values,
                "radius": spectrum.radius(),
                "spread": spectrum.spread(),
                "energy": spectrum.energy(),
            });
            if let Some(ve) = vertex {
                obj["vertex_energies"] = json!(ve);
            }
            if let Some(poly) = poly {
                obj["charpoly"] = json!(poly.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            }
            pretty(&obj)
        }
    })
}

fn parse_profile(text: &str) -> Result<DegreeProfile, String> {
    let mut mass = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (degree, weight) =
            part.split_once(':').ok_or_else(|| format!("expected degree:mass, got {part:?}"))?;
        let d: usize =
            degree.trim().parse().map_err(|_| format!("bad degree {degree:?}"))?;
        mass.insert(d, num(weight)?);
    }
    DegreeProfile::new(mass).map_err(|e| e.to_string())
}

#[allow(clippy::too_many_arguments)]
fn random(
    model: &str,
    profile: &Option<String>,
    n: usize,
    trials: usize,
    p: f64,
    tau: f64,
    samples: usize,
    seed: u64,
    format: Format,
) -> Result<String, String> {
    match model {
        "config" => {
            let profile =
                parse_profile(profile.as_deref().ok_or("--model config needs --profile")?)?;
            let report =
                giant_component_experiment(&profile, n, trials, seed).map_err(|e| e.to_string())?;
            Ok(match format {
                Format::Text => {
                    let fr: Vec<String> = report.fractions.iter().map(|&f| sig6(f)).collect();
                    format!(
                        "config model n={} trials={} seed={}\nprofile Q {}\nrealized Q {}\nmedian largest-component fraction {}\nmean degree deficit {}\nfractions {}\n",
                        report.n,
                        report.trials,
                        report.seed,
                        sig6(report.profile_q),
                        sig6(report.realized_q),
                        sig6(report.median_fraction),
                        sig6(report.mean_degree_deficit),
                        fr.join(" ")
                    )
                }
                Format::Csv => {
                    let mut out = String::from("trial,largest_component_fraction\n");
                    for (t, f) in report.fractions.iter().enumerate() {
                        out.push_str(&format!("{t},{f}\n"));
                    }
                    out
                }
                Format::Json => pretty(&serde_json::to_value(&report).expect("serializable")),
            })
        }
        "clt" => {
            let report =
                randic_clt_experiment(n, p, tau, samples, seed).map_err(|e| e.to_string())?;
            Ok(match format {
                Format::Text => format!(
                    "clt model n={} p={} tau={} samples={} seed={}\nsample mean {}\nasymptotic mean {}\nstd dev {}\nskewness {}\nexcess kurtosis {}\nks distance {}\n",
                    report.n,
                    report.p,
                    report.tau,
                    report.samples,
                    report.seed,
                    sig6(report.sample_mean),
                    sig6(report.asymptotic_mean),
                    sig6(report.sample_std_dev),
                    sig6(report.skewness),
                    sig6(report.excess_kurtosis),
                    sig6(report.ks_distance)
                ),
                Format::Csv => {
                    let mut out = String::from("statistic,value\n");
                    for (k, v) in [
                        ("sample_mean", report.sample_mean),
                        ("asymptotic_mean", report.asymptotic_mean),
                        ("sample_std_dev", report.sample_std_dev),
                        ("skewness", report.skewness),
                        ("excess_kurtosis", report.excess_kurtosis),
                        ("ks_distance", report.ks_distance),
                    ] {
                        out.push_str(&format!("{k},{v}\n"));
                    }
                    out
                }
                Format::Json => pretty(&serde_json::to_value(&report).expect("serializable")),
            })
        }
        "gnp" => {
            let mut rows = Vec::new();
            for t in 0..trials {
                let mut rng = derive_rng(seed, t as u64);
                let g = gnp(n, p, &mut rng).map_err(|e| e.to_string())?;
                rows.push((t, g.m(), g.components().len(), largest_component_fraction(&g)));
            }
            Ok(match format {
                Format::Text => {
                    let mut out = format!("gnp n={n} p={p} trials={trials} seed={seed}\n");
                    for (t, m, comps, frac) in &rows {
                        out.push_str(&format!(
                            "trial {t}: {m} edges, {comps} components, largest fraction {}\n",
                            sig6(*frac)
                        ));
                    }
                    out
                }
                Format::Csv => {
                    let mut out = String::from("trial,edges,components,largest_fraction\n");
                    for (t, m, comps, frac) in &rows {
                        out.push_str(&format!("{t},{m},{comps},{frac}\n"));
                    }
                    out
                }
                Format::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|(t, m, comps, frac)| {
                            json!({"trial": t, "edges": m, "components": comps, "largest_fraction": frac})
                        })
                        .collect();
                    pretty(&json!({"n": n, "p": p, "trials": trials, "seed": seed, "results": items}))
                }
            })
        }
        other => Err(format!("unknown model {other:?} (config, clt, gnp)")),
    }
}

fn verify(
    config: &Option<PathBuf>,
    claims: &Option<String>,
    quick: bool,
    seed: Option<u64>,
) -> Result<SuiteReport, String> {
    let mut cfg = match config {
        Some(path) => SuiteConfig::load(path).map_err(|e| e.to_string())?,
        None => SuiteConfig::default(),
    };
    if let Some(list) = claims {
        cfg.claims = list.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    }
    if quick {
        cfg.quick = true;
    }
    if let Some(seed) = seed {
        cfg.seed = seed;
    }
    run_suite(&cfg).map_err(|e| e.to_string())
}

fn list_claims(format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for claim in registry() {
                out.push_str(&format!(
                    "{:>4}  {:<34} {:<12} {}\n",
                    claim.id,
                    claim.name,
                    claim.status.label(),
                    claim.statement
                ));
                if let Some(reason) = claim.reason {
                    out.push_str(&format!("      report-only because {reason}\n"));
                }
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("id,name,status\n");
            for claim in registry() {
                out.push_str(&format!("{},{},{}\n", claim.id, claim.name, claim.status.label()));
            }
            out
        }
        Format::Json => {
            let items: Vec<_> = registry()
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "name": c.name,
                        "status": c.status.label(),
                        "statement": c.statement,
                        "reason": c.reason,
                    })
                })
                .collect();
            pretty(&json!(items))
        }
    }
}

fn render_suite(report: &SuiteReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
        Format::Text => {
            let mut out = String::new();
            for claim in &report.claims {
                let outcome = if claim.failed {
                    "FAIL"
                } else if claim.violations_total > 0 {
                    "recorded"
                } else {
                    "pass"
                };
                out.push_str(&format!(
                    "{:>4}  {:<34} {:<12} {:<9} corpus {:>6}  violations {:>4}  advisories {:>4}  witnesses {:>4}\n",
                    claim.id,
                    claim.name,
                    claim.status,
                    outcome,
                    claim.corpus_size,
                    claim.violations_total,
                    claim.advisories_total,
                    claim.witnesses_total
                ));
                if claim.failed {
                    for v in &claim.violations {
                        out.push_str(&format!(
                            "        {}: lhs {} rhs {} ({})\n",
                            v.fingerprint,
                            sig6(v.lhs),
                            sig6(v.rhs),
                            v.note
                        ));
                    }
                }
            }
            out.push_str(&format!(
                "suite seed {} quick {}: {} claims, {} gated failures -> {}\n",
                report.seed,
                report.quick,
                report.claims.len(),
                report.failed_claims.len(),
                if report.passed { "pass" } else { "FAIL" }
            ));
            out
        }
    }
}

fn table(which: u8, sequence: &Option<String>, k: Option<usize>, format: Format) -> Result<String, String> {
    match which {
        1 => {
            let rows = tables::table1_report();
            Ok(match format {
                Format::Text => {
                    let mut out = String::from("index     shipped          computed         agrees\n");
                    for r in &rows {
                        out.push_str(&format!(
                            "{:<9} {:<16} {:<16} {}\n",
                            r.index,
                            value_text(r.shipped),
                            value_text(r.computed),
                            if r.agrees { "yes" } else { "NO" }
                        ));
                    }
                    out
                }
                Format::Csv => {
                    let mut out = String::from("index,shipped,computed,agrees\n");
                    for r in &rows {
                        out.push_str(&format!(
                            "{},{},{},{}\n",
                            r.index,
                            value_full(r.shipped),
                            value_full(r.computed),
                            r.agrees
                        ));
                    }
                    out
                }
                Format::Json => {
                    let items: Vec<_> = rows
                        .iter()
                        .map(|r| {
                            json!({
                                "index": r.index,
                                "shipped": r.shipped,
                                "computed": r.computed,
                                "agrees": r.agrees,
                            })
                        })
                        .collect();
                    pretty(&json!(items))
                }
            })
        }
        2 => {
            let list = match sequence {
                Some(s) => io::parse_degree_list(s).map_err(|e| e.to_string())?,
                None => tables::TABLE2_EXAMPLE_SEQUENCE.to_vec(),
            };
            let formulas = matching_formula_indices(&list).map_err(|e| e.to_string())?;
            let rows = formulas.rows();
            Ok(match format {
                Format::Text => {
                    let mut out = format!("sequence {list:?}\n");
                    for (name, value) in &rows {
                        out.push_str(&format!("{name:<6} {}\n", value_text(*value)));
                    }
                    out
                }
                Format::Csv => {
                    let mut out = String::from("column,value\n");
                    for (name, value) in &rows {
                        out.push_str(&format!("{name},{}\n", value_full(*value)));
                    }
                    out
                }
                Format::Json => {
                    let items: Vec<_> =
                        rows.iter().map(|(name, v)| json!({"column": name, "value": v})).collect();
                    pretty(&json!({"sequence": list, "columns": items}))
                }
            })
        }
        3 => {
            let k = k.unwrap_or(tables::TABLE3_DEFAULT_K);
            let checks = tables::table3_report(k);
            Ok(match format {
                Format::Text => {
                    let mut out = format!("difference columns and closed forms at k={k}\n");
                    out.push_str("d1  consistent  formula_chi   formula_ga    chi_dev       ga_dev\n");
                    for c in &checks {
                        out.push_str(&format!(
                            "{:<3} {:<11} {:<13} {:<13} {:<13} {}\n",
                            c.d1,
                            if c.differences_consistent { "yes" } else { "NO" },
                            sig6(c.formula_chi),
                            sig6(c.formula_ga),
                            sig6(c.chi_deviation),
                            sig6(c.ga_deviation)
                        ));
                    }
                    out.push_str("deviations are reported, not asserted\n");
                    out
                }
                Format::Csv => {
                    let mut out = String::from(
                        "d1,differences_consistent,formula_chi,formula_ga,chi_deviation,ga_deviation\n",
                    );
                    for c in &checks {
                        out.push_str(&format!(
                            "{},{},{},{},{},{}\n",
                            c.d1,
                            c.differences_consistent,
                            c.formula_chi,
                            c.formula_ga,
                            c.chi_deviation,
                            c.ga_deviation
                        ));
                    }
                    out
                }
                Format::Json => {
                    let items: Vec<_> = checks
                        .iter()
                        .map(|c| {
                            json!({
                                "d1": c.d1,
                                "differences_consistent": c.differences_consistent,
                                "formula_chi": c.formula_chi,
                                "formula_ga": c.formula_ga,
                                "chi_deviation": c.chi_deviation,
                                "ga_deviation": c.ga_deviation,
                            })
                        })
                        .collect();
                    pretty(&json!({"k": k, "rows": items}))
                }
            })
        }
        other => Err(format!("no table {other} (1, 2, or 3)")),
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}
