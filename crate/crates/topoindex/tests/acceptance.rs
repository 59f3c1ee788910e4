//! Release gate: fifteen numbered end-to-end checks over the whole crate.
//!
//! Each check prints one `criterion NN  pass|FAIL  detail` line (visible with
//! `cargo test --test acceptance -- --nocapture`) and then asserts. Checks
//! that restate a registered claim run that claim at full budget through the
//! public harness; the rest drive the library surface directly. Every
//! tolerance is pinned here, not configurable.
//!
//! Criterion 01 is expected to fail: six of the nine shipped reference-table
//! values do not recompute from the stated tree, and one of them is provably
//! unproducible by any tree with that degree sequence. The check asserts the
//! stated fixture match anyway; the failure message carries the analysis.

use std::f64::consts::SQRT_2;
use std::time::Instant;

use rand::prelude::*;

use topoindex::degree_indices::{degree_index, IndexKind, IndexParams};
use topoindex::distance_indices::{distance_index, DistanceKind, DistanceParams};
use topoindex::generators::{greedy_tree, subdivision, thorny, thorny_uniform};
use topoindex::graph::{DegreeSequence, Graph};
use topoindex::harness::{
    check_claim, corpus, find_claim, leq, run_suite, strictly_less, CheckCtx, SuiteConfig,
};
use topoindex::random::{
    derive_rng, giant_component_experiment, randic_clt_experiment, DegreeProfile,
};
use topoindex::spectral::{
    adjacency_matrix, charpoly, frobenius_norm, sombor_matrix, subdivision_charpoly,
    symmetric_eigen, vertex_energies, walk_counts_exact,
};
use topoindex::tables::{table1_report, EXAMPLE_TREE_DEGREES};

const SEED: u64 = 7;

fn verdict(number: u32, ok: bool, detail: &str) {
    println!("criterion {number:02}  {}  {detail}", if ok { "pass" } else { "FAIL" });
}

fn ctx() -> CheckCtx {
    CheckCtx { seed: SEED, quick: false }
}

fn real(g: &Graph, kind: IndexKind) -> f64 {
    degree_index(g, kind, &IndexParams::default()).expect("defined here").as_f64()
}

fn dist(g: &Graph, kind: DistanceKind) -> i128 {
    distance_index(g, kind, &DistanceParams::default())
        .expect("connected")
        .as_int()
        .expect("integer-valued")
}

fn rel_dev(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}

#[test]
fn criterion_01_reference_table_fixtures() {
    let start = Instant::now();
    let report = table1_report();
    let elapsed = start.elapsed();
    let bad: Vec<String> = report
        .iter()
        .filter(|d| !d.agrees)
        .map(|d| format!("{} shipped {:?} recomputed {:?}", d.index, d.shipped, d.computed))
        .collect();
    let in_time = elapsed.as_secs_f64() < 1.0;
    let ok = bad.is_empty() && in_time;
    let detail = if bad.is_empty() {
        format!("all 9 shipped values recompute in {elapsed:.2?}")
    } else {
        format!("{} of 9 shipped values do not recompute: {}", bad.len(), bad.join("; "))
    };
    verdict(1, ok, &detail);
    assert!(
        ok,
        "criterion 01: {detail}\n\
         this failure is genuine and characterized: the shipped D2 = 14660155008 = \
         2^7 * 3^6 * 157109 carries the prime factor 157109, but on a tree whose \
         degrees lie in 1..=4 every edge degree product is of the form 2^a * 3^b, so \
         the product over edges has no prime factor beyond 3 for ANY tree on this \
         degree sequence. The six disagreeing entries (mM2, M2, D2, D1*, SCI, SDD) \
         evidently describe a different tree; the three vertex-multiset entries \
         (F, NK, D1) and both real tolerances check out. `tables::table1_report` \
         serves the diff instead of silently patching either side."
    );
}

#[test]
fn criterion_02_greedy_tree_layers() {
    let tree = greedy_tree(&DegreeSequence::new(EXAMPLE_TREE_DEGREES.to_vec()))
        .expect("tree-realizable");
    let ok = tree.layers == [1, 4, 9, 5];
    let detail = format!("layer sizes {:?}", tree.layers);
    verdict(2, ok, &detail);
    assert!(ok, "criterion 02: {detail}");
}

#[test]
fn criterion_03_pendant_split_identity_and_closed_forms() {
    let start = Instant::now();
    let ctx = ctx();

    // 200 seeded (graph, thorn-vector) pairs against the exact split.
    let pairs = corpus::random_thorn_pairs(&ctx, 200, 200, 3, 15, 4, false);
    let mut worst_split: f64 = 0.0;
    for pr in &pairs {
        let d = pr.base.degrees();
        let full = |i: usize| (d[i] + pr.thorns[i]) as f64;
        let old: f64 = pr
            .base
            .edges()
            .iter()
            .map(|&(u, v)| (full(u).powi(2) + full(v).powi(2)).sqrt())
            .sum();
        let new: f64 = (0..pr.base.n())
            .map(|i| pr.thorns[i] as f64 * (full(i).powi(2) + 1.0).sqrt())
            .sum();
        worst_split = worst_split.max(rel_dev(real(&pr.thorny, IndexKind::So), old + new));
    }

    // 50 regular bases with uniform thorn counts against the closed form.
    let regulars: Vec<(corpus::Instance, usize)> = corpus::regular_roster()
        .into_iter()
        .flat_map(|inst| (1..=3usize).map(move |p| (inst.clone(), p)))
        .take(50)
        .collect();
    let mut worst_regular: f64 = 0.0;
    for (inst, p) in &regulars {
        let (n, m) = (inst.graph.n() as f64, inst.graph.m() as f64);
        let r = inst.graph.degrees()[0] as f64;
        let pf = *p as f64;
        let formula = SQRT_2 * m * (r + pf) + n * pf * ((r + pf).powi(2) + 1.0).sqrt();
        let direct = real(&thorny_uniform(&inst.graph, *p), IndexKind::So);
        worst_regular = worst_regular.max(rel_dev(direct, formula));
    }

    // 50 bases levelled to a uniform total degree against the closed form.
    let bases = corpus::random_connected(&ctx, 400, 50, 3, 12);
    let mut rng = ctx.rng(401);
    let mut worst_uniform: f64 = 0.0;
    for inst in &bases {
        let target = inst.graph.max_degree() + rng.gen_range(0..=3usize);
        let thorns: Vec<usize> =
            inst.graph.degrees().iter().map(|&d| target - d).collect();
        let added: usize = thorns.iter().sum();
        let star = thorny(&inst.graph, &thorns).expect("sized to the base");
        let df = target as f64;
        let formula =
            SQRT_2 * df * inst.graph.m() as f64 + (df * df + 1.0).sqrt() * added as f64;
        worst_uniform = worst_uniform.max(rel_dev(real(&star, IndexKind::So), formula));
    }

    let elapsed = start.elapsed();
    let worst = worst_split.max(worst_regular).max(worst_uniform);
    let ok = pairs.len() == 200
        && regulars.len() == 50
        && bases.len() == 50
        && worst <= 1e-9
        && elapsed.as_secs_f64() < 10.0;
    let detail = format!(
        "200 split pairs, 50 regular, 50 degree-levelled; worst relative deviation {worst:.2e} in {elapsed:.2?}"
    );
    verdict(3, ok, &detail);
    assert!(ok, "criterion 03: {detail}");
}

#[test]
fn criterion_04_sombor_zagreb_sandwich() {
    let ctx = ctx();
    let mut instances = corpus::tree_catalog(2, 10);
    let trees = instances.len();
    instances.extend(corpus::random_connected(&ctx, 100, 1000, 3, 40));
    let mut violations = 0usize;
    for inst in &instances {
        let m1 = real(&inst.graph, IndexKind::M1);
        let so = real(&inst.graph, IndexKind::So);
        if !leq(m1 / SQRT_2, so) || !strictly_less(so, m1) {
            violations += 1;
        }
    }
    let ok = violations == 0 && trees == 200 && instances.len() == 1200;
    let detail = format!(
        "{trees} trees on 2..=10 vertices plus 1000 random connected graphs, {violations} violations"
    );
    verdict(4, ok, &detail);
    assert!(ok, "criterion 04: {detail}");
}

#[test]
fn criterion_05_wiener_szeged() {
    let mut tree_misses = 0usize;
    let trees = corpus::tree_catalog(2, 10);
    for inst in &trees {
        if dist(&inst.graph, DistanceKind::Wiener) != dist(&inst.graph, DistanceKind::Szeged) {
            tree_misses += 1;
        }
    }
    let mut rng = derive_rng(SEED, 500);
    let mut sparse_misses = 0usize;
    for _ in 0..500 {
        let n = rng.gen_range(4..=30);
        let extra = rng.gen_range(0..=3usize);
        let inst = corpus::random_sparse(&mut rng, n, extra);
        assert!(inst.graph.m() + 1 - inst.graph.n() <= 3, "cyclomatic number within bound");
        if dist(&inst.graph, DistanceKind::Wiener) > dist(&inst.graph, DistanceKind::Szeged) {
            sparse_misses += 1;
        }
    }
    let ok = tree_misses == 0 && sparse_misses == 0;
    let detail = format!(
        "W = Sz on all {} trees, W <= Sz on 500 sparse graphs ({} & {} misses)",
        trees.len(),
        tree_misses,
        sparse_misses
    );
    verdict(5, ok, &detail);
    assert!(ok, "criterion 05: {detail}");
}

#[test]
fn criterion_06_degree_distance_bound_and_monotonicity() {
    let ctx = ctx();
    let lower = check_claim(find_claim("C7").expect("registered"), &ctx);
    let adding = check_claim(find_claim("C8").expect("registered"), &ctx);
    // 27475 labeled connected graphs on 2..=6 vertices, six exponent pairs.
    let ok = lower.violations_total == 0
        && lower.corpus_size == 164_850
        && lower.witnesses_total == 30
        && adding.violations_total == 0
        && adding.corpus_size >= 490;
    let detail = format!(
        "bound holds on {} (graph, exponent) cases with equality only at complete graphs ({} witnesses); {} edge additions all strictly decrease",
        lower.corpus_size, lower.witnesses_total, adding.corpus_size
    );
    verdict(6, ok, &detail);
    assert!(ok, "criterion 06: {detail}");
}

#[test]
fn criterion_07_spectral_suite() {
    // Vertex-energy closed forms on subdivided complete graphs.
    let mut worst_energy_form: f64 = 0.0;
    for n in 2..=8usize {
        let g = subdivision(&topoindex::generators::complete(n));
        let shares = vertex_energies(&g).expect("within the eigensolver cap");
        let nf = n as f64;
        let original = ((nf - 1.0) * (nf - 2.0).sqrt() + (2.0 * (nf - 1.0)).sqrt()) / nf;
        let subdivided = 2.0 * original / (nf - 1.0);
        for (i, &e) in shares.iter().enumerate() {
            let want = if i < n { original } else { subdivided };
            worst_energy_form = worst_energy_form.max((e - want).abs());
        }
    }
    let energies_ok = worst_energy_form <= 1e-6;

    // Subdivision characteristic polynomial, exact coefficient vectors.
    let mut specs: Vec<(String, usize)> = (3..=10).map(|n| (format!("cycle:{n}"), 2)).collect();
    specs.extend((3..=6).map(|n| (format!("complete:{n}"), n - 1)));
    let mut charpoly_misses = 0usize;
    for (spec, r) in &specs {
        let g = corpus::instance(spec).graph;
        let lifted = subdivision_charpoly(&charpoly(&g).expect("integral"), g.n(), g.m(), *r);
        if lifted != charpoly(&subdivision(&g)).expect("integral") {
            charpoly_misses += 1;
        }
    }

    // Frobenius identity and the energy split on 200 seeded random graphs.
    let mut rng = derive_rng(SEED, 700);
    let mut worst_frobenius: f64 = 0.0;
    let mut worst_split: f64 = 0.0;
    for _ in 0..200 {
        let n = rng.gen_range(2..=40);
        let p = [0.1, 0.2, 0.3, 0.5][rng.gen_range(0..4)];
        let seed: u64 = rng.gen();
        let g = corpus::instance(&format!("gnp:n={n},p={p},seed={seed}")).graph;
        let fro2 = frobenius_norm(&sombor_matrix(&g)).powi(2);
        worst_frobenius = worst_frobenius.max(rel_dev(fro2, 2.0 * real(&g, IndexKind::F)));
        let shares = vertex_energies(&g).expect("within the eigensolver cap");
        let energy = symmetric_eigen(&adjacency_matrix(&g))
            .expect("within the eigensolver cap")
            .energy();
        worst_split = worst_split.max((energy - shares.iter().sum::<f64>()).abs());
    }

    // Closed-walk moments against integer matrix powers on every graph with
    // at most six vertices, disconnected ones included.
    let mut graphs = 0usize;
    let mut worst_walks: f64 = 0.0;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1u32 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edge_list(n, &edges).expect("distinct in-range pairs");
            let spec = symmetric_eigen(&adjacency_matrix(&g)).expect("small");
            for k in 0..=6u32 {
                let exact = walk_counts_exact(&g, k);
                for i in 0..n {
                    let spectral: f64 = spec
                        .values
                        .iter()
                        .enumerate()
                        .map(|(j, lam)| spec.weight(i, j) * lam.powi(k as i32))
                        .sum();
                    worst_walks = worst_walks.max((spectral - exact[i] as f64).abs());
                }
            }
            graphs += 1;
        }
    }

    let ok = energies_ok
        && charpoly_misses == 0
        && worst_frobenius <= 1e-9
        && worst_split <= 1e-8
        && graphs == 33_867
        && worst_walks <= 1e-6;
    let detail = format!(
        "energy forms off by {worst_energy_form:.1e}; {}/{} charpoly identities exact; Frobenius {worst_frobenius:.1e} rel, energy split {worst_split:.1e} on 200 graphs; walk moments off by {worst_walks:.1e} over {graphs} graphs",
        specs.len() - charpoly_misses,
        specs.len()
    );
    verdict(7, ok, &detail);
    assert!(ok, "criterion 07: {detail}");
}

#[test]
fn criterion_08_convex_vertex_extremal_families() {
    let start = Instant::now();
    let report = check_claim(find_claim("C14").expect("registered"), &ctx());
    let elapsed = start.elapsed();
    let ok = report.violations_total == 0
        && report.corpus_size > 0
        && elapsed.as_secs_f64() < 300.0;
    let detail = format!(
        "{} family instances (pendant, segment, branch, matched; both kernels) all match closed forms and witnesses in {elapsed:.2?}",
        report.corpus_size
    );
    verdict(8, ok, &detail);
    assert!(ok, "criterion 08: {detail}");
}

#[test]
fn criterion_09_lanzhou_floors_at_14() {
    let report = check_claim(find_claim("C15").expect("registered"), &ctx());
    let ok = report.violations_total == 0 && report.corpus_size == 7;
    let detail = format!(
        "{} branch-count floors plus the global matched floor, equality multisets unique",
        report.corpus_size - 1
    );
    verdict(9, ok, &detail);
    assert!(ok, "criterion 09: {detail}");
}

#[test]
fn criterion_10_max_degree_square_band() {
    let report = check_claim(find_claim("C19").expect("registered"), &ctx());
    let ok = report.violations_total == 0 && report.corpus_size == 21;
    let detail = format!(
        "band holds on all {} (order, size) cells with m >= n(n-1)/4; tight on {}",
        report.corpus_size, report.witnesses_total
    );
    verdict(10, ok, &detail);
    assert!(ok, "criterion 10: {detail}");
}

#[test]
fn criterion_11_giant_component_threshold() {
    let start = Instant::now();
    let supercritical = DegreeProfile::new([(1usize, 0.5f64), (3, 0.5)].into_iter().collect())
        .expect("normalized");
    let sub = DegreeProfile::new([(1usize, 0.8f64), (3, 0.2)].into_iter().collect())
        .expect("normalized");
    let above = giant_component_experiment(&supercritical, 2000, 20, SEED).expect("feasible");
    let below = giant_component_experiment(&sub, 2000, 20, SEED).expect("feasible");
    let elapsed = start.elapsed();
    let ok = above.median_fraction > 0.2
        && below.median_fraction < 0.05
        && elapsed.as_secs_f64() < 30.0;
    let detail = format!(
        "Q=+1 median fraction {:.4} (> 0.2), Q=-0.2 median {:.4} (< 0.05) in {elapsed:.2?}",
        above.median_fraction, below.median_fraction
    );
    verdict(11, ok, &detail);
    assert!(ok, "criterion 11: {detail}");
}

#[test]
fn criterion_12_randic_statistic_normality() {
    let report = randic_clt_experiment(200, 0.5, -0.5, 500, SEED).expect("well-posed");
    let mean_dev = rel_dev(report.sample_mean, report.asymptotic_mean);
    let ok = report.skewness.abs() < 0.2
        && report.excess_kurtosis.abs() < 0.5
        && report.ks_distance < 0.08
        && mean_dev < 0.05;
    let detail = format!(
        "skew {:+.4}, excess kurtosis {:+.4}, KS {:.4}, mean within {:.2}% of asymptotic",
        report.skewness,
        report.excess_kurtosis,
        report.ks_distance,
        100.0 * mean_dev
    );
    verdict(12, ok, &detail);
    assert!(ok, "criterion 12: {detail}");
}

#[test]
fn criterion_13_recorded_violation_does_not_gate() {
    let config = SuiteConfig { seed: SEED, quick: false, claims: vec!["C6".into()] };
    let report = run_suite(&config).expect("known claim id");
    let c6 = &report.claims[0];
    let has_triangle = c6.violations.iter().any(|v| v.fingerprint == "cycle:3");
    let ok = c6.violations_total >= 1
        && has_triangle
        && c6.status == "REPORT-ONLY"
        && !c6.failed
        && report.passed;
    let detail = format!(
        "C6 records {} violations (3-cycle included) yet the suite still passes",
        c6.violations_total
    );
    verdict(13, ok, &detail);
    assert!(ok, "criterion 13: {detail}");
}

#[test]
fn criterion_14_pairwise_spread_maxima() {
    // Closed form recomputed independently of the claim checker.
    let closed = |n: i64| {
        let raw = 2 * n * n * n - 3 * n * n - 2 * n;
        (if n % 2 == 1 { raw + 3 } else { raw }) / 12
    };
    let report = check_claim(find_claim("C13").expect("registered"), &ctx());
    let attained = |order: usize, value: f64| {
        report
            .witnesses
            .iter()
            .any(|w| w.note.contains(&format!("order-{order}")) && w.value == value)
    };
    let ok = closed(5) == 14
        && closed(7) == 44
        && report.violations_total == 0
        && attained(5, 14.0)
        && attained(7, 44.0);
    let detail = format!(
        "maxima attained: 14 at n=5, 44 at n=7 (exact closed-form values; the handed-down n=7 constant is garbled, see claim C13's notes); bound never exceeded over {} multisets",
        report.corpus_size
    );
    verdict(14, ok, &detail);
    assert!(ok, "criterion 14: {detail}");
}

#[test]
fn criterion_15_byte_identical_reruns() {
    let config = SuiteConfig::default();
    let first = run_suite(&config).expect("registry runs");
    let second = run_suite(&config).expect("registry runs");
    let a = first.to_json();
    let b = second.to_json();
    let ok = a == b && first.passed && first.claims.len() == 25;
    let detail = format!(
        "two full-budget runs of all {} claims serialize to identical {} bytes, suite passes",
        first.claims.len(),
        a.len()
    );
    verdict(15, ok, &detail);
    assert!(ok, "criterion 15: {detail}");
}
