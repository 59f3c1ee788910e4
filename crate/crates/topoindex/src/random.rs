//! Randomized graph models and sampling experiments.
//!
//! Reproducibility contract: every experiment takes one u64 seed, derives an
//! independent ChaCha12 stream per trial with [`derive_rng`], and reports the
//! seed back in its result. Reruns with the same seed are bit-identical.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeSequence, Graph, GraphError};

#[derive(Debug, Error)]
pub enum RandomError {
    #[error("degree total {sum} is odd; half-edges cannot be paired")]
    OddDegreeTotal { sum: usize },
    #[error("degree profile is empty or has a non-positive mass total")]
    BadProfile,
    #[error("profile probability for degree {degree} is negative: {p}")]
    NegativeMass { degree: usize, p: f64 },
    #[error("edge probability {p} for pair ({i}, {j}) is outside [0, 1)")]
    BadEdgeProbability { i: usize, j: usize, p: f64 },
    #[error("weight matrix violates the model: {reason}")]
    BadWeights { reason: String },
    #[error("need at least 100 samples for distribution diagnostics, got {samples}")]
    TooFewSamples { samples: usize },
    #[error("sampled statistic is degenerate (zero variance)")]
    DegenerateVariance,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Splitmix64 step; the expansion used to spread seed+index into key bytes.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Independent, reproducible stream number `index` under `seed`.
pub fn derive_rng(seed: u64, index: u64) -> ChaCha12Rng {
    let mut state = seed ^ index.wrapping_mul(0xA076_1D64_78BD_642F);
    let mut key = [0u8; 32];
    for chunk in key.chunks_mut(8) {
        chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
    }
    ChaCha12Rng::from_seed(key)
}

/// One draw from the erased configuration model.
#[derive(Clone, Debug)]
pub struct ConfigModelSample {
    pub graph: Graph,
    /// Self-loops discarded in the final draw.
    pub loops_erased: usize,
    /// Parallel edges collapsed in the final draw.
    pub multi_edges_erased: usize,
    /// Pairings attempted (1 = clean on the first try).
    pub attempts: usize,
    /// Σ_v |intended degree − realized degree|; at most
    /// 2·(loops + parallel edges erased).
    pub degree_deficit: usize,
}

/// Pairs shuffled half-edge stubs, then erases self-loops and duplicate
/// edges. With `resample_budget > 0`, a draw that needed any erasure is
/// retried with a fresh shuffle up to that many times; the last draw is
/// returned if the budget runs out.
pub fn configuration_model(
    seq: &DegreeSequence,
    rng: &mut impl Rng,
    resample_budget: usize,
) -> Result<ConfigModelSample, RandomError> {
    let sum = seq.sum();
    if sum % 2 != 0 {
        return Err(RandomError::OddDegreeTotal { sum });
    }
    let n = seq.len();
    let mut stubs: Vec<usize> = Vec::with_capacity(sum);
    for (v, &d) in seq.values().iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v, d));
    }
    let mut attempts = 0;
    loop {
        attempts += 1;
        stubs.shuffle(rng);
        let mut loops = 0;
        let mut seen = std::collections::BTreeSet::new();
        let mut multi = 0;
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v {
                loops += 1;
            } else if !seen.insert((u, v)) {
                multi += 1;
            }
        }
        if (loops + multi) > 0 && attempts <= resample_budget {
            continue;
        }
        let edges: Vec<(usize, usize)> = seen.into_iter().collect();
        let graph = Graph::from_edge_list(n, &edges)?;
        let degree_deficit = seq
            .values()
            .iter()
            .enumerate()
            .map(|(v, &d)| d.abs_diff(graph.degree(v)))
            .sum();
        debug_assert!(degree_deficit <= 2 * (loops + multi));
        return Ok(ConfigModelSample {
            graph,
            loops_erased: loops,
            multi_edges_erased: multi,
            attempts,
            degree_deficit,
        });
    }
}

/// A limiting degree distribution: degree → mass fraction λ_i.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeProfile {
    mass: BTreeMap<usize, f64>,
}

impl DegreeProfile {
    pub fn new(mass: BTreeMap<usize, f64>) -> Result<Self, RandomError> {
        if let Some((&degree, &p)) = mass.iter().find(|&(_, &p)| p < 0.0) {
            return Err(RandomError::NegativeMass { degree, p });
        }
        let total: f64 = mass.values().sum();
        if mass.is_empty() || total <= 0.0 {
            return Err(RandomError::BadProfile);
        }
        let mass = mass.into_iter().map(|(d, p)| (d, p / total)).collect();
        Ok(DegreeProfile { mass })
    }

    pub fn masses(&self) -> &BTreeMap<usize, f64> {
        &self.mass
    }

    /// Q = Σ i(i−2)λ_i. A giant component emerges in the configuration
    /// model exactly when Q > 0; all components stay small when Q < 0.
    pub fn q_parameter(&self) -> f64 {
        self.mass
            .iter()
            .map(|(&i, &p)| (i as f64) * (i as f64 - 2.0) * p)
            .sum()
    }

    /// Deterministic finite realization: class counts round(λ_i·n),
    /// repaired so the counts total n (adjusting the largest class) and the
    /// degree sum is even (one vertex of the smallest class moved one degree
    /// up).
    pub fn realize(&self, n: usize) -> DegreeSequence {
        let mut counts: BTreeMap<usize, usize> = self
            .mass
            .iter()
            .map(|(&d, &p)| (d, (p * n as f64).round() as usize))
            .collect();
        // Rounding drift: resize the most populous class (ties to the
        // larger degree) one vertex at a time.
        loop {
            let total: usize = counts.values().sum();
            if total == n {
                break;
            }
            let (&bulk, _) = counts
                .iter()
                .max_by_key(|&(&d, &c)| (c, d))
                .expect("profile is non-empty");
            let c = counts.get_mut(&bulk).expect("key just found");
            if total > n {
                *c -= 1;
            } else {
                *c += 1;
            }
        }
        counts.retain(|_, &mut c| c > 0);
        let sum: usize = counts.iter().map(|(&d, &c)| d * c).sum();
        if sum % 2 != 0 {
            let (&low, _) = counts.iter().next().expect("n > 0 when the sum is odd");
            *counts.get_mut(&low).expect("key just found") -= 1;
            *counts.entry(low + 1).or_insert(0) += 1;
            counts.retain(|_, &mut c| c > 0);
        }
        let mut d: Vec<usize> = Vec::with_capacity(n);
        for (&deg, &c) in &counts {
            d.extend(std::iter::repeat_n(deg, c));
        }
        DegreeSequence::new(d)
    }
}

/// Empirical Q of a realized degree sequence.
pub fn empirical_q_parameter(seq: &DegreeSequence) -> f64 {
    let n = seq.len().max(1) as f64;
    seq.values()
        .iter()
        .map(|&d| (d as f64) * (d as f64 - 2.0))
        .sum::<f64>()
        / n
}

pub fn largest_component_fraction(g: &Graph) -> f64 {
    if g.n() == 0 {
        return 0.0;
    }
    let largest = g.components().into_iter().map(|c| c.len()).max().unwrap_or(0);
    largest as f64 / g.n() as f64
}

/// One giant-component experiment: the profile realized once at size n, then
/// `trials` configuration-model pairings, each on its own derived stream.
#[derive(Clone, Debug, Serialize)]
pub struct GiantComponentReport {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub profile_q: f64,
    pub realized_q: f64,
    pub fractions: Vec<f64>,
    pub median_fraction: f64,
    pub mean_degree_deficit: f64,
}

pub fn giant_component_experiment(
    profile: &DegreeProfile,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<GiantComponentReport, RandomError> {
    let degrees = profile.realize(n);
    let mut fractions = Vec::with_capacity(trials);
    let mut deficit_total = 0usize;
    for t in 0..trials {
        let mut rng = derive_rng(seed, t as u64);
        let sample = configuration_model(&degrees, &mut rng, 0)?;
        deficit_total += sample.degree_deficit;
        fractions.push(largest_component_fraction(&sample.graph));
    }
    let mut sorted = fractions.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let median_fraction = if sorted.is_empty() {
        0.0
    } else if sorted.len() % 2 == 1 {
        sorted[sorted.len() / 2]
    } else {
        (sorted[sorted.len() / 2 - 1] + sorted[sorted.len() / 2]) / 2.0
    };
    Ok(GiantComponentReport {
        n,
        trials,
        seed,
        profile_q: profile.q_parameter(),
        realized_q: empirical_q_parameter(&degrees),
        fractions,
        median_fraction,
        mean_degree_deficit: deficit_total as f64 / trials.max(1) as f64,
    })
}

/// Inhomogeneous Bernoulli model: edge ij appears independently with
/// probability p·w_ij, where w is symmetric, zero on the diagonal, and
/// bounded into [β, 1].
#[derive(Clone, Debug)]
pub struct HeterogeneousModel {
    pub n: usize,
    pub p: f64,
    pub beta: f64,
    /// None means w ≡ 1 off the diagonal.
    pub weights: Option<Vec<Vec<f64>>>,
}

impl HeterogeneousModel {
    pub fn new(
        n: usize,
        p: f64,
        beta: f64,
        weights: Option<Vec<Vec<f64>>>,
    ) -> Result<Self, RandomError> {
        if !(0.0 < beta && beta <= 1.0) {
            return Err(RandomError::BadWeights {
                reason: format!("beta = {beta} is outside (0, 1]"),
            });
        }
        if let Some(w) = &weights {
            if w.len() != n || w.iter().any(|row| row.len() != n) {
                return Err(RandomError::BadWeights { reason: "matrix is not n x n".into() });
            }
            for i in 0..n {
                if w[i][i] != 0.0 {
                    return Err(RandomError::BadWeights {
                        reason: format!("diagonal entry ({i}, {i}) is {}", w[i][i]),
                    });
                }
                for j in i + 1..n {
                    if w[i][j] != w[j][i] {
                        return Err(RandomError::BadWeights {
                            reason: format!("asymmetry at ({i}, {j})"),
                        });
                    }
                    if !(beta..=1.0).contains(&w[i][j]) {
                        return Err(RandomError::BadWeights {
                            reason: format!(
                                "entry ({i}, {j}) = {} is outside [{beta}, 1]",
                                w[i][j]
                            ),
                        });
                    }
                }
            }
        }
        let model = HeterogeneousModel { n, p, beta, weights };
        for (i, j, q) in model.edge_probabilities() {
            if !(0.0..1.0).contains(&q) {
                return Err(RandomError::BadEdgeProbability { i, j, p: q });
            }
        }
        Ok(model)
    }

    fn edge_probabilities(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| {
            (i + 1..n).map(move |j| {
                let w = self.weights.as_ref().map_or(1.0, |w| w[i][j]);
                (i, j, self.p * w)
            })
        })
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for (i, j, q) in self.edge_probabilities() {
            if rng.gen::<f64>() < q {
                edges.push((i, j));
            }
        }
        Graph::from_edge_list(self.n, &edges).expect("pairs are in range and distinct")
    }
}

/// Plain G(n, p): unit weights, p anywhere in [0, 1].
pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph, RandomError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(RandomError::BadEdgeProbability { i: 0, j: 0, p });
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Φ, the standard normal CDF.
pub fn standard_normal_cdf(x: f64) -> f64 {
    0.5 * (1.0 + libm::erf(x / std::f64::consts::SQRT_2))
}

/// Distribution diagnostics of a general Randić-type statistic over the
/// unit-weight Bernoulli graph.
#[derive(Clone, Debug, Serialize)]
pub struct CltReport {
    pub n: usize,
    pub p: f64,
    pub tau: f64,
    pub samples: usize,
    pub seed: u64,
    pub sample_mean: f64,
    /// Σ_{i<j} p·w_ij·(w_{i(j)}·w_{j(i)})^τ, reading w_{i(j)} as the
    /// expected degree of i excluding j: p·Σ_{k≠j} w_ik (the diagonal is 0,
    /// so with w ≡ 1 this is p(n−2)).
    pub asymptotic_mean: f64,
    pub sample_std_dev: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
    /// Kolmogorov distance between the standardized sample and Φ.
    pub ks_distance: f64,
}

/// Samples Σ_{ij∈E} (w_{i(j)} w_{j(i)})^τ over draws of the unit-weight
/// model and summarizes how close to normal the sample is.
pub fn randic_clt_experiment(
    n: usize,
    p: f64,
    tau: f64,
    samples: usize,
    seed: u64,
) -> Result<CltReport, RandomError> {
    if samples < 100 {
        return Err(RandomError::TooFewSamples { samples });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(RandomError::BadEdgeProbability { i: 0, j: 0, p });
    }
    // Unit weights: every pair shares w_{i(j)} = p(n−2), so each present
    // edge contributes the same term and the statistic is term·m.
    let pair_weight = p * (n as f64 - 2.0);
    let term = (pair_weight * pair_weight).powf(tau);
    if p == 0.0 || !term.is_finite() {
        return Err(RandomError::DegenerateVariance);
    }
    let pairs = n * (n - 1) / 2;
    let asymptotic_mean = pairs as f64 * p * term;

    let mut values = Vec::with_capacity(samples);
    for s in 0..samples {
        let mut rng = derive_rng(seed, s as u64);
        let g = gnp(n, p, &mut rng)?;
        values.push(g.m() as f64 * term);
    }

    let count = values.len() as f64;
    let sample_mean = values.iter().sum::<f64>() / count;
    let central = |k: i32| -> f64 {
        values.iter().map(|v| (v - sample_mean).powi(k)).sum::<f64>() / count
    };
    let m2 = central(2);
    if m2 == 0.0 {
        return Err(RandomError::DegenerateVariance);
    }
    let sd = m2.sqrt();
    let skewness = central(3) / m2.powf(1.5);
    let excess_kurtosis = central(4) / (m2 * m2) - 3.0;

    let mut z: Vec<f64> = values.iter().map(|v| (v - sample_mean) / sd).collect();
    z.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n_z = z.len() as f64;
    let ks_distance = z
        .iter()
        .enumerate()
        .map(|(i, &zi)| {
            let phi = standard_normal_cdf(zi);
            let lo = phi - i as f64 / n_z;
            let hi = (i + 1) as f64 / n_z - phi;
            lo.max(hi)
        })
        .fold(0.0, f64::max);

    Ok(CltReport {
        n,
        p,
        tau,
        samples,
        seed,
        sample_mean,
        asymptotic_mean,
        sample_std_dev: sd,
        skewness,
        excess_kurtosis,
        ks_distance,
    })
}

/// A connected random graph: G(n, p) draws retried with p lifted toward 1 on
/// repeated failures.
pub fn random_connected_graph(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph, RandomError> {
    let mut p = p.clamp(0.0, 1.0);
    for _ in 0..200 {
        let g = gnp(n, p, rng)?;
        if g.is_connected() {
            return Ok(g);
        }
        p = (p * 1.2 + 0.01).min(1.0);
    }
    // p has been pushed to 1 by now; the complete graph is connected.
    Ok(crate::generators::complete(n))
}

/// A uniformly random labeled tree on n vertices via a random code.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Result<Graph, RandomError> {
    if n <= 2 {
        let edges: &[(usize, usize)] = if n == 2 { &[(0, 1)] } else { &[] };
        return Ok(Graph::from_edge_list(n.max(1), edges)?);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(crate::enumeration::prufer_decode(&code, n).expect("generated code is in range"))
}
