//! Degree-based graph invariants.
//!
//! Every invariant here is a function of the degree data alone: either a sum
//! over edges of a function of the endpoint degrees, a sum over vertices of a
//! function of the degree, a sum over vertex pairs, or a product. The full
//! catalog lives in [`IndexKind`]; [`degree_index`] evaluates any of them.
//!
//! Multiplicative invariants (NK, Π1c, Π2, D1, D2, D1*) are returned as exact
//! integers while the product fits in 128 bits; beyond that the value falls
//! back to a floating-point result computed in log space. For comparisons on
//! large graphs use [`degree_index_ln`], which never overflows.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("AZI is undefined on edge ({u}, {v}): both endpoints have degree 1")]
    AziUndefined { u: usize, v: usize },
    #[error("SEI base must satisfy a > 0 and a != 1, got a = {a}")]
    BadSeiBase { a: f64 },
    #[error("multiplicative Zagreb exponent must be positive, got c = {c}")]
    BadPiExponent { c: f64 },
    #[error("degree shift must be non-negative, got r = {r}")]
    BadShift { r: f64 },
    #[error("graph has no vertices; {kind} needs n >= 1")]
    EmptyGraph { kind: IndexKind },
    #[error("paired-sequence evaluation needs an even number of entries, got {len}")]
    OddSequence { len: usize },
    #[error("{0} is not a logarithmic (multiplicative) invariant")]
    NotMultiplicative(IndexKind),
    #[error("caterpillar closed forms need d1 >= 2 and k >= 1, got d1={d1}, k={k}")]
    CaterpillarDomain { d1: usize, k: usize },
    #[error("unknown index kind {0:?}")]
    UnknownKind(String),
}

/// The catalog of degree-based invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IndexKind {
    /// First Zagreb: Σ d(v)².
    M1,
    /// Second Zagreb: Σ_{uv} d(u)d(v).
    M2,
    /// Modified second Zagreb: Σ_{uv} 1/(d(u)d(v)).
    ModM2,
    /// Forgotten index: Σ d(v)³.
    F,
    /// First generalized multiplicative Zagreb: Π d(v)^c.
    Pi1C,
    /// Second multiplicative Zagreb: Π_{uv} d(u)d(v) = Π d(v)^{d(v)}.
    Pi2,
    /// Narumi–Katayama: Π d(v).
    Nk,
    /// Π d(v)², the square of NK.
    D1,
    /// Π_{uv} d(u)d(v); coincides with Pi2.
    D2,
    /// Π_{uv} (d(u)+d(v)).
    D1Star,
    /// Sum connectivity: Σ_{uv} 1/√(d(u)+d(v)).
    Sci,
    /// Symmetric division degree: Σ_{uv} (d(u)/d(v) + d(v)/d(u)).
    Sdd,
    /// Inverse sum indeg: Σ_{uv} d(u)d(v)/(d(u)+d(v)).
    Isi,
    /// Harmonic: Σ_{uv} 2/(d(u)+d(v)).
    H,
    /// Atom-bond connectivity: Σ_{uv} √((d(u)+d(v)−2)/(d(u)d(v))), with √0 = 0.
    Abc,
    /// Augmented Zagreb: Σ_{uv} (d(u)d(v)/(d(u)+d(v)−2))³.
    Azi,
    /// First hyper-Zagreb: Σ_{uv} (d(u)+d(v))².
    Hm1,
    /// Second hyper-Zagreb: Σ_{uv} (d(u)d(v))².
    Hm2,
    /// Geometric-arithmetic: Σ_{uv} 2√(d(u)d(v))/(d(u)+d(v)).
    Ga,
    /// Arithmetic-geometric: Σ_{uv} (d(u)+d(v))/(2√(d(u)d(v))).
    Ag,
    /// General Randić: Σ_{uv} (d(u)d(v))^τ.
    RandicGeneral,
    /// Sombor: Σ_{uv} √(d(u)²+d(v)²).
    So,
    /// Modified Sombor: Σ_{uv} 1/√(d(u)²+d(v)²).
    ModSo,
    /// Sum lordeg: Σ_{d(v) ≥ 2} d(v)√(ln d(v)); degree ≤ 1 contributes 0.
    Sl,
    /// Variable sum exdeg: Σ d(v)·a^{d(v)}, a > 0, a ≠ 1.
    Sei,
    /// Exponential arithmetic-geometric: Σ_{uv} exp((d(u)+d(v))/(2√(d(u)d(v)))).
    Eag,
    /// Albertson irregularity: Σ_{uv} |d(u)−d(v)|.
    Irr,
    /// Total irregularity: Σ over unordered vertex pairs of |d(u)−d(v)|.
    IrrT,
    /// Degree variance: Σd²/n − (2m/n)².
    Var,
    /// Σ_v |d(v) − 2m/n|.
    Sirr,
    /// Σ_{uv} (d(u)−d(v))².
    Sigma,
    /// Σ_v d(v)²(n−1−d(v)).
    Lz,
    /// AG-type irregularity: 1 − nⁿ·Π(d(v)+r)/(2m+rn)ⁿ.
    Iag,
    /// Σ_v f(d(v)) for a pluggable vertex function f.
    Hf,
}

impl IndexKind {
    pub const ALL: [IndexKind; 34] = [
        IndexKind::M1,
        IndexKind::M2,
        IndexKind::ModM2,
        IndexKind::F,
        IndexKind::Pi1C,
        IndexKind::Pi2,
        IndexKind::Nk,
        IndexKind::D1,
        IndexKind::D2,
        IndexKind::D1Star,
        IndexKind::Sci,
        IndexKind::Sdd,
        IndexKind::Isi,
        IndexKind::H,
        IndexKind::Abc,
        IndexKind::Azi,
        IndexKind::Hm1,
        IndexKind::Hm2,
        IndexKind::Ga,
        IndexKind::Ag,
        IndexKind::RandicGeneral,
        IndexKind::So,
        IndexKind::ModSo,
        IndexKind::Sl,
        IndexKind::Sei,
        IndexKind::Eag,
        IndexKind::Irr,
        IndexKind::IrrT,
        IndexKind::Var,
        IndexKind::Sirr,
        IndexKind::Sigma,
        IndexKind::Lz,
        IndexKind::Iag,
        IndexKind::Hf,
    ];

    /// The conventional short name, also accepted by [`IndexKind::parse`].
    pub fn name(self) -> &'static str {
        match self {
            IndexKind::M1 => "M1",
            IndexKind::M2 => "M2",
            IndexKind::ModM2 => "mM2",
            IndexKind::F => "F",
            IndexKind::Pi1C => "Pi1c",
            IndexKind::Pi2 => "Pi2",
            IndexKind::Nk => "NK",
            IndexKind::D1 => "D1",
            IndexKind::D2 => "D2",
            IndexKind::D1Star => "D1*",
            IndexKind::Sci => "SCI",
            IndexKind::Sdd => "SDD",
            IndexKind::Isi => "ISI",
            IndexKind::H => "H",
            IndexKind::Abc => "ABC",
            IndexKind::Azi => "AZI",
            IndexKind::Hm1 => "HM1",
            IndexKind::Hm2 => "HM2",
            IndexKind::Ga => "GA",
            IndexKind::Ag => "AG",
            IndexKind::RandicGeneral => "Randic",
            IndexKind::So => "SO",
            IndexKind::ModSo => "mSO",
            IndexKind::Sl => "SL",
            IndexKind::Sei => "SEI",
            IndexKind::Eag => "EAG",
            IndexKind::Irr => "irr",
            IndexKind::IrrT => "irr_t",
            IndexKind::Var => "Var",
            IndexKind::Sirr => "Sirr",
            IndexKind::Sigma => "sigma",
            IndexKind::Lz => "Lz",
            IndexKind::Iag => "IAG",
            IndexKind::Hf => "Hf",
        }
    }

    pub fn parse(s: &str) -> Result<IndexKind, IndexError> {
        let want = s.trim();
        IndexKind::ALL
            .iter()
            .copied()
            .find(|k| k.name().eq_ignore_ascii_case(want))
            .ok_or_else(|| IndexError::UnknownKind(want.to_string()))
    }

    /// True when the value is a product of per-vertex or per-edge factors,
    /// making [`degree_index_ln`] applicable.
    pub fn is_multiplicative(self) -> bool {
        matches!(
            self,
            IndexKind::Pi1C
                | IndexKind::Pi2
                | IndexKind::Nk
                | IndexKind::D1
                | IndexKind::D2
                | IndexKind::D1Star
        )
    }

    /// True when the value depends only on the degree multiset, not on which
    /// vertices are adjacent.
    pub fn is_degree_determined(self) -> bool {
        matches!(
            self,
            IndexKind::M1
                | IndexKind::F
                | IndexKind::Pi1C
                | IndexKind::Pi2
                | IndexKind::Nk
                | IndexKind::D1
                | IndexKind::D2
                | IndexKind::Sl
                | IndexKind::Sei
                | IndexKind::IrrT
                | IndexKind::Var
                | IndexKind::Sirr
                | IndexKind::Lz
                | IndexKind::Iag
                | IndexKind::Hf
        )
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters for the parametric kinds. Unused fields are ignored.
#[derive(Clone, Copy, Debug)]
pub struct IndexParams {
    /// Exponent of Π1c.
    pub c: f64,
    /// Exponent of the general Randić index.
    pub tau: f64,
    /// Base of SEI.
    pub a: f64,
    /// Shift of the AG-type irregularity.
    pub r: f64,
    /// Vertex function of Hf.
    pub f: VertexFn,
}

impl Default for IndexParams {
    fn default() -> Self {
        IndexParams { c: 1.0, tau: -0.5, a: 2.0, r: 1.0, f: VertexFn::Square }
    }
}

/// Vertex functions accepted by the Hf invariant. `Square` and `XLnX` are the
/// two strictly convex functions used throughout; `Power` is a convenience.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VertexFn {
    Square,
    XLnX,
    Power(f64),
}

impl VertexFn {
    pub fn eval(self, d: f64) -> f64 {
        match self {
            VertexFn::Square => d * d,
            VertexFn::XLnX => {
                if d <= 0.0 {
                    0.0
                } else {
                    d * d.ln()
                }
            }
            VertexFn::Power(p) => d.powf(p),
        }
    }

    pub fn name(self) -> String {
        match self {
            VertexFn::Square => "square".into(),
            VertexFn::XLnX => "xlnx".into(),
            VertexFn::Power(p) => format!("pow:{p}"),
        }
    }
}

/// An invariant value: exact integer when the mathematics guarantees one and
/// the magnitude fits, floating point otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IndexValue {
    Int(i128),
    Real(f64),
}

impl IndexValue {
    pub fn as_f64(self) -> f64 {
        match self {
            IndexValue::Int(v) => v as f64,
            IndexValue::Real(v) => v,
        }
    }

    pub fn as_int(self) -> Option<i128> {
        match self {
            IndexValue::Int(v) => Some(v),
            IndexValue::Real(_) => None,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Int(v) => write!(f, "{v}"),
            IndexValue::Real(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexValue::Int(v) => {
                if let Ok(small) = i64::try_from(*v) {
                    s.serialize_i64(small)
                } else {
                    // Wider than JSON's safe integer range; emit as a string
                    // so the digits survive round-tripping.
                    s.serialize_str(&v.to_string())
                }
            }
            IndexValue::Real(v) => s.serialize_f64(*v),
        }
    }
}

fn int_edge_sum(g: &Graph, degs: &[usize], term: impl Fn(i128, i128) -> i128) -> i128 {
    g.edges().iter().map(|&(u, v)| term(degs[u] as i128, degs[v] as i128)).sum()
}

fn real_edge_sum(g: &Graph, degs: &[usize], term: impl Fn(f64, f64) -> f64) -> f64 {
    g.edges().iter().map(|&(u, v)| term(degs[u] as f64, degs[v] as f64)).sum()
}

/// Product of integer factors: exact while it fits, log-space beyond.
fn product_value(factors: impl Iterator<Item = i128> + Clone) -> IndexValue {
    let mut acc: i128 = 1;
    for f in factors.clone() {
        match acc.checked_mul(f) {
            Some(next) => acc = next,
            None => {
                let ln: f64 = factors.filter(|&f| f != 0).map(|f| (f as f64).ln()).sum();
                return IndexValue::Real(ln.exp());
            }
        }
    }
    IndexValue::Int(acc)
}

/// Evaluates a degree-based invariant.
pub fn degree_index(g: &Graph, kind: IndexKind, p: &IndexParams) -> Result<IndexValue, IndexError> {
    use IndexKind::*;
    let degs = g.degrees();
    let n = g.n();
    let m = g.m();
    let value = match kind {
        M1 => IndexValue::Int(degs.iter().map(|&d| (d * d) as i128).sum()),
        M2 => IndexValue::Int(int_edge_sum(g, &degs, |a, b| a * b)),
        F => IndexValue::Int(degs.iter().map(|&d| (d * d * d) as i128).sum()),
        Hm1 => IndexValue::Int(int_edge_sum(g, &degs, |a, b| (a + b) * (a + b))),
        Hm2 => IndexValue::Int(int_edge_sum(g, &degs, |a, b| a * b * a * b)),
        Irr => IndexValue::Int(int_edge_sum(g, &degs, |a, b| (a - b).abs())),
        Sigma => IndexValue::Int(int_edge_sum(g, &degs, |a, b| (a - b) * (a - b))),
        IrrT => {
            let mut total: i128 = 0;
            for i in 0..n {
                for j in i + 1..n {
                    total += (degs[i] as i128 - degs[j] as i128).abs();
                }
            }
            IndexValue::Int(total)
        }
        Lz => IndexValue::Int(
            degs.iter().map(|&d| (d * d) as i128 * (n as i128 - 1 - d as i128)).sum(),
        ),
        ModM2 => IndexValue::Real(real_edge_sum(g, &degs, |a, b| 1.0 / (a * b))),
        Sci => IndexValue::Real(real_edge_sum(g, &degs, |a, b| 1.0 / (a + b).sqrt())),
        Sdd => IndexValue::Real(real_edge_sum(g, &degs, |a, b| a / b + b / a)),
        Isi => IndexValue::Real(real_edge_sum(g, &degs, |a, b| a * b / (a + b))),
        H => IndexValue::Real(real_edge_sum(g, &degs, |a, b| 2.0 / (a + b))),
        Ga => IndexValue::Real(real_edge_sum(g, &degs, |a, b| 2.0 * (a * b).sqrt() / (a + b))),
        Ag => IndexValue::Real(real_edge_sum(g, &degs, |a, b| (a + b) / (2.0 * (a * b).sqrt()))),
        So => IndexValue::Real(real_edge_sum(g, &degs, |a, b| (a * a + b * b).sqrt())),
        ModSo => IndexValue::Real(real_edge_sum(g, &degs, |a, b| 1.0 / (a * a + b * b).sqrt())),
        Eag => IndexValue::Real(real_edge_sum(g, &degs, |a, b| {
            ((a + b) / (2.0 * (a * b).sqrt())).exp()
        })),
        RandicGeneral => IndexValue::Real(real_edge_sum(g, &degs, |a, b| (a * b).powf(p.tau))),
        Abc => IndexValue::Real(real_edge_sum(g, &degs, |a, b| {
            // a = b = 1 only on an isolated edge; the radicand is 0 there and
            // the convention √0 = 0 applies.
            ((a + b - 2.0) / (a * b)).max(0.0).sqrt()
        })),
        Azi => {
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| degs[u] == 1 && degs[v] == 1) {
                return Err(IndexError::AziUndefined { u, v });
            }
            IndexValue::Real(real_edge_sum(g, &degs, |a, b| (a * b / (a + b - 2.0)).powi(3)))
        }
        Sl => IndexValue::Real(
            degs.iter()
                .filter(|&&d| d >= 2)
                .map(|&d| d as f64 * (d as f64).ln().sqrt())
                .sum(),
        ),
        Sei => {
            if p.a <= 0.0 || p.a == 1.0 {
                return Err(IndexError::BadSeiBase { a: p.a });
            }
            IndexValue::Real(degs.iter().map(|&d| d as f64 * p.a.powi(d as i32)).sum())
        }
        Var => {
            require_nonempty(n, kind)?;
            let mean = 2.0 * m as f64 / n as f64;
            let sq: f64 = degs.iter().map(|&d| (d * d) as f64).sum();
            IndexValue::Real(sq / n as f64 - mean * mean)
        }
        Sirr => {
            require_nonempty(n, kind)?;
            let mean = 2.0 * m as f64 / n as f64;
            IndexValue::Real(degs.iter().map(|&d| (d as f64 - mean).abs()).sum())
        }
        Iag => {
            require_nonempty(n, kind)?;
            if p.r < 0.0 {
                return Err(IndexError::BadShift { r: p.r });
            }
            // 1 − nⁿ·Π(dᵢ+r)/(2m+rn)ⁿ, evaluated in log space. The ratio is
            // the n-th power of GM/AM of the shifted degrees, so it is ≤ 1
            // and the exponent below is ≤ 0.
            let denom = 2.0 * m as f64 + p.r * n as f64;
            if denom <= 0.0 {
                // Edgeless graph with r = 0: every shifted degree is 0.
                return Ok(IndexValue::Real(1.0));
            }
            let ln_ratio: f64 = degs
                .iter()
                .map(|&d| ((d as f64 + p.r) * n as f64 / denom).ln())
                .sum();
            IndexValue::Real(1.0 - ln_ratio.exp())
        }
        Hf => IndexValue::Real(degs.iter().map(|&d| p.f.eval(d as f64)).sum()),
        Nk => product_value(degs.iter().map(|&d| d as i128)),
        D1 => product_value(degs.iter().map(|&d| (d * d) as i128)),
        Pi2 | D2 => product_value(g.edges().iter().map(|&(u, v)| (degs[u] * degs[v]) as i128)),
        D1Star => product_value(g.edges().iter().map(|&(u, v)| (degs[u] + degs[v]) as i128)),
        Pi1C => {
            if p.c <= 0.0 {
                return Err(IndexError::BadPiExponent { c: p.c });
            }
            if p.c.fract() == 0.0 && p.c <= 32.0 {
                let e = p.c as u32;
                product_value(degs.iter().map(|&d| (d as i128).pow(e)))
            } else {
                IndexValue::Real(degree_index_ln(g, Pi1C, p)?.exp())
            }
        }
    };
    Ok(value)
}

/// Natural log of a multiplicative invariant; finite for graphs with positive
/// degrees even when the product itself overflows. A zero factor (isolated
/// vertex) makes the product 0 and the log −∞.
pub fn degree_index_ln(g: &Graph, kind: IndexKind, p: &IndexParams) -> Result<f64, IndexError> {
    use IndexKind::*;
    let degs = g.degrees();
    let ln_of = |x: usize| {
        if x == 0 {
            f64::NEG_INFINITY
        } else {
            (x as f64).ln()
        }
    };
    match kind {
        Nk => Ok(degs.iter().map(|&d| ln_of(d)).sum()),
        D1 => Ok(2.0 * degs.iter().map(|&d| ln_of(d)).sum::<f64>()),
        Pi2 | D2 => Ok(g.edges().iter().map(|&(u, v)| ln_of(degs[u] * degs[v])).sum()),
        D1Star => Ok(g.edges().iter().map(|&(u, v)| ln_of(degs[u] + degs[v])).sum()),
        Pi1C => {
            if p.c <= 0.0 {
                return Err(IndexError::BadPiExponent { c: p.c });
            }
            Ok(p.c * degs.iter().map(|&d| ln_of(d)).sum::<f64>())
        }
        other => Err(IndexError::NotMultiplicative(other)),
    }
}

fn require_nonempty(n: usize, kind: IndexKind) -> Result<(), IndexError> {
    if n == 0 {
        Err(IndexError::EmptyGraph { kind })
    } else {
        Ok(())
    }
}

/// The nine formal index values of a sequence read as consecutive pairs.
///
/// The sequence is consumed in the order given: entries (0,1), (2,3), ...
/// form the pairs. Each pair (a, b) is treated as an edge whose endpoint
/// degrees are a and b, and the nine columns are evaluated on those formal
/// edges. No actual graph is involved.
#[derive(Clone, Debug, Serialize)]
pub struct MatchingFormulas {
    pub pairs: Vec<(usize, usize)>,
    pub mm2: IndexValue,
    pub f: IndexValue,
    pub m2: IndexValue,
    pub nk: IndexValue,
    pub d1: IndexValue,
    pub d2: IndexValue,
    pub d1_star: IndexValue,
    pub sci: IndexValue,
    pub sdd: IndexValue,
}

impl MatchingFormulas {
    /// Column name/value rows in table order.
    pub fn rows(&self) -> Vec<(&'static str, IndexValue)> {
        vec![
            ("mM2", self.mm2),
            ("F", self.f),
            ("M2", self.m2),
            ("NK", self.nk),
            ("D1", self.d1),
            ("D2", self.d2),
            ("D1*", self.d1_star),
            ("SCI", self.sci),
            ("SDD", self.sdd),
        ]
    }
}

pub fn matching_formula_indices(values: &[usize]) -> Result<MatchingFormulas, IndexError> {
    if values.len() % 2 != 0 {
        return Err(IndexError::OddSequence { len: values.len() });
    }
    let pairs: Vec<(usize, usize)> = values.chunks(2).map(|c| (c[0], c[1])).collect();
    let fp = pairs.iter().map(|&(a, b)| (a as f64, b as f64));
    let nk = product_value(pairs.iter().map(|&(a, b)| (a * b) as i128));
    let d1 = match nk {
        IndexValue::Int(v) => match v.checked_mul(v) {
            Some(sq) => IndexValue::Int(sq),
            None => IndexValue::Real((v as f64) * (v as f64)),
        },
        IndexValue::Real(v) => IndexValue::Real(v * v),
    };
    Ok(MatchingFormulas {
        mm2: IndexValue::Real(fp.clone().map(|(a, b)| 1.0 / (a * b)).sum()),
        f: IndexValue::Int(pairs.iter().map(|&(a, b)| (a * a + b * b) as i128).sum()),
        m2: IndexValue::Int(pairs.iter().map(|&(a, b)| (a * b) as i128).sum()),
        nk,
        d1,
        d2: nk,
        d1_star: product_value(pairs.iter().map(|&(a, b)| (a + b) as i128)),
        sci: IndexValue::Real(fp.clone().map(|(a, b)| 1.0 / (a + b).sqrt()).sum()),
        sdd: IndexValue::Real(fp.map(|(a, b)| a / b + b / a).sum()),
        pairs,
    })
}

/// Closed forms printed for the uniform caterpillar family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaterpillarIndex {
    Ga,
    SumConnectivity,
}

/// Evaluates the printed caterpillar closed form, term by term.
///
/// These are transcriptions, not derivations: the GA form's middle term does
/// not agree with the edge census of any actual caterpillar (the `table`
/// report compares both), so this function must stay a literal evaluator.
pub fn caterpillar_formula(
    kind: CaterpillarIndex,
    d1: usize,
    k: usize,
) -> Result<f64, IndexError> {
    if d1 < 2 || k < 1 {
        return Err(IndexError::CaterpillarDomain { d1, k });
    }
    let d = d1 as f64;
    let kf = k as f64;
    Ok(match kind {
        CaterpillarIndex::Ga => {
            4.0 * d * d.sqrt() / (d + 1.0)
                + 2.0 * kf * d * (d + 1.0).sqrt() / (d + 2.0)
                + 4.0 * (d * (d + 1.0)).sqrt() / (2.0 * d + 1.0)
        }
        CaterpillarIndex::SumConnectivity => {
            2.0 * (d + 1.0) / (d + 4.0).sqrt() + kf * d / (d + 3.0).sqrt() + 2.0 / (2.0 * d + 3.0).sqrt()
        }
    })
}
