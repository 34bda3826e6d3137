//! Global well-definedness checks turning local counts into verdicts
//! and arrays: distance-regular, edge-distance-regular, homogeneous,
//! generalized odd; intersection parameters p_ij^k.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceData, Graph};
use crate::partitions::{
    edge_local_counts, edge_partition, is_equitable, local_counts, pair_partition,
};

/// The array {b_0..b_{d-1}; c_1..c_d} of a distance-regular graph.
/// a_i is derived as delta - b_i - c_i with b_d = 0 and c_0 = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub delta: usize,
}

impl IntersectionArray {
    pub fn d(&self) -> usize {
        self.c.len()
    }

    pub fn b_at(&self, i: usize) -> usize {
        if i < self.b.len() {
            self.b[i]
        } else {
            0
        }
    }

    pub fn c_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a_at(&self, i: usize) -> usize {
        self.delta - self.b_at(i) - self.c_at(i)
    }

    /// `{b0,...,b_{d-1};c1,...,c_d}`
    pub fn render(&self) -> String {
        render_array(&self.b, &self.c)
    }
}

/// The edge counterpart {b~_0..b~_{dt-1}; c~_1..c~_dt}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeIntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub delta: usize,
}

impl EdgeIntersectionArray {
    pub fn d_tilde(&self) -> usize {
        self.c.len()
    }

    pub fn b_at(&self, i: usize) -> usize {
        if i < self.b.len() {
            self.b[i]
        } else {
            0
        }
    }

    pub fn c_at(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a_at(&self, i: usize) -> usize {
        self.delta - self.b_at(i) - self.c_at(i)
    }

    pub fn render(&self) -> String {
        render_array(&self.b, &self.c)
    }
}

fn render_array(b: &[usize], c: &[usize]) -> String {
    let bs: Vec<String> = b.iter().map(ToString::to_string).collect();
    let cs: Vec<String> = c.iter().map(ToString::to_string).collect();
    format!("{{{};{}}}", bs.join(","), cs.join(","))
}

/// A classifier verdict: either the regular structure, or a concrete
/// witness of the first disagreement found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification<T> {
    Is(T),
    IsNot { witness: String },
}

impl<T> Classification<T> {
    pub fn ok(&self) -> Option<&T> {
        match self {
            Classification::Is(t) => Some(t),
            Classification::IsNot { .. } => None,
        }
    }

    pub fn into_option(self) -> Option<T> {
        match self {
            Classification::Is(t) => Some(t),
            Classification::IsNot { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Classification::Is(_) => None,
            Classification::IsNot { witness } => Some(witness),
        }
    }
}

/// Exhaustive distance-regularity check over all ordered vertex pairs
/// (including w = u, which pins down b_0 and hence regularity).
pub fn classify_drg(g: &Graph, dd: &DistanceData) -> Classification<IntersectionArray> {
    let d = dd.diameter;
    let mut per_i: Vec<Option<(usize, usize, usize)>> = vec![None; d + 1];
    for u in 0..g.n() {
        for w in 0..g.n() {
            let lc = local_counts(g, dd, w, u);
            let tuple = (lc.c, lc.a, lc.b);
            match per_i[lc.i] {
                None => per_i[lc.i] = Some(tuple),
                Some(expected) if expected == tuple => {}
                Some(expected) => {
                    return Classification::IsNot {
                        witness: format!(
                            "pair (w={w}, u={u}) at distance {} has (c,a,b)={tuple:?}, \
                             expected {expected:?}",
                            lc.i
                        ),
                    };
                }
            }
        }
    }
    let counts: Vec<(usize, usize, usize)> = per_i.into_iter().map(Option::unwrap).collect();
    let delta = counts[0].2;
    let b = (0..d).map(|i| counts[i].2).collect();
    let c = (1..=d).map(|i| counts[i].0).collect();
    Classification::Is(IntersectionArray { b, c, delta })
}

/// Exhaustive edge-distance-regularity check over all edges and all
/// vertices. All edges must share the same eccentricity and identical
/// per-layer counts.
pub fn classify_edrg(g: &Graph, dd: &DistanceData) -> Classification<EdgeIntersectionArray> {
    let dt = dd.edge_diameter;
    if let Some(short) = dd.per_edge_ecc.iter().position(|&e| e != dt) {
        let (u, v) = g.edges()[short];
        return Classification::IsNot {
            witness: format!(
                "edge ({u},{v}) has eccentricity {} but the edge-diameter is {dt}",
                dd.per_edge_ecc[short]
            ),
        };
    }
    let mut per_i: Vec<Option<(usize, usize, usize)>> = vec![None; dt + 1];
    for &(u, v) in g.edges() {
        let part = match edge_partition(g, dd, u, v) {
            Ok(p) => p,
            Err(e) => {
                return Classification::IsNot {
                    witness: format!("edge ({u},{v}): {e}"),
                }
            }
        };
        for w in 0..g.n() {
            let i = part.layer_of(w);
            let tuple = edge_local_counts(g, &part, w);
            match per_i[i] {
                None => per_i[i] = Some(tuple),
                Some(expected) if expected == tuple => {}
                Some(expected) => {
                    return Classification::IsNot {
                        witness: format!(
                            "edge ({u},{v}), vertex {w} in layer {i} has \
                             (c~,a~,b~)={tuple:?}, expected {expected:?}"
                        ),
                    };
                }
            }
        }
    }
    let counts: Vec<(usize, usize, usize)> = per_i.into_iter().map(Option::unwrap).collect();
    let delta = counts[0].0 + counts[0].1 + counts[0].2;
    let b = (0..dt).map(|i| counts[i].2).collect();
    let c = (1..=dt).map(|i| counts[i].0).collect();
    Classification::Is(EdgeIntersectionArray { b, c, delta })
}

/// Quotient of the joint distance partition: neighbor counts from the
/// cell labelled (s, r) into the cell labelled (i, j).
pub type PairQuotient = BTreeMap<(usize, usize), BTreeMap<(usize, usize), usize>>;

/// Homogeneity: every ordered pair of adjacent vertices induces an
/// equitable joint distance partition, and all quotients agree
/// cell-by-cell (cells keyed by their (i, j) labels).
pub fn classify_homogeneous(g: &Graph, dd: &DistanceData) -> Classification<PairQuotient> {
    let mut common: Option<PairQuotient> = None;
    for &(a, b) in g.edges() {
        for (u, v) in [(a, b), (b, a)] {
            let pp = match pair_partition(g, dd, u, v) {
                Ok(p) => p,
                Err(e) => {
                    return Classification::IsNot {
                        witness: format!("edge ({u},{v}): {e}"),
                    }
                }
            };
            let keys: Vec<(usize, usize)> = pp.keys().collect();
            let cells: Vec<Vec<usize>> = keys.iter().map(|&(i, j)| pp.cell(i, j).to_vec()).collect();
            let quotient = match is_equitable(g, &cells) {
                Ok(Some(q)) => q,
                Ok(None) => {
                    return Classification::IsNot {
                        witness: format!("partition from edge ({u},{v}) is not equitable"),
                    }
                }
                Err(e) => {
                    return Classification::IsNot {
                        witness: format!("edge ({u},{v}): {e}"),
                    }
                }
            };
            let mut keyed: PairQuotient = BTreeMap::new();
            for (s, key) in keys.iter().enumerate() {
                let row: BTreeMap<(usize, usize), usize> = keys
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| quotient[s][*t] > 0)
                    .map(|(t, k)| (*k, quotient[s][t]))
                    .collect();
                keyed.insert(*key, row);
            }
            match &common {
                None => common = Some(keyed),
                Some(expected) if *expected == keyed => {}
                Some(_) => {
                    return Classification::IsNot {
                        witness: format!(
                            "quotient from edge ({u},{v}) differs from the common quotient"
                        ),
                    };
                }
            }
        }
    }
    match common {
        Some(q) => Classification::Is(q),
        None => Classification::IsNot {
            witness: "graph has no edges".to_string(),
        },
    }
}

/// Generalized odd graph test: a_0 = ... = a_{d-1} = 0 and a_d != 0,
/// cross-checked against odd-girth = 2d + 1. The two criteria
/// disagreeing is an internal-consistency error.
pub fn is_generalized_odd(g: &Graph, _dd: &DistanceData, arr: &IntersectionArray) -> Result<bool> {
    let d = arr.d();
    let by_array = (0..d).all(|i| arr.a_at(i) == 0) && arr.a_at(d) != 0;
    let by_girth = g.odd_girth() == Some(2 * d + 1);
    if by_array != by_girth {
        return Err(Error::Internal(format!(
            "generalized-odd criteria disagree: array says {by_array}, odd-girth says {by_girth}"
        )));
    }
    Ok(by_array)
}

/// Intersection parameter p_ij^k = |Gamma_i(u) ∩ Gamma_j(v)| over all
/// ordered pairs at distance k; collapses to a single number exactly
/// when the count is pair-independent.
pub fn triple_intersection(
    g: &Graph,
    dd: &DistanceData,
    i: usize,
    j: usize,
    k: usize,
) -> Classification<usize> {
    let mut value: Option<usize> = None;
    for u in 0..g.n() {
        for v in 0..g.n() {
            if dd.dist(u, v) != k {
                continue;
            }
            let count = (0..g.n())
                .filter(|&w| dd.dist(w, u) == i && dd.dist(w, v) == j)
                .count();
            match value {
                None => value = Some(count),
                Some(expected) if expected == count => {}
                Some(expected) => {
                    return Classification::IsNot {
                        witness: format!(
                            "pair ({u},{v}) at distance {k} gives {count}, expected {expected}"
                        ),
                    };
                }
            }
        }
    }
    match value {
        Some(v) => Classification::Is(v),
        None => Classification::IsNot {
            witness: format!("no vertex pair at distance {k}"),
        },
    }
}

/// Bundle of verdicts for one graph.
#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub n: usize,
    pub m: usize,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub odd_girth: Option<usize>,
    pub diameter: usize,
    pub edge_diameter: usize,
    pub drg: Classification<IntersectionArray>,
    pub edrg: Classification<EdgeIntersectionArray>,
    pub homogeneous: Classification<PairQuotient>,
    pub generalized_odd: bool,
    /// d~ = 0: the single-edge graph is edge-distance-regular only
    /// vacuously, and reports flag it instead of asserting intent.
    pub edrg_vacuous: bool,
}

/// Run every classifier on a connected graph.
pub fn classify(g: &Graph) -> Result<ClassificationReport> {
    let dd = g.distance_data()?;
    let drg = classify_drg(g, &dd);
    let edrg = classify_edrg(g, &dd);
    let generalized_odd = match drg.ok() {
        Some(arr) => is_generalized_odd(g, &dd, arr)?,
        None => false,
    };
    let edrg_vacuous = edrg.ok().is_some_and(|arr| arr.d_tilde() == 0);
    Ok(ClassificationReport {
        n: g.n(),
        m: g.m(),
        regular: g.is_regular(),
        bipartite: g.is_bipartite(),
        odd_girth: g.odd_girth(),
        diameter: dd.diameter,
        edge_diameter: dd.edge_diameter,
        drg,
        edrg,
        homogeneous: classify_homogeneous(g, &dd),
        generalized_odd,
        edrg_vacuous,
    })
}
