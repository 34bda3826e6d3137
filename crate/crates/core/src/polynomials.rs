//! The trace inner product, predistance and edge-predistance
//! polynomials by two independent constructions, the Hoffman
//! polynomial, and the matrix characterizations of (edge-)distance-
//! regularity.

use num::{One, Zero};

use crate::classify::{EdgeIntersectionArray, IntersectionArray};
use crate::error::{Error, Result};
use crate::exact::{min_poly_degree, rat_int, RatMatrix, RatPoly, Rational};
use crate::graph::{incidence_matrix_family, DistanceData, Graph};

/// Polynomial space attached to a graph, with the scalar product
/// <f, g> = (1/n) tr(f(A) g(A)). Power traces are cached once; the
/// space is immutable afterwards.
pub struct InnerProductSpace {
    adjacency: RatMatrix,
    n: usize,
    /// minimal-polynomial degree minus one; the predistance sequence
    /// stops at this degree
    d: usize,
    power_traces: Vec<Rational>,
}

impl InnerProductSpace {
    pub fn new(g: &Graph) -> Result<Self> {
        let adjacency = g.adjacency_matrix();
        let d = min_poly_degree(&adjacency)? - 1;
        let mut power_traces = Vec::with_capacity(2 * d + 1);
        let mut power = RatMatrix::identity(g.n());
        for _ in 0..=2 * d {
            power_traces.push(power.trace()?);
            power = power.mul(&adjacency)?;
        }
        Ok(InnerProductSpace {
            adjacency,
            n: g.n(),
            d,
            power_traces,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn adjacency(&self) -> &RatMatrix {
        &self.adjacency
    }

    fn power_trace(&self, k: usize) -> Rational {
        if let Some(t) = self.power_traces.get(k) {
            return t.clone();
        }
        // beyond the cache; recompute directly
        let mut power = RatMatrix::identity(self.n);
        for _ in 0..k {
            power = power.mul(&self.adjacency).expect("square");
        }
        power.trace().expect("square")
    }

    /// Exactly (1/n) tr(f(A) g(A)), computed through cached power
    /// traces: tr(f(A)g(A)) = sum_{i,j} f_i g_j tr(A^{i+j}).
    pub fn inner_product(&self, f: &RatPoly, g: &RatPoly) -> Rational {
        let mut acc = Rational::zero();
        for (i, fc) in f.coeffs().iter().enumerate() {
            if fc.is_zero() {
                continue;
            }
            for (j, gc) in g.coeffs().iter().enumerate() {
                if gc.is_zero() {
                    continue;
                }
                acc += fc * gc * self.power_trace(i + j);
            }
        }
        acc / rat_int(self.n as i64)
    }

    pub fn norm_squared(&self, f: &RatPoly) -> Rational {
        self.inner_product(f, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqKind {
    Vertex,
    Edge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeqSource {
    GramSchmidt,
    Recurrence,
    AlternatingSum,
}

/// An orthogonal polynomial sequence p_0..p_d (or its edge analogue),
/// with deg(p_i) = i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySequence {
    pub polys: Vec<RatPoly>,
    pub kind: SeqKind,
    pub source: SeqSource,
}

impl PolySequence {
    pub fn top_index(&self) -> usize {
        self.polys.len() - 1
    }
}

/// Predistance polynomials by exact Gram-Schmidt on the monomial basis,
/// normalized so that ||p_i||^2 = p_i(delta). The normalization uses
/// the degree as the largest eigenvalue, valid for connected regular
/// graphs.
pub fn predistance_polys(sp: &InnerProductSpace, delta: usize) -> Result<PolySequence> {
    let delta_rat = rat_int(delta as i64);
    let mut orthogonal: Vec<RatPoly> = Vec::with_capacity(sp.d() + 1);
    let mut norms: Vec<Rational> = Vec::with_capacity(sp.d() + 1);
    for k in 0..=sp.d() {
        let mut q = RatPoly::monomial(k);
        for (j, prev) in orthogonal.iter().enumerate() {
            let coeff = sp.inner_product(&RatPoly::monomial(k), prev) / norms[j].clone();
            q = q.sub(&prev.scale(&coeff));
        }
        let norm = sp.norm_squared(&q);
        if norm.is_zero() {
            return Err(Error::Internal(format!(
                "Gram matrix degenerate at degree {k}"
            )));
        }
        norms.push(norm);
        orthogonal.push(q);
    }
    let mut polys = Vec::with_capacity(orthogonal.len());
    for (q, norm) in orthogonal.into_iter().zip(&norms) {
        let value = q.eval(&delta_rat);
        if value.is_zero() {
            return Err(Error::Internal(
                "orthogonal polynomial vanishes at the degree".to_string(),
            ));
        }
        polys.push(q.scale(&(value / norm)));
    }
    Ok(PolySequence {
        polys,
        kind: SeqKind::Vertex,
        source: SeqSource::GramSchmidt,
    })
}

fn polys_from_recurrence(
    b: &[usize],
    c: &[usize],
    delta: usize,
    kind: SeqKind,
) -> Result<PolySequence> {
    let d = c.len();
    if b.len() != d {
        return Err(Error::MalformedArray(format!(
            "expected {d} b-entries, found {}",
            b.len()
        )));
    }
    let b_at = |i: usize| if i < b.len() { b[i] as i64 } else { 0 };
    let c_at = |i: usize| if i == 0 { 0 } else { c[i - 1] as i64 };
    let a_at = |i: usize| delta as i64 - b_at(i) - c_at(i);
    let mut polys = vec![RatPoly::one()];
    for i in 0..d {
        let next_c = c_at(i + 1);
        if next_c == 0 {
            return Err(Error::MalformedArray(format!("c_{} is zero", i + 1)));
        }
        // x r_i = b_{i-1} r_{i-1} + a_i r_i + c_{i+1} r_{i+1}
        let mut next = polys[i]
            .shift_up()
            .sub(&polys[i].scale(&rat_int(a_at(i))));
        if i > 0 {
            next = next.sub(&polys[i - 1].scale(&rat_int(b_at(i - 1))));
        }
        polys.push(next.scale(&(Rational::one() / rat_int(next_c))));
    }
    Ok(PolySequence {
        polys,
        kind,
        source: SeqSource::Recurrence,
    })
}

/// Distance polynomials from the three-term recurrence of an
/// intersection array.
pub fn polys_from_vertex_array(arr: &IntersectionArray) -> Result<PolySequence> {
    polys_from_recurrence(&arr.b, &arr.c, arr.delta, SeqKind::Vertex)
}

/// Edge-distance polynomials from the edge array's recurrence.
pub fn polys_from_edge_array(arr: &EdgeIntersectionArray) -> Result<PolySequence> {
    polys_from_recurrence(&arr.b, &arr.c, arr.delta, SeqKind::Edge)
}

/// Edge sequence implied by the vertex sequence: alternating partial
/// sums for i < d, and half the full alternating sum at the top when
/// the graph is nonbipartite.
pub fn edge_polys_from_vertex(vseq: &PolySequence, bipartite: bool) -> PolySequence {
    let d = vseq.top_index();
    let mut polys = Vec::new();
    let top = if bipartite { d.saturating_sub(1) } else { d };
    for i in 0..=top {
        let mut sum = RatPoly::zero();
        for j in 0..=i {
            let term = &vseq.polys[j];
            if (i - j) % 2 == 0 {
                sum = sum.add(term);
            } else {
                sum = sum.sub(term);
            }
        }
        if i == d {
            sum = sum.scale(&crate::exact::rat(1, 2));
        }
        polys.push(sum);
    }
    PolySequence {
        polys,
        kind: SeqKind::Edge,
        source: SeqSource::AlternatingSum,
    }
}

/// Check p_i(A) = A_i for every i, the matrix characterization of
/// distance-regularity (with the top identity alone already sufficient
/// for a regular graph whose distinct-eigenvalue count is d + 1).
pub fn check_distance_regular_via_pd(
    g: &Graph,
    dd: &DistanceData,
    seq: &PolySequence,
) -> Result<bool> {
    if seq.top_index() != dd.diameter {
        return Ok(false);
    }
    let a = g.adjacency_matrix();
    for (i, p) in seq.polys.iter().enumerate() {
        let expected = RatMatrix::indicator(g.n(), g.n(), |r, c| dd.dist[r][c] == i);
        if p.eval_at_matrix(&a)? != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Check the incidence-matrix characterization of edge-distance-
/// regularity: p~_i(A) B_0 = B_i for every i, plus the scalar form
/// |Gamma_dt(e)| = 2 p~_dt(delta) for every edge.
pub fn check_edrg_via_incidence(g: &Graph, dd: &DistanceData, seq: &PolySequence) -> Result<bool> {
    let dt = seq.top_index();
    if dt != dd.edge_diameter {
        return Ok(false);
    }
    let Some(delta) = g.is_regular() else {
        return Ok(false);
    };
    let a = g.adjacency_matrix();
    let incidence = incidence_matrix_family(g, dd);
    let b0 = &incidence[0];
    for (i, p) in seq.polys.iter().enumerate() {
        if p.eval_at_matrix(&a)?.mul(b0)? != incidence[i] {
            return Ok(false);
        }
    }
    let expected_far = rat_int(2) * seq.polys[dt].eval(&rat_int(delta as i64));
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if dd.per_edge_ecc[e] != dt {
            return Ok(false);
        }
        let far = (0..g.n())
            .filter(|&w| dd.dist[w][u].min(dd.dist[w][v]) == dt)
            .count();
        if rat_int(far as i64) != expected_far {
            return Ok(false);
        }
    }
    Ok(true)
}

/// H = p_0 + ... + p_d.
pub fn hoffman_poly(seq: &PolySequence) -> RatPoly {
    seq.polys
        .iter()
        .fold(RatPoly::zero(), |acc, p| acc.add(p))
}

/// H(A) = J, the all-ones matrix, on a connected regular graph.
pub fn check_hoffman(g: &Graph, h: &RatPoly) -> Result<bool> {
    let a = g.adjacency_matrix();
    Ok(h.eval_at_matrix(&a)? == RatMatrix::ones(g.n(), g.n()))
}

/// One named polynomial identity with its verdict.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
}

/// Pass/fail record for the identities tying the vertex and edge
/// sequences together.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    fn push(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(RelationCheck {
            name: name.into(),
            pass,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verify every applicable identity between a vertex sequence p_0..p_d
/// and an edge sequence p~_0..p~_dt by exact polynomial equality:
/// alternating-sum expressions for the p~_i, adjacent-sum expressions
/// for the p_i, and the top-degree identities split by parity class.
pub fn relate_vertex_edge_polys(
    vseq: &PolySequence,
    eseq: &PolySequence,
    bipartite: bool,
) -> RelationReport {
    let d = vseq.top_index();
    let mut report = RelationReport::default();
    let alternating = |upto: usize| {
        let mut sum = RatPoly::zero();
        for j in 0..=upto {
            if (upto - j) % 2 == 0 {
                sum = sum.add(&vseq.polys[j]);
            } else {
                sum = sum.sub(&vseq.polys[j]);
            }
        }
        sum
    };
    let etilde = |i: usize| -> RatPoly {
        // p~_{-1} is the zero polynomial
        match i {
            i if i < eseq.polys.len() => eseq.polys[i].clone(),
            _ => RatPoly::zero(),
        }
    };
    for i in 0..d {
        if i < eseq.polys.len() {
            report.push(
                format!("edge_poly_alternating_sum[{i}]"),
                eseq.polys[i] == alternating(i),
            );
        }
        let rhs = if i == 0 {
            etilde(0)
        } else {
            etilde(i).add(&etilde(i - 1))
        };
        report.push(
            format!("vertex_poly_adjacent_edge_sum[{i}]"),
            vseq.polys[i] == rhs,
        );
    }
    if bipartite {
        // top vertex polynomial from the Hoffman complement:
        // p_d = H - q~_{d-1} - q~_{d-2}
        let h = hoffman_poly(vseq);
        let partial = |upto: Option<usize>| -> RatPoly {
            match upto {
                None => RatPoly::zero(),
                Some(k) => (0..=k).fold(RatPoly::zero(), |acc, j| acc.add(&etilde(j))),
            }
        };
        let q1 = partial(d.checked_sub(1));
        let q2 = partial(d.checked_sub(2));
        report.push(
            "top_vertex_from_hoffman_complement",
            vseq.polys[d] == h.sub(&q1).sub(&q2),
        );
    } else {
        report.push(
            "top_edge_half_alternating_sum",
            etilde(d) == alternating(d).scale(&crate::exact::rat(1, 2)),
        );
        report.push(
            "top_vertex_from_edge_pair",
            vseq.polys[d] == etilde(d).scale(&rat_int(2)).add(&etilde(d.wrapping_sub(1))),
        );
    }
    report
}

/// The reconstruction step of the inductive argument: for i >= 1,
/// p_{i+1} = ((x + delta) p~_i - b~_{i-1} p_i) / (a~_i + c_i).
pub fn reconstruct_next_poly(
    i: usize,
    ptilde_i: &RatPoly,
    p_i: &RatPoly,
    a_tilde_i: usize,
    c_i: usize,
    b_tilde_prev: usize,
    delta: usize,
) -> Result<RatPoly> {
    if i == 0 {
        return Err(Error::IndexTooSmall);
    }
    let denom = a_tilde_i + c_i;
    if denom == 0 {
        return Err(Error::ZeroDenominator);
    }
    let x_plus_delta = RatPoly::from_coeffs(vec![rat_int(delta as i64), Rational::one()]);
    let numerator = x_plus_delta
        .mul(ptilde_i)
        .sub(&p_i.scale(&rat_int(b_tilde_prev as i64)));
    Ok(numerator.scale(&(Rational::one() / rat_int(denom as i64))))
}

/// For a nonbipartite edge array: a~_i = b~_{i-1} - b~_i for
/// i = 1..d-1.
pub fn check_edge_count_differences(earr: &EdgeIntersectionArray) -> bool {
    let dt = earr.d_tilde();
    (1..dt).all(|i| {
        earr.b_at(i - 1) >= earr.b_at(i) && earr.a_at(i) == earr.b_at(i - 1) - earr.b_at(i)
    })
}

/// Incidence-product identities on an edge-distance-regular graph:
/// B_0 B_0^T = A + delta I, and
/// B_i B_0^T = b~_{i-1} A_i + (a~_i + c_i) A_{i+1} for i = 1..dt.
pub fn check_incidence_products(
    g: &Graph,
    dd: &DistanceData,
    arr: &IntersectionArray,
    earr: &EdgeIntersectionArray,
) -> Result<bool> {
    let a = g.adjacency_matrix();
    let incidence = incidence_matrix_family(g, dd);
    let b0t = incidence[0].transpose();
    let delta_i = RatMatrix::identity(g.n()).scale(&rat_int(earr.delta as i64));
    if incidence[0].mul(&b0t)? != a.add(&delta_i)? {
        return Ok(false);
    }
    let dist_matrix = |i: usize| RatMatrix::indicator(g.n(), g.n(), |r, c| dd.dist[r][c] == i);
    for i in 1..=earr.d_tilde() {
        let lhs = incidence[i].mul(&b0t)?;
        let rhs = dist_matrix(i)
            .scale(&rat_int(earr.b_at(i - 1) as i64))
            .add(&dist_matrix(i + 1).scale(&rat_int((earr.a_at(i) + arr.c_at(i)) as i64)))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
