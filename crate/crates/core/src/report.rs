//! Structured results: one `Report` per graph, rendered either as
//! line-oriented text or as deterministic JSON, plus the verification
//! driver that cross-checks every identity the library knows about.

use serde::Serialize;

use crate::classify::{classify, ClassificationReport};
use crate::error::Result;
use crate::exact::rat_int;
use crate::graph::Graph;
use crate::partitions::proof_fact_oracles;
use crate::polynomials::{
    check_distance_regular_via_pd, check_edrg_via_incidence, check_hoffman,
    check_incidence_products, check_edge_count_differences, edge_polys_from_vertex, hoffman_poly,
    polys_from_edge_array, polys_from_vertex_array, predistance_polys, reconstruct_next_poly,
    relate_vertex_edge_polys, InnerProductSpace, PolySequence,
};

/// One named check with its verdict and a short free-form detail.
#[derive(Clone, Debug, Serialize)]
pub struct LedgerEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Everything the CLI prints about one graph. Field order fixes the
/// JSON key order, so equal inputs give byte-equal output (timing is
/// the only optional nondeterministic field and can be disabled).
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub m: usize,
    pub regular: Option<usize>,
    pub bipartite: bool,
    pub odd_girth: Option<usize>,
    pub diameter: usize,
    pub edge_diameter: usize,
    pub distance_regular: bool,
    pub intersection_array: Option<String>,
    pub drg_witness: Option<String>,
    pub edge_distance_regular: bool,
    pub edge_intersection_array: Option<String>,
    pub edrg_witness: Option<String>,
    pub edrg_vacuous: bool,
    pub homogeneous: bool,
    pub homogeneous_witness: Option<String>,
    pub generalized_odd: bool,
    pub vertex_polynomials: Option<Vec<String>>,
    pub edge_polynomials: Option<Vec<String>>,
    pub hoffman_polynomial: Option<String>,
    pub ledger: Vec<LedgerEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn all_checks_pass(&self) -> bool {
        self.ledger.iter().all(|e| e.pass)
    }

    /// Line-oriented text for terminals.
    pub fn render_human(&self) -> String {
        let mut out = Vec::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let opt =
            |o: &Option<usize>| o.map_or_else(|| "none".to_string(), |v| v.to_string());
        out.push(format!("vertices = {}", self.n));
        out.push(format!("edges = {}", self.m));
        out.push(format!("regular = {}", opt(&self.regular)));
        out.push(format!("bipartite = {}", yes_no(self.bipartite)));
        out.push(format!("odd-girth = {}", opt(&self.odd_girth)));
        out.push(format!("diameter = {}", self.diameter));
        out.push(format!("edge-diameter = {}", self.edge_diameter));
        match (&self.intersection_array, &self.drg_witness) {
            (Some(arr), _) => out.push(format!("distance-regular = yes {arr}")),
            (None, Some(w)) => out.push(format!("distance-regular = no ({w})")),
            (None, None) => out.push("distance-regular = no".to_string()),
        }
        match (&self.edge_intersection_array, &self.edrg_witness) {
            (Some(arr), _) => {
                let vac = if self.edrg_vacuous { " (vacuous)" } else { "" };
                out.push(format!("edge-distance-regular = yes {arr}{vac}"));
            }
            (None, Some(w)) => out.push(format!("edge-distance-regular = no ({w})")),
            (None, None) => out.push("edge-distance-regular = no".to_string()),
        }
        match &self.homogeneous_witness {
            None => out.push(format!("homogeneous = {}", yes_no(self.homogeneous))),
            Some(w) => out.push(format!("homogeneous = no ({w})")),
        }
        out.push(format!("generalized-odd = {}", yes_no(self.generalized_odd)));
        if let Some(polys) = &self.vertex_polynomials {
            for (i, p) in polys.iter().enumerate() {
                out.push(format!("p_{i} = {p}"));
            }
        }
        if let Some(polys) = &self.edge_polynomials {
            for (i, p) in polys.iter().enumerate() {
                out.push(format!("pe_{i} = {p}"));
            }
        }
        if let Some(h) = &self.hoffman_polynomial {
            out.push(format!("hoffman = {h}"));
        }
        for entry in &self.ledger {
            let verdict = if entry.pass { "pass" } else { "FAIL" };
            if entry.detail.is_empty() {
                out.push(format!("check {}: {verdict}", entry.name));
            } else {
                out.push(format!("check {}: {verdict} ({})", entry.name, entry.detail));
            }
        }
        if let Some(ms) = self.elapsed_ms {
            out.push(format!("elapsed-ms = {ms}"));
        }
        out.join("\n")
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn render_seq(seq: &PolySequence) -> Vec<String> {
    seq.polys.iter().map(|p| p.render()).collect()
}

/// How much work to do beyond classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportDepth {
    /// Classifiers only.
    Classify,
    /// Classifiers plus polynomial output.
    Polys,
    /// Everything, including the verification ledger.
    Verify,
}

/// Build a report for one connected graph.
pub fn build_report(g: &Graph, depth: ReportDepth) -> Result<Report> {
    let cr = classify(g)?;
    let mut report = Report {
        n: cr.n,
        m: cr.m,
        regular: cr.regular,
        bipartite: cr.bipartite,
        odd_girth: cr.odd_girth,
        diameter: cr.diameter,
        edge_diameter: cr.edge_diameter,
        distance_regular: cr.drg.ok().is_some(),
        intersection_array: cr.drg.ok().map(|a| a.render()),
        drg_witness: cr.drg.witness().map(str::to_string),
        edge_distance_regular: cr.edrg.ok().is_some(),
        edge_intersection_array: cr.edrg.ok().map(|a| a.render()),
        edrg_witness: cr.edrg.witness().map(str::to_string),
        edrg_vacuous: cr.edrg_vacuous,
        homogeneous: cr.homogeneous.ok().is_some(),
        homogeneous_witness: cr.homogeneous.witness().map(str::to_string),
        generalized_odd: cr.generalized_odd,
        vertex_polynomials: None,
        edge_polynomials: None,
        hoffman_polynomial: None,
        ledger: Vec::new(),
        elapsed_ms: None,
    };
    if depth == ReportDepth::Classify {
        return Ok(report);
    }
    if let Some(delta) = cr.regular {
        let sp = InnerProductSpace::new(g)?;
        let vseq = predistance_polys(&sp, delta)?;
        report.hoffman_polynomial = Some(hoffman_poly(&vseq).render());
        report.vertex_polynomials = Some(render_seq(&vseq));
        if let Some(earr) = cr.edrg.ok() {
            let eseq = polys_from_edge_array(earr)?;
            report.edge_polynomials = Some(render_seq(&eseq));
        }
    }
    if depth == ReportDepth::Verify {
        report.ledger = verification_ledger(g, &cr)?;
    }
    Ok(report)
}

fn entry(name: &str, pass: bool, detail: impl Into<String>) -> LedgerEntry {
    LedgerEntry {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

/// Cross-check every identity applicable to this graph. Each entry is
/// independent: a failure pinpoints what broke without stopping the
/// rest.
fn verification_ledger(g: &Graph, cr: &ClassificationReport) -> Result<Vec<LedgerEntry>> {
    let dd = g.distance_data()?;
    let mut ledger = Vec::new();
    let drg = cr.drg.ok();
    let edrg = cr.edrg.ok();

    // the equivalence at the heart of the library: edge-distance-
    // regular exactly when distance-regular and bipartite or
    // generalized odd
    let predicted = drg.is_some() && (cr.bipartite || cr.generalized_odd);
    ledger.push(entry(
        "edrg_equivalence",
        predicted == edrg.is_some(),
        format!(
            "predicted {}, combinatorial verdict {}",
            predicted,
            edrg.is_some()
        ),
    ));

    if edrg.is_some() {
        ledger.push(entry(
            "edrg_implies_homogeneous",
            cr.homogeneous.ok().is_some(),
            "",
        ));
        let expected_dt = if cr.bipartite {
            cr.diameter - 1
        } else {
            cr.diameter
        };
        ledger.push(entry(
            "edge_diameter_value",
            cr.edge_diameter == expected_dt,
            format!("expected {expected_dt}, found {}", cr.edge_diameter),
        ));
    }

    if let (Some(arr), Some(earr)) = (drg, edrg) {
        // the edge array predicted from the vertex array, by parity
        // class
        let d = arr.d();
        let (mut eb, mut ec): (Vec<usize>, Vec<usize>) = (
            arr.b[1..].to_vec(),
            arr.c[..d - 1].to_vec(),
        );
        if !cr.bipartite {
            eb.push(arr.a_at(d));
            ec.push(2 * arr.c_at(d));
        }
        let converted_ok = eb == earr.b && ec == earr.c && arr.delta == earr.delta;
        ledger.push(entry(
            "edge_array_from_vertex_array",
            converted_ok,
            format!("computed {}", earr.render()),
        ));
    }

    if let Some(delta) = cr.regular {
        let sp = InnerProductSpace::new(g)?;
        let vseq = predistance_polys(&sp, delta)?;

        // the span of the predistance sequence must reach the diameter
        // for the matrix characterization to even be testable
        let degrees_reach_diameter = vseq.top_index() == cr.diameter;
        // p_i(A) = A_i for all i exactly when distance-regular;
        // checked in both directions against the combinatorial verdict
        let matrix_drg = degrees_reach_diameter
            && check_distance_regular_via_pd(g, &dd, &vseq)?;
        ledger.push(entry(
            "distance_matrix_characterization",
            matrix_drg == drg.is_some(),
            format!(
                "matrix verdict {}, combinatorial verdict {}",
                matrix_drg,
                drg.is_some()
            ),
        ));

        ledger.push(entry(
            "hoffman_identity",
            check_hoffman(g, &hoffman_poly(&vseq))?,
            "",
        ));

        if let Some(arr) = drg {
            let recurrence_seq = polys_from_vertex_array(arr)?;
            ledger.push(entry(
                "two_constructions_agree",
                recurrence_seq.polys == vseq.polys,
                "orthogonalization vs three-term recurrence",
            ));
        }

        if let (Some(arr), Some(earr)) = (drg, edrg) {
            let eseq = polys_from_edge_array(earr)?;
            ledger.push(entry(
                "incidence_matrix_characterization",
                check_edrg_via_incidence(g, &dd, &eseq)?,
                "",
            ));
            let alt_eseq = edge_polys_from_vertex(&vseq, cr.bipartite);
            ledger.push(entry(
                "edge_polys_from_alternating_sums",
                alt_eseq.polys == eseq.polys,
                "",
            ));
            let relations = relate_vertex_edge_polys(&vseq, &eseq, cr.bipartite);
            let failed: Vec<&str> = relations
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| c.name.as_str())
                .collect();
            ledger.push(entry(
                "vertex_edge_polynomial_relations",
                relations.all_pass(),
                if failed.is_empty() {
                    format!("{} identities", relations.checks.len())
                } else {
                    failed.join(", ")
                },
            ));
            if !cr.bipartite && earr.d_tilde() >= 1 {
                ledger.push(entry(
                    "edge_a_from_b_difference",
                    check_edge_count_differences(earr),
                    "",
                ));
            }
            ledger.push(entry(
                "incidence_products",
                check_incidence_products(g, &dd, arr, earr)?,
                "",
            ));
            let d = arr.d();
            let mut reconstruction_ok = true;
            for i in 1..d {
                let next = reconstruct_next_poly(
                    i,
                    &eseq.polys[i],
                    &vseq.polys[i],
                    earr.a_at(i),
                    arr.c_at(i),
                    earr.b_at(i - 1),
                    arr.delta,
                )?;
                if next != vseq.polys[i + 1] {
                    reconstruction_ok = false;
                }
            }
            ledger.push(entry(
                "polynomial_reconstruction",
                reconstruction_ok,
                format!("steps i = 1..{}", d.saturating_sub(1)),
            ));
            // the scalar identity sum p_i(delta) = n, delta being the
            // top eigenvalue of a connected regular graph
            let total: crate::exact::Rational = vseq
                .polys
                .iter()
                .map(|p| p.eval(&rat_int(delta as i64)))
                .sum();
            ledger.push(entry(
                "sphere_sizes_sum_to_n",
                total == rat_int(g.n() as i64),
                "",
            ));
        }
    }

    // pointwise counting identities at every (edge, vertex) incidence,
    // both sides recounted from raw neighbor sets
    let a_zero: Vec<bool> = match drg {
        Some(arr) => (0..=arr.d()).map(|i| arr.a_at(i) == 0).collect(),
        None => vec![false; cr.diameter + 1],
    };
    let mut balanced = true;
    let mut equations = 0usize;
    let mut ops = 0usize;
    for &(a, b) in g.edges() {
        for (u, v) in [(a, b), (b, a)] {
            for w in 0..g.n() {
                let facts = proof_fact_oracles(g, &dd, u, v, w, &a_zero)?;
                balanced &= facts.all_balanced();
                equations += facts.checked_equations();
                ops += facts.count_ops;
            }
        }
    }
    ledger.push(entry(
        "pointwise_counting_identities",
        balanced,
        format!("{equations} equations, {ops} neighbor-set counts"),
    ));

    Ok(ledger)
}
