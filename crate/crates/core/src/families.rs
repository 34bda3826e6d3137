//! Deterministic generators for the named graph families used as test
//! fixtures, plus data-file fixtures for graphs without a simple
//! construction.

use itertools::Itertools;

use crate::classify::classify_drg;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::parse_graph6;

/// A named family with its integer parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Hypercube(usize),
    /// Kneser graph K(n, k); odd_graph(k) = kneser(2k-1, k-1).
    Kneser(usize, usize),
    OddGraph(usize),
    Hamming(usize, usize),
    /// Negative fixture: the path on n vertices.
    Path(usize),
}

/// Parse a `name:params` spec such as `hypercube:3` or `kneser:7,3`.
pub fn parse_family(s: &str) -> Result<FamilySpec> {
    let bad = || Error::InvalidFamily(s.to_string());
    let (name, params) = s.split_once(':').ok_or_else(bad)?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| bad())?;
    match (name.trim(), nums.as_slice()) {
        ("complete", [n]) => Ok(FamilySpec::Complete(*n)),
        ("complete_bipartite", [a, b]) => Ok(FamilySpec::CompleteBipartite(*a, *b)),
        ("cycle", [n]) => Ok(FamilySpec::Cycle(*n)),
        ("hypercube", [k]) => Ok(FamilySpec::Hypercube(*k)),
        ("kneser", [n, k]) => Ok(FamilySpec::Kneser(*n, *k)),
        ("odd_graph", [k]) => Ok(FamilySpec::OddGraph(*k)),
        ("hamming", [d, q]) => Ok(FamilySpec::Hamming(*d, *q)),
        ("path", [n]) => Ok(FamilySpec::Path(*n)),
        _ => Err(bad()),
    }
}

/// Generate a family member with its frozen canonical vertex numbering:
/// binary strings for hypercubes, k-subsets in colex order for Kneser
/// graphs, tuples in lex order for Hamming graphs.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let invalid = || Error::InvalidFamily(format!("{spec:?}"));
    match *spec {
        FamilySpec::Complete(n) => {
            if n == 0 {
                return Err(invalid());
            }
            let edges: Vec<_> = (0..n).tuple_combinations().collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(invalid());
            }
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (0..b).map(move |v| (u, a + v)))
                .collect();
            Graph::from_edges(a + b, &edges)
        }
        FamilySpec::Cycle(n) => {
            if n < 3 {
                return Err(invalid());
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Hypercube(k) => {
            if k == 0 || k > 20 {
                return Err(invalid());
            }
            let n = 1usize << k;
            let mut edges = Vec::new();
            for v in 0..n {
                for bit in 0..k {
                    let w = v ^ (1 << bit);
                    if v < w {
                        edges.push((v, w));
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Kneser(n, k) => {
            if k == 0 || n < 2 * k {
                return Err(invalid());
            }
            // k-subsets of {0..n-1} in colex order: compare by the
            // reversed descending element tuple.
            let mut subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
            subsets.sort_by_key(|s| {
                let mut rev = s.clone();
                rev.sort_unstable_by(|a, b| b.cmp(a));
                rev
            });
            let mut edges = Vec::new();
            for (i, s) in subsets.iter().enumerate() {
                for (j, t) in subsets.iter().enumerate().skip(i + 1) {
                    if s.iter().all(|x| !t.contains(x)) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(subsets.len(), &edges)
        }
        FamilySpec::OddGraph(k) => {
            if k < 2 {
                return Err(invalid());
            }
            generate(&FamilySpec::Kneser(2 * k - 1, k - 1))
        }
        FamilySpec::Hamming(d, q) => {
            if d == 0 || q < 2 {
                return Err(invalid());
            }
            let n = q.checked_pow(d as u32).ok_or_else(invalid)?;
            if n > 100_000 {
                return Err(invalid());
            }
            // vertex id = lex rank of its tuple, most significant
            // coordinate first
            let mut edges = Vec::new();
            for v in 0..n {
                for coord in 0..d {
                    let stride = q.pow((d - 1 - coord) as u32);
                    let digit = (v / stride) % q;
                    for other in 0..q {
                        if other != digit {
                            let w = (v as isize + (other as isize - digit as isize) * stride as isize)
                                as usize;
                            if v < w {
                                edges.push((v, w));
                            }
                        }
                    }
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Path(n) => {
            if n == 0 {
                return Err(invalid());
            }
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
    }
}

const WELLS_G6: &str = include_str!("../data/wells.g6");
const WELLS_SIDECAR: &str = include_str!("../data/wells.props");

/// Load a named data fixture and assert its sidecar invariants.
pub fn load_fixture(name: &str) -> Result<Graph> {
    let (g6, sidecar) = match name {
        "wells" => (WELLS_G6, WELLS_SIDECAR),
        _ => return Err(Error::UnknownFixture(name.to_string())),
    };
    let g = parse_graph6(g6.trim()).map_err(Error::Graph6)?;
    validate_fixture(name, &g, sidecar)?;
    Ok(g)
}

fn validate_fixture(name: &str, g: &Graph, sidecar: &str) -> Result<()> {
    let fail = |msg: String| Error::FixtureInvalid(name.to_string(), msg);
    let mut expect_n = None;
    let mut expect_m = None;
    let mut expect_delta = None;
    let mut expect_array = None;
    for line in sidecar.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| fail(format!("bad sidecar line: {line}")))?;
        let value = value.trim();
        match key.trim() {
            "n" => expect_n = Some(value.parse::<usize>().map_err(|e| fail(e.to_string()))?),
            "m" => expect_m = Some(value.parse::<usize>().map_err(|e| fail(e.to_string()))?),
            "delta" => {
                expect_delta = Some(value.parse::<usize>().map_err(|e| fail(e.to_string()))?)
            }
            "intersection_array" => expect_array = Some(value.to_string()),
            other => return Err(fail(format!("unknown sidecar key: {other}"))),
        }
    }
    if expect_n.is_some_and(|n| n != g.n()) {
        return Err(fail(format!("vertex count {} != sidecar", g.n())));
    }
    if expect_m.is_some_and(|m| m != g.m()) {
        return Err(fail(format!("edge count {} != sidecar", g.m())));
    }
    if let Some(delta) = expect_delta {
        if g.is_regular() != Some(delta) {
            return Err(fail(format!("graph is not {delta}-regular")));
        }
    }
    if let Some(expected) = expect_array {
        let dd = g.distance_data().map_err(|e| fail(e.to_string()))?;
        let arr = classify_drg(g, &dd)
            .into_option()
            .ok_or_else(|| fail("graph is not distance-regular".to_string()))?;
        if arr.render() != expected {
            return Err(fail(format!(
                "intersection array {} != sidecar {expected}",
                arr.render()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypercube_basics() {
        let q3 = generate(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(q3.n(), 8);
        assert_eq!(q3.m(), 12);
        assert_eq!(q3.is_regular(), Some(3));
        assert!(q3.is_bipartite());
    }

    #[test]
    fn kneser_basics() {
        let o4 = generate(&FamilySpec::Kneser(7, 3)).unwrap();
        assert_eq!(o4.n(), 35);
        assert_eq!(o4.is_regular(), Some(4));
        assert_eq!(o4.distance_data().unwrap().diameter, 3);

        let petersen = generate(&FamilySpec::Kneser(5, 2)).unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.is_regular(), Some(3));
        assert_eq!(
            generate(&FamilySpec::OddGraph(3)).unwrap(),
            petersen
        );
    }

    #[test]
    fn hamming_rook_graph() {
        let h = generate(&FamilySpec::Hamming(2, 3)).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.is_regular(), Some(4));
        assert_eq!(h.distance_data().unwrap().diameter, 2);
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(generate(&FamilySpec::Kneser(4, 3)).is_err());
        assert!(generate(&FamilySpec::Cycle(2)).is_err());
        assert!(parse_family("kneser:x,3").is_err());
        assert!(parse_family("nosuch:1").is_err());
    }

    #[test]
    fn parse_round() {
        assert_eq!(parse_family("kneser:7,3").unwrap(), FamilySpec::Kneser(7, 3));
        assert_eq!(parse_family("cycle:5").unwrap(), FamilySpec::Cycle(5));
    }

    #[test]
    fn wells_fixture_validates() {
        let w = load_fixture("wells").unwrap();
        assert_eq!(w.n(), 32);
        assert_eq!(w.m(), 80);
        assert_eq!(w.is_regular(), Some(5));
    }

    #[test]
    fn unknown_fixture_is_an_error() {
        assert!(matches!(
            load_fixture("nope"),
            Err(Error::UnknownFixture(_))
        ));
    }
}
