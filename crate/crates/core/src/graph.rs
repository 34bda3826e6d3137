//! Graph representation, BFS metrics, distance and incidence matrices,
//! and structural predicates (regular, bipartite, odd-girth).

use crate::error::{Error, Result};
use crate::exact::RatMatrix;

/// Immutable simple undirected graph. Vertex ids are `0..n-1`; edges are
/// kept as a canonical lexicographic list of ordered pairs `(u, v)` with
/// `u < v`, which fixes the column order of the incidence matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build from an edge list; loops and multi-edges are rejected here.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut canonical: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange(a, n));
            }
            if b >= n {
                return Err(Error::VertexOutOfRange(b, n));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let e = (a.min(b), a.max(b));
            if adj[e.0].contains(&e.1) {
                return Err(Error::DuplicateEdge(e.0, e.1));
            }
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
            canonical.push(e);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        canonical.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: canonical,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn adjacency_matrix(&self) -> RatMatrix {
        RatMatrix::indicator(self.n, self.n, |r, c| self.has_edge(r, c))
    }

    /// Multi-source BFS distances. Errors on an unreachable vertex,
    /// naming the stranded one.
    pub fn bfs_from_set(&self, sources: &[usize]) -> Result<Vec<usize>> {
        if sources.is_empty() {
            return Err(Error::EmptySourceSet);
        }
        const UNSEEN: usize = usize::MAX;
        let mut dist = vec![UNSEEN; self.n];
        let mut queue = std::collections::VecDeque::new();
        for &s in sources {
            if s >= self.n {
                return Err(Error::VertexOutOfRange(s, self.n));
            }
            if dist[s] == UNSEEN {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == UNSEEN {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if let Some(stranded) = dist.iter().position(|&d| d == UNSEEN) {
            return Err(Error::Disconnected(stranded));
        }
        Ok(dist)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_from_set(&[0]).is_ok()
    }

    /// All-pairs distances plus diameter, per-edge eccentricities, and
    /// the edge-diameter.
    pub fn distance_data(&self) -> Result<DistanceData> {
        let mut dist = Vec::with_capacity(self.n);
        for v in 0..self.n {
            dist.push(self.bfs_from_set(&[v])?);
        }
        let diameter = dist
            .iter()
            .flat_map(|row| row.iter().copied())
            .max()
            .unwrap_or(0);
        let mut per_edge_ecc = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            let ecc = (0..self.n)
                .map(|w| dist[u][w].min(dist[v][w]))
                .max()
                .unwrap_or(0);
            per_edge_ecc.push(ecc);
        }
        let edge_diameter = per_edge_ecc.iter().copied().max().unwrap_or(0);
        Ok(DistanceData {
            dist,
            diameter,
            per_edge_ecc,
            edge_diameter,
        })
    }

    /// Common degree if the graph is regular.
    pub fn is_regular(&self) -> Option<usize> {
        let d0 = self.degree(0);
        if (1..self.n).all(|v| self.degree(v) == d0) {
            Some(d0)
        } else {
            None
        }
    }

    /// Two-coloring if bipartite; assumes the graph is connected.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Length of the shortest odd cycle, by per-vertex BFS layer parity:
    /// an edge joining two vertices equidistant from u closes an odd walk
    /// of length 2*dist+1 through u, and the minimum over all u and all
    /// such edges is the odd-girth. `None` exactly when bipartite.
    pub fn odd_girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for u in 0..self.n {
            let dist = self.bfs_from_set(&[u]).ok()?;
            for &(a, b) in &self.edges {
                if dist[a] == dist[b] {
                    let len = dist[a] + dist[b] + 1;
                    best = Some(best.map_or(len, |cur| cur.min(len)));
                }
            }
        }
        best
    }
}

/// Shortest-path metrics of a connected graph.
#[derive(Clone, Debug)]
pub struct DistanceData {
    pub dist: Vec<Vec<usize>>,
    pub diameter: usize,
    pub per_edge_ecc: Vec<usize>,
    pub edge_diameter: usize,
}

impl DistanceData {
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u][v]
    }
}

/// Distance matrices A_0, ..., A_D; A_0 = I and their sum is J.
pub fn distance_matrix_family(g: &Graph, dd: &DistanceData) -> Vec<RatMatrix> {
    (0..=dd.diameter)
        .map(|i| RatMatrix::indicator(g.n(), g.n(), |r, c| dd.dist[r][c] == i))
        .collect()
}

/// Incidence matrices B_0, ..., B_Dtilde (n x m), with
/// (B_i)_{ue} = 1 iff dist(u, e) = i. Column order follows the canonical
/// edge list.
pub fn incidence_matrix_family(g: &Graph, dd: &DistanceData) -> Vec<RatMatrix> {
    (0..=dd.edge_diameter)
        .map(|i| {
            RatMatrix::indicator(g.n(), g.m(), |u, e| {
                let (a, b) = g.edges()[e];
                dd.dist[u][a].min(dd.dist[u][b]) == i
            })
        })
        .collect()
}
