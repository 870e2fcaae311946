//! Generators for the Möbius octagonal chain `Q_n` and the linear chain `L_n`.
//!
//! Vertex layout is fixed: the top path `u_1, u_2, ...` comes first, then the
//! bottom path `v_1, v_2, ...`, 0-based. For `Q_n` that puts `u_j` at `j − 1`
//! and `v_j` at `3n + j − 1`, so the upper-left `3n × 3n` block of any matrix
//! built on `Q_n` is the `u`-block.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

/// A finite simple undirected graph with canonically ordered edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Edges are normalized to `a < b` and
    /// sorted; loops, duplicates and out-of-range endpoints are rejected.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(Error::InvalidInput(format!("self-loop at vertex {a}")));
            }
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) out of range for {vertex_count} vertices"
                )));
            }
            if !set.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidInput(format!("parallel edge ({a}, {b})")));
            }
        }
        let edges: Vec<_> = set.into_iter().collect();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let degrees = adjacency.iter().map(Vec::len).collect();
        Ok(Self {
            vertex_count,
            edges,
            degrees,
            adjacency,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(a, b)` with `a < b`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.vertex_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// Hop distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        self.bfs_avoiding(source, None)
    }

    fn bfs_avoiding(&self, source: usize, removed: Option<usize>) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for &y in &self.adjacency[x] {
                if Some(y) != removed && dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Connected, and still connected after deleting any single vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.vertex_count < 3 {
            return self.is_connected();
        }
        self.is_connected()
            && (0..self.vertex_count).all(|cut| {
                let source = if cut == 0 { 1 } else { 0 };
                self.bfs_avoiding(source, Some(cut))
                    .iter()
                    .enumerate()
                    .all(|(v, d)| v == cut || d.is_some())
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Moebius,
    Linear,
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChainKind::Moebius => "moebius",
            ChainKind::Linear => "linear",
        })
    }
}

impl FromStr for ChainKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moebius" | "mobius" => Ok(ChainKind::Moebius),
            "linear" => Ok(ChainKind::Linear),
            other => Err(Error::Usage(format!("unknown chain kind {other:?}"))),
        }
    }
}

/// An octagonal chain of `n` octagons.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    kind: ChainKind,
    n: usize,
    graph: SimpleGraph,
}

impl ChainGraph {
    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }
}

impl Deref for ChainGraph {
    type Target = SimpleGraph;
    fn deref(&self) -> &SimpleGraph {
        &self.graph
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "number of octagons must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Two parallel paths of `len` vertices joined by rungs at positions
/// `1, 4, 7, ...` (1-based). Returns the edge list; `u_j = j−1`, `v_j = len+j−1`.
fn ladder_edges(len: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for j in 0..len - 1 {
        edges.push((j, j + 1));
        edges.push((len + j, len + j + 1));
    }
    for j in (0..len).step_by(3) {
        edges.push((j, len + j));
    }
    edges
}

/// Builds `Q_n`: `6n` vertices, `7n` edges.
pub fn build_moebius_octagonal(n: usize) -> Result<ChainGraph> {
    check_order(n)?;
    let len = 3 * n;
    let mut edges = ladder_edges(len);
    // half-twisted closure: u_{3n}–v_1 and v_{3n}–u_1
    edges.push((len - 1, len));
    edges.push((2 * len - 1, 0));
    Ok(ChainGraph {
        kind: ChainKind::Moebius,
        n,
        graph: SimpleGraph::from_edges(2 * len, &edges)?,
    })
}

/// Builds `L_n`: `6n + 2` vertices, `7n + 1` edges, rungs at both ends.
pub fn build_linear_octagonal(n: usize) -> Result<ChainGraph> {
    check_order(n)?;
    let len = 3 * n + 1;
    Ok(ChainGraph {
        kind: ChainKind::Linear,
        n,
        graph: SimpleGraph::from_edges(2 * len, &ladder_edges(len))?,
    })
}

/// Glues the end rung `u_{3n+1}v_{3n+1}` of `L_n` onto the start rung
/// `u_1v_1` in reverse (`u_{3n+1} ≡ v_1`, `v_{3n+1} ≡ u_1`), relabelled into
/// the `Q_n` vertex layout.
pub fn identify_lateral_edges(linear: &ChainGraph) -> Result<ChainGraph> {
    if linear.kind != ChainKind::Linear {
        return Err(Error::Unsupported(
            "lateral-edge identification applies to linear chains".into(),
        ));
    }
    let n = linear.n;
    let len = 3 * n + 1;
    let relabel = |x: usize| -> usize {
        match x {
            x if x == len - 1 => 3 * n,         // u_{3n+1} -> v_1
            x if x == 2 * len - 1 => 0,         // v_{3n+1} -> u_1
            x if x < len => x,                  // u_j
            x => 3 * n + (x - len),             // v_j
        }
    };
    let merged: BTreeSet<(usize, usize)> = linear
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel(a), relabel(b));
            (a.min(b), a.max(b))
        })
        .collect();
    let edges: Vec<_> = merged.into_iter().collect();
    Ok(ChainGraph {
        kind: ChainKind::Moebius,
        n,
        graph: SimpleGraph::from_edges(6 * n, &edges)?,
    })
}

/// A vertex permutation, `permutation[v]` being the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorMap {
    pub permutation: Vec<usize>,
}

impl MirrorMap {
    pub fn apply(&self, v: usize) -> usize {
        self.permutation[v]
    }

    pub fn is_involution(&self) -> bool {
        self.permutation
            .iter()
            .enumerate()
            .all(|(v, &p)| self.permutation[p] == v)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.permutation.len())
            .filter(|&v| self.permutation[v] == v)
            .collect()
    }

    pub fn is_automorphism_of(&self, g: &SimpleGraph) -> bool {
        self.permutation.len() == g.vertex_count()
            && g.edges()
                .iter()
                .all(|&(a, b)| g.has_edge(self.apply(a), self.apply(b)))
    }
}

/// The swap `u_j ↔ v_j` on `Q_n`.
pub fn mirror_automorphism(g: &ChainGraph) -> Result<MirrorMap> {
    if g.kind != ChainKind::Moebius {
        return Err(Error::Unsupported(
            "mirror automorphism is defined for Moebius chains".into(),
        ));
    }
    let half = 3 * g.n;
    let map = MirrorMap {
        permutation: (0..2 * half).map(|v| (v + half) % (2 * half)).collect(),
    };
    // a bijection mapping edges into edges preserves non-edges too (finite graph)
    if !map.is_automorphism_of(g) {
        return Err(Error::Consistency(format!(
            "u/v swap does not preserve adjacency of Q_{}",
            g.n
        )));
    }
    Ok(map)
}

/// Bipartiteness with a checkable certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// Proper 2-coloring, `0`/`1` per vertex.
    Bipartite(Vec<u8>),
    /// Closed walk `c_0, c_1, ..., c_{k−1}` (edge `c_{k−1}c_0` implied) of odd length `k`.
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }

    pub fn coloring(&self) -> Option<&[u8]> {
        match self {
            Bipartiteness::Bipartite(c) => Some(c),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &SimpleGraph) -> bool {
        match self {
            Bipartiteness::Bipartite(c) => {
                c.len() == g.vertex_count() && g.edges().iter().all(|&(a, b)| c[a] != c[b])
            }
            Bipartiteness::OddCycle(cycle) => {
                let k = cycle.len();
                let distinct: BTreeSet<_> = cycle.iter().collect();
                k % 2 == 1
                    && distinct.len() == k
                    && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
            }
        }
    }
}

/// BFS 2-coloring; on conflict, returns the odd cycle closed by the offending edge.
pub fn is_bipartite(g: &SimpleGraph) -> Bipartiteness {
    let nv = g.vertex_count();
    let mut color: Vec<Option<u8>> = vec![None; nv];
    let mut parent = vec![usize::MAX; nv];
    let mut depth = vec![0usize; nv];
    for root in 0..nv {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(1 - cx);
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => {
                        return Bipartiteness::OddCycle(odd_cycle(x, y, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite(color.into_iter().map(Option::unwrap).collect())
}

fn odd_cycle(x: usize, y: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    EdgeList,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "edgelist" => Ok(ExportFormat::EdgeList),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::Usage(format!("unknown graph format {other:?}"))),
        }
    }
}

#[derive(Serialize)]
struct GraphJson {
    kind: ChainKind,
    n: usize,
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

/// Deterministic text export. Edges are always in lexicographic order.
pub fn export(g: &ChainGraph, format: ExportFormat) -> String {
    match format {
        ExportFormat::Json => {
            let doc = GraphJson {
                kind: g.kind,
                n: g.n,
                vertices: g.vertex_count(),
                edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            };
            serde_json::to_string(&doc).expect("graph JSON serialization")
        }
        ExportFormat::EdgeList => g.edges().iter().map(|(a, b)| format!("{a} {b}\n")).collect(),
        ExportFormat::Dot => {
            let name = match g.kind {
                ChainKind::Moebius => 'Q',
                ChainKind::Linear => 'L',
            };
            let mut out = format!("graph {name}{} {{\n", g.n);
            for (a, b) in g.edges() {
                out.push_str(&format!("  {a} -- {b};\n"));
            }
            out.push_str("}\n");
            out
        }
    }
}
