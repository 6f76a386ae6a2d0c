//! Canonical graphs: parsing, BFS re-indexing, edge ordering and generators.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Canonical node id; node order equals the id.
pub type NodeId = u32;
/// Edge order, `1..=E`.
pub type EdgeOrder = u32;

/// Errors raised while reading, building or generating a graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: self-edge on node {node}")]
    SelfEdge { line: usize, node: u32 },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: u32, v: u32 },
    #[error("line {line}: node {node} out of range for {node_count} nodes")]
    NodeOutOfRange { line: usize, node: u32, node_count: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("graph is disconnected: {reached} of {node_count} nodes reachable from node 0")]
    Disconnected { reached: usize, node_count: usize },
    #[error("graph needs at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("{family} needs n >= {min}, got {n}")]
    FamilyTooSmall { family: FamilyKind, n: usize, min: usize },
    #[error("no connected sample after {attempts} attempts (v={v}, e_target={e_target})")]
    RetryBudgetExhausted { v: usize, e_target: usize, attempts: u32 },
    #[error("e_target {e_target} is below v-1 = {min}")]
    TooFewEdges { e_target: usize, min: usize },
}

/// A simple undirected graph before canonicalization, in input labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawGraph {
    pub node_count: usize,
    pub edges: Vec<(u32, u32)>,
}

impl RawGraph {
    /// Builds a raw graph, rejecting self-edges, duplicates and out-of-range labels.
    /// Reported line numbers are 1-based edge indices.
    pub fn new(node_count: usize, edges: Vec<(u32, u32)>) -> Result<Self, GraphError> {
        check_edges(node_count, edges.iter().enumerate().map(|(i, &e)| (i + 1, e)))?;
        Ok(Self { node_count, edges })
    }
}

fn check_edges(
    node_count: usize,
    edges: impl Iterator<Item = (usize, (u32, u32))>,
) -> Result<(), GraphError> {
    if node_count < 2 {
        return Err(GraphError::TooFewNodes(node_count));
    }
    let mut seen = BTreeSet::new();
    for (line, (u, v)) in edges {
        for node in [u, v] {
            if node as usize >= node_count {
                return Err(GraphError::NodeOutOfRange { line, node, node_count });
            }
        }
        if u == v {
            return Err(GraphError::SelfEdge { line, node: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(GraphError::DuplicateEdge { line, u, v });
        }
    }
    Ok(())
}

/// Immutable canonical graph.
///
/// Node ids follow BFS discovery from input node 0 (neighbors visited in
/// ascending input label), and edge orders rank edges lexicographically by
/// `(lower id, higher id)`. Consequently every node `v > 0` reaches its
/// minimum-order edge through its BFS parent, a lower id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<(NodeId, EdgeOrder)>>,
    original_labels: Vec<u32>,
}

impl Graph {
    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints `(lower, higher)` of the edge with the given order.
    pub fn edge(&self, order: EdgeOrder) -> (NodeId, NodeId) {
        self.edges[order as usize - 1]
    }

    /// All edges, indexed by `order - 1`.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    /// Neighbors of `v` with the connecting edge order, ascending by neighbor
    /// (and therefore by edge order).
    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, EdgeOrder)] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn edge_order(&self, u: NodeId, v: NodeId) -> Option<EdgeOrder> {
        let adj = &self.adjacency[u as usize];
        adj.binary_search_by_key(&v, |&(n, _)| n).ok().map(|i| adj[i].1)
    }

    /// Input label of canonical node `v`.
    pub fn original_label(&self, v: NodeId) -> u32 {
        self.original_labels[v as usize]
    }

    pub fn original_labels(&self) -> &[u32] {
        &self.original_labels
    }

    /// The graph in canonical labels, as a raw graph.
    pub fn to_raw(&self) -> RawGraph {
        RawGraph { node_count: self.node_count(), edges: self.edges.clone() }
    }

    /// Writes the edge-list format using canonical ids.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.node_count(), self.edge_count());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// Graph induced by removing node `v`; `None` if the rest is disconnected
    /// or too small.
    pub fn without_node(&self, v: NodeId) -> Option<Graph> {
        let map = |x: NodeId| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (map(a), map(b)))
            .collect();
        RawGraph::new(self.node_count() - 1, edges).ok().and_then(|r| canonicalize(&r).ok())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// Re-indexes a raw graph by BFS from input node 0 and assigns edge orders.
pub fn canonicalize(raw: &RawGraph) -> Result<Graph, GraphError> {
    let n = raw.node_count;
    if n < 2 {
        return Err(GraphError::TooFewNodes(n));
    }
    let mut input_adj = vec![Vec::new(); n];
    for &(u, v) in &raw.edges {
        input_adj[u as usize].push(v);
        input_adj[v as usize].push(u);
    }
    for list in &mut input_adj {
        list.sort_unstable();
    }

    const UNSEEN: u32 = u32::MAX;
    let mut new_id = vec![UNSEEN; n];
    let mut original_labels = Vec::with_capacity(n);
    let mut queue = VecDeque::from([0u32]);
    new_id[0] = 0;
    original_labels.push(0);
    while let Some(x) = queue.pop_front() {
        for &y in &input_adj[x as usize] {
            if new_id[y as usize] == UNSEEN {
                new_id[y as usize] = original_labels.len() as u32;
                original_labels.push(y);
                queue.push_back(y);
            }
        }
    }
    if original_labels.len() < n {
        return Err(GraphError::Disconnected { reached: original_labels.len(), node_count: n });
    }

    let mut edges: Vec<(NodeId, NodeId)> = raw
        .edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (new_id[u as usize], new_id[v as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();

    let mut adjacency = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let order = i as EdgeOrder + 1;
        adjacency[u as usize].push((v, order));
        adjacency[v as usize].push((u, order));
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(Graph { edges, adjacency, original_labels })
}

/// Parses the edge-list text format and canonicalizes the result.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields = parse_pair(line, line_no)?;
        if header.is_none() {
            header = Some((fields.0 as usize, fields.1 as usize));
        } else {
            edges.push(fields);
            lines.push(line_no);
        }
    }
    let (node_count, declared) = header.ok_or_else(|| GraphError::Malformed {
        line: text.lines().count().max(1),
        reason: "missing \"V E\" header".into(),
    })?;
    check_edges(node_count, lines.iter().copied().zip(edges.iter().copied()))?;
    if edges.len() != declared {
        return Err(GraphError::EdgeCountMismatch { declared, found: edges.len() });
    }
    canonicalize(&RawGraph { node_count, edges })
}

fn parse_pair(line: &str, line_no: usize) -> Result<(u32, u32), GraphError> {
    let malformed = |reason: String| GraphError::Malformed { line: line_no, reason };
    let mut it = line.split_whitespace();
    let mut field = || -> Result<u32, GraphError> {
        let tok = it.next().ok_or_else(|| malformed("expected two integers".into()))?;
        tok.parse().map_err(|_| malformed(format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (field()?, field()?);
    match it.next() {
        Some(extra) => Err(malformed(format!("unexpected trailing field {extra:?}"))),
        None => Ok(pair),
    }
}

/// Named graph families with a size parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
    Wheel,
    Prism,
    Ladder,
    Helm,
    Sunlet,
    Web,
    Gear,
    Book,
    Antiprism,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 13] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Star,
        FamilyKind::Complete,
        FamilyKind::Wheel,
        FamilyKind::Prism,
        FamilyKind::Ladder,
        FamilyKind::Helm,
        FamilyKind::Sunlet,
        FamilyKind::Web,
        FamilyKind::Gear,
        FamilyKind::Book,
        FamilyKind::Antiprism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Star => "star",
            FamilyKind::Complete => "complete",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Prism => "prism",
            FamilyKind::Ladder => "ladder",
            FamilyKind::Helm => "helm",
            FamilyKind::Sunlet => "sunlet",
            FamilyKind::Web => "web",
            FamilyKind::Gear => "gear",
            FamilyKind::Book => "book",
            FamilyKind::Antiprism => "antiprism",
        }
    }

    /// Smallest accepted size parameter.
    pub fn min_size(self) -> usize {
        match self {
            FamilyKind::Path | FamilyKind::Star | FamilyKind::Complete | FamilyKind::Ladder => 2,
            FamilyKind::Book => 1,
            FamilyKind::Wheel => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == lower)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// A family member, e.g. `wheel(6)`.
///
/// Size conventions: path, cycle, star, complete and wheel take the node
/// count; prism, ladder, sunlet, antiprism take the cycle (or rail) length
/// and have `2n` nodes; helm and gear have `2n + 1`, web `3n`, and book
/// (`n` pages) `2n + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphFamily {
    pub kind: FamilyKind,
    pub n: usize,
}

impl GraphFamily {
    pub fn new(kind: FamilyKind, n: usize) -> Self {
        Self { kind, n }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.kind, self.n)
    }
}

/// Builds the family member in input labels (before canonicalization).
pub fn family_raw(family: GraphFamily) -> Result<RawGraph, GraphError> {
    let GraphFamily { kind, n } = family;
    if n < kind.min_size() {
        return Err(GraphError::FamilyTooSmall { family: kind, n, min: kind.min_size() });
    }
    let u = |x: usize| x as u32;
    let ring = |offset: usize, len: usize| (0..len).map(move |i| (u(offset + i), u(offset + (i + 1) % len)));
    let mut e: Vec<(u32, u32)> = Vec::new();
    let nodes = match kind {
        FamilyKind::Path => {
            e.extend((1..n).map(|i| (u(i - 1), u(i))));
            n
        }
        FamilyKind::Cycle => {
            e.extend(ring(0, n));
            n
        }
        FamilyKind::Star => {
            e.extend((1..n).map(|i| (0, u(i))));
            n
        }
        FamilyKind::Complete => {
            e.extend((0..n).flat_map(|i| (i + 1..n).map(move |j| (u(i), u(j)))));
            n
        }
        FamilyKind::Wheel => {
            // rim 0..n-2, hub n-1
            e.extend(ring(0, n - 1));
            e.extend((0..n - 1).map(|i| (u(i), u(n - 1))));
            n
        }
        FamilyKind::Prism => {
            // one ring on even labels, the other on odd labels, spokes reflected
            e.extend((0..n).map(|i| (u(2 * i), u(2 * ((i + 1) % n)))));
            e.extend((0..n).map(|i| (u(2 * i + 1), u(2 * ((i + 1) % n) + 1))));
            e.extend((0..n).map(|i| (u(2 * i + 1), u(2 * (n - 1 - i)))));
            2 * n
        }
        FamilyKind::Ladder => {
            e.extend((0..n).map(|i| (u(2 * i), u(2 * i + 1))));
            e.extend((1..n).flat_map(|i| [(u(2 * i - 2), u(2 * i)), (u(2 * i - 1), u(2 * i + 1))]));
            2 * n
        }
        FamilyKind::Helm => {
            // rim 0..n-1, hub n, pendants n+1..2n
            e.extend(ring(0, n));
            e.extend((0..n).map(|i| (u(i), u(n))));
            e.extend((0..n).map(|i| (u(i), u(n + 1 + i))));
            2 * n + 1
        }
        FamilyKind::Sunlet => {
            e.extend(ring(0, n));
            e.extend((0..n).map(|i| (u(i), u(n + i))));
            2 * n
        }
        FamilyKind::Web => {
            e.extend(ring(0, n));
            e.extend(ring(n, n));
            e.extend((0..n).map(|i| (u(i), u(n + i))));
            e.extend((0..n).map(|i| (u(n + i), u(2 * n + i))));
            3 * n
        }
        FamilyKind::Gear => {
            // hub 0, rim 1..2n, hub joined to every other rim node
            e.extend(ring(1, 2 * n));
            e.extend((0..n).map(|i| (0, u(1 + 2 * i))));
            2 * n + 1
        }
        FamilyKind::Book => {
            // spine 0-1; page i is the square 0, 2+2i, 3+2i, 1
            e.push((0, 1));
            e.extend((0..n).flat_map(|i| {
                let (a, b) = (u(2 + 2 * i), u(3 + 2 * i));
                [(0, a), (1, b), (a, b)]
            }));
            2 * n + 2
        }
        FamilyKind::Antiprism => {
            e.extend(ring(0, n));
            e.extend(ring(n, n));
            e.extend((0..n).flat_map(|i| [(u(i), u(n + i)), (u(i), u(n + (i + 1) % n))]));
            2 * n
        }
    };
    RawGraph::new(nodes, e)
}

/// Generates and canonicalizes a family member.
pub fn generate_family(family: GraphFamily) -> Result<Graph, GraphError> {
    canonicalize(&family_raw(family)?)
}

/// Maximum number of samples drawn before giving up on a connected graph.
pub const ERDOS_RENYI_ATTEMPTS: u32 = 1000;

/// Samples `G(v, p)` with `p = 2·e_target / (v(v−1))`, retrying until connected.
///
/// `p ≥ 1` yields the complete graph. Deterministic for a fixed seed.
pub fn generate_erdos_renyi(v: usize, e_target: usize, seed: u64) -> Result<Graph, GraphError> {
    if v < 2 {
        return Err(GraphError::TooFewNodes(v));
    }
    if e_target + 1 < v {
        return Err(GraphError::TooFewEdges { e_target, min: v - 1 });
    }
    let p = 2.0 * e_target as f64 / (v * (v - 1)) as f64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ERDOS_RENYI_ATTEMPTS {
        let mut edges = Vec::new();
        for a in 0..v {
            for b in a + 1..v {
                if p >= 1.0 || rng.gen::<f64>() < p {
                    edges.push((a as u32, b as u32));
                }
            }
        }
        match canonicalize(&RawGraph { node_count: v, edges }) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected { .. }) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(GraphError::RetryBudgetExhausted { v, e_target, attempts: ERDOS_RENYI_ATTEMPTS })
}

/// A `rows × cols` 4-connected grid with the listed cells (`row * cols + col`)
/// removed. Remaining cells keep row-major relative order as input labels.
pub fn grid_raw(rows: usize, cols: usize, blocked: &[usize]) -> Result<RawGraph, GraphError> {
    let blocked: BTreeSet<usize> = blocked.iter().copied().collect();
    let mut label = vec![None; rows * cols];
    let mut next = 0u32;
    for (cell, slot) in label.iter_mut().enumerate() {
        if !blocked.contains(&cell) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let Some(a) = label[r * cols + c] else { continue };
            if c + 1 < cols {
                if let Some(b) = label[r * cols + c + 1] {
                    edges.push((a, b));
                }
            }
            if r + 1 < rows {
                if let Some(b) = label[(r + 1) * cols + c] {
                    edges.push((a, b));
                }
            }
        }
    }
    RawGraph::new(next as usize, edges)
}

/// Canonical grid graph; see [`grid_raw`].
pub fn generate_grid(rows: usize, cols: usize, blocked: &[usize]) -> Result<Graph, GraphError> {
    canonicalize(&grid_raw(rows, cols, blocked)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_parses() {
        let g = parse_edge_list("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 3));
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_edge_list("# a path\n\n4 3\n# body\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 x"), Err(GraphError::Malformed { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 1"), Err(GraphError::SelfEdge { line: 3, node: 1 })));
        assert!(matches!(
            parse_edge_list("3 3\n0 1\n1 2\n1 0"),
            Err(GraphError::DuplicateEdge { line: 4, .. })
        ));
        assert!(matches!(parse_edge_list("4 2\n0 1\n2 3"), Err(GraphError::Disconnected { reached: 2, .. })));
        assert!(matches!(parse_edge_list("1 0\n"), Err(GraphError::TooFewNodes(1))));
        assert!(matches!(parse_edge_list("3 3\n0 1\n1 2"), Err(GraphError::EdgeCountMismatch { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n1 5"), Err(GraphError::NodeOutOfRange { node: 5, .. })));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(GraphError::Malformed { .. })));
    }

    #[test]
    fn star_center_is_relabelled_one() {
        let raw = RawGraph::new(4, vec![(3, 0), (3, 1), (3, 2)]).unwrap();
        let g = canonicalize(&raw).unwrap();
        assert_eq!(g.original_label(1), 3);
        assert_eq!(g.neighbors(1).len(), 3);
    }

    #[test]
    fn bfs_ties_follow_input_labels() {
        let raw = RawGraph::new(4, vec![(0, 3), (0, 2), (2, 1), (3, 1)]).unwrap();
        let g = canonicalize(&raw).unwrap();
        assert_eq!(g.original_labels(), &[0, 2, 3, 1]);
    }

    #[test]
    fn round_trip_through_writer() {
        let g = generate_family(GraphFamily::new(FamilyKind::Prism, 4)).unwrap();
        let again = parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn family_sizes() {
        let cases = [
            (FamilyKind::Wheel, 4, 4, 6),
            (FamilyKind::Prism, 3, 6, 9),
            (FamilyKind::Sunlet, 5, 10, 10),
            (FamilyKind::Ladder, 3, 6, 7),
            (FamilyKind::Helm, 3, 7, 9),
            (FamilyKind::Web, 3, 9, 12),
            (FamilyKind::Gear, 3, 7, 9),
            (FamilyKind::Book, 3, 8, 10),
            (FamilyKind::Antiprism, 3, 6, 12),
            (FamilyKind::Complete, 5, 5, 10),
            (FamilyKind::Star, 5, 5, 4),
            (FamilyKind::Path, 10, 10, 9),
            (FamilyKind::Cycle, 7, 7, 7),
        ];
        for (kind, n, v, e) in cases {
            let g = generate_family(GraphFamily::new(kind, n)).unwrap();
            assert_eq!((g.node_count(), g.edge_count()), (v, e), "{kind}-{n}");
        }
        assert!(matches!(
            generate_family(GraphFamily::new(FamilyKind::Wheel, 3)),
            Err(GraphError::FamilyTooSmall { min: 4, .. })
        ));
    }

    #[test]
    fn family_names_parse() {
        for kind in FamilyKind::ALL {
            assert_eq!(kind.name().parse::<FamilyKind>().unwrap(), kind);
        }
        assert!("hexagon".parse::<FamilyKind>().is_err());
    }

    #[test]
    fn erdos_renyi_clamps_and_is_deterministic() {
        let k5 = generate_erdos_renyi(5, 10, 1).unwrap();
        assert_eq!(k5.edge_count(), 10);
        let a = generate_erdos_renyi(10, 20, 42).unwrap();
        let b = generate_erdos_renyi(10, 20, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.node_count(), 10);
        assert!(matches!(generate_erdos_renyi(200, 199, 0), Err(GraphError::RetryBudgetExhausted { .. })));
    }

    #[test]
    fn grid_counts() {
        let g = generate_grid(5, 5, &[]).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (25, 40));
        let h = generate_grid(3, 3, &[4]).unwrap();
        assert_eq!((h.node_count(), h.edge_count()), (8, 8));
    }

    #[test]
    fn edge_lookup() {
        let g = generate_family(GraphFamily::new(FamilyKind::Complete, 4)).unwrap();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            assert_eq!(g.edge_order(u, v), Some(i as u32 + 1));
            assert_eq!(g.edge_order(v, u), Some(i as u32 + 1));
        }
    }
}
