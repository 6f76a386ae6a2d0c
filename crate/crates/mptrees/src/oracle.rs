//! Ground truth that shares no code with the engine: brute-force subset
//! enumeration, the matrix-tree determinant, and the parent/child relation
//! evaluated straight from its definition on explicit edge sets.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::graph::{EdgeOrder, Graph, NodeId};
use crate::tree::{Standing, TreeClass, TreeType};

/// Sorted edge orders of a spanning tree.
pub type EdgeSet = Vec<EdgeOrder>;

/// Largest number of `(V−1)`-subsets brute force will examine.
pub const MAX_BRUTE_FORCE_SUBSETS: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{subsets} candidate subsets exceed the brute-force limit of {limit}")]
    TooLarge { subsets: u128, limit: u128 },
    #[error("determinant overflowed 128-bit arithmetic")]
    Overflow,
}

/// Disjoint-set forest with path halving.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect() }
    }

    pub fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    /// Joins the sets of `a` and `b`; false if they were already joined.
    pub fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Whether `edges` form a spanning tree of `g`.
pub fn is_spanning_tree(g: &Graph, edges: &[EdgeOrder]) -> bool {
    if edges.len() + 1 != g.node_count() {
        return false;
    }
    let mut uf = UnionFind::new(g.node_count());
    edges.iter().all(|&e| {
        let (a, b) = g.edge(e);
        uf.union(a, b)
    })
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// All spanning trees, by trying every `(V−1)`-subset of edges with
/// incremental union-find and early cycle rejection.
pub fn brute_force_enumerate(g: &Graph) -> Result<BTreeSet<EdgeSet>, OracleError> {
    let (n, m) = (g.node_count(), g.edge_count());
    let subsets = binomial(m as u128, (n - 1) as u128);
    if subsets > MAX_BRUTE_FORCE_SUBSETS {
        return Err(OracleError::TooLarge { subsets, limit: MAX_BRUTE_FORCE_SUBSETS });
    }
    let mut out = BTreeSet::new();
    let mut chosen = Vec::with_capacity(n - 1);
    extend(g, 1, &UnionFind::new(n), &mut chosen, &mut out);
    Ok(out)
}

fn extend(g: &Graph, next: EdgeOrder, uf: &UnionFind, chosen: &mut EdgeSet, out: &mut BTreeSet<EdgeSet>) {
    let need = g.node_count() - 1 - chosen.len();
    if need == 0 {
        out.insert(chosen.clone());
        return;
    }
    let last = g.edge_count() as EdgeOrder;
    for e in next..=last {
        if (last - e + 1) < need as EdgeOrder {
            break;
        }
        let mut uf = uf.clone();
        let (a, b) = g.edge(e);
        if uf.union(a, b) {
            chosen.push(e);
            extend(g, e + 1, &uf, chosen, out);
            chosen.pop();
        }
    }
}

/// Number of spanning trees: determinant of the Laplacian with node 0's row
/// and column removed, by fraction-free elimination.
pub fn kirchhoff_count(g: &Graph) -> Result<u128, OracleError> {
    let n = g.node_count() - 1;
    if n == 0 {
        return Ok(1);
    }
    let mut m = vec![vec![0i128; n]; n];
    for &(a, b) in g.edges() {
        for (x, y) in [(a, b), (b, a)] {
            if x > 0 {
                m[x as usize - 1][x as usize - 1] += 1;
                if y > 0 {
                    m[x as usize - 1][y as usize - 1] -= 1;
                }
            }
        }
    }
    let mut prev = 1i128;
    let mut sign = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k]).ok_or(OracleError::Overflow)?;
                let b = m[i][k].checked_mul(m[k][j]).ok_or(OracleError::Overflow)?;
                m[i][j] = a.checked_sub(b).ok_or(OracleError::Overflow)? / prev;
            }
        }
        prev = m[k][k];
    }
    let det = sign * m[n - 1][n - 1];
    u128::try_from(det).map_err(|_| OracleError::Overflow)
}

/// A tree laid out from node zero: parents, path lengths and degrees.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub parent: Vec<Option<NodeId>>,
    pub path_len: Vec<u32>,
    pub degree: Vec<u32>,
    adj: Vec<Vec<NodeId>>,
}

impl RootedTree {
    pub fn new(g: &Graph, edges: &[EdgeOrder]) -> Self {
        let n = g.node_count();
        let mut adj = vec![Vec::new(); n];
        for &e in edges {
            let (a, b) = g.edge(e);
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        let mut parent = vec![None; n];
        let mut path_len = vec![0; n];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0 as NodeId]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x as usize] {
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    parent[y as usize] = Some(x);
                    path_len[y as usize] = path_len[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        let degree = adj.iter().map(|a| a.len() as u32).collect();
        Self { parent, path_len, degree, adj }
    }

    /// Far end of `v`'s pair edge: the parent, or for a leaf node zero its
    /// only neighbour.
    pub fn pair_neighbor(&self, v: NodeId) -> Option<NodeId> {
        match self.parent[v as usize] {
            Some(p) => Some(p),
            None if self.degree[v as usize] == 1 => Some(self.adj[v as usize][0]),
            None => None,
        }
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.degree[v as usize] == 1
    }

    pub fn standing(&self, v: NodeId) -> Standing {
        let n = self.parent.len() as u32;
        let depth = if self.is_leaf(v) { 0 } else { n - self.path_len[v as usize] };
        Standing::new(depth, v)
    }

    /// Whether `v`'s path to node zero passes through `root`.
    pub fn in_subtree(&self, root: NodeId, mut v: NodeId) -> bool {
        loop {
            if v == root {
                return true;
            }
            match self.parent[v as usize] {
                Some(p) => v = p,
                None => return false,
            }
        }
    }
}

fn is_non_minimal(g: &Graph, t: &RootedTree, v: NodeId) -> bool {
    let min_neighbor = g.neighbors(v).iter().map(|&(y, e)| (e, y)).min().unwrap().1;
    t.pair_neighbor(v).is_some_and(|p| p != min_neighbor)
}

/// Type and pilot from the definitions.
pub fn classify_edge_set(g: &Graph, edges: &[EdgeOrder]) -> TreeClass {
    let t = RootedTree::new(g, edges);
    let mut pilot: Option<Standing> = None;
    let mut type2 = false;
    for v in 0..g.node_count() as NodeId {
        if is_non_minimal(g, &t, v) {
            type2 |= t.is_leaf(v);
            let s = t.standing(v);
            pilot = Some(pilot.map_or(s, |p| p.min(s)));
        }
    }
    TreeClass { tree_type: if type2 { TreeType::Type2 } else { TreeType::Type1 }, pilot: pilot.map(|s| s.node) }
}

/// The tree with `v`'s pair moved to the next higher-order incident edge that
/// keeps it spanning, with the covered node.
pub fn definitional_promotion(g: &Graph, edges: &[EdgeOrder], v: NodeId) -> Option<(EdgeSet, NodeId)> {
    let t = RootedTree::new(g, edges);
    let current = t.pair_neighbor(v)?;
    let removed = g.edge_order(v, current).unwrap();
    let mut candidates: Vec<(EdgeOrder, NodeId)> =
        g.neighbors(v).iter().map(|&(y, e)| (e, y)).filter(|&(e, _)| e > removed).collect();
    candidates.sort_unstable();
    for (added, y) in candidates {
        let mut next: EdgeSet = edges.iter().copied().filter(|&e| e != removed).collect();
        next.push(added);
        if is_spanning_tree(g, &next) {
            next.sort_unstable();
            return Some((next, y));
        }
    }
    None
}

/// All children of a tree: single pair promotions after which the promoted
/// pair is the pilot.
pub fn definitional_children(g: &Graph, edges: &[EdgeOrder]) -> BTreeSet<(EdgeSet, NodeId)> {
    (0..g.node_count() as NodeId)
        .filter_map(|v| {
            let (child, _) = definitional_promotion(g, edges, v)?;
            (classify_edge_set(g, &child).pilot == Some(v)).then_some((child, v))
        })
        .collect()
}

/// Promotable pairs of a tree, from the definitions: pairs with a legal
/// promotion and an all-minimal subtree whose old neighbour does not become
/// a non-minimal leaf outranking them. Maps node → (standing after
/// promotion, covered node).
pub fn definitional_promotable(g: &Graph, edges: &[EdgeOrder]) -> BTreeMap<NodeId, (Standing, NodeId)> {
    let t = RootedTree::new(g, edges);
    let mut out = BTreeMap::new();
    for v in 0..g.node_count() as NodeId {
        let Some(old) = t.pair_neighbor(v) else { continue };
        let Some((child, covered)) = definitional_promotion(g, edges, v) else { continue };
        // node zero moves alone, so only a real subtree has to be all-minimal
        let subtree_clean = v == 0
            || (0..g.node_count() as NodeId)
                .filter(|&w| w != v && t.in_subtree(v, w))
                .all(|w| !is_non_minimal(g, &t, w));
        if !subtree_clean {
            continue;
        }
        let c = RootedTree::new(g, &child);
        let after = c.standing(v);
        if c.is_leaf(old) && is_non_minimal(g, &c, old) && c.standing(old) < after {
            continue;
        }
        out.insert(v, (after, covered));
    }
    out
}

/// Non-minimal pairs with their standings.
pub fn definitional_pilot_candidates(g: &Graph, edges: &[EdgeOrder]) -> BTreeMap<NodeId, Standing> {
    let t = RootedTree::new(g, edges);
    (0..g.node_count() as NodeId)
        .filter(|&v| is_non_minimal(g, &t, v))
        .map(|v| (v, t.standing(v)))
        .collect()
}

/// The minimal-ranks tree: each node `v > 0` takes its lowest-order edge.
pub fn minimal_ranks_edges(g: &Graph) -> EdgeSet {
    let mut edges: EdgeSet = (1..g.node_count() as NodeId)
        .map(|v| g.neighbors(v).iter().map(|&(_, e)| e).min().unwrap())
        .collect();
    edges.sort_unstable();
    edges
}

/// Smaller side of `tree − {removed}`, by explicit component search.
pub fn split_size(g: &Graph, tree: &[EdgeOrder], removed: EdgeOrder) -> u32 {
    let mut uf = UnionFind::new(g.node_count());
    for &e in tree.iter().filter(|&&e| e != removed) {
        let (a, b) = g.edge(e);
        uf.union(a, b);
    }
    let (a, _) = g.edge(removed);
    let ra = uf.find(a);
    let side = (0..g.node_count() as u32).filter(|&v| uf.find(v) == ra).count() as u32;
    side.min(g.node_count() as u32 - side)
}
