//! The augmented spanning tree: edge-node pairs with degree, distance to node
//! zero and non-minimal-descendant counts, plus promotion and undo.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeOrder, Graph, NodeId};

/// Marker for "no node".
pub const NIL: NodeId = NodeId::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("node {0} has no legal promotion")]
    NoLegalPromotion(NodeId),
    #[error("node zero is internal and has no pair")]
    NodeZeroInternal,
    #[error("undo out of order: delta #{got} is not the most recent promotion")]
    UndoOutOfOrder { got: u64 },
    #[error("edge set is not a spanning tree: {0}")]
    NotASpanningTree(String),
}

/// Standing of a pair: depth ascending, then node order descending. The
/// smallest standing is the best (the pilot).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Standing {
    pub depth: u32,
    pub node: NodeId,
}

impl Standing {
    pub fn new(depth: u32, node: NodeId) -> Self {
        Self { depth, node }
    }
}

impl Ord for Standing {
    fn cmp(&self, other: &Self) -> Ordering {
        self.depth.cmp(&other.depth).then(other.node.cmp(&self.node))
    }
}

impl PartialOrd for Standing {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Classification of a pair's edge among all edges incident to its node in G.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    Minimal,
    Maximal,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeType {
    Type1,
    Type2,
}

impl TreeType {
    pub fn number(self) -> u8 {
        match self {
            TreeType::Type1 => 1,
            TreeType::Type2 => 2,
        }
    }
}

impl fmt::Display for TreeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Type and pilot of a spanning tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeClass {
    pub tree_type: TreeType,
    pub pilot: Option<NodeId>,
}

/// Snapshot of one node's pair and attributes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRecord {
    pub node: NodeId,
    /// First edge on the path to node zero; for node zero, its single tree
    /// edge while it is a leaf, otherwise `None`.
    pub edge: Option<EdgeOrder>,
    /// Tree neighbor toward node zero (`None` for node zero).
    pub parent: Option<NodeId>,
    pub degree_in_tree: u32,
    pub path_len_to_zero: u32,
    pub non_minimal_descendants: u32,
}

/// What a promotion changed, enough to undo it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PromotionDelta {
    seq: u64,
    pub node: NodeId,
    pub removed: EdgeOrder,
    pub added: EdgeOrder,
    /// Endpoint of the removed edge other than `node`.
    pub uncovered: NodeId,
    /// Endpoint of the added edge other than `node`.
    pub covered: NodeId,
    /// Nodes on `node`'s side of the removed edge (1 for node zero).
    pub moved: u32,
    path_offset: i64,
    old_weight: u32,
    new_weight: u32,
}

impl PromotionDelta {
    /// Size of the smaller side of the parent tree minus the removed edge.
    pub fn partition_size(&self, node_count: usize) -> u32 {
        self.moved.min(node_count as u32 - self.moved)
    }

    pub fn is_node_zero(&self) -> bool {
        self.node == 0
    }
}

/// The augmented spanning tree over a canonical graph.
#[derive(Debug, Clone)]
pub struct SpanningTreeState<'g> {
    graph: &'g Graph,
    parent: Vec<NodeId>,
    parent_edge: Vec<EdgeOrder>,
    children: Vec<Vec<NodeId>>,
    path_len: Vec<u32>,
    nmd: Vec<u32>,
    sigma: u64,
    history: Vec<u64>,
    next_seq: u64,
}

impl PartialEq for SpanningTreeState<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph)
            && self.parent == other.parent
            && self.parent_edge == other.parent_edge
            && self.children == other.children
            && self.path_len == other.path_len
            && self.nmd == other.nmd
            && self.sigma == other.sigma
            && self.history == other.history
    }
}

impl<'g> SpanningTreeState<'g> {
    /// The tree pairing every node `v > 0` with its minimum-order edge.
    pub fn minimal_ranks_tree(graph: &'g Graph) -> Self {
        let n = graph.node_count();
        let mut parent = vec![NIL; n];
        let mut parent_edge = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut path_len = vec![0; n];
        let mut sigma = 0u64;
        for v in 1..n as NodeId {
            let (p, order) = graph.neighbors(v)[0];
            debug_assert!(p < v);
            parent[v as usize] = p;
            parent_edge[v as usize] = order;
            children[p as usize].push(v);
            path_len[v as usize] = path_len[p as usize] + 1;
            sigma += u64::from(order);
        }
        Self {
            graph,
            parent,
            parent_edge,
            children,
            path_len,
            nmd: vec![0; n],
            sigma,
            history: Vec::new(),
            next_seq: 0,
        }
    }

    /// Builds the state for an arbitrary spanning tree given by edge orders.
    pub fn from_edge_set(graph: &'g Graph, edges: &[EdgeOrder]) -> Result<Self, TreeError> {
        let n = graph.node_count();
        if edges.len() + 1 != n {
            return Err(TreeError::NotASpanningTree(format!("{} edges for {n} nodes", edges.len())));
        }
        let mut adj = vec![Vec::new(); n];
        for &e in edges {
            if e == 0 || e as usize > graph.edge_count() {
                return Err(TreeError::NotASpanningTree(format!("no edge of order {e}")));
            }
            let (a, b) = graph.edge(e);
            adj[a as usize].push((b, e));
            adj[b as usize].push((a, e));
        }
        let mut state = Self {
            graph,
            parent: vec![NIL; n],
            parent_edge: vec![0; n],
            children: vec![Vec::new(); n],
            path_len: vec![0; n],
            nmd: vec![0; n],
            sigma: edges.iter().map(|&e| u64::from(e)).sum(),
            history: Vec::new(),
            next_seq: 0,
        };
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0 as NodeId];
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &(y, e) in &adj[x as usize] {
                if seen[y as usize] {
                    continue;
                }
                seen[y as usize] = true;
                reached += 1;
                state.parent[y as usize] = x;
                state.parent_edge[y as usize] = e;
                state.children[x as usize].push(y);
                stack.push(y);
            }
        }
        if reached != n {
            return Err(TreeError::NotASpanningTree("edges do not span the graph".into()));
        }
        for list in &mut state.children {
            list.sort_unstable();
        }
        state.recompute_derived();
        Ok(state)
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    /// Tree neighbor toward node zero; `None` for node zero.
    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        let p = self.parent[v as usize];
        (p != NIL).then_some(p)
    }

    pub fn children(&self, v: NodeId) -> &[NodeId] {
        &self.children[v as usize]
    }

    pub fn degree(&self, v: NodeId) -> u32 {
        self.children[v as usize].len() as u32 + u32::from(v != 0)
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.degree(v) == 1
    }

    pub fn path_len(&self, v: NodeId) -> u32 {
        self.path_len[v as usize]
    }

    pub fn non_minimal_descendants(&self, v: NodeId) -> u32 {
        self.nmd[v as usize]
    }

    /// Sum of the orders of all tree edges.
    pub fn sigma(&self) -> u64 {
        self.sigma
    }

    /// Number of promotions applied and not yet undone.
    pub fn pending_promotions(&self) -> usize {
        self.history.len()
    }

    /// Whether `v` currently owns a pair (node zero only while it is a leaf).
    pub fn has_pair(&self, v: NodeId) -> bool {
        v != 0 || self.is_leaf(0)
    }

    /// Pair edge of `v`, if it has a pair.
    pub fn pair_edge(&self, v: NodeId) -> Option<EdgeOrder> {
        if v != 0 {
            Some(self.parent_edge[v as usize])
        } else if self.is_leaf(0) {
            self.graph.edge_order(0, self.children[0][0])
        } else {
            None
        }
    }

    /// The node at the far end of `v`'s pair edge.
    pub fn pair_neighbor(&self, v: NodeId) -> Option<NodeId> {
        if v != 0 {
            Some(self.parent[v as usize])
        } else if self.is_leaf(0) {
            Some(self.children[0][0])
        } else {
            None
        }
    }

    /// True if `v` has a pair whose edge is the minimum incident edge in G.
    pub fn is_minimal(&self, v: NodeId) -> bool {
        self.pair_neighbor(v) == Some(self.graph.neighbors(v)[0].0)
    }

    /// True if `v` has a pair and that pair is not minimal.
    pub fn is_non_minimal(&self, v: NodeId) -> bool {
        self.has_pair(v) && !self.is_minimal(v)
    }

    /// 0 for leaves, `V − path length` otherwise.
    pub fn depth(&self, v: NodeId) -> u32 {
        if self.is_leaf(v) {
            0
        } else {
            self.node_count() as u32 - self.path_len[v as usize]
        }
    }

    pub fn standing(&self, v: NodeId) -> Standing {
        Standing::new(self.depth(v), v)
    }

    pub fn record(&self, v: NodeId) -> PairRecord {
        PairRecord {
            node: v,
            edge: self.pair_edge(v),
            parent: self.parent(v),
            degree_in_tree: self.degree(v),
            path_len_to_zero: self.path_len[v as usize],
            non_minimal_descendants: self.nmd[v as usize],
        }
    }

    pub fn classify_pair(&self, v: NodeId) -> Result<PairClass, TreeError> {
        let neighbor = self.pair_neighbor(v).ok_or(TreeError::NodeZeroInternal)?;
        let adj = self.graph.neighbors(v);
        let min = adj[0].0 == neighbor;
        let max = adj[adj.len() - 1].0 == neighbor;
        Ok(match (min, max) {
            (true, true) => PairClass::Both,
            (true, false) => PairClass::Minimal,
            (false, true) => PairClass::Maximal,
            (false, false) => PairClass::Neither,
        })
    }

    /// Type and pilot by a full scan of the pairs.
    pub fn classify_tree(&self) -> TreeClass {
        let mut pilot: Option<Standing> = None;
        let mut type2 = false;
        for v in 0..self.node_count() as NodeId {
            if self.is_non_minimal(v) {
                type2 |= self.is_leaf(v);
                let s = self.standing(v);
                if pilot.is_none_or(|p| s < p) {
                    pilot = Some(s);
                }
            }
        }
        TreeClass {
            tree_type: if type2 { TreeType::Type2 } else { TreeType::Type1 },
            pilot: pilot.map(|s| s.node),
        }
    }

    /// True iff `query`'s path to node zero passes through `root` (inclusive).
    pub fn subtree_contains(&self, root: NodeId, mut query: NodeId) -> bool {
        let len = self.path_len[root as usize];
        while self.path_len[query as usize] > len {
            query = self.parent[query as usize];
        }
        query == root
    }

    pub fn subtree_size(&self, root: NodeId) -> u32 {
        let mut count = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            count += 1;
            stack.extend_from_slice(&self.children[x as usize]);
        }
        count
    }

    /// Nodes of `root`'s subtree in preorder.
    pub fn subtree_nodes(&self, root: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            out.push(x);
            stack.extend(self.children[x as usize].iter().rev());
        }
        out
    }

    /// Sorted edge orders of the tree.
    pub fn edge_set(&self) -> Vec<EdgeOrder> {
        let mut edges: Vec<EdgeOrder> = self.parent_edge[1..].to_vec();
        edges.sort_unstable();
        edges
    }

    /// The node `v`'s pair would move to: the next higher-order incident edge
    /// whose far end lies outside `v`'s subtree.
    pub fn next_promotion(&self, v: NodeId) -> Option<NodeId> {
        let current = self.pair_neighbor(v)?;
        let adj = self.graph.neighbors(v);
        let start = adj.partition_point(|&(y, _)| y <= current);
        if v == 0 {
            return adj.get(start).map(|&(y, _)| y);
        }
        adj[start..].iter().map(|&(y, _)| y).find(|&y| !self.subtree_contains(v, y))
    }

    /// Promotes `v`'s pair to its next legal edge.
    pub fn promote(&mut self, v: NodeId) -> Result<PromotionDelta, TreeError> {
        let target = self.next_promotion(v).ok_or(TreeError::NoLegalPromotion(v))?;
        Ok(self.promote_to(v, target))
    }

    /// Applies a promotion whose target is already known to be
    /// `next_promotion(v)`.
    pub(crate) fn promote_to(&mut self, v: NodeId, target: NodeId) -> PromotionDelta {
        debug_assert_eq!(self.next_promotion(v), Some(target));
        let seq = self.next_seq;
        self.next_seq += 1;
        self.history.push(seq);
        let g = self.graph;
        if v == 0 {
            let old = self.children[0][0];
            let removed = self.parent_edge[old as usize];
            let added = g.edge_order(0, target).expect("target adjacent to node zero");
            self.reroot(old, target, added);
            return PromotionDelta {
                seq,
                node: 0,
                removed,
                added,
                uncovered: old,
                covered: target,
                moved: 1,
                path_offset: 0,
                old_weight: 0,
                new_weight: 0,
            };
        }

        let old_parent = self.parent[v as usize];
        let removed = self.parent_edge[v as usize];
        let added = g.edge_order(v, target).expect("target adjacent to promoted node");
        let old_weight = self.nmd[v as usize] + u32::from(!self.is_minimal(v));
        let new_weight = self.nmd[v as usize] + 1;
        self.walk_ancestors(old_parent, |n| *n -= old_weight);

        remove_sorted(&mut self.children[old_parent as usize], v);
        insert_sorted(&mut self.children[target as usize], v);
        self.parent[v as usize] = target;
        self.parent_edge[v as usize] = added;
        self.walk_ancestors(target, |n| *n += new_weight);

        let path_offset = i64::from(self.path_len[target as usize]) + 1 - i64::from(self.path_len[v as usize]);
        let moved = self.shift_subtree(v, path_offset);
        self.sigma = self.sigma + u64::from(added) - u64::from(removed);
        PromotionDelta {
            seq,
            node: v,
            removed,
            added,
            uncovered: old_parent,
            covered: target,
            moved,
            path_offset,
            old_weight,
            new_weight,
        }
    }

    /// Reverts the most recent promotion.
    pub fn undo(&mut self, delta: &PromotionDelta) -> Result<(), TreeError> {
        if self.history.last() != Some(&delta.seq) {
            return Err(TreeError::UndoOutOfOrder { got: delta.seq });
        }
        self.history.pop();
        let v = delta.node;
        if v == 0 {
            self.reroot(delta.covered, delta.uncovered, delta.removed);
            return Ok(());
        }
        self.walk_ancestors(delta.covered, |n| *n -= delta.new_weight);
        remove_sorted(&mut self.children[delta.covered as usize], v);
        insert_sorted(&mut self.children[delta.uncovered as usize], v);
        self.parent[v as usize] = delta.uncovered;
        self.parent_edge[v as usize] = delta.removed;
        self.walk_ancestors(delta.uncovered, |n| *n += delta.old_weight);
        self.shift_subtree(v, -delta.path_offset);
        self.sigma = self.sigma + u64::from(delta.removed) - u64::from(delta.added);
        Ok(())
    }

    fn walk_ancestors(&mut self, mut x: NodeId, mut f: impl FnMut(&mut u32)) {
        while x != NIL {
            f(&mut self.nmd[x as usize]);
            x = self.parent[x as usize];
        }
    }

    fn shift_subtree(&mut self, root: NodeId, offset: i64) -> u32 {
        let mut count = 0;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            count += 1;
            let len = &mut self.path_len[x as usize];
            *len = (i64::from(*len) + offset) as u32;
            stack.extend_from_slice(&self.children[x as usize]);
        }
        count
    }

    /// Node zero, a leaf hanging from `old`, is re-attached to `new`; the
    /// parent pointers along the path `new → … → old` are reversed.
    fn reroot(&mut self, old: NodeId, new: NodeId, new_edge: EdgeOrder) {
        let removed = self.parent_edge[old as usize];
        let mut path = vec![new];
        while *path.last().unwrap() != old {
            let up = self.parent[*path.last().unwrap() as usize];
            path.push(up);
        }
        for w in path.windows(2) {
            let (below, above) = (w[0], w[1]);
            remove_sorted(&mut self.children[above as usize], below);
            insert_sorted(&mut self.children[below as usize], above);
        }
        for i in (1..path.len()).rev() {
            let (node, new_parent) = (path[i], path[i - 1]);
            self.parent[node as usize] = new_parent;
            self.parent_edge[node as usize] = self.parent_edge[new_parent as usize];
        }
        self.children[0] = vec![new];
        self.parent[new as usize] = 0;
        self.parent_edge[new as usize] = new_edge;
        self.sigma = self.sigma + u64::from(new_edge) - u64::from(removed);
        self.recompute_derived();
    }

    /// Recomputes path lengths and non-minimal-descendant counts from the
    /// parent/children structure.
    fn recompute_derived(&mut self) {
        let order = self.bfs_order();
        for &x in &order[1..] {
            self.path_len[x as usize] = self.path_len[self.parent[x as usize] as usize] + 1;
        }
        self.path_len[0] = 0;
        self.nmd.iter_mut().for_each(|n| *n = 0);
        for &x in order[1..].iter().rev() {
            let add = self.nmd[x as usize] + u32::from(!self.is_minimal(x));
            self.nmd[self.parent[x as usize] as usize] += add;
        }
    }

    fn bfs_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.node_count());
        order.push(0);
        let mut i = 0;
        while i < order.len() {
            order.extend_from_slice(&self.children[order[i] as usize]);
            i += 1;
        }
        order
    }

    /// Compares every maintained attribute with a from-scratch recomputation
    /// over the tree's edge set.
    pub fn check_consistency(&self) -> Result<(), String> {
        let edges = self.edge_set();
        let fresh = Self::from_edge_set(self.graph, &edges).map_err(|e| e.to_string())?;
        for v in 0..self.node_count() as NodeId {
            let (a, b) = (self.record(v), fresh.record(v));
            if a != b {
                return Err(format!("node {v}: maintained {a:?}, recomputed {b:?}"));
            }
        }
        if self.children != fresh.children {
            return Err("children lists differ from recomputation".into());
        }
        if self.sigma != fresh.sigma {
            return Err(format!("sigma {} != recomputed {}", self.sigma, fresh.sigma));
        }
        Ok(())
    }
}

fn insert_sorted(list: &mut Vec<NodeId>, x: NodeId) {
    let at = list.partition_point(|&y| y < x);
    list.insert(at, x);
}

fn remove_sorted(list: &mut Vec<NodeId>, x: NodeId) {
    let at = list.binary_search(&x).expect("child present");
    list.remove(at);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, parse_edge_list, FamilyKind, GraphFamily};

    fn k4_minus_edge() -> Graph {
        parse_edge_list("4 5\n0 1\n0 2\n0 3\n1 2\n1 3").unwrap()
    }

    #[test]
    fn minimal_ranks_tree_of_c4() {
        let g = generate_family(GraphFamily::new(FamilyKind::Cycle, 4)).unwrap();
        let t = SpanningTreeState::minimal_ranks_tree(&g);
        assert_eq!(t.edge_set(), vec![1, 2, 3]);
        assert_eq!(t.classify_tree(), TreeClass { tree_type: TreeType::Type1, pilot: None });
        t.check_consistency().unwrap();
    }

    #[test]
    fn minimal_ranks_tree_of_k4_minus_edge() {
        let g = k4_minus_edge();
        let t = SpanningTreeState::minimal_ranks_tree(&g);
        assert_eq!(t.edge_set(), vec![1, 2, 3]);
        assert!((1..4).all(|v| t.is_minimal(v)));
    }

    #[test]
    fn standings_order() {
        let leaf_hi = Standing::new(0, 5);
        let leaf_lo = Standing::new(0, 2);
        let internal = Standing::new(3, 7);
        assert!(leaf_hi < leaf_lo && leaf_lo < internal);
    }

    #[test]
    fn depth_follows_path_length() {
        // 7 nodes: 0-1, 0-2, 1-3, 3-4, 3-5, 2-6
        let g = parse_edge_list("7 6\n0 1\n0 2\n1 3\n3 4\n3 5\n2 6").unwrap();
        let t = SpanningTreeState::minimal_ranks_tree(&g);
        assert_eq!(t.depth(3), 5);
        assert_eq!(t.depth(1), 6);
        assert_eq!(t.depth(2), 6);
        assert_eq!(t.depth(4), 0);
    }

    #[test]
    fn pair_classes() {
        let g = k4_minus_edge();
        let mut t = SpanningTreeState::minimal_ranks_tree(&g);
        for v in 1..4 {
            let class = t.classify_pair(v).unwrap();
            let deg = g.degree(v);
            assert_eq!(class == PairClass::Both, deg == 1);
        }
        assert_eq!(t.classify_pair(0), Err(TreeError::NodeZeroInternal));
        let d = t.promote(2).unwrap();
        assert_eq!(t.classify_pair(2).unwrap(), PairClass::Maximal);
        t.undo(&d).unwrap();
    }

    #[test]
    fn promote_and_undo_restore_state() {
        let g = generate_family(GraphFamily::new(FamilyKind::Wheel, 6)).unwrap();
        let mut t = SpanningTreeState::minimal_ranks_tree(&g);
        let snapshot = t.clone();
        let movable: Vec<NodeId> = (0..6).filter(|&v| t.next_promotion(v).is_some()).collect();
        assert!(!movable.is_empty());
        for v in movable {
            let sigma = t.sigma();
            let d = t.promote(v).unwrap();
            assert!(t.sigma() > sigma);
            t.check_consistency().unwrap();
            t.undo(&d).unwrap();
            assert_eq!(t, snapshot);
        }
    }

    #[test]
    fn undo_errors() {
        let g = generate_family(GraphFamily::new(FamilyKind::Cycle, 5)).unwrap();
        let mut t = SpanningTreeState::minimal_ranks_tree(&g);
        let v = (0..5).find(|&v| t.next_promotion(v).is_some()).unwrap();
        let d = t.promote(v).unwrap();
        t.undo(&d).unwrap();
        assert!(matches!(t.undo(&d), Err(TreeError::UndoOutOfOrder { .. })));
    }

    #[test]
    fn subtree_queries() {
        let g = generate_family(GraphFamily::new(FamilyKind::Path, 5)).unwrap();
        let t = SpanningTreeState::minimal_ranks_tree(&g);
        assert!(t.subtree_contains(2, 2));
        assert!(t.subtree_contains(2, 4));
        assert!(!t.subtree_contains(4, 0));
        assert!(t.subtree_contains(0, 4));
        assert_eq!(t.subtree_size(2), 3);
        assert_eq!(t.subtree_nodes(2), vec![2, 3, 4]);
    }

    #[test]
    fn maximal_pairs_cannot_promote() {
        let g = generate_family(GraphFamily::new(FamilyKind::Path, 4)).unwrap();
        let mut t = SpanningTreeState::minimal_ranks_tree(&g);
        assert_eq!(t.promote(3), Err(TreeError::NoLegalPromotion(3)));
    }

    #[test]
    fn from_edge_set_rejects_non_trees() {
        let g = generate_family(GraphFamily::new(FamilyKind::Complete, 4)).unwrap();
        assert!(SpanningTreeState::from_edge_set(&g, &[1, 2, 4]).is_err()); // triangle 0-1-2
        assert!(SpanningTreeState::from_edge_set(&g, &[1, 2]).is_err());
        assert!(SpanningTreeState::from_edge_set(&g, &[1, 2, 3]).is_ok());
    }
}
