//! Promotable pairs and pilot candidates: two ordered sets sharing the
//! [`Standing`] comparator, maintained incrementally across promotions and
//! rolled back through a journal on undo.

use std::collections::BTreeSet;

use crate::graph::NodeId;
use crate::tree::{PromotionDelta, SpanningTreeState, Standing};

/// A promotable pair: the standing its node would hold after the promotion,
/// and the node its new edge would cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PromotableEntry {
    pub standing: Standing,
    pub covered: NodeId,
}

/// Evaluates whether `x` belongs to the promotable pairs of `state`.
///
/// A member has a legal promotion whose edge reconnects the tree, an
/// all-minimal subtree, and a promotion that does not leave its old
/// neighbour as a non-minimal leaf outranking the promoted pair. Entries are
/// keyed by the standing after promotion, which is the order in which
/// candidate children are tried.
pub fn evaluate_promotable(state: &SpanningTreeState<'_>, x: NodeId) -> Option<PromotableEntry> {
    let covered = state.next_promotion(x)?;
    if x == 0 {
        // the old neighbour keeps its edges minus the one to node zero
        let old = state.children(0)[0];
        if state.degree(old) == 2 {
            return None;
        }
        return Some(PromotableEntry { standing: Standing::new(0, 0), covered });
    }
    if state.non_minimal_descendants(x) > 0 {
        return None;
    }
    let leaf = state.is_leaf(x);
    let depth = if leaf { 0 } else { state.node_count() as u32 - state.path_len(covered) - 1 };
    let standing = Standing::new(depth, x);
    let old = state.parent(x).expect("non-root node has a parent");
    if state.degree(old) == 2 && !(leaf && x > old) && uncovered_leaf_non_minimal(state, old, x) {
        return None;
    }
    Some(PromotableEntry { standing, covered })
}

/// Whether `old`, losing its edge to `x` and so becoming a leaf, would hold a
/// non-minimal pair.
fn uncovered_leaf_non_minimal(state: &SpanningTreeState<'_>, old: NodeId, x: NodeId) -> bool {
    if old == 0 {
        let other = state.children(0).iter().copied().find(|&c| c != x).expect("degree two");
        other != state.graph().neighbors(0)[0].0
    } else {
        !state.is_minimal(old)
    }
}

/// Pilot standing of `x` if its pair is non-minimal.
pub fn evaluate_pilot_candidate(state: &SpanningTreeState<'_>, x: NodeId) -> Option<Standing> {
    state.is_non_minimal(x).then(|| state.standing(x))
}

/// Journal position to roll back to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mark(usize);

#[derive(Debug, Clone)]
struct Journaled<T> {
    keys: BTreeSet<Standing>,
    entries: Vec<Option<T>>,
    journal: Vec<(NodeId, Option<T>)>,
}

impl<T: Copy + PartialEq> Journaled<T> {
    fn new(n: usize) -> Self {
        Self { keys: BTreeSet::new(), entries: vec![None; n], journal: Vec::new() }
    }

    fn set(&mut self, x: NodeId, value: Option<T>, key: impl Fn(&T) -> Standing) {
        let slot = &mut self.entries[x as usize];
        if *slot == value {
            return;
        }
        if let Some(old) = slot {
            self.keys.remove(&key(old));
        }
        if let Some(new) = &value {
            self.keys.insert(key(new));
        }
        self.journal.push((x, std::mem::replace(slot, value)));
    }

    fn rollback(&mut self, mark: Mark, key: impl Fn(&T) -> Standing) {
        while self.journal.len() > mark.0 {
            let (x, value) = self.journal.pop().unwrap();
            let slot = &mut self.entries[x as usize];
            if let Some(cur) = slot {
                self.keys.remove(&key(cur));
            }
            if let Some(old) = &value {
                self.keys.insert(key(old));
            }
            *slot = value;
        }
    }
}

/// Collects the nodes whose membership may change after a promotion.
#[derive(Debug, Clone)]
struct Affected {
    stamp: Vec<u32>,
    generation: u32,
    nodes: Vec<NodeId>,
}

impl Affected {
    fn new(n: usize) -> Self {
        Self { stamp: vec![0; n], generation: 0, nodes: Vec::new() }
    }

    fn reset(&mut self) {
        self.generation = self.generation.wrapping_add(1);
        if self.generation == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.generation = 1;
        }
        self.nodes.clear();
    }

    fn add(&mut self, x: NodeId) {
        let s = &mut self.stamp[x as usize];
        if *s != self.generation {
            *s = self.generation;
            self.nodes.push(x);
        }
    }
}

/// Ordered set of promotable pairs keyed by post-promotion standing.
#[derive(Debug, Clone)]
pub struct PromotablePairs {
    set: Journaled<PromotableEntry>,
    affected: Affected,
    rebuilds: u64,
}

fn entry_key(e: &PromotableEntry) -> Standing {
    e.standing
}

impl PromotablePairs {
    /// Evaluates every node of `state`.
    pub fn new(state: &SpanningTreeState<'_>) -> Self {
        let n = state.node_count();
        let mut pp = Self { set: Journaled::new(n), affected: Affected::new(n), rebuilds: 0 };
        for x in 0..n as NodeId {
            pp.set.set(x, evaluate_promotable(state, x), entry_key);
        }
        pp.set.journal.clear();
        pp
    }

    pub fn len(&self) -> usize {
        self.set.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.keys.is_empty()
    }

    pub fn get(&self, x: NodeId) -> Option<PromotableEntry> {
        self.set.entries[x as usize]
    }

    pub fn contains(&self, x: NodeId) -> bool {
        self.get(x).is_some()
    }

    /// Members in standing order.
    pub fn iter(&self) -> impl Iterator<Item = PromotableEntry> + '_ {
        self.set.keys.iter().map(|s| self.set.entries[s.node as usize].expect("keyed entry"))
    }

    /// Members whose post-promotion standing is strictly better than `bound`
    /// (all members when `bound` is `None`).
    pub fn until(&self, bound: Option<Standing>) -> impl Iterator<Item = PromotableEntry> + '_ {
        self.iter().take_while(move |e| bound.is_none_or(|b| e.standing < b))
    }

    /// Members with standing at most `bound`.
    pub fn up_to(&self, bound: Standing) -> impl Iterator<Item = PromotableEntry> + '_ {
        self.iter().take_while(move |e| e.standing <= bound)
    }

    /// Number of full re-evaluations performed so far.
    pub fn rebuilds(&self) -> u64 {
        self.rebuilds
    }

    pub fn mark(&self) -> Mark {
        Mark(self.set.journal.len())
    }

    pub fn rollback(&mut self, mark: Mark) {
        self.set.rollback(mark, entry_key);
    }

    /// Brings membership up to date after `delta` was applied to `state`.
    pub fn maintain(&mut self, state: &SpanningTreeState<'_>, delta: &PromotionDelta) {
        let n = state.node_count();
        self.affected.reset();
        if delta.is_node_zero() || delta.moved as usize > n / 2 {
            self.rebuilds += 1;
            (0..n as NodeId).for_each(|x| self.affected.add(x));
        } else {
            self.collect_local(state, delta);
            self.revalidate_connectivity(state, delta);
        }
        let nodes = std::mem::take(&mut self.affected.nodes);
        for &x in &nodes {
            self.set.set(x, evaluate_promotable(state, x), entry_key);
        }
        self.affected.nodes = nodes;
    }

    /// The promoted, covered and uncovered nodes, both ancestor chains, and the
    /// children whose "uncovered leaf" test depends on a changed degree or
    /// pair.
    fn collect_local(&mut self, state: &SpanningTreeState<'_>, delta: &PromotionDelta) {
        let a = &mut self.affected;
        a.add(delta.node);
        for start in [delta.uncovered, delta.covered] {
            let mut x = Some(start);
            while let Some(y) = x {
                a.add(y);
                x = state.parent(y);
            }
        }
        if state.degree(delta.uncovered) <= 2 {
            state.children(delta.uncovered).iter().for_each(|&c| a.add(c));
        }
        if state.degree(delta.covered) <= 3 {
            state.children(delta.covered).iter().for_each(|&c| a.add(c));
        }
        if state.degree(delta.node) <= 2 {
            state.children(delta.node).iter().for_each(|&c| a.add(c));
        }
    }

    /// Re-tests every cached promotion whose covered node lies in the moved
    /// subtree: its depth, and so the entry's standing, has changed.
    pub fn revalidate_connectivity(&mut self, state: &SpanningTreeState<'_>, delta: &PromotionDelta) {
        let g = state.graph();
        let mut stack = vec![delta.node];
        while let Some(y) = stack.pop() {
            for &(x, _) in g.neighbors(y) {
                if self.set.entries[x as usize].is_some_and(|e| e.covered == y) {
                    self.affected.add(x);
                }
            }
            stack.extend_from_slice(state.children(y));
        }
    }
}

/// Ordered set of the non-minimal pairs keyed by current standing.
#[derive(Debug, Clone)]
pub struct PilotCandidates {
    set: Journaled<Standing>,
}

fn standing_key(s: &Standing) -> Standing {
    *s
}

impl PilotCandidates {
    pub fn new(state: &SpanningTreeState<'_>) -> Self {
        let n = state.node_count();
        let mut pc = Self { set: Journaled::new(n) };
        for x in 0..n as NodeId {
            pc.set.set(x, evaluate_pilot_candidate(state, x), standing_key);
        }
        pc.set.journal.clear();
        pc
    }

    /// The pilot.
    pub fn head(&self) -> Option<Standing> {
        self.set.keys.first().copied()
    }

    /// The next-to-pilot.
    pub fn second(&self) -> Option<Standing> {
        self.set.keys.iter().nth(1).copied()
    }

    pub fn get(&self, x: NodeId) -> Option<Standing> {
        self.set.entries[x as usize]
    }

    pub fn len(&self) -> usize {
        self.set.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.keys.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Standing> + '_ {
        self.set.keys.iter().copied()
    }

    pub fn mark(&self) -> Mark {
        Mark(self.set.journal.len())
    }

    pub fn rollback(&mut self, mark: Mark) {
        self.set.rollback(mark, standing_key);
    }

    /// Brings membership and keys up to date after `delta`.
    pub fn maintain(&mut self, state: &SpanningTreeState<'_>, delta: &PromotionDelta) {
        if delta.is_node_zero() {
            for x in 0..state.node_count() as NodeId {
                self.set.set(x, evaluate_pilot_candidate(state, x), standing_key);
            }
            return;
        }
        for x in [delta.node, delta.uncovered, delta.covered] {
            self.set.set(x, evaluate_pilot_candidate(state, x), standing_key);
        }
        if state.non_minimal_descendants(delta.node) > 0 {
            for x in state.subtree_nodes(delta.node) {
                self.set.set(x, evaluate_pilot_candidate(state, x), standing_key);
            }
        }
    }
}
