//! Depth-first enumeration of all spanning trees by edge promotion.
//!
//! Every non-root tree is reached from exactly one parent: the tree obtained
//! by promoting one pair of the parent such that the promoted pair becomes
//! the child's pilot. The engine keeps one mutable [`SpanningTreeState`] with
//! its two ordered structures and walks the computational tree with an
//! explicit stack, undoing each promotion on the way back up.

use std::collections::BTreeMap;
use std::error::Error as StdError;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeOrder, Graph, NodeId};
use crate::oracle;
use crate::structures::{Mark, PilotCandidates, PromotableEntry, PromotablePairs};
use crate::tree::{PromotionDelta, SpanningTreeState, Standing, TreeType};

/// Default cap on the number of trees one enumeration may produce.
pub const DEFAULT_MAX_TREES: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_MAX_TREES`].
pub const MAX_TREES_ENV: &str = "MP_MAX_TREES";

pub type SinkError = Box<dyn StdError + Send + Sync>;

#[derive(Debug, Error)]
pub enum EnumerateError {
    #[error("tree count exceeds the guard of {limit}")]
    GuardExceeded { limit: u64 },
    #[error("counter overflow")]
    CounterOverflow,
    #[error("sink failed: {0}")]
    Sink(SinkError),
}

/// A child tree, described as a single edge exchange on its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChildEvent {
    pub id: u64,
    pub parent_id: u64,
    pub removed: EdgeOrder,
    pub added: EdgeOrder,
    pub tree_type: TreeType,
}

/// One emitted spanning tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeEvent {
    /// The minimal-ranks tree, id 0, with its edge orders ascending.
    Root { edges: Vec<EdgeOrder> },
    Child(ChildEvent),
}

impl fmt::Display for TreeEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeEvent::Root { edges } => {
                f.write_str("R")?;
                for e in edges {
                    write!(f, " {e}")?;
                }
                Ok(())
            }
            TreeEvent::Child(c) => write!(
                f,
                "C {} {} - {} + {} K {}",
                c.id, c.parent_id, c.removed, c.added, c.tree_type
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad event line {line:?}: {reason}")]
pub struct EventParseError {
    pub line: String,
    pub reason: &'static str,
}

impl FromStr for TreeEvent {
    type Err = EventParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| EventParseError { line: s.to_string(), reason };
        let mut fields = s.split_whitespace();
        match fields.next() {
            Some("R") => {
                let edges = fields
                    .map(|t| t.parse().map_err(|_| err("edge order is not an integer")))
                    .collect::<Result<Vec<EdgeOrder>, _>>()?;
                Ok(TreeEvent::Root { edges })
            }
            Some("C") => {
                let f: Vec<&str> = fields.collect();
                if f.len() != 8 || f[2] != "-" || f[4] != "+" || f[6] != "K" {
                    return Err(err("expected \"C <id> <parent> - <removed> + <added> K <type>\""));
                }
                let num = |t: &str| t.parse::<u64>().map_err(|_| err("field is not an integer"));
                let tree_type = match f[7] {
                    "1" => TreeType::Type1,
                    "2" => TreeType::Type2,
                    _ => return Err(err("tree type must be 1 or 2")),
                };
                Ok(TreeEvent::Child(ChildEvent {
                    id: num(f[0])?,
                    parent_id: num(f[1])?,
                    removed: num(f[3])? as EdgeOrder,
                    added: num(f[5])? as EdgeOrder,
                    tree_type,
                }))
            }
            _ => Err(err("expected an R or C record")),
        }
    }
}

/// Counts gathered over one enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub total: u64,
    pub type1: u64,
    pub type2: u64,
    /// Type-1 trees whose parent is type 2.
    pub type1_from_2: u64,
    /// Deepest level of the computational tree (root = 0).
    pub max_dfs_depth: u64,
    /// Sum over child events of the smaller side of the exchanged edge.
    pub partition_size_sum: u64,
    pub max_partition_size: u64,
}

impl EnumerationSummary {
    /// Mean partition size over all exchanges (0 for a single tree).
    pub fn average_partition(&self) -> f64 {
        if self.total <= 1 {
            0.0
        } else {
            self.partition_size_sum as f64 / (self.total - 1) as f64
        }
    }
}

impl fmt::Display for EnumerationSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "S total={} t1={} t2={} t1f2={} depth={}",
            self.total, self.type1, self.type2, self.type1_from_2, self.max_dfs_depth
        )
    }
}

impl FromStr for EnumerationSummary {
    type Err = EventParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| EventParseError { line: s.to_string(), reason };
        let mut fields = s.split_whitespace();
        if fields.next() != Some("S") {
            return Err(err("expected an S record"));
        }
        let mut out = EnumerationSummary::default();
        for field in fields {
            let (key, value) = field.split_once('=').ok_or_else(|| err("expected key=value"))?;
            let value: u64 = value.parse().map_err(|_| err("value is not an integer"))?;
            match key {
                "total" => out.total = value,
                "t1" => out.type1 = value,
                "t2" => out.type2 = value,
                "t1f2" => out.type1_from_2 = value,
                "depth" => out.max_dfs_depth = value,
                _ => return Err(err("unknown summary key")),
            }
        }
        Ok(out)
    }
}

/// What a sink sees alongside each event.
pub struct StepContext<'s, 'g> {
    pub state: &'s SpanningTreeState<'g>,
    /// The promotion that produced this tree (`None` for the root).
    pub delta: Option<&'s PromotionDelta>,
    /// Level in the computational tree (root = 0).
    pub depth: u64,
}

/// Receives every tree as it is generated.
pub trait TreeSink {
    fn accept(&mut self, event: &TreeEvent, ctx: &StepContext<'_, '_>) -> Result<(), SinkError>;
}

impl<F> TreeSink for F
where
    F: FnMut(&TreeEvent, &StepContext<'_, '_>) -> Result<(), SinkError>,
{
    fn accept(&mut self, event: &TreeEvent, ctx: &StepContext<'_, '_>) -> Result<(), SinkError> {
        self(event, ctx)
    }
}

/// Discards everything.
#[derive(Debug, Default, Clone, Copy)]
pub struct NullSink;

impl TreeSink for NullSink {
    fn accept(&mut self, _: &TreeEvent, _: &StepContext<'_, '_>) -> Result<(), SinkError> {
        Ok(())
    }
}

/// Writes the text event stream, one record per line.
pub struct WriteSink<W: Write>(pub W);

impl<W: Write> TreeSink for WriteSink<W> {
    fn accept(&mut self, event: &TreeEvent, _: &StepContext<'_, '_>) -> Result<(), SinkError> {
        writeln!(self.0, "{event}")?;
        Ok(())
    }
}

/// Checks per-event invariants and forwards to an inner sink: single-end
/// exchange, increasing edge-order sum, leaf exchanges for type-2 trees, and
/// a full attribute recomputation every `every` events. Search depth is not
/// checked here: promotions of node zero re-attach other pairs, so the
/// `2E − V` bound can be exceeded; compare `max_dfs_depth` instead.
pub struct AuditSink<S> {
    pub inner: S,
    every: u64,
    seen: u64,
}

impl<S> AuditSink<S> {
    pub fn new(inner: S, every: u64) -> Self {
        Self { inner, every: every.max(1), seen: 0 }
    }
}

impl<S: TreeSink> TreeSink for AuditSink<S> {
    fn accept(&mut self, event: &TreeEvent, ctx: &StepContext<'_, '_>) -> Result<(), SinkError> {
        let g = ctx.state.graph();
        if let TreeEvent::Child(c) = event {
            let (a, b) = g.edge(c.removed);
            let (x, y) = g.edge(c.added);
            let shared = [a, b].iter().filter(|n| **n == x || **n == y).count();
            if shared != 1 {
                return Err(format!("event {}: edges {} and {} share {shared} endpoints", c.id, c.removed, c.added).into());
            }
            if c.added <= c.removed {
                return Err(format!("event {}: edge-order sum does not increase", c.id).into());
            }
            let delta = ctx.delta.expect("child events carry a delta");
            if c.tree_type == TreeType::Type2 && delta.partition_size(g.node_count()) != 1 {
                return Err(format!("event {}: type-2 exchange with partition > 1", c.id).into());
            }
        }
        self.seen += 1;
        if self.seen.is_multiple_of(self.every) {
            ctx.state.check_consistency()?;
        }
        self.inner.accept(event, ctx)
    }
}

/// Enumeration settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub max_trees: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { max_trees: DEFAULT_MAX_TREES }
    }
}

impl EnumerateOptions {
    /// Defaults, with the guard taken from `MP_MAX_TREES` when set and valid.
    pub fn from_env() -> Self {
        let max_trees = std::env::var(MAX_TREES_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_MAX_TREES);
        Self { max_trees }
    }

    pub fn with_max_trees(max_trees: u64) -> Self {
        Self { max_trees }
    }
}

/// A child about to be generated: promote `node` onto `covered`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub node: NodeId,
    pub covered: NodeId,
    pub tree_type: TreeType,
}

/// Live enumeration state: a tree with its structures, positioned anywhere in
/// the computational tree. Exposed so tests and analytics can inspect each
/// step; [`enumerate`] drives it.
pub struct Walker<'g> {
    pub state: SpanningTreeState<'g>,
    pub pp: PromotablePairs,
    pub pc: PilotCandidates,
}

impl<'g> Walker<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let state = SpanningTreeState::minimal_ranks_tree(graph);
        let pp = PromotablePairs::new(&state);
        let pc = PilotCandidates::new(&state);
        Self { state, pp, pc }
    }

    /// Type of the current tree: type 2 iff the pilot is a leaf.
    pub fn tree_type(&self) -> TreeType {
        match self.pc.head() {
            Some(p) if p.depth == 0 => TreeType::Type2,
            _ => TreeType::Type1,
        }
    }

    /// Appends the children of the current tree to `out`, in emission order.
    pub fn children(&self, out: &mut Vec<Candidate>) {
        let pilot = self.pc.head();
        let next = self.pc.second();
        let push = |out: &mut Vec<Candidate>, e: PromotableEntry| {
            if self.yields_pilot(e) {
                let tree_type = if e.standing.depth == 0 { TreeType::Type2 } else { TreeType::Type1 };
                out.push(Candidate { node: e.standing.node, covered: e.covered, tree_type });
            }
        };
        match pilot {
            Some(p) if p.depth == 0 => {
                let pilot_node = p.node;
                let adjacency = self.state.graph().neighbors(pilot_node);
                if next.is_none_or(|n| n.depth > 0) {
                    for &(x, _) in adjacency {
                        if let Some(e) = self.pp.get(x) {
                            if e.covered == pilot_node && e.standing.depth > 0 {
                                push(out, e);
                            }
                        }
                    }
                }
                for e in self.pp.up_to(Standing::new(0, pilot_node)) {
                    push(out, e);
                }
                for &(x, _) in adjacency.iter().take_while(|&&(x, _)| x < pilot_node) {
                    if let Some(e) = self.pp.get(x) {
                        if e.covered == pilot_node && e.standing.depth == 0 {
                            push(out, e);
                        }
                    }
                }
            }
            _ => {
                for e in self.pp.until(next) {
                    push(out, e);
                }
            }
        }
    }

    /// Exact test that promoting `e` makes it the pilot of the resulting tree.
    pub fn yields_pilot(&self, e: PromotableEntry) -> bool {
        let s = &self.state;
        let x = e.standing.node;
        let new = e.standing;
        let old = s.pair_neighbor(x).expect("member has a pair");
        let covered = e.covered;
        // unchanged non-minimal pairs must all rank below the promoted one
        if let Some(first) = self.pc.iter().find(|c| c.node != x && c.node != old && c.node != covered) {
            if first <= new {
                return false;
            }
        }
        if x == 0 {
            return true;
        }
        if s.degree(old) > 2 && s.is_non_minimal(old) && s.standing(old) <= new {
            return false;
        }
        if s.is_non_minimal(covered) {
            let after = if s.is_leaf(covered) {
                Standing::new(s.node_count() as u32 - s.path_len(covered), covered)
            } else {
                s.standing(covered)
            };
            if after <= new {
                return false;
            }
        }
        true
    }

    /// Applies a candidate, returning what is needed to undo it.
    pub fn apply(&mut self, c: Candidate) -> Applied {
        let marks = (self.pp.mark(), self.pc.mark());
        let delta = self.state.promote_to(c.node, c.covered);
        self.pp.maintain(&self.state, &delta);
        self.pc.maintain(&self.state, &delta);
        Applied { delta, marks }
    }

    pub fn revert(&mut self, applied: Applied) {
        self.pp.rollback(applied.marks.0);
        self.pc.rollback(applied.marks.1);
        self.state.undo(&applied.delta).expect("walker undoes in stack order");
    }
}

/// An applied promotion with the structure journal positions before it.
#[derive(Debug, Clone)]
pub struct Applied {
    pub delta: PromotionDelta,
    marks: (Mark, Mark),
}

struct Frame {
    applied: Option<Applied>,
    id: u64,
    tree_type: TreeType,
    start: usize,
    end: usize,
    cursor: usize,
}

/// Enumerates every spanning tree of `graph` with the default guard.
pub fn enumerate<S: TreeSink + ?Sized>(graph: &Graph, sink: &mut S) -> Result<EnumerationSummary, EnumerateError> {
    enumerate_with(graph, EnumerateOptions::default(), sink)
}

/// Counts without emitting.
pub fn count_only(graph: &Graph) -> Result<EnumerationSummary, EnumerateError> {
    enumerate(graph, &mut NullSink)
}

/// Enumerates every spanning tree of `graph`, emitting events in DFS preorder.
pub fn enumerate_with<S: TreeSink + ?Sized>(
    graph: &Graph,
    options: EnumerateOptions,
    sink: &mut S,
) -> Result<EnumerationSummary, EnumerateError> {
    let mut walker = Walker::new(graph);
    let mut summary = EnumerationSummary { total: 1, type1: 1, ..Default::default() };
    let root = TreeEvent::Root { edges: walker.state.edge_set() };
    sink.accept(&root, &StepContext { state: &walker.state, delta: None, depth: 0 })
        .map_err(EnumerateError::Sink)?;
    if options.max_trees == 0 {
        return Err(EnumerateError::GuardExceeded { limit: 0 });
    }

    let node_count = graph.node_count();
    let mut arena: Vec<Candidate> = Vec::new();
    walker.children(&mut arena);
    let mut stack = vec![Frame { applied: None, id: 0, tree_type: TreeType::Type1, start: 0, end: arena.len(), cursor: 0 }];
    let mut next_id = 1u64;
    let mut failure = None;

    while let Some(top) = stack.last_mut() {
        if top.cursor == top.end {
            let frame = stack.pop().unwrap();
            arena.truncate(frame.start);
            if let Some(applied) = frame.applied {
                walker.revert(applied);
            }
            continue;
        }
        let candidate = arena[top.cursor];
        top.cursor += 1;
        let (parent_id, parent_type) = (top.id, top.tree_type);

        if summary.total >= options.max_trees {
            failure = Some(EnumerateError::GuardExceeded { limit: options.max_trees });
            break;
        }
        let applied = walker.apply(candidate);
        let id = next_id;
        next_id += 1;
        let depth = stack.len() as u64;
        let event = ChildEvent {
            id,
            parent_id,
            removed: applied.delta.removed,
            added: applied.delta.added,
            tree_type: candidate.tree_type,
        };
        if let Err(e) = tally(&mut summary, &event, parent_type, depth, applied.delta.partition_size(node_count)) {
            walker.revert(applied);
            failure = Some(e);
            break;
        }
        let ctx = StepContext { state: &walker.state, delta: Some(&applied.delta), depth };
        if let Err(e) = sink.accept(&TreeEvent::Child(event), &ctx) {
            walker.revert(applied);
            failure = Some(EnumerateError::Sink(e));
            break;
        }
        let start = arena.len();
        walker.children(&mut arena);
        stack.push(Frame {
            applied: Some(applied),
            id,
            tree_type: candidate.tree_type,
            start,
            end: arena.len(),
            cursor: start,
        });
    }

    if let Some(err) = failure {
        while let Some(frame) = stack.pop() {
            if let Some(applied) = frame.applied {
                walker.revert(applied);
            }
        }
        return Err(err);
    }
    debug_assert_eq!(walker.state.pending_promotions(), 0);
    Ok(summary)
}

fn tally(
    summary: &mut EnumerationSummary,
    event: &ChildEvent,
    parent_type: TreeType,
    depth: u64,
    partition: u32,
) -> Result<(), EnumerateError> {
    let inc = |n: &mut u64, by: u64| -> Result<(), EnumerateError> {
        *n = n.checked_add(by).ok_or(EnumerateError::CounterOverflow)?;
        Ok(())
    };
    inc(&mut summary.total, 1)?;
    match event.tree_type {
        TreeType::Type1 => {
            inc(&mut summary.type1, 1)?;
            if parent_type == TreeType::Type2 {
                inc(&mut summary.type1_from_2, 1)?;
            }
        }
        TreeType::Type2 => inc(&mut summary.type2, 1)?,
    }
    summary.max_dfs_depth = summary.max_dfs_depth.max(depth);
    inc(&mut summary.partition_size_sum, u64::from(partition))?;
    summary.max_partition_size = summary.max_partition_size.max(u64::from(partition));
    Ok(())
}

/// Walks the whole computational tree and compares the maintained
/// promotable-pairs and pilot-candidates structures with their
/// from-definition rebuilds at every tree. Returns the number of trees.
pub fn verify_structures(g: &Graph) -> Result<u64, String> {
    fn visit(w: &mut Walker<'_>, g: &Graph, count: &mut u64) -> Result<(), String> {
        *count += 1;
        let edges = w.state.edge_set();
        let pp: BTreeMap<NodeId, (Standing, NodeId)> =
            w.pp.iter().map(|e| (e.standing.node, (e.standing, e.covered))).collect();
        if pp != oracle::definitional_promotable(g, &edges) {
            return Err(format!("promotable pairs differ at tree {edges:?}"));
        }
        let pc: BTreeMap<NodeId, Standing> = w.pc.iter().map(|s| (s.node, s)).collect();
        if pc != oracle::definitional_pilot_candidates(g, &edges) {
            return Err(format!("pilot candidates differ at tree {edges:?}"));
        }
        if w.pc.head().map(|s| s.node) != oracle::classify_edge_set(g, &edges).pilot {
            return Err(format!("pilot differs at tree {edges:?}"));
        }
        let mut kids = Vec::new();
        w.children(&mut kids);
        for c in kids {
            let applied = w.apply(c);
            visit(w, g, count)?;
            w.revert(applied);
        }
        Ok(())
    }
    let mut w = Walker::new(g);
    let mut count = 0;
    visit(&mut w, g, &mut count)?;
    Ok(count)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("stream does not start with a root record")]
    MissingRoot,
    #[error("event {id}: parent {parent_id} is not on the current path")]
    DanglingParent { id: u64, parent_id: u64 },
    #[error("event {id}: removed edge {edge} is not in the parent tree")]
    MissingEdge { id: u64, edge: EdgeOrder },
    #[error("event {id}: added edge {edge} is already in the parent tree")]
    DuplicateEdge { id: u64, edge: EdgeOrder },
}

/// Rebuilds explicit edge sets from a preorder event stream, keeping only
/// the trees on the current root-to-leaf path.
#[derive(Debug, Default, Clone)]
pub struct Replayer {
    path: Vec<(u64, Vec<EdgeOrder>)>,
}

impl Replayer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Applies one event and returns the edge set of the tree it describes.
    pub fn apply(&mut self, event: &TreeEvent) -> Result<&[EdgeOrder], ReplayError> {
        match event {
            TreeEvent::Root { edges } => {
                let mut edges = edges.clone();
                edges.sort_unstable();
                self.path.clear();
                self.path.push((0, edges));
            }
            TreeEvent::Child(c) => {
                if self.path.is_empty() {
                    return Err(ReplayError::MissingRoot);
                }
                while self.path.last().is_some_and(|(id, _)| *id != c.parent_id) {
                    self.path.pop();
                }
                let (_, parent) = self
                    .path
                    .last()
                    .ok_or(ReplayError::DanglingParent { id: c.id, parent_id: c.parent_id })?;
                let mut edges = parent.clone();
                let at = edges
                    .binary_search(&c.removed)
                    .map_err(|_| ReplayError::MissingEdge { id: c.id, edge: c.removed })?;
                edges.remove(at);
                match edges.binary_search(&c.added) {
                    Ok(_) => return Err(ReplayError::DuplicateEdge { id: c.id, edge: c.added }),
                    Err(at) => edges.insert(at, c.added),
                }
                self.path.push((c.id, edges));
            }
        }
        Ok(&self.path.last().unwrap().1)
    }
}

/// Replays a stream into explicit edge sets.
pub fn replay<I>(events: I) -> impl Iterator<Item = Result<Vec<EdgeOrder>, ReplayError>>
where
    I: IntoIterator<Item = TreeEvent>,
{
    let mut replayer = Replayer::new();
    events.into_iter().map(move |e| replayer.apply(&e).map(<[EdgeOrder]>::to_vec))
}

/// Parses a text stream into events and the optional trailing summary.
/// Comment lines (`#`) and blank lines are skipped.
pub fn parse_event_stream(text: &str) -> Result<(Vec<TreeEvent>, Option<EnumerationSummary>), EventParseError> {
    let mut events = Vec::new();
    let mut summary = None;
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line.starts_with('S') {
            summary = Some(line.parse()?);
        } else {
            events.push(line.parse()?);
        }
    }
    Ok((events, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_family, parse_edge_list, FamilyKind, GraphFamily};

    fn family(kind: FamilyKind, n: usize) -> Graph {
        generate_family(GraphFamily::new(kind, n)).unwrap()
    }

    #[test]
    fn k4_minus_edge_has_eight_trees() {
        let g = parse_edge_list("4 5\n0 1\n0 2\n0 3\n1 2\n1 3").unwrap();
        assert_eq!(count_only(&g).unwrap().total, 8);
    }

    #[test]
    fn small_family_counts() {
        let cases = [
            (FamilyKind::Complete, 4, 16, 1),
            (FamilyKind::Wheel, 6, 121, 5),
            (FamilyKind::Prism, 5, 1805, 37),
            (FamilyKind::Sunlet, 4, 4, 4),
            (FamilyKind::Path, 10, 1, 1),
        ];
        for (kind, n, total, type1) in cases {
            let s = count_only(&family(kind, n)).unwrap();
            assert_eq!((s.total, s.type1, s.type2), (total, type1, total - type1), "{kind}-{n}");
        }
    }

    #[test]
    fn event_text_round_trip() {
        let g = family(FamilyKind::Wheel, 5);
        let mut out = Vec::new();
        let summary = enumerate(&g, &mut WriteSink(&mut out)).unwrap();
        let text = format!("{}{summary}\n", String::from_utf8(out).unwrap());
        let (events, parsed) = parse_event_stream(&text).unwrap();
        assert_eq!(events.len() as u64, summary.total);
        assert_eq!(parsed.unwrap().total, summary.total);
        for e in &events {
            assert_eq!(e.to_string().parse::<TreeEvent>().unwrap(), *e);
        }
    }

    #[test]
    fn replay_reconstructs_distinct_trees() {
        let g = family(FamilyKind::Prism, 3);
        let mut events = Vec::new();
        enumerate(&g, &mut |e: &TreeEvent, _: &StepContext<'_, '_>| -> Result<(), SinkError> {
            events.push(e.clone());
            Ok(())
        })
        .unwrap();
        let sets: std::collections::HashSet<Vec<EdgeOrder>> = replay(events).map(Result::unwrap).collect();
        assert_eq!(sets.len(), 75);
    }

    #[test]
    fn replay_errors() {
        let root = TreeEvent::Root { edges: vec![1, 2, 3] };
        let child = |parent_id, removed, added| {
            TreeEvent::Child(ChildEvent { id: 1, parent_id, removed, added, tree_type: TreeType::Type2 })
        };
        let mut r = Replayer::new();
        assert_eq!(r.apply(&child(0, 1, 4)), Err(ReplayError::MissingRoot));
        assert_eq!(r.apply(&root).unwrap(), &[1, 2, 3]);
        assert!(matches!(r.apply(&child(0, 9, 4)), Err(ReplayError::MissingEdge { edge: 9, .. })));
        assert!(matches!(r.apply(&child(7, 1, 4)), Err(ReplayError::DanglingParent { .. })));
    }

    #[test]
    fn guard_stops_and_restores() {
        let g = family(FamilyKind::Complete, 5);
        let err = enumerate_with(&g, EnumerateOptions::with_max_trees(10), &mut NullSink).unwrap_err();
        assert!(matches!(err, EnumerateError::GuardExceeded { limit: 10 }));
    }

    #[test]
    fn sink_failure_propagates() {
        let g = family(FamilyKind::Complete, 5);
        let mut n = 0;
        let mut sink = |_: &TreeEvent, _: &StepContext<'_, '_>| -> Result<(), SinkError> {
            n += 1;
            if n == 20 {
                Err("stop".into())
            } else {
                Ok(())
            }
        };
        assert!(matches!(enumerate(&g, &mut sink), Err(EnumerateError::Sink(_))));
    }

    #[test]
    fn audit_passes_on_families() {
        for (kind, n) in [(FamilyKind::Wheel, 7), (FamilyKind::Gear, 4), (FamilyKind::Book, 3), (FamilyKind::Helm, 4)] {
            let g = family(kind, n);
            enumerate(&g, &mut AuditSink::new(NullSink, 1)).unwrap();
        }
    }

    #[test]
    fn summary_line_round_trip() {
        let s = EnumerationSummary { total: 16, type1: 1, type2: 15, type1_from_2: 0, max_dfs_depth: 3, ..Default::default() };
        assert_eq!(s.to_string(), "S total=16 t1=1 t2=15 t1f2=0 depth=3");
        assert_eq!(s.to_string().parse::<EnumerationSummary>().unwrap(), s);
    }
}
