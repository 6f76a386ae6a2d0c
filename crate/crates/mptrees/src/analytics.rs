//! Closed-form expectations, partition sizes, disconnected-path accounting
//! and averaged spanning-tree currents.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::enumerate::{
    enumerate_with, EnumerateError, EnumerateOptions, EnumerationSummary, SinkError, StepContext, TreeEvent,
    TreeSink,
};
use crate::graph::{EdgeOrder, Graph, NodeId};
use crate::tree::{PromotionDelta, SpanningTreeState};

/// Expected spanning-tree count of a random graph with `v` nodes and `e`
/// edges: `(1/V)·(2E/(V−1))^(V−1)`.
pub fn expected_total_trees(v: usize, e: usize) -> f64 {
    let (v, e) = (v as f64, e as f64);
    (2.0 * e / (v - 1.0)).powf(v - 1.0) / v
}

/// Expected fraction of type-1 trees, `(1 − 1/e + V/(2eE))^V`, clamped to
/// `[0, 1]`. The constants are often quoted rounded as `0.63` and `0.18`.
pub fn expected_type1_fraction(v: usize, e: usize) -> f64 {
    let base = 1.0 - (-1.0f64).exp() + v as f64 / (2.0 * std::f64::consts::E * e as f64);
    base.powi(v as i32).clamp(0.0, 1.0)
}

/// Expected against actual counts for one run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpectationReport {
    pub expected_total: f64,
    pub expected_type1_fraction: f64,
    pub actual_total: u64,
    pub actual_type1_fraction: f64,
}

/// One report row.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub name: String,
    pub node_count: usize,
    pub edge_count: usize,
    pub summary: EnumerationSummary,
    pub expectation: ExpectationReport,
}

pub const TSV_HEADER: &str =
    "name\tV\tE\ttotal\ttype1\ttype2\tt1_pct\texpected_t1_pct\texpected_total\tavg_partition\tmax_partition";

impl RunReport {
    pub fn tsv_row(&self) -> String {
        let s = &self.summary;
        let x = &self.expectation;
        let mut row = String::new();
        let _ = write!(
            row,
            "{}\t{}\t{}\t{}\t{}\t{}\t{:.1}\t{:.1}\t{:.0}\t{:.6}\t{}",
            self.name,
            self.node_count,
            self.edge_count,
            s.total,
            s.type1,
            s.type2,
            100.0 * x.actual_type1_fraction,
            100.0 * x.expected_type1_fraction,
            x.expected_total,
            s.average_partition(),
            s.max_partition_size,
        );
        row
    }
}

pub fn summarize_run(name: &str, g: &Graph, summary: EnumerationSummary) -> RunReport {
    let (v, e) = (g.node_count(), g.edge_count());
    RunReport {
        name: name.to_string(),
        node_count: v,
        edge_count: e,
        summary,
        expectation: ExpectationReport {
            expected_total: expected_total_trees(v, e),
            expected_type1_fraction: expected_type1_fraction(v, e),
            actual_total: summary.total,
            actual_type1_fraction: summary.type1 as f64 / summary.total as f64,
        },
    }
}

/// Size of the smaller side of the parent tree minus the removed edge.
pub fn partition_size(state: &SpanningTreeState<'_>, delta: &PromotionDelta) -> u32 {
    delta.partition_size(state.node_count())
}

/// Robot and target placements for routing runs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathMarkers {
    pub robots: Vec<NodeId>,
    pub targets: Vec<NodeId>,
}

impl PathMarkers {
    /// `r` distinct robot nodes and `t` distinct target nodes, drawn
    /// independently of each other.
    pub fn random(node_count: usize, r: usize, t: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pick = |k: usize| {
            let mut v: Vec<NodeId> = sample(&mut rng, node_count, k.min(node_count))
                .into_iter()
                .map(|i| i as NodeId)
                .collect();
            v.sort_unstable();
            v
        };
        let robots = pick(r);
        let targets = pick(t);
        Self { robots, targets }
    }
}

/// Which paths are counted as crossing an exchanged edge.
#[derive(Debug, Clone, Copy)]
pub enum PathMode<'a> {
    AllPairs,
    Markers(&'a PathMarkers),
}

/// Paths cut by one exchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisconnectedPaths {
    /// Number of node pairs (or robot–target pairs) on opposite sides.
    pub paths: u64,
    /// Nodes on the promoted side: only the path portions there need to be
    /// recomputed, the rest of each path is kept.
    pub recompute_side: u32,
}

/// Paths separated by the removed edge of `delta`, which has just been
/// applied to `state`.
pub fn disconnected_paths(state: &SpanningTreeState<'_>, delta: &PromotionDelta, mode: PathMode<'_>) -> DisconnectedPaths {
    let n = state.node_count() as u64;
    let s = delta.moved as u64;
    let paths = match mode {
        PathMode::AllPairs => s * (n - s),
        PathMode::Markers(m) => {
            // leaf moves are the common case; skip the subtree walk for them
            let single;
            let owned;
            let side: &[NodeId] = if s == 1 {
                single = [delta.node];
                &single
            } else {
                owned = state.subtree_nodes(delta.node);
                &owned
            };
            let count = |set: &[NodeId]| side.iter().filter(|x| set.binary_search(x).is_ok()).count() as u64;
            let (r_in, t_in) = (count(&m.robots), count(&m.targets));
            let (r_out, t_out) = (m.robots.len() as u64 - r_in, m.targets.len() as u64 - t_in);
            r_in * t_out + r_out * t_in
        }
    };
    DisconnectedPaths { paths, recompute_side: s as u32 }
}

/// Outcome of a routing run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoutingReport {
    pub total_trees: u64,
    pub disconnected_total: u64,
    /// Disconnected robot–target paths per exchange.
    pub mean: f64,
    pub expected_mp: f64,
    pub expected_random: f64,
}

/// `2rt/V`: expected paths to recompute per exchange under the enumeration.
pub fn expected_mp(r: usize, t: usize, v: usize) -> f64 {
    2.0 * (r * t) as f64 / v as f64
}

/// `rt/3`: expected paths to recompute when trees are visited in random order.
pub fn expected_random(r: usize, t: usize) -> f64 {
    (r * t) as f64 / 3.0
}

/// Enumerates all trees of `g`, accumulating marker-mode disconnected paths.
pub fn routing_experiment(
    g: &Graph,
    markers: &PathMarkers,
    options: EnumerateOptions,
) -> Result<RoutingReport, EnumerateError> {
    Ok(routing_experiments(g, std::slice::from_ref(markers), options)?.remove(0))
}

/// [`routing_experiment`] for several marker sets in a single enumeration.
pub fn routing_experiments(
    g: &Graph,
    markers: &[PathMarkers],
    options: EnumerateOptions,
) -> Result<Vec<RoutingReport>, EnumerateError> {
    let markers: Vec<PathMarkers> = markers
        .iter()
        .map(|m| {
            let mut m = m.clone();
            m.robots.sort_unstable();
            m.targets.sort_unstable();
            m
        })
        .collect();
    let mut totals = vec![0u64; markers.len()];
    let mut sink = |_: &TreeEvent, ctx: &StepContext<'_, '_>| -> Result<(), SinkError> {
        if let Some(delta) = ctx.delta {
            for (total, m) in totals.iter_mut().zip(&markers) {
                *total += disconnected_paths(ctx.state, delta, PathMode::Markers(m)).paths;
            }
        }
        Ok(())
    };
    let summary = enumerate_with(g, options, &mut sink)?;
    let exchanges = summary.total.saturating_sub(1);
    Ok(markers
        .iter()
        .zip(totals)
        .map(|(m, total)| {
            let (r, t) = (m.robots.len(), m.targets.len());
            RoutingReport {
                total_trees: summary.total,
                disconnected_total: total,
                mean: if exchanges == 0 { 0.0 } else { total as f64 / exchanges as f64 },
                expected_mp: expected_mp(r, t, g.node_count()),
                expected_random: expected_random(r, t),
            }
        })
        .collect())
}

/// Current on each edge (indexed by `order − 1`), positive from the lower
/// to the higher node id.
#[derive(Debug, Clone, PartialEq)]
pub struct CurrentVector {
    pub currents: Vec<f64>,
    pub tree_count: u64,
}

impl CurrentVector {
    pub fn edge(&self, order: EdgeOrder) -> f64 {
        self.currents[order as usize - 1]
    }

    /// Largest violation of current conservation: net outflow should be +1
    /// at `source`, −1 at `sink` and 0 elsewhere.
    pub fn kcl_residual(&self, g: &Graph, source: NodeId, sink: NodeId) -> f64 {
        let mut net = vec![0.0; g.node_count()];
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            net[a as usize] += self.currents[i];
            net[b as usize] -= self.currents[i];
        }
        net[source as usize] -= 1.0;
        net[sink as usize] += 1.0;
        net.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }
}

/// Signed per-edge use counts of the source–sink tree path, accumulated
/// over all trees. The path is only recomputed when an exchange removes one
/// of its edges; each distinct path is charged once per tree that uses it
/// and flushed into the totals when the search leaves the level that built it.
struct CurrentSink {
    source: NodeId,
    sink: NodeId,
    totals: Vec<i128>,
    levels: Vec<PathLevel>,
    trees: u64,
}

struct PathLevel {
    depth: u64,
    signs: Vec<i8>,
    uses: u64,
}

impl CurrentSink {
    fn new(g: &Graph, source: NodeId, sink: NodeId) -> Self {
        Self { source, sink, totals: vec![0; g.edge_count()], levels: Vec::new(), trees: 0 }
    }

    fn path_signs(&self, state: &SpanningTreeState<'_>) -> Vec<i8> {
        let g = state.graph();
        let mut signs = vec![0i8; g.edge_count()];
        let (mut a, mut b) = (self.source, self.sink);
        let step = |x: NodeId, signs: &mut Vec<i8>, toward_root: bool| -> NodeId {
            let p = state.parent(x).expect("non-root");
            let order = g.edge_order(x, p).unwrap();
            // travelling x→p on the source side, p→x on the sink side
            let (from, to) = if toward_root { (x, p) } else { (p, x) };
            signs[order as usize - 1] = if from < to { 1 } else { -1 };
            p
        };
        while state.path_len(a) > state.path_len(b) {
            a = step(a, &mut signs, true);
        }
        while state.path_len(b) > state.path_len(a) {
            b = step(b, &mut signs, false);
        }
        while a != b {
            a = step(a, &mut signs, true);
            b = step(b, &mut signs, false);
        }
        signs
    }

    fn flush_from(&mut self, depth: u64) {
        while self.levels.last().is_some_and(|l| l.depth >= depth) {
            let level = self.levels.pop().unwrap();
            for (t, &s) in self.totals.iter_mut().zip(&level.signs) {
                *t += i128::from(s) * i128::from(level.uses);
            }
        }
    }
}

impl TreeSink for CurrentSink {
    fn accept(&mut self, _: &TreeEvent, ctx: &StepContext<'_, '_>) -> Result<(), SinkError> {
        self.trees += 1;
        // levels at this depth or deeper belong to finished siblings
        self.flush_from(ctx.depth);
        let unchanged = match (ctx.delta, self.levels.last()) {
            (Some(d), Some(level)) => level.signs[d.removed as usize - 1] == 0,
            _ => false,
        };
        if unchanged {
            self.levels.last_mut().unwrap().uses += 1;
        } else {
            let signs = self.path_signs(ctx.state);
            self.levels.push(PathLevel { depth: ctx.depth, signs, uses: 1 });
        }
        Ok(())
    }
}

/// Average over all spanning trees of the unit source→sink current carried
/// along each tree's path.
pub fn electrical_current(
    g: &Graph,
    source: NodeId,
    sink: NodeId,
    options: EnumerateOptions,
) -> Result<CurrentVector, EnumerateError> {
    assert_ne!(source, sink, "source and sink must differ");
    let mut acc = CurrentSink::new(g, source, sink);
    enumerate_with(g, options, &mut acc)?;
    acc.flush_from(0);
    let trees = acc.trees;
    Ok(CurrentVector { currents: acc.totals.iter().map(|&c| c as f64 / trees as f64).collect(), tree_count: trees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{count_only, enumerate};
    use crate::graph::{generate_family, FamilyKind, GraphFamily};

    fn family(kind: FamilyKind, n: usize) -> Graph {
        generate_family(GraphFamily::new(kind, n)).unwrap()
    }

    #[test]
    fn expected_totals() {
        assert!((expected_total_trees(10, 32) / 4_649_831.0 - 1.0).abs() < 5e-3);
        assert!((expected_total_trees(12, 46) / 1_167_253_858.0 - 1.0).abs() < 5e-3);
        assert!((expected_total_trees(2, 1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn expected_type1() {
        assert_eq!(format!("{:.1}", 100.0 * expected_type1_fraction(10, 32)), "2.4");
        assert_eq!(format!("{:.1}", 100.0 * expected_type1_fraction(13, 46)), "0.7");
        assert!(expected_type1_fraction(60, 59) < 1e-3);
    }

    #[test]
    fn closed_form_routing() {
        assert!((expected_mp(5, 1, 25) - 0.40).abs() < 1e-12);
        assert!((expected_random(5, 1) - 5.0 / 3.0).abs() < 1e-12);
        assert!((expected_mp(4, 4, 25) - 1.28).abs() < 1e-12);
        assert_eq!(expected_mp(0, 3, 25), 0.0);
    }

    #[test]
    fn cycle_current_split() {
        let g = family(FamilyKind::Cycle, 4);
        let c = electrical_current(&g, 0, 1, EnumerateOptions::default()).unwrap();
        let direct = g.edge_order(0, 1).unwrap();
        assert!((c.edge(direct) - 0.75).abs() < 1e-12);
        for order in 1..=4 {
            if order != direct {
                assert!((c.edge(order).abs() - 0.25).abs() < 1e-12);
            }
        }
        assert!(c.kcl_residual(&g, 0, 1) < 1e-12);
    }

    #[test]
    fn single_edge_current() {
        let g = family(FamilyKind::Path, 2);
        let c = electrical_current(&g, 1, 0, EnumerateOptions::default()).unwrap();
        assert_eq!(c.currents, vec![-1.0]);
    }

    #[test]
    fn type2_partitions_are_one() {
        let g = family(FamilyKind::Helm, 5);
        let mut sink = |e: &TreeEvent, ctx: &StepContext<'_, '_>| -> Result<(), SinkError> {
            if let (TreeEvent::Child(c), Some(d)) = (e, ctx.delta) {
                if c.tree_type == crate::tree::TreeType::Type2 {
                    assert_eq!(partition_size(ctx.state, d), 1);
                }
                let all = disconnected_paths(ctx.state, d, PathMode::AllPairs).paths;
                let s = u64::from(partition_size(ctx.state, d));
                assert_eq!(all, s * (ctx.state.node_count() as u64 - s));
            }
            Ok(())
        };
        enumerate(&g, &mut sink).unwrap();
    }

    #[test]
    fn report_row_format() {
        let g = family(FamilyKind::Wheel, 4);
        let row = summarize_run("wheel-4", &g, count_only(&g).unwrap()).tsv_row();
        let cols: Vec<&str> = row.split('\t').collect();
        assert_eq!(cols.len(), TSV_HEADER.split('\t').count());
        assert_eq!(&cols[..6], &["wheel-4", "4", "6", "16", "1", "15"]);
    }

    #[test]
    fn markers_are_deterministic() {
        let a = PathMarkers::random(25, 4, 2, 9);
        assert_eq!(a, PathMarkers::random(25, 4, 2, 9));
        assert_eq!((a.robots.len(), a.targets.len()), (4, 2));
    }
}
