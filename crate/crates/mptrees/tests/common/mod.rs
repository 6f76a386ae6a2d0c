//! Shared fixtures and checks for the integration tests and the acceptance
//! battery.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use mptrees::enumerate::{Candidate, Walker};
use mptrees::oracle::{self, EdgeSet};
use mptrees::{
    enumerate, generate_erdos_renyi, AuditSink, EnumerationSummary, Graph, NullSink, StepContext, TreeEvent, TreeSink,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Enumerates with the full per-event audit and a consistency sweep every
/// 64 events.
pub fn audited(g: &Graph) -> Result<EnumerationSummary, String> {
    let mut sink = AuditSink::new(NullSink, 64);
    enumerate(g, &mut sink).map_err(|e| e.to_string())
}

/// Like [`audited`], forwarding to `inner` as well.
pub fn audited_with<S: TreeSink>(g: &Graph, inner: S) -> Result<EnumerationSummary, String> {
    let mut sink = AuditSink::new(inner, 64);
    enumerate(g, &mut sink).map_err(|e| e.to_string())
}

/// Connected `G(V, p)` samples with `V` cycling through `v_lo..=v_hi` and the
/// target edge count drawn between a tree and the complete graph.
pub fn er_battery(count: usize, v_lo: usize, v_hi: usize, seed: u64) -> Vec<(u64, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let v = v_lo + i % (v_hi - v_lo + 1);
            let e = rng.gen_range(v..=v * (v - 1) / 2);
            let s = seed.wrapping_mul(1_000_003).wrapping_add(i as u64);
            (s, generate_erdos_renyi(v, e, s).expect("dense enough to connect"))
        })
        .collect()
}

/// Depth-first walk over the computational tree with the live structures
/// exposed at every tree, before its children are generated.
pub fn walk<F>(g: &Graph, mut visit: F) -> Result<u64, String>
where
    F: FnMut(&Walker<'_>, &[Candidate]) -> Result<(), String>,
{
    fn rec<F>(w: &mut Walker<'_>, visit: &mut F, count: &mut u64) -> Result<(), String>
    where
        F: FnMut(&Walker<'_>, &[Candidate]) -> Result<(), String>,
    {
        *count += 1;
        let mut kids = Vec::new();
        w.children(&mut kids);
        visit(w, &kids)?;
        for c in kids {
            let applied = w.apply(c);
            rec(w, visit, count)?;
            w.revert(applied);
        }
        Ok(())
    }
    let mut w = Walker::new(g);
    let mut count = 0;
    rec(&mut w, &mut visit, &mut count)?;
    Ok(count)
}

/// Every tree of an enumeration run, rebuilt from the event stream.
pub fn collected_trees(g: &Graph) -> Result<Vec<EdgeSet>, String> {
    let mut trees = Vec::new();
    let collect = |_: &TreeEvent, ctx: &StepContext<'_, '_>| -> Result<(), mptrees::enumerate::SinkError> {
        trees.push(ctx.state.edge_set());
        Ok(())
    };
    audited_with(g, collect)?;
    Ok(trees)
}

/// Structures after every promotion equal their from-definition rebuilds,
/// and the pilot-candidates head names the tree's pilot.
pub fn check_structures(g: &Graph) -> Result<u64, String> {
    walk(g, |w, _| {
        let edges = w.state.edge_set();
        let pp: BTreeMap<_, _> = w.pp.iter().map(|e| (e.standing.node, (e.standing, e.covered))).collect();
        let want_pp = oracle::definitional_promotable(g, &edges);
        if pp != want_pp {
            return Err(format!("promotable pairs of {edges:?}: got {pp:?}, want {want_pp:?}"));
        }
        let pc: BTreeMap<_, _> = w.pc.iter().map(|s| (s.node, s)).collect();
        let want_pc = oracle::definitional_pilot_candidates(g, &edges);
        if pc != want_pc {
            return Err(format!("pilot candidates of {edges:?}: got {pc:?}, want {want_pc:?}"));
        }
        let head = w.pc.head().map(|s| s.node);
        let class = w.state.classify_tree();
        if head != class.pilot || class != oracle::classify_edge_set(g, &edges) {
            return Err(format!("pilot of {edges:?}: head {head:?}, classify {class:?}"));
        }
        Ok(())
    })
}

/// Per-parent child sets equal the definitional ones, and every tree but
/// the root has exactly one parent.
pub fn check_children(g: &Graph) -> Result<u64, String> {
    let mut parents: HashMap<EdgeSet, u32> = HashMap::new();
    let mut seen = BTreeSet::new();
    let visited = walk(g, |w, kids| {
        let edges = w.state.edge_set();
        if !seen.insert(edges.clone()) {
            return Err(format!("tree {edges:?} visited twice"));
        }
        let got: BTreeSet<(EdgeSet, u32)> = kids
            .iter()
            .map(|&c| {
                let removed = w.state.pair_edge(c.node).expect("candidate has a pair");
                let added = g.edge_order(c.node, c.covered).expect("covered node is adjacent");
                let mut child: EdgeSet = edges.iter().copied().filter(|&e| e != removed).collect();
                child.push(added);
                child.sort_unstable();
                (child, c.node)
            })
            .collect();
        let want = oracle::definitional_children(g, &edges);
        if got != want {
            return Err(format!("children of {edges:?}: got {got:?}, want {want:?}"));
        }
        for (child, _) in want {
            *parents.entry(child).or_default() += 1;
        }
        Ok(())
    })?;
    let root = oracle::minimal_ranks_edges(g);
    if parents.contains_key(&root) {
        return Err("the root has a parent".into());
    }
    if let Some((t, n)) = parents.iter().find(|(_, &n)| n != 1) {
        return Err(format!("tree {t:?} has {n} parents"));
    }
    if parents.len() as u64 + 1 != visited {
        return Err(format!("{} trees with parents, {visited} visited", parents.len()));
    }
    Ok(visited)
}

/// Enumerated trees equal the brute-force set, without duplicates.
pub fn check_against_brute_force(g: &Graph) -> Result<u64, String> {
    let mut trees = collected_trees(g)?;
    let n = trees.len();
    for t in &mut trees {
        t.sort_unstable();
    }
    let got: BTreeSet<EdgeSet> = trees.into_iter().collect();
    if got.len() != n {
        return Err(format!("{} duplicate trees", n - got.len()));
    }
    let want = oracle::brute_force_enumerate(g).map_err(|e| e.to_string())?;
    if got != want {
        let missing = want.difference(&got).count();
        let extra = got.difference(&want).count();
        return Err(format!("{missing} trees missing, {extra} unexpected"));
    }
    Ok(n as u64)
}

/// Unit-resistor currents from a dense solve of the reduced Laplacian
/// (node `sink` grounded), per edge in order, positive toward the higher id.
pub fn laplacian_currents(g: &Graph, source: u32, sink: u32) -> Vec<f64> {
    let n = g.node_count();
    let idx = |v: usize| if v < sink as usize { v } else { v - 1 };
    let mut l = nalgebra::DMatrix::<f64>::zeros(n - 1, n - 1);
    for &(a, b) in g.edges() {
        let (a, b) = (a as usize, b as usize);
        for (x, y) in [(a, b), (b, a)] {
            if x != sink as usize {
                l[(idx(x), idx(x))] += 1.0;
                if y != sink as usize {
                    l[(idx(x), idx(y))] -= 1.0;
                }
            }
        }
    }
    let mut rhs = nalgebra::DVector::<f64>::zeros(n - 1);
    rhs[idx(source as usize)] = 1.0;
    let phi = l.lu().solve(&rhs).expect("connected graph has a nonsingular reduced Laplacian");
    let pot = |v: u32| if v == sink { 0.0 } else { phi[idx(v as usize)] };
    g.edges().iter().map(|&(a, b)| pot(a) - pot(b)).collect()
}
