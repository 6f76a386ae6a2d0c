mod common;

use mptrees::oracle::{kirchhoff_count, split_size};
use mptrees::{enumerate, generate_family, FamilyKind, GraphFamily, StepContext, TreeEvent};

#[test]
fn enumeration_equals_brute_force_on_random_graphs() {
    for (seed, g) in common::er_battery(40, 4, 7, 11) {
        let n = common::check_against_brute_force(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert_eq!(u128::from(n), kirchhoff_count(&g).unwrap(), "seed {seed}");
    }
}

#[test]
fn structures_match_scratch_rebuilds() {
    for (seed, g) in common::er_battery(12, 4, 6, 21) {
        common::check_structures(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
    for (kind, n) in [(FamilyKind::Wheel, 6), (FamilyKind::Helm, 3), (FamilyKind::Gear, 3), (FamilyKind::Book, 3)] {
        common::check_structures(&generate_family(GraphFamily::new(kind, n)).unwrap()).unwrap();
    }
}

#[test]
fn children_match_the_definition() {
    for (seed, g) in common::er_battery(8, 4, 6, 31) {
        common::check_children(&g).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
    }
}

#[test]
fn partition_sizes_match_component_search() {
    for (seed, g) in common::er_battery(10, 5, 7, 41) {
        let mut parent_trees: Vec<Vec<u32>> = Vec::new();
        let mut sink = |e: &TreeEvent, ctx: &StepContext<'_, '_>| -> Result<(), mptrees::enumerate::SinkError> {
            match e {
                TreeEvent::Root { edges } => parent_trees = vec![edges.clone()],
                TreeEvent::Child(c) => {
                    parent_trees.truncate(ctx.depth as usize);
                    let parent = parent_trees.last().unwrap();
                    let delta = ctx.delta.unwrap();
                    assert_eq!(
                        delta.partition_size(g.node_count()),
                        split_size(&g, parent, c.removed),
                        "seed {seed}, event {}",
                        c.id
                    );
                    parent_trees.push(ctx.state.edge_set());
                }
            }
            Ok(())
        };
        enumerate(&g, &mut sink).unwrap();
    }
}

/// Trees in which `v` is internal or a leaf on its lowest-order edge number
/// `τ(G) − τ(G − v)·(deg v − 1)`: every other tree hangs `v` as a leaf on one
/// of its remaining edges.
#[test]
fn node_deletion_identity() {
    for (kind, n) in [(FamilyKind::Wheel, 6), (FamilyKind::Prism, 3), (FamilyKind::Complete, 5), (FamilyKind::Helm, 3)] {
        let g = generate_family(GraphFamily::new(kind, n)).unwrap();
        let total = kirchhoff_count(&g).unwrap();
        let trees = common::collected_trees(&g).unwrap();
        assert_eq!(trees.len() as u128, total);
        for v in 0..g.node_count() as u32 {
            let Some(h) = g.without_node(v) else { continue };
            let min_edge = g.neighbors(v).iter().map(|&(_, e)| e).min().unwrap();
            let counted = trees
                .iter()
                .filter(|t| {
                    let incident: Vec<u32> = t.iter().copied().filter(|&e| g.edge(e).0 == v || g.edge(e).1 == v).collect();
                    incident.len() > 1 || incident == [min_edge]
                })
                .count() as u128;
            let deg = g.degree(v) as u128;
            assert_eq!(counted, total - kirchhoff_count(&h).unwrap() * (deg - 1), "{kind}-{n} node {v}");
        }
    }
}
