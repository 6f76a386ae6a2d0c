//! Enumeration of all spanning trees of a connected simple graph by
//! *minimal partitioning*: every tree after the first is produced from its
//! parent by promoting one edge-node pair to the next edge in order, so each
//! step exchanges a single edge and usually moves a single leaf.
//!
//! ```
//! use mptrees::{count_only, generate_family, FamilyKind, GraphFamily};
//!
//! let g = generate_family(GraphFamily::new(FamilyKind::Wheel, 6)).unwrap();
//! let s = count_only(&g).unwrap();
//! assert_eq!((s.total, s.type1, s.type2), (121, 5, 116));
//! ```

pub mod analytics;
pub mod enumerate;
pub mod graph;
pub mod known;
pub mod oracle;
pub mod structures;
pub mod tree;

pub use enumerate::{
    count_only, enumerate, enumerate_with, replay, AuditSink, ChildEvent, EnumerateError, EnumerateOptions,
    EnumerationSummary, NullSink, Replayer, StepContext, TreeEvent, TreeSink, WriteSink,
};
pub use graph::{
    canonicalize, generate_erdos_renyi, generate_family, generate_grid, parse_edge_list, EdgeOrder, FamilyKind,
    Graph, GraphError, GraphFamily, NodeId, RawGraph,
};
pub use known::{known_counts, KnownCounts};
pub use tree::{PromotionDelta, SpanningTreeState, Standing, TreeClass, TreeType};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/pairs.md")]
    mod pairs {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/analytics.md")]
    mod analytics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
