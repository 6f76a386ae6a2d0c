//! Published spanning-tree counts for the built-in families.
//!
//! Totals do not depend on node labels; the type split and the
//! type-1-from-type-2 count do, so callers should report split mismatches
//! rather than reject them.

use crate::graph::{FamilyKind as Kind, GraphFamily};

/// Reference counts for one family member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnownCounts {
    pub family: GraphFamily,
    pub node_count: usize,
    pub edge_count: usize,
    pub total: u64,
    pub type1: u64,
    /// Type-1 trees whose parent in the computational tree is type 2.
    pub type1_from_2: u64,
}

impl KnownCounts {
    pub fn type2(&self) -> u64 {
        self.total - self.type1
    }
}

const fn row(kind: Kind, n: usize, v: usize, e: usize, total: u64, type1: u64, type1_from_2: u64) -> KnownCounts {
    KnownCounts { family: GraphFamily { kind, n }, node_count: v, edge_count: e, total, type1, type1_from_2 }
}

/// Every reference row, grouped by family in ascending size.
pub const KNOWN: &[KnownCounts] = &[
    row(Kind::Path, 3, 3, 2, 1, 1, 0),
    row(Kind::Path, 4, 4, 3, 1, 1, 0),
    row(Kind::Path, 5, 5, 4, 1, 1, 0),
    row(Kind::Path, 6, 6, 5, 1, 1, 0),
    row(Kind::Path, 7, 7, 6, 1, 1, 0),
    row(Kind::Path, 8, 8, 7, 1, 1, 0),
    row(Kind::Path, 9, 9, 8, 1, 1, 0),
    row(Kind::Path, 10, 10, 9, 1, 1, 0),
    row(Kind::Path, 11, 11, 10, 1, 1, 0),
    row(Kind::Path, 12, 12, 11, 1, 1, 0),
    row(Kind::Path, 13, 13, 12, 1, 1, 0),
    row(Kind::Path, 14, 14, 13, 1, 1, 0),
    row(Kind::Path, 15, 15, 14, 1, 1, 0),
    row(Kind::Path, 16, 16, 15, 1, 1, 0),
    row(Kind::Path, 17, 17, 16, 1, 1, 0),
    row(Kind::Path, 18, 18, 17, 1, 1, 0),
    row(Kind::Path, 19, 19, 18, 1, 1, 0),
    row(Kind::Path, 20, 20, 19, 1, 1, 0),
    row(Kind::Cycle, 3, 3, 3, 3, 1, 0),
    row(Kind::Cycle, 4, 4, 4, 4, 1, 0),
    row(Kind::Cycle, 5, 5, 5, 5, 1, 0),
    row(Kind::Cycle, 6, 6, 6, 6, 1, 0),
    row(Kind::Cycle, 7, 7, 7, 7, 1, 0),
    row(Kind::Cycle, 8, 8, 8, 8, 1, 0),
    row(Kind::Cycle, 9, 9, 9, 9, 1, 0),
    row(Kind::Cycle, 10, 10, 10, 10, 1, 0),
    row(Kind::Cycle, 11, 11, 11, 11, 1, 0),
    row(Kind::Cycle, 12, 12, 12, 12, 1, 0),
    row(Kind::Cycle, 13, 13, 13, 13, 1, 0),
    row(Kind::Cycle, 14, 14, 14, 14, 1, 0),
    row(Kind::Cycle, 15, 15, 15, 15, 1, 0),
    row(Kind::Cycle, 16, 16, 16, 16, 1, 0),
    row(Kind::Cycle, 17, 17, 17, 17, 1, 0),
    row(Kind::Cycle, 18, 18, 18, 18, 1, 0),
    row(Kind::Cycle, 19, 19, 19, 19, 1, 0),
    row(Kind::Cycle, 20, 20, 20, 20, 1, 0),
    row(Kind::Star, 3, 3, 2, 1, 1, 0),
    row(Kind::Star, 4, 4, 3, 1, 1, 0),
    row(Kind::Star, 5, 5, 4, 1, 1, 0),
    row(Kind::Star, 6, 6, 5, 1, 1, 0),
    row(Kind::Star, 7, 7, 6, 1, 1, 0),
    row(Kind::Star, 8, 8, 7, 1, 1, 0),
    row(Kind::Star, 9, 9, 8, 1, 1, 0),
    row(Kind::Star, 10, 10, 9, 1, 1, 0),
    row(Kind::Star, 11, 11, 10, 1, 1, 0),
    row(Kind::Star, 12, 12, 11, 1, 1, 0),
    row(Kind::Star, 13, 13, 12, 1, 1, 0),
    row(Kind::Star, 14, 14, 13, 1, 1, 0),
    row(Kind::Star, 15, 15, 14, 1, 1, 0),
    row(Kind::Star, 16, 16, 15, 1, 1, 0),
    row(Kind::Star, 17, 17, 16, 1, 1, 0),
    row(Kind::Star, 18, 18, 17, 1, 1, 0),
    row(Kind::Star, 19, 19, 18, 1, 1, 0),
    row(Kind::Star, 20, 20, 19, 1, 1, 0),
    row(Kind::Complete, 3, 3, 3, 3, 1, 0),
    row(Kind::Complete, 4, 4, 6, 16, 1, 0),
    row(Kind::Complete, 5, 5, 10, 125, 1, 0),
    row(Kind::Complete, 6, 6, 15, 1_296, 1, 0),
    row(Kind::Complete, 7, 7, 21, 16_807, 1, 0),
    row(Kind::Complete, 8, 8, 28, 262_144, 1, 0),
    row(Kind::Complete, 9, 9, 36, 4_782_969, 1, 0),
    row(Kind::Wheel, 4, 4, 6, 16, 1, 0),
    row(Kind::Wheel, 5, 5, 8, 45, 2, 0),
    row(Kind::Wheel, 6, 6, 10, 121, 5, 2),
    row(Kind::Wheel, 7, 7, 12, 320, 10, 1),
    row(Kind::Wheel, 8, 8, 14, 841, 13, 4),
    row(Kind::Wheel, 9, 9, 16, 2_205, 16, 7),
    row(Kind::Wheel, 10, 10, 18, 5_776, 19, 10),
    row(Kind::Wheel, 11, 11, 20, 15_125, 22, 13),
    row(Kind::Wheel, 12, 12, 22, 39_601, 25, 16),
    row(Kind::Wheel, 13, 13, 24, 103_680, 28, 19),
    row(Kind::Wheel, 14, 14, 26, 271_441, 31, 22),
    row(Kind::Wheel, 15, 15, 28, 710_645, 34, 25),
    row(Kind::Wheel, 16, 16, 30, 1_860_496, 37, 28),
    row(Kind::Wheel, 17, 17, 32, 4_870_845, 40, 31),
    row(Kind::Wheel, 18, 18, 34, 12_752_041, 43, 34),
    row(Kind::Wheel, 19, 19, 36, 33_385_280, 46, 37),
    row(Kind::Wheel, 20, 20, 38, 87_403_801, 49, 40),
    row(Kind::Prism, 3, 6, 9, 75, 3, 0),
    row(Kind::Prism, 4, 8, 12, 384, 13, 9),
    row(Kind::Prism, 5, 10, 15, 1_805, 37, 23),
    row(Kind::Prism, 6, 12, 18, 8_100, 105, 61),
    row(Kind::Prism, 7, 14, 21, 35_287, 269, 138),
    row(Kind::Prism, 8, 16, 24, 150_528, 694, 344),
    row(Kind::Prism, 9, 18, 27, 632_025, 1_874, 894),
    row(Kind::Prism, 10, 20, 30, 2_620_860, 4_722, 2202),
    row(Kind::Prism, 11, 22, 33, 10_759_331, 12_300, 5374),
    row(Kind::Prism, 12, 24, 36, 43_804_800, 30_270, 12921),
    row(Kind::Ladder, 3, 6, 7, 15, 3, 0),
    row(Kind::Ladder, 4, 8, 10, 56, 7, 0),
    row(Kind::Ladder, 5, 10, 13, 209, 17, 0),
    row(Kind::Ladder, 6, 12, 16, 780, 41, 0),
    row(Kind::Ladder, 7, 14, 19, 2_911, 99, 0),
    row(Kind::Ladder, 8, 16, 22, 10_864, 239, 0),
    row(Kind::Ladder, 9, 18, 25, 40_545, 577, 0),
    row(Kind::Ladder, 10, 20, 28, 151_316, 1_393, 0),
    row(Kind::Ladder, 11, 22, 31, 564_719, 3_363, 0),
    row(Kind::Ladder, 12, 24, 34, 2_107_560, 8_119, 0),
    row(Kind::Ladder, 13, 26, 37, 7_865_521, 19_601, 0),
    row(Kind::Ladder, 14, 28, 40, 29_354_524, 47_321, 0),
    row(Kind::Sunlet, 3, 6, 6, 3, 3, 0),
    row(Kind::Sunlet, 4, 8, 8, 4, 4, 0),
    row(Kind::Sunlet, 5, 10, 10, 5, 5, 0),
    row(Kind::Sunlet, 6, 12, 12, 6, 6, 0),
    row(Kind::Sunlet, 7, 14, 14, 7, 7, 0),
    row(Kind::Sunlet, 8, 16, 16, 8, 8, 0),
    row(Kind::Sunlet, 9, 18, 18, 9, 9, 0),
    row(Kind::Sunlet, 10, 20, 20, 10, 10, 0),
    row(Kind::Sunlet, 11, 22, 22, 11, 11, 0),
    row(Kind::Sunlet, 12, 24, 24, 12, 12, 0),
    row(Kind::Sunlet, 13, 26, 26, 13, 13, 0),
    row(Kind::Sunlet, 14, 28, 28, 14, 14, 0),
    row(Kind::Sunlet, 15, 30, 30, 15, 15, 0),
    row(Kind::Sunlet, 16, 32, 32, 16, 16, 0),
    row(Kind::Sunlet, 17, 34, 34, 17, 17, 0),
    row(Kind::Sunlet, 18, 36, 36, 18, 18, 0),
    row(Kind::Sunlet, 19, 38, 38, 19, 19, 0),
    row(Kind::Sunlet, 20, 40, 40, 20, 20, 0),
    row(Kind::Helm, 3, 7, 9, 16, 10, 2),
    row(Kind::Helm, 4, 9, 12, 45, 33, 8),
    row(Kind::Helm, 5, 11, 15, 121, 101, 15),
    row(Kind::Helm, 6, 13, 18, 320, 290, 15),
    row(Kind::Helm, 7, 15, 21, 841, 799, 20),
    row(Kind::Helm, 8, 17, 24, 2_205, 2_149, 26),
    row(Kind::Helm, 9, 19, 27, 5_776, 5_704, 33),
    row(Kind::Helm, 10, 21, 30, 15_125, 15_035, 41),
    row(Kind::Helm, 11, 23, 33, 39_601, 39_491, 50),
    row(Kind::Helm, 12, 25, 36, 103_680, 103_548, 60),
    row(Kind::Helm, 13, 27, 39, 271_441, 271_285, 71),
    row(Kind::Helm, 14, 29, 42, 710_645, 710_463, 83),
    row(Kind::Helm, 15, 31, 45, 1_860_496, 1_860_286, 96),
    row(Kind::Helm, 16, 33, 48, 4_870_845, 4_870_605, 110),
    row(Kind::Helm, 17, 35, 51, 12_752_041, 12_751_769, 125),
    row(Kind::Helm, 18, 37, 54, 33_385_280, 33_384_974, 141),
    row(Kind::Helm, 19, 39, 57, 87_403_801, 87_403_459, 158),
    row(Kind::Book, 3, 8, 10, 54, 4, 2),
    row(Kind::Book, 4, 10, 13, 189, 5, 3),
    row(Kind::Book, 5, 12, 16, 648, 6, 4),
    row(Kind::Book, 6, 14, 19, 2_187, 7, 5),
    row(Kind::Book, 7, 16, 22, 7_290, 8, 6),
    row(Kind::Book, 8, 18, 25, 24_057, 9, 7),
    row(Kind::Book, 9, 20, 28, 78_732, 10, 8),
    row(Kind::Gear, 3, 7, 9, 50, 4, 2),
    row(Kind::Gear, 4, 9, 12, 192, 10, 2),
    row(Kind::Gear, 5, 11, 15, 722, 26, 6),
    row(Kind::Gear, 6, 13, 18, 2_700, 57, 8),
    row(Kind::Gear, 7, 15, 21, 10_082, 120, 10),
    row(Kind::Gear, 8, 17, 24, 37_632, 247, 12),
    row(Kind::Gear, 9, 19, 27, 140_450, 502, 14),
    row(Kind::Gear, 10, 21, 30, 524_172, 1_013, 16),
    row(Kind::Gear, 11, 23, 33, 1_956_242, 2_036, 18),
    row(Kind::Gear, 12, 25, 36, 7_300_800, 4_083, 20),
    row(Kind::Gear, 13, 27, 39, 27_246_962, 8_178, 22),
    row(Kind::Web, 3, 9, 12, 75, 27, 0),
    row(Kind::Web, 4, 12, 16, 384, 115, 3),
    row(Kind::Web, 5, 15, 20, 1_805, 457, 52),
    row(Kind::Web, 6, 18, 24, 8_100, 1_763, 83),
    row(Kind::Web, 7, 21, 28, 35_287, 6_567, 636),
    row(Kind::Web, 8, 24, 32, 150_528, 24_000, 989),
    row(Kind::Web, 9, 27, 36, 632_025, 86_549, 6878),
    row(Kind::Web, 10, 30, 40, 2_620_860, 308_436, 10655),
    row(Kind::Web, 11, 33, 44, 10_759_331, 1_088_368, 72111),
    row(Kind::Web, 12, 36, 48, 43_804_800, 3_809_999, 111627),
    row(Kind::Antiprism, 3, 6, 12, 384, 5, 2),
    row(Kind::Antiprism, 4, 8, 16, 3_528, 35, 26),
    row(Kind::Antiprism, 5, 10, 20, 30_250, 189, 140),
    row(Kind::Antiprism, 6, 12, 24, 248_832, 917, 650),
    row(Kind::Antiprism, 7, 14, 28, 1_989_806, 4_330, 2650),
    row(Kind::Antiprism, 8, 16, 32, 15_586_704, 18_335, 11593),
];

/// Reference counts for `family`, when published.
pub fn known_counts(family: GraphFamily) -> Option<KnownCounts> {
    KNOWN.iter().copied().find(|k| k.family == family)
}
