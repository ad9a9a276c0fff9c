//! Single-elimination tournaments as maximal commuting families.

pub mod counts;
pub mod family;
pub mod losers;
pub mod order;
pub mod paired;
pub mod render;
pub mod surgery;

pub use counts::{count_sequences, double_factorial_count, CountRow};
pub use family::{enumerate_families, is_maximal_commuting, MaximalCommutingFamily};
pub use losers::LoserMap;
pub use order::{canonical_order, OrderedFamily};
pub use paired::{enumerate_paired_families, hat_family, PairedFamily};
pub use render::{render_family, RenderFormat};
pub use surgery::{delete_team, insert_team, mc_family_transform, md_set, me_set, segments, Insertion, McVariant, Segment};
