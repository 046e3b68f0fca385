//! Exhaustive enumeration of small dioids and of domain/antidomain maps on
//! them, and model search for law implications.

mod enumerate;
mod maps;
mod search;

pub use enumerate::{enumerate_dioids, is_canonical, mul_completions, semilattice_orders, EnumStats, MAX_SIZE};
pub use maps::{enumerate_domain_maps, MapKind};
pub use search::{search, search_partition, PartitionResult, SearchHit, SearchQuery, SearchResult, SearchStats};
