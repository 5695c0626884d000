//! Applications of the core certifiers: structural AT certificates for
//! uniquely colorable graphs, f-AT for hypergraphs, and T-list
//! choosability of even cycles.

pub mod hyper;
pub mod tlist;
pub mod unique;

pub use hyper::{
    hypergraph_f_at, hypergraph_f_at_cyclotomic, hypergraph_polynomial, CycloFatReport,
    HyperFatReport, QSpec,
};
pub use tlist::{t_list_cycle_check, TListReport, TSet};
pub use unique::{
    min_edge_unique_certificate, parity_unique_certificate, unique_coloring, MinEdgeReport,
    ParityAugmentation, ParityBranch, ParityReport, UniqueColoring, UniquePartition,
};
