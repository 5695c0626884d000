//! Multigraphs, hypergraphs, orientations, family generators, and the cheap
//! structural invariants (density, coloring number, core).

pub mod coloring;
pub mod families;
pub mod hypergraph;
pub mod multigraph;
pub mod orientation;
pub mod structure;

pub use coloring::{
    canonical_partitions, chromatic_number, count_list_colorings, exists_list_coloring,
    visit_list_colorings,
};
pub use families::{generate_family, Family, FamilyGraph};
pub use hypergraph::{parse_hypergraph, Hypergraph};
pub use multigraph::{line_graph, parse_multigraph, MultiGraph};
pub use orientation::{
    canonical_orientation, enumerate_orientations, orientation_from_mask, Orientation,
};
pub use structure::{coloring_number_col, max_density, structural_at_le_2};
