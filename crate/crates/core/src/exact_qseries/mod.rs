//! Exact coefficients of the trace-refined MacMahon product and the
//! overpartition product, with a brute-force enumerator as an oracle.

pub mod enumerate;
mod fixed;
pub mod residue;
pub mod root;
pub mod table;

pub use enumerate::{enumerate_plane_partitions, PlanePartition, ENUMERATION_CAP};
pub use fixed::FixedComplex;
pub use residue::{
    difference_series, eval_poly, eval_trace_c64, eval_trace_poly, residue_counts_direct,
    residue_counts_via_roots, CoeffTable, ResidueCounts,
};
pub use root::RootOfUnity;
pub use table::{build_over_table, build_trace_table, over_table_from, OverTable, TraceTable, TABLE_CAP};
