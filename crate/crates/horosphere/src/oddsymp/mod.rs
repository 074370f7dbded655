//! Odd symplectic Grassmannians `IG(m, 2n+1)`: Schubert indexing and ring presentations.

pub mod groebner;
pub mod partitions;
pub mod poly;
pub mod presentation;

pub use partitions::{
    enumerate_index_sets, enumerate_partitions, index_to_partition, partition_to_index, IndexSet, KStrictPartition,
    Parity,
};
pub use poly::{Monomial, PolyRing, QPolynomial};
pub use presentation::{
    b_poly, classical_ideal, d_poly, quantum_ideal, FlatnessReport, PresentationJson, QuotientRing, Relation,
};
