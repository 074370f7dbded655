//! Horospherical varieties: invariants, bases, Chevalley operators.

pub mod blowup;
pub mod export;
pub mod gw;
pub mod quantum;
pub mod variety;

pub use export::{chevalley_table, format_class, ChevalleyTable, ProductTerm};
pub use quantum::{quantum_supported, semisimplicity, QuantumChevalley, SemisimplicityReport};
pub use variety::{BasisTag, CaseTag, CohomologyClass, SchubertLabel, Side, Variety};
