//! Transversal matroids of set families, their geometric lattices of flats,
//! and attribute reduction in dependence spaces and information systems.
//!
//! ```
//! use latmat::{GeometricLattice, SetFamily, TransversalMatroid};
//!
//! let family = SetFamily::from_names(
//!     ["1", "2", "3", "4", "5"],
//!     [vec!["1", "3"], vec!["2", "3"], vec!["3", "4", "5"]],
//! )
//! .unwrap();
//! let matroid = TransversalMatroid::new(family);
//! let lattice = GeometricLattice::build(&matroid);
//! assert_eq!(lattice.len(), 12);
//! assert_eq!(lattice.atoms().len(), 4);
//! ```

pub mod bitset;
pub mod covering;
pub mod dependence;
mod error;
pub mod family;
pub mod infosys;
pub mod lattice;
pub mod matroid;

pub use bitset::ElemSet;
pub use covering::{
    check_theorem_equivalences, is_covering, AbDecomposition, Covering, TheoremReport,
};
pub use dependence::{
    complements, gamma_space, minimal_hitting_sets, reducts_via_hyperplanes, spaces_equal_on,
    theta_space, DependenceSpace, GammaSpace, ReductSet, ThetaSpace,
};
pub use error::{Error, Result};
pub use family::{GroundSet, SetFamily};
pub use infosys::{AttributePartition, InformationSystem, R0Quotient};
pub use lattice::{GeometricLattice, GeometricReport};
pub use matroid::{Flat, TransversalMatroid};
