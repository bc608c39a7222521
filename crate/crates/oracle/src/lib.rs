//! Brute-force reference computations for testing `equikoszul`.
//!
//! Nothing here calls the representation-theoretic algorithms of the main
//! crate; only its field arithmetic and data types are shared.

pub mod corpus;
pub mod groups;
pub mod superelliptic;
pub mod wedge;

pub use corpus::{corpus, CorpusCover, MAX_GENUS};
pub use groups::{
    alternating4, cyclic, cyclic_table, dihedral8, quaternion8, small_groups, symmetric3,
    FiniteGroup,
};
pub use superelliptic::{superelliptic_cover, superelliptic_h0};
pub use wedge::{
    cyclotomic_poly, eigenvalue_exponents, elementary_symmetric_all,
    elementary_symmetric_group_ring, wedge_by_eigenvalues, wedge_by_multinomial,
    wedge_table_by_multinomial, GroupRing,
};
