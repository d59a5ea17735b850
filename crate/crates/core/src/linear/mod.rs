//! Linear instances: matrices, chain complexes, homology and simplicial chains.

pub mod chain;
pub mod homology;
pub mod mat;
pub mod random;
pub mod simplicial;

pub use chain::{
    chain_dual_pair, lefschetz_number, ChainCategory, ChainComplex, ChainMap, ChainObject,
};
pub use homology::{
    homology, homology_map, integral_homology_mod_torsion, GradedObject, HomologyBasis,
};
pub use mat::{mat_dual_pair, MatCategory};
pub use simplicial::{
    induced_chain_map, lefschetz_verdict, simplicial_chain_complex, SimplicialComplex,
    SimplicialMap, Verdict,
};
