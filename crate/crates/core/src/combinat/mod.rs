//! Finite combinatorial categories: finite sets, relations, down-set
//! suplattices of finite preorders and 1-dimensional cobordisms.

pub mod cob;
pub mod finset;
pub mod rel;
pub mod sup;

pub use cob::{cob1_dual_pair, cob1_trace, run_program, CobCategory, Cobordism1};
pub use finset::{FinSetCategory, Function};
pub use rel::{
    free_abelian, free_abelian_parametrized, graph, rel_dual_pair, rel_fixed_point_set,
    rel_fixed_point_trace, RelCategory, Relation,
};
pub use sup::{
    alexandrov_parametrized, alexandrov_trace, alexandrov_twisted_trace, downset_dual_pair,
    PointSet, Preorder, SupCategory, SupMorphism,
};
