//! Exact commutative algebra for length invariants of parameter ideals.
//!
//! The crate emulates computations over the local ring at the irrelevant
//! maximal ideal of `k[x_1..x_n]` by working with graded data: all
//! length-type operations insist on homogeneous input, where graded and
//! local lengths agree. On top of a Groebner engine over free modules
//! (Buchberger with the normal selection strategy, POT/TOP and block
//! elimination orders) it builds finitely presented graded modules,
//! syzygies and minimal free resolutions, and the invariants attached to a
//! system of parameters: Koszul homology and multiplicities, limit
//! closures, the length functions I and J, unmixed components, d- and
//! dd-sequence certification, local cohomology annihilators, p-standard
//! systems of parameters, and Hilbert-Kunz functions in positive
//! characteristic.
//!
//! Everything is deterministic: no hash-order dependence, seeded draws for
//! the one randomized search, bit-identical reruns.

pub mod error;
pub mod field;
pub mod fpmodule;
pub mod freemod;
pub mod gb;
pub mod hk;
pub mod idealization;
pub mod invariants;
pub mod koszul;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod resolve;
pub mod submodule;

pub use error::{EngineError, Result};
pub use field::{Coeff, Field};
pub use fpmodule::{FPModule, ParamSystem};
pub use freemod::FreeElement;
pub use gb::GroebnerBasis;
pub use hk::{
    e_hk_estimate, frobenius_power, hk_function, j_hk_bridge, BridgeTable, HKEstimate, HKSeries,
    DEFAULT_HK_BUDGET,
};
pub use idealization::{idealize, Idealization};
pub use invariants::aideals::{a_ideals, p_standard_sop, AIdeals};
pub use invariants::dseq::{is_d_sequence, is_dd_sequence_box, DdVerdict};
pub use invariants::estimate::{p_estimate, pf_estimate, FitEstimate};
pub use invariants::ij::{i_fun, ij_row, j_fun, table};
pub use invariants::limit::{
    limit_closure, limit_closure_dd, limit_closure_of_sequence, ClosureResult,
};
pub use invariants::multiplicity::{multiplicity, powered_multiplicity};
pub use invariants::unmixed::{unmixed_component, UnmixedResult};
pub use invariants::{ExponentBox, InvariantRow, InvariantTable, DEFAULT_STAB_CAP};
pub use koszul::KoszulComplex;
pub use matrix::PolyMatrix;
pub use monomial::{ModuleOrder, Monomial, MonomialOrder};
pub use poly::{Homogeneity, PolyRing, Polynomial};
pub use resolve::Resolution;
pub use submodule::{Length, Submodule};
