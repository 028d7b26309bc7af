//! Exact computations for weighted projective spaces `P(w_0, …, w_n)` and the
//! hypergeometric local systems attached to them.
//!
//! - [`agecalc`]: residues, ages, strict-age spectra, canonicity, `λ`.
//! - [`hyperg`]: exponent multisets, `H` and `H^red`, the p(k) Hodge calculator.
//! - [`ehrhart`]: lattice-point counts on faces of `Δ` and the
//!   inclusion–exclusion Hodge vector.
//! - [`classify`]: hypersurface well-formedness, quasismoothness, enumeration
//!   of canonical weight tuples.
//! - [`toric`]: quotient presentations `P(b)/G` and pencil tables.
//! - [`lattice`]: Smith normal form and related integer linear algebra.
//! - [`golden`]: embedded reference tables.

pub mod agecalc;
pub mod arith;
pub mod classify;
pub mod ehrhart;
pub mod error;
pub mod golden;
pub mod hyperg;
pub mod lattice;
pub mod toric;

pub use agecalc::{make_weights, WeightTuple};
pub use error::{Error, Result};
