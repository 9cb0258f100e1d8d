//! Finite racks, rack labelings of link diagrams, and the enhanced counting
//! invariants they induce.
//!
//! The library is organized around a small pipeline:
//!
//! * [`rack`] — finite racks as operation tables, axiom verification, the
//!   kink map and rack rank, and standard constructors ((t,s)-racks,
//!   dihedral quandles).
//! * [`diagram`] — oriented link diagrams of classical and virtual links as
//!   semi-arc incidence structures, parsed from native, PD, or signed Gauss
//!   codes; per-component framing by kink insertion.
//! * [`bead`] — dynamical cocycles on finite bead sets, X-module structures
//!   over Z_m, reduced 2-cocycles, and the verification of each.
//! * [`linalg`] — dense matrices over Z_m, row reduction over prime moduli,
//!   integer Smith normal form, and kernel counting for the module
//!   enhancement.
//! * [`invariants`] — enumeration of labelings over all framing classes and
//!   the counting invariant plus its image, writhe, 2-cocycle, module, and
//!   dynamical-cocycle enhancements.
//! * [`search`] — seeded random and exhaustive generation of verified
//!   cocycles and module structures, with distinguishing-power reports.
//!
//! All values are exact integers; there is no floating point anywhere.

pub mod bead;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod rack;
pub mod search;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
