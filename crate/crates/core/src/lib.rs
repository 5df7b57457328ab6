//! Abelian covers of surfaces with normal crossing double curves: building
//! data, gluing, the invariants `K^2` and `chi(O)`, and the local
//! classification of `(Z_2)^r`-covers.

pub mod cover;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod gluing;
pub mod group;
pub mod invariants;
pub mod local;
pub mod sample;
pub mod surface;

pub use error::{Error, Result};
pub use group::{Character, CyclicPair, FiniteAbelianGroup, GroupElement, Residue};
pub use surface::{GdcSurface, QDivisorClass, SmoothSurfaceModel};
