//! The path category of Young's lattice, the horizontal-strip category, and
//! the projection onto Hecke invariants relating them.

mod hs;
mod morita;
mod path;

pub use hs::{hs_compose, HSMorphism};
pub use morita::{
    composition_scalar, morita_composition_scalar, project_q, verify_morita, verify_morita_with, MoritaBounds,
    MoritaCheck, MoritaFailure, MoritaReport, Projector, QImage,
};
pub use path::{path_compose, PathMorphism};
