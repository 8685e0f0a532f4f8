//! Goldman and Andersen–Mattes–Reshetikhin brackets of free homotopy classes
//! of loops on oriented surfaces with free fundamental group, and the minimal
//! intersection and self-intersection numbers they determine.
//!
//! Surfaces are ribbon roses ([`surface::RibbonRose`]); classes are cyclic
//! words ([`freegroup::FreeClass`]). The closed torus is handled separately in
//! [`torus`].

pub mod bracket;
pub mod cli;
pub mod error;
pub mod freegroup;
pub mod linking;
pub mod sample;
pub mod surface;
pub mod torus;

pub use bracket::{
    amr_bracket, canonicalize_term, goldman_bracket, min_intersection, reduce_terms,
    self_intersection, smooth, theorem2_selfint, BracketResult, ChordDiagram, ChordTerm,
};
pub use error::{Error, Result};
pub use freegroup::{free_class, CyclicWord, FreeClass, Letter, Word};
pub use linking::{crossings_between, self_crossing_count, self_crossings, Crossing};
pub use surface::{enumerate_rank2_roses, parse_surface, RibbonRose};
pub use torus::{torus_min_intersection, TorusClass};
