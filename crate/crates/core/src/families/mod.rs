//! Knot families: spiral and weaving braid closures, full-twist insertion
//! and the six-region template built on 9₃₂.

mod braid;
mod template;
mod twist;

pub use braid::{
    braid_closure, generalized_spiral, spiral, weaving, weaving_bound, weaving_traversal,
    BraidWord, SpiralSpec,
};
pub use template::{
    template_knot, template_layout, template_straight_witness, TemplateLayout, TemplateSpec,
};
pub use twist::insert_full_twists;

use thiserror::Error;

use crate::diagram::DiagramError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("the closure is a link, not a knot (permutation has {cycles} cycles)")]
    NotAKnot { cycles: usize },
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("twist region does not belong to the diagram")]
    RegionInvalid,
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("invalid template: {0}")]
    SpecInvalid(String),
    #[error("invalid braid word: {0}")]
    BadWord(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
