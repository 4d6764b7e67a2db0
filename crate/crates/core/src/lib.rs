//! Straight diagrams of knots: enumeration, identification and the
//! families of knots whose straight number exceeds their crossing number.

pub mod diagram;
pub mod families;
pub mod flype;
pub mod invariants;
pub mod poly;
pub mod render;
pub mod solver;
pub mod straight;
pub mod table;
pub mod verify;

pub use diagram::{Diagram, DiagramError, GaussCode};
pub use invariants::Fingerprint;
pub use poly::LaurentPolynomial;
pub use straight::{ShadowCode, Side, StraightCode};
pub use table::Table;

macro_rules! book_chapters {
    ($($name:ident => $file:literal),* $(,)?) => {
        $(
            #[cfg(doctest)]
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        )*
    };
}

book_chapters! {
    book_introduction => "introduction.md",
    book_diagrams => "diagrams.md",
    book_straight_codes => "straight-codes.md",
    book_invariants => "invariants.md",
    book_search => "search.md",
    book_families => "families.md",
    book_template => "template.md",
    book_flypes => "flypes.md",
    book_rendering => "rendering.md",
    book_cli => "cli.md",
    book_results => "results.md",
}
