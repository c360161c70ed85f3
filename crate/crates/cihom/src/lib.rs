//! Exact computation of homological invariants for pairs of graded modules
//! over graded complete intersections.

pub mod checks;
pub mod freemod;
pub mod grammar;
pub mod groebner;
pub mod hilbert;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod pairs;
pub mod piece;
pub mod poly;
pub mod presentation;
pub mod problem;
pub mod report;
pub mod resolution;
pub mod ring;
pub mod scalar;
pub mod series;
