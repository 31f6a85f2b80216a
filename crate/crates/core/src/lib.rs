pub mod algebra;
pub mod cli;
pub mod equation;
pub mod gf2;
pub mod homsys;
pub mod solver;
pub mod words;

pub use algebra::{Degree, Element, Word};
pub use equation::MonomialEquation;
